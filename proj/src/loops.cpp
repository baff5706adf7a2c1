#include "mnl/loops.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include "mnl/errors.hpp"
#include "mnl/octonion.hpp"

namespace mnl {

CayleyTable::CayleyTable(int order, std::vector<int> table, std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  if (order_ <= 0) throw InputError("loop order must be positive");
  if (table_.size() != static_cast<std::size_t>(order_) * order_) {
    throw InputError("Cayley table must be " + std::to_string(order_) + "x" + std::to_string(order_));
  }
  for (std::size_t at = 0; at < table_.size(); ++at) {
    if (table_[at] < 0 || table_[at] >= order_) {
      throw InputError("Cayley table entry out of range at row " + std::to_string(at / order_) + ", column " +
                       std::to_string(at % order_));
    }
  }
  if (!names_.empty() && names_.size() != static_cast<std::size_t>(order_)) {
    throw InputError("names list must have one label per element");
  }
}

std::string CayleyTable::name(int a) const {
  if (!names_.empty()) return names_[a];
  return std::to_string(a);
}

int CayleyTable::find(std::string_view name) const {
  for (int a = 0; a < order_; ++a) {
    if (this->name(a) == name) return a;
  }
  throw InputError("no element named '" + std::string(name) + "'");
}

LoopCheckReport is_quasigroup(const CayleyTable& t) {
  const int n = t.order();
  std::vector<int> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      if (seen[t.mul(a, b)]++) {
        return LoopCheckReport::fail("quasigroup", {a},
                                     "row " + std::to_string(a) + " repeats " + t.name(t.mul(a, b)));
      }
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      if (seen[t.mul(a, b)]++) {
        return LoopCheckReport::fail("quasigroup", {b},
                                     "column " + std::to_string(b) + " repeats " + t.name(t.mul(a, b)));
      }
    }
  }
  return LoopCheckReport::pass("quasigroup");
}

LoopCheckReport has_unit(const CayleyTable& t) {
  for (int g = 0; g < t.order(); ++g) {
    if (t.mul(0, g) != g || t.mul(g, 0) != g) {
      return LoopCheckReport::fail("unit", {g}, "element 0 does not act as unit on " + t.name(g));
    }
  }
  return LoopCheckReport::pass("unit");
}

int right_inverse(const CayleyTable& t, int g) {
  for (int x = 0; x < t.order(); ++x) {
    if (t.mul(g, x) == 0) return x;
  }
  throw InputError("element " + t.name(g) + " has no right inverse");
}

LoopCheckReport is_moufang(const CayleyTable& t) {
  if (!is_quasigroup(t) || !has_unit(t)) {
    throw PreconditionError("is_moufang requires a quasigroup with unit 0");
  }
  const int n = t.order();
  for (int g = 0; g < n; ++g) {
    const int x = right_inverse(t, g);
    if (t.mul(x, g) != 0) {
      return LoopCheckReport::fail("moufang", {g}, t.name(g) + " has no two-sided inverse");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int g = 0; g < n; ++g) {
      const int ag = t.mul(a, g);
      for (int h = 0; h < n; ++h) {
        if (t.mul(ag, t.mul(h, a)) != t.mul(t.mul(a, t.mul(g, h)), a)) {
          return LoopCheckReport::fail("moufang", {a, g, h},
                                       "(ag)(ha) != (a(gh))a for a=" + t.name(a) + ", g=" + t.name(g) +
                                           ", h=" + t.name(h));
        }
      }
    }
  }
  return LoopCheckReport::pass("moufang");
}

LoopCheckReport is_associative(const CayleyTable& t) {
  const int n = t.order();
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      const int gh = t.mul(g, h);
      for (int a = 0; a < n; ++a) {
        if (t.mul(gh, a) != t.mul(g, t.mul(h, a))) {
          return LoopCheckReport::fail("associative", {g, h, a},
                                       "(gh)a != g(ha) for g=" + t.name(g) + ", h=" + t.name(h) +
                                           ", a=" + t.name(a));
        }
      }
    }
  }
  return LoopCheckReport::pass("associative");
}

int loop_commutator(const CayleyTable& t, int g, int h) {
  if (g < 0 || h < 0 || g >= t.order() || h >= t.order()) throw InputError("element out of range");
  return t.mul(t.mul(t.mul(g, h), right_inverse(t, g)), right_inverse(t, h));
}

CayleyTable cyclic_group(int n) {
  if (n <= 0) throw InputError("cyclic group order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return {n, std::move(table), std::move(names)};
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int x = 0; x < n; ++x) {
    names[x] = "(" + a.name(x / nb) + "," + b.name(x % nb) + ")";
    for (int y = 0; y < n; ++y) {
      table[static_cast<std::size_t>(x) * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  return {n, std::move(table), std::move(names)};
}

CayleyTable dihedral_group(int n) {
  if (n <= 0) throw InputError("dihedral parameter must be positive");
  const int order = 2 * n;
  auto wrap = [n](int k) { return ((k % n) + n) % n; };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> names(order);
  for (int x = 0; x < order; ++x) {
    const bool xs = x >= n;
    const int a = x % n;
    names[x] = (xs ? "sr" : "r") + std::to_string(a);
    for (int y = 0; y < order; ++y) {
      const bool ys = y >= n;
      const int b = y % n;
      int prod;
      if (!xs && !ys) {
        prod = wrap(a + b);
      } else if (!xs) {
        prod = n + wrap(b - a);  // r^a s r^b = s r^(b−a)
      } else if (!ys) {
        prod = n + wrap(a + b);
      } else {
        prod = wrap(b - a);
      }
      table[static_cast<std::size_t>(x) * order + y] = prod;
    }
  }
  return {order, std::move(table), std::move(names)};
}

CayleyTable quaternion_group() {
  // index 2u + s is (−1)^s · e_u with e_0 = 1, e_1..e_3 = i, j, k
  static constexpr std::array<const char*, 4> kUnit{"1", "i", "j", "k"};
  std::vector<int> table(64);
  std::vector<std::string> names(8);
  for (int x = 0; x < 8; ++x) {
    names[x] = std::string(x % 2 ? "-" : "") + kUnit[x / 2];
    for (int y = 0; y < 8; ++y) {
      const auto p = octonion::basis_product(x / 2, y / 2);
      const int sign = p.sign * (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1);
      table[x * 8 + y] = 2 * p.index + (sign < 0 ? 1 : 0);
    }
  }
  return {8, std::move(table), std::move(names)};
}

CayleyTable symmetric_group_s3() {
  using Perm = std::array<int, 3>;
  const std::array<Perm, 6> perms{{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  std::vector<std::string> names{"()", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<int> table(36);
  for (int g = 0; g < 6; ++g) {
    for (int h = 0; h < 6; ++h) {
      Perm p{};
      for (int x = 0; x < 3; ++x) p[x] = perms[h][perms[g][x]];  // g first, then h
      table[g * 6 + h] = static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    }
  }
  return {6, std::move(table), std::move(names)};
}

CayleyTable chein_double(const CayleyTable& g) {
  if (!is_quasigroup(g) || !has_unit(g) || !is_associative(g)) {
    throw InputError("chein_double requires a group table");
  }
  const int n = g.order(), m = 2 * n;
  std::vector<int> inv(n);
  for (int x = 0; x < n; ++x) inv[x] = right_inverse(g, x);
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> names(m);
  for (int x = 0; x < m; ++x) {
    const bool xu = x >= n;
    const int a = x % n;
    names[x] = xu ? g.name(a) + "u" : g.name(a);
    for (int y = 0; y < m; ++y) {
      const bool yu = y >= n;
      const int b = y % n;
      int prod;
      if (!xu && !yu) {
        prod = g.mul(a, b);
      } else if (!xu) {
        prod = n + g.mul(b, a);
      } else if (!yu) {
        prod = n + g.mul(a, inv[b]);
      } else {
        prod = g.mul(inv[b], a);
      }
      table[static_cast<std::size_t>(x) * m + y] = prod;
    }
  }
  return {m, std::move(table), std::move(names)};
}

CayleyTable octonion_unit_loop() {
  std::vector<int> table(256);
  std::vector<std::string> names(16);
  for (int x = 0; x < 16; ++x) {
    const std::string unit = x % 8 == 0 ? "1" : "e" + std::to_string(x % 8);
    names[x] = (x >= 8 ? "-" : "") + unit;
    for (int y = 0; y < 16; ++y) {
      const auto p = octonion::basis_product(x % 8, y % 8);
      const int sign = p.sign * (x >= 8 ? -1 : 1) * (y >= 8 ? -1 : 1);
      table[x * 16 + y] = p.index + (sign < 0 ? 8 : 0);
    }
  }
  return {16, std::move(table), std::move(names)};
}

std::vector<NamedLoop> small_groups() {
  const CayleyTable z2 = cyclic_group(2);
  std::vector<NamedLoop> out;
  for (int n = 1; n <= 8; ++n) out.push_back({"z" + std::to_string(n), cyclic_group(n)});
  out.push_back({"z2xz2", direct_product(z2, z2)});
  out.push_back({"s3", symmetric_group_s3()});
  out.push_back({"z2xz4", direct_product(z2, cyclic_group(4))});
  out.push_back({"z2xz2xz2", direct_product(direct_product(z2, z2), z2)});
  out.push_back({"d4", dihedral_group(4)});
  out.push_back({"q8", quaternion_group()});
  return out;
}

CayleyTable catalog_loop(std::string_view name) {
  if (name == "octonion-loop") return octonion_unit_loop();
  if (name.starts_with("chein-")) return chein_double(catalog_loop(name.substr(6)));
  if (name.size() > 1 && name[0] == 'z' && name.find('x') == std::string_view::npos) {
    int n = 0;
    const auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec == std::errc() && ptr == name.data() + name.size() && n > 0) return cyclic_group(n);
  }
  for (auto& g : small_groups()) {
    if (g.name == name) return std::move(g.table);
  }
  throw InputError("unknown loop '" + std::string(name) + "'");
}

ParamLoopChart unit_octonion_chart() {
  using Point = ParamLoopChart::Point;
  auto lift = [](std::span<const double> v) {
    if (v.size() != 7) throw InputError("octonion chart expects 7 coordinates");
    double norm2 = 0.0;
    for (double x : v) norm2 += x * x;
    if (!(norm2 < 1.0)) throw InputError("point outside the unit-octonion chart domain");
    octonion::Octonion<double> o{};
    o[0] = std::sqrt(1.0 - norm2);
    std::copy(v.begin(), v.end(), o.begin() + 1);
    return o;
  };
  ParamLoopChart chart;
  chart.dim = 7;
  chart.multiply = [lift](std::span<const double> g, std::span<const double> h) {
    const auto p = octonion::multiply(lift(g), lift(h));
    if (p[0] < 0.0) throw InputError("product leaves the unit-octonion chart");
    return Point(p.begin() + 1, p.end());
  };
  chart.invert = [lift](std::span<const double> g) {
    const auto c = octonion::conjugate(lift(g));
    return Point(c.begin() + 1, c.end());
  };
  return chart;
}

ParamLoopChart additive_chart(int r) {
  using Point = ParamLoopChart::Point;
  ParamLoopChart chart;
  chart.dim = r;
  chart.multiply = [r](std::span<const double> g, std::span<const double> h) {
    if (static_cast<int>(g.size()) != r || static_cast<int>(h.size()) != r) throw InputError("chart dimension");
    Point out(r);
    for (int i = 0; i < r; ++i) out[i] = g[i] + h[i];
    return out;
  };
  chart.invert = [r](std::span<const double> g) {
    if (static_cast<int>(g.size()) != r) throw InputError("chart dimension");
    Point out(r);
    for (int i = 0; i < r; ++i) out[i] = -g[i];
    return out;
  };
  return chart;
}

ParamLoopChart::Point chart_commutator(const ParamLoopChart& chart, std::span<const double> g,
                                       std::span<const double> h, Bracketing b) {
  const auto gi = chart.invert(g);
  const auto hi = chart.invert(h);
  if (b == Bracketing::Left) return chart.multiply(chart.multiply(chart.multiply(g, h), gi), hi);
  return chart.multiply(g, chart.multiply(h, chart.multiply(gi, hi)));
}

NumericTensor tangent_structure_constants(const ParamLoopChart& chart, double step, Bracketing b) {
  if (!(step > 0.0 && step < 0.1)) throw InputError("finite-difference step must lie in (0, 0.1)");
  const int r = chart.dim;
  NumericTensor out{r, std::vector<double>(static_cast<std::size_t>(r) * r * r), 0.0};
  std::vector<double> raw(out.c.size());
  auto at = [r](int i, int j, int k) { return (static_cast<std::size_t>(i) * r + j) * r + k; };
  std::vector<double> g(r), h(r);
  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) {
      std::vector<double> acc(r, 0.0);
      for (const int sj : {1, -1}) {
        for (const int sk : {1, -1}) {
          std::fill(g.begin(), g.end(), 0.0);
          std::fill(h.begin(), h.end(), 0.0);
          g[j] = sj * step;
          h[k] = sk * step;
          const auto kv = chart_commutator(chart, g, h, b);
          for (int i = 0; i < r; ++i) acc[i] += sj * sk * kv[i];
        }
      }
      for (int i = 0; i < r; ++i) raw[at(i, j, k)] = acc[i] / (4.0 * step * step);
    }
  }
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        out.c[at(i, j, k)] = 0.5 * (raw[at(i, j, k)] - raw[at(i, k, j)]);
        out.raw_asymmetry = std::max(out.raw_asymmetry, std::abs(raw[at(i, j, k)] + raw[at(i, k, j)]));
      }
    }
  }
  return out;
}

double max_abs_diff(const NumericTensor& a, const StructureTensor& b) {
  if (a.dim != b.dim()) throw InputError("tensor dimension mismatch");
  double worst = 0.0;
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      for (int k = 0; k < a.dim; ++k) worst = std::max(worst, std::abs(a(i, j, k) - b(i, j, k).to_double()));
    }
  }
  return worst;
}

double max_abs_diff(const NumericTensor& a, const NumericTensor& b) {
  if (a.dim != b.dim) throw InputError("tensor dimension mismatch");
  double worst = 0.0;
  for (std::size_t at = 0; at < a.c.size(); ++at) worst = std::max(worst, std::abs(a.c[at] - b.c[at]));
  return worst;
}

}  // namespace mnl
