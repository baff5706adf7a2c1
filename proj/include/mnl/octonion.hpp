#pragma once

#include <array>

namespace mnl::octonion {

// Repo-wide octonion convention. Basis 0 is the real unit, 1..7 the
// imaginary units, with e_a e_b = −δ_ab + Σ f_abc e_c and f totally
// antisymmetric, f = +1 on the oriented triples below. Every derived
// constant in the project (m7, the unit loop, L/R generators, the chart)
// comes from this one table.
inline constexpr std::array<std::array<int, 3>, 7> kPositiveTriples{{
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5},
}};

/// f_abc for a, b, c in 1..7; zero unless {a,b,c} is a line of the table.
constexpr int structure_sign(int a, int b, int c) {
  for (const auto& t : kPositiveTriples) {
    const int x = t[0], y = t[1], z = t[2];
    if ((a == x && b == y && c == z) || (a == y && b == z && c == x) || (a == z && b == x && c == y)) return 1;
    if ((a == y && b == x && c == z) || (a == x && b == z && c == y) || (a == z && b == y && c == x)) return -1;
  }
  return 0;
}

struct BasisProduct {
  int sign;
  int index;
};

/// e_a · e_b for a, b in 0..7 as ±e_index.
constexpr BasisProduct basis_product(int a, int b) {
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  if (a == b) return {-1, 0};
  for (int c = 1; c <= 7; ++c) {
    const int s = structure_sign(a, b, c);
    if (s != 0) return {s, c};
  }
  return {0, 0};  // unreachable for valid indices
}

template <class Scalar>
using Octonion = std::array<Scalar, 8>;

template <class Scalar>
Octonion<Scalar> multiply(const Octonion<Scalar>& x, const Octonion<Scalar>& y) {
  Octonion<Scalar> out{};
  for (int a = 0; a < 8; ++a) {
    if (x[a] == Scalar(0)) continue;
    for (int b = 0; b < 8; ++b) {
      if (y[b] == Scalar(0)) continue;
      const auto p = basis_product(a, b);
      if (p.sign > 0) {
        out[p.index] += x[a] * y[b];
      } else {
        out[p.index] -= x[a] * y[b];
      }
    }
  }
  return out;
}

template <class Scalar>
Octonion<Scalar> conjugate(Octonion<Scalar> x) {
  for (int a = 1; a < 8; ++a) x[a] = -x[a];
  return x;
}

}  // namespace mnl::octonion
