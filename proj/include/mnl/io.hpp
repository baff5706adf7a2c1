#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mnl/algebra.hpp"
#include "mnl/birep.hpp"
#include "mnl/envelope.hpp"
#include "mnl/etc.hpp"
#include "mnl/loops.hpp"
#include "mnl/report.hpp"

namespace mnl {

/// Insertion-ordered, so serialized reports are byte-deterministic.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Rationals are written as an integer or [num, den].
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"dim": r, "entries": [[i, j, k, num, den], ...]} with 1-based indices;
/// only j < k is written, the loader completes antisymmetrically.
Json tensor_to_json(const StructureTensor& c);
StructureTensor tensor_from_json(const Json& j);

/// {"order": n, "table": [[...], ...], "names": [...]} with 0-based entries.
Json cayley_to_json(const CayleyTable& t);
CayleyTable cayley_from_json(const Json& j);

/// {"r": r, "dim": n, "S": [matrix, ...], "T": [...]}, each matrix a list
/// of rows of rationals.
Json generators_to_json(const GeneratorSet& g);
GeneratorSet generators_from_json(const Json& j);

/// All loaders throw InputError on unreadable files, malformed JSON, wrong
/// types, or violated invariants.
Json read_json_file(const std::string& path);

/// "builtin:NAME" or a file path.
StructureTensor resolve_tensor(std::string_view spec);
CayleyTable resolve_loop(std::string_view spec);
/// builtin:octonion, builtin:quaternion, or a file path.
GeneratorSet resolve_generators(std::string_view spec);
/// Structure tensor paired with builtin generators; throws InputError for
/// anything else, where the tensor must be given explicitly.
StructureTensor default_tensor_for(std::string_view generators_spec);

Json report_to_json(const CheckReport& r);
Json glc_to_json(const GLCReport& r);
Json etc_to_json(const ETCReport& r);

}  // namespace mnl
