#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "homlab/field_algebra.hpp"
#include "homlab/magma.hpp"

namespace homlab {

// Magma files:
//   {"elements":["e1","e2","e3"],"unit":"e1","zero":true,
//    "products":{"e2 e3":"e1"},"alpha":{"e2":"e1"}}
// With "zero": true the zero is adjoined (named "0"), unlisted products of
// non-unit elements and unlisted alpha values default to it. Without a zero
// every non-unit product and every alpha value must be listed.
//
// Algebra files:
//   {"p":7,"dim":3,"c":[[[c_ij1,...],...],...],"alpha":[[row of alpha(e1)],...],
//    "kind":"skew"|"general","unit":[...]|null}
// Integer entries may be negative; they are reduced mod p.

using Structure = std::variant<FiniteHomMagma, FieldHomAlgebra>;

std::string magma_to_json(const FiniteHomMagma& m, int indent = 2);
FiniteHomMagma magma_from_json(std::string_view text);

std::string algebra_to_json(const FieldHomAlgebra& a, int indent = 2);
FieldHomAlgebra algebra_from_json(std::string_view text);

/// Dispatches on the presence of "elements" (magma) or "p" (algebra).
/// Throws ParseError on malformed JSON or schema violations.
Structure structure_from_json(std::string_view text);
Structure load_structure(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace homlab
