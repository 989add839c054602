#include "homlab/structure_io.hpp"

#include <fmt/format.h>
#include <fstream>
#include <map>
#include <sstream>

#include "json_util.hpp"

namespace homlab {

using detail::ojson;
using detail::schema_error;

namespace {
FiniteHomMagma magma_from_json_impl(std::string_view text);
FieldHomAlgebra algebra_from_json_impl(std::string_view text);
}  // namespace

std::string magma_to_json(const FiniteHomMagma& m, int indent) {
  ojson j;
  ojson elements = ojson::array();
  for (Element e = 0; e < m.nonzero_count(); ++e) elements.push_back(m.name(e));
  j["elements"] = elements;
  j["unit"] = m.name(FiniteHomMagma::unit());
  j["zero"] = m.has_zero();
  const auto k = static_cast<Element>(m.nonzero_count());
  ojson products = ojson::object();
  for (Element a = 1; a < k; ++a) {
    for (Element b = 1; b < k; ++b) {
      if (m.has_zero() && m.mul(a, b) == *m.zero()) continue;
      products[m.name(a) + " " + m.name(b)] = m.name(m.mul(a, b));
    }
  }
  j["products"] = products;
  ojson alpha = ojson::object();
  for (Element a = 0; a < k; ++a) {
    if (m.has_zero() && m.alpha(a) == *m.zero()) continue;
    alpha[m.name(a)] = m.name(m.alpha(a));
  }
  j["alpha"] = alpha;
  return j.dump(indent);
}

FiniteHomMagma magma_from_json(std::string_view text) {
  return detail::guarded([&] { return magma_from_json_impl(text); });
}

FieldHomAlgebra algebra_from_json(std::string_view text) {
  return detail::guarded([&] { return algebra_from_json_impl(text); });
}

namespace {

FiniteHomMagma magma_from_json_impl(std::string_view text) {
  const auto j = detail::parse_json(text);
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array() || j["elements"].empty()) {
    schema_error("magma needs a non-empty \"elements\" array");
  }
  std::map<std::string, Element> index;
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) schema_error("element names must be strings");
    auto name = e.get<std::string>();
    if (name == "0") schema_error("\"0\" is reserved for the zero element");
    if (!index.emplace(name, static_cast<Element>(names.size())).second) schema_error("duplicate element " + name);
    names.push_back(name);
  }
  const bool has_zero = j.value("zero", true);
  const std::size_t k = names.size();
  const std::size_t n = k + (has_zero ? 1 : 0);
  const auto zero = static_cast<Element>(k);
  auto lookup = [&](const std::string& name) -> Element {
    if (has_zero && name == "0") return zero;
    auto it = index.find(name);
    if (it == index.end()) schema_error("unknown element '" + name + "'");
    return it->second;
  };
  const Element unit = j.contains("unit") ? lookup(j["unit"].get<std::string>()) : 0;
  if (has_zero && unit == zero) schema_error("unit cannot be the zero");

  constexpr Element kUnset = ~Element{0};
  Table table(n, std::vector<Element>(n, kUnset));
  std::vector<Element> alpha(n, kUnset);
  for (Element x = 0; x < n; ++x) {
    table[unit][x] = x;
    table[x][unit] = x;
    if (has_zero) {
      table[zero][x] = zero;
      table[x][zero] = zero;
    }
  }
  if (has_zero) alpha[zero] = zero;
  if (j.contains("products")) {
    if (!j["products"].is_object()) schema_error("\"products\" must be an object");
    for (const auto& [key, value] : j["products"].items()) {
      auto space = key.find(' ');
      if (space == std::string::npos) schema_error("product key '" + key + "' must be \"a b\"");
      const Element a = lookup(key.substr(0, space));
      const Element b = lookup(key.substr(space + 1));
      const Element v = lookup(value.get<std::string>());
      if (table[a][b] != kUnset && table[a][b] != v) {
        throw ConflictingRelation(fmt::format("product '{}' contradicts the unit or zero law", key));
      }
      table[a][b] = v;
    }
  }
  if (j.contains("alpha")) {
    if (!j["alpha"].is_object()) schema_error("\"alpha\" must be an object");
    for (const auto& [key, value] : j["alpha"].items()) {
      const Element a = lookup(key);
      const Element v = lookup(value.get<std::string>());
      if (alpha[a] != kUnset && alpha[a] != v) throw ConflictingRelation("alpha of the zero must be the zero");
      alpha[a] = v;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == kUnset) {
        if (!has_zero) schema_error(fmt::format("product '{} {}' missing", names[a], names[b]));
        table[a][b] = zero;
      }
    }
    if (alpha[a] == kUnset) {
      if (!has_zero) schema_error(fmt::format("alpha({}) missing", names[a]));
      alpha[a] = zero;
    }
  }
  return FiniteHomMagma::create(n, table, alpha, unit, has_zero ? std::optional<Element>(zero) : std::nullopt);
}

}  // namespace

std::string algebra_to_json(const FieldHomAlgebra& a, int indent) {
  const std::size_t d = a.dim();
  ojson j;
  j["p"] = a.prime();
  j["dim"] = d;
  ojson c = ojson::array();
  for (std::size_t i = 0; i < d; ++i) {
    ojson row = ojson::array();
    for (std::size_t k = 0; k < d; ++k) {
      auto prod = a.basis_product(i, k);
      row.push_back(std::vector<Scalar>(prod.begin(), prod.end()));
    }
    c.push_back(row);
  }
  j["c"] = c;
  j["alpha"] = a.alpha_matrix();
  j["kind"] = a.kind() == ProductKind::Skew ? "skew" : "general";
  if (a.unit_vector()) {
    j["unit"] = *a.unit_vector();
  } else {
    j["unit"] = nullptr;
  }
  return j.dump(indent);
}

namespace {

FieldHomAlgebra algebra_from_json_impl(std::string_view text) {
  const auto j = detail::parse_json(text);
  if (!j.is_object() || !j.contains("p") || !j.contains("dim")) schema_error("algebra needs \"p\" and \"dim\"");
  const auto p = j["p"].get<std::int64_t>();
  const auto d = j["dim"].get<std::int64_t>();
  if (p < 2 || p >= (std::int64_t{1} << 31)) schema_error("\"p\" out of range");
  if (d < 1 || d > 64) schema_error("\"dim\" must be in 1..64");
  const auto dim = static_cast<std::size_t>(d);
  auto reduce = [&](const ojson& v) -> Scalar {
    if (!v.is_number_integer()) schema_error("entries must be integers");
    auto r = v.get<std::int64_t>() % p;
    return static_cast<Scalar>(r < 0 ? r + p : r);
  };
  auto vec = [&](const ojson& v, const char* what) {
    if (!v.is_array() || v.size() != dim) schema_error(fmt::format("{} must have length {}", what, dim));
    Vector out;
    for (const auto& s : v) out.push_back(reduce(s));
    return out;
  };
  if (!j.contains("c") || !j["c"].is_array() || j["c"].size() != dim) schema_error("\"c\" must be dim x dim x dim");
  std::vector<Scalar> c;
  for (const auto& row : j["c"]) {
    if (!row.is_array() || row.size() != dim) schema_error("\"c\" must be dim x dim x dim");
    for (const auto& v : row) {
      auto coords = vec(v, "structure constant vector");
      c.insert(c.end(), coords.begin(), coords.end());
    }
  }
  Matrix alpha;
  if (j.contains("alpha")) {
    if (!j["alpha"].is_array() || j["alpha"].size() != dim) schema_error("\"alpha\" must be dim x dim");
    for (const auto& row : j["alpha"]) alpha.push_back(vec(row, "alpha row"));
  } else {
    alpha = identity_matrix(dim);
  }
  const auto kind_name = j.value("kind", std::string("general"));
  if (kind_name != "skew" && kind_name != "general") schema_error("\"kind\" must be \"skew\" or \"general\"");
  std::optional<Vector> unit;
  if (j.contains("unit") && !j["unit"].is_null()) unit = vec(j["unit"], "unit");
  return FieldHomAlgebra(static_cast<std::uint32_t>(p), dim, std::move(c), std::move(alpha),
                         kind_name == "skew" ? ProductKind::Skew : ProductKind::General, std::move(unit));
}

}  // namespace

Structure structure_from_json(std::string_view text) {
  const auto j = detail::parse_json(text);
  if (j.is_object() && j.contains("elements")) return magma_from_json(text);
  if (j.is_object() && j.contains("p")) return algebra_from_json(text);
  schema_error("expected a magma (\"elements\") or an algebra (\"p\")");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Structure load_structure(const std::filesystem::path& path) { return structure_from_json(read_file(path)); }

}  // namespace homlab
