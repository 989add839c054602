#include <algorithm>
#include <string>

#include "homlab/search.hpp"
#include "homlab/structure_io.hpp"
#include "json_util.hpp"

namespace homlab {

using detail::ojson;

namespace {

std::vector<std::string> string_list(const ojson& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  const auto& arr = j.at(key);
  if (!arr.is_array()) detail::schema_error(std::string("'") + key + "' must be an array");
  for (const auto& s : arr) out.push_back(s.get<std::string>());
  return out;
}

SearchSpec spec_impl(std::string_view text) {
  const auto j = detail::parse_json(text);
  if (!j.is_object()) detail::schema_error("search spec must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const char* known[] = {"max_n", "require", "violate", "custom", "custom_violate", "with_zero", "prune"};
    if (std::find(std::begin(known), std::end(known), it.key()) == std::end(known)) {
      detail::schema_error("unknown key '" + it.key() + "'");
    }
  }
  SearchSpec spec;
  if (j.contains("max_n")) {
    const auto n = j.at("max_n").get<long long>();
    if (n < 0) detail::schema_error("'max_n' must be non-negative");
    spec.max_nonzero = static_cast<std::size_t>(n);
  }
  for (const auto& s : string_list(j, "require")) spec.require.push_back(Constraint::from_tag(parse_type_tag(s)));
  for (const auto& s : string_list(j, "violate")) spec.violate.push_back(Constraint::from_tag(parse_type_tag(s)));
  for (const auto& s : string_list(j, "custom")) spec.require.push_back(Constraint::from_source(s));
  for (const auto& s : string_list(j, "custom_violate")) spec.violate.push_back(Constraint::from_source(s));
  if (j.contains("with_zero")) spec.with_zero = j.at("with_zero").get<bool>();
  if (j.contains("prune")) spec.prune_isomorphs = j.at("prune").get<bool>();
  return spec;
}

ojson labels(const std::vector<Constraint>& cs) {
  ojson arr = ojson::array();
  for (const auto& c : cs) arr.push_back(c.label);
  return arr;
}

}  // namespace

SearchSpec search_spec_from_json(std::string_view text) {
  return detail::guarded([&] { return spec_impl(text); });
}

std::string search_spec_to_json(const SearchSpec& spec, int indent) {
  ojson j;
  j["max_n"] = spec.max_nonzero;
  ojson require = ojson::array(), violate = ojson::array(), custom = ojson::array(), custom_violate = ojson::array();
  for (const auto& c : spec.require) {
    const bool named = c.label.find(':') != std::string::npos && c.label.find('=') == std::string::npos;
    (named ? require : custom).push_back(named ? c.label : render(c.identity));
  }
  for (const auto& c : spec.violate) {
    const bool named = c.label.find(':') != std::string::npos && c.label.find('=') == std::string::npos;
    (named ? violate : custom_violate).push_back(named ? c.label : render(c.identity));
  }
  j["require"] = require;
  j["violate"] = violate;
  if (!custom.empty()) j["custom"] = custom;
  if (!custom_violate.empty()) j["custom_violate"] = custom_violate;
  j["with_zero"] = spec.with_zero;
  j["prune"] = spec.prune_isomorphs;
  return j.dump(indent);
}

std::string verdict_to_json(const SearchSpec& spec, const Verdict& v, bool with_stats, int indent) {
  ojson j;
  j["require"] = labels(spec.require);
  j["violate"] = labels(spec.violate);
  j["max_n"] = spec.max_nonzero;
  j["result"] = v.found() ? "model" : "none";
  j["exhausted_up_to"] = v.exhausted_up_to;
  if (v.found()) {
    auto model = ojson::parse(magma_to_json(*v.countermodel, -1));
    model["relations"] = to_relations(*v.countermodel);
    j["model"] = std::move(model);
  } else {
    j["model"] = nullptr;
  }
  if (with_stats) {
    j["stats"] = {{"nodes", v.stats.nodes}, {"models_tested", v.stats.models_tested}, {"seconds", v.stats.seconds}};
  }
  return j.dump(indent);
}

}  // namespace homlab
