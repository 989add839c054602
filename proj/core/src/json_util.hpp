#pragma once

#include <json.hpp>

#include "homlab/errors.hpp"

namespace homlab::detail {

using ojson = nlohmann::ordered_json;

inline ojson parse_json(std::string_view text) {
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, std::string("malformed JSON: ") + e.what());
  }
}

[[noreturn]] inline void schema_error(const std::string& what) { throw ParseError(0, "schema: " + what); }

/// Runs f, mapping nlohmann type/range errors to ParseError.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("schema: ") + e.what());
  }
}

}  // namespace homlab::detail
