#pragma once

// Postfix form of a term, shared by the magma evaluator and the search kernel.

#include <cstdint>
#include <vector>

#include "homlab/identity.hpp"

namespace homlab::detail {

enum class OpCode : std::uint8_t { PushX, PushY, PushZ, PushUnit, Alpha, Mul };

using Program = std::vector<OpCode>;

inline void compile_into(const Term& t, Program& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out.push_back(static_cast<OpCode>(static_cast<std::uint8_t>(t.variable())));
      break;
    case Term::Kind::Unit:
      out.push_back(OpCode::PushUnit);
      break;
    case Term::Kind::Twist:
      compile_into(t.child(), out);
      out.push_back(OpCode::Alpha);
      break;
    case Term::Kind::Prod:
      compile_into(t.left(), out);
      compile_into(t.right(), out);
      out.push_back(OpCode::Mul);
      break;
  }
}

inline Program compile(const Term& t) {
  Program p;
  compile_into(t, p);
  return p;
}

}  // namespace homlab::detail
