#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// algebra-core
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};
class UnitLawViolation : public Error {
 public:
  using Error::Error;
};
class ZeroLawViolation : public Error {
 public:
  using Error::Error;
};
class ConflictingRelation : public Error {
 public:
  using Error::Error;
};
class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an identity, a relation shorthand, or a spec string.
/// `offset()` is the byte position of the first offending character.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownVariable : public ParseError {
 public:
  using ParseError::ParseError;
};

// identity-dsl
class NotSApplicable : public Error {
 public:
  using Error::Error;
};

// evaluator
class CyclicNotSupportedOnMagma : public Error {
 public:
  using Error::Error;
};
class UnitUnavailable : public Error {
 public:
  using Error::Error;
};
class NotMultilinear : public Error {
 public:
  using Error::Error;
};
class SkewViolation : public Error {
 public:
  using Error::Error;
};

// hierarchy-suite / lie-suite
class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};
class NotWeaklyUnital : public Error {
 public:
  using Error::Error;
};
class AlphaNotInvertible : public Error {
 public:
  using Error::Error;
};

// model-search
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace homlab
