#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nacalg {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The base field has a characteristic the operation refuses (e.g. 2 for
/// the alternative identity, any prime for factorial-valued sequences).
class CharacteristicError : public Error {
 public:
  using Error::Error;
};

/// An input object violates an invariant the operation requires.
/// `witness` holds the basis indices of the first violation, when known.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, std::vector<std::size_t> witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid JSON that does not match a document schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace nacalg
