#pragma once

#include <stdexcept>
#include <string>

namespace lk {

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exhaustive computation would exceed a configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input. The message carries the position.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hypothesis of the main pipeline does not hold for the given input.
class PreconditionError : public DomainError {
 public:
  enum class Kind {
    kDimensionMismatch,
    kNotQuasiUnipotentA,
    kNotQuasiUnipotentB,
    kNotSingleBlockB,
  };

  PreconditionError(Kind kind, const std::string& what)
      : DomainError(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

inline const char* to_string(PreconditionError::Kind kind) {
  switch (kind) {
    case PreconditionError::Kind::kDimensionMismatch:
      return "dimension-mismatch";
    case PreconditionError::Kind::kNotQuasiUnipotentA:
      return "A-not-quasi-unipotent";
    case PreconditionError::Kind::kNotQuasiUnipotentB:
      return "B-not-quasi-unipotent";
    case PreconditionError::Kind::kNotSingleBlockB:
      return "B-not-single-jordan-block";
  }
  return "unknown";
}

// A mathematical statement proved in the source theory failed on concrete
// input. This is never caught inside the library.
class TheoremFalsified : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lk
