#pragma once

#include <stdexcept>
#include <string>

namespace isolat {

/// Base of every error the library raises. `code()` is the machine-readable
/// name used in CLI error records; `path()` is a JSON pointer into the input
/// when the error originates from a document.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string message, std::string path = "")
      : std::runtime_error(message), code_(std::move(code)), path_(std::move(path)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& path() const noexcept { return path_; }

  /// Errors caused by bad user input (exit code 2) as opposed to broken
  /// internal invariants (exit code 3).
  virtual bool is_validation() const noexcept { return true; }

 private:
  std::string code_;
  std::string path_;
};

class InternalError : public Error {
 public:
  using Error::Error;
  bool is_validation() const noexcept override { return false; }
};

#define ISOLAT_DEFINE_ERROR(Name, Base)                                 \
  class Name : public Base {                                           \
   public:                                                             \
    explicit Name(std::string message, std::string path = "")          \
        : Base(#Name, std::move(message), std::move(path)) {}          \
  };

ISOLAT_DEFINE_ERROR(GroupTooLarge, Error)
ISOLAT_DEFINE_ERROR(UnclassifiableGroup, InternalError)
ISOLAT_DEFINE_ERROR(NotSubconjugate, Error)
ISOLAT_DEFINE_ERROR(NoUniqueMinimum, Error)
ISOLAT_DEFINE_ERROR(ClassNotInLattice, Error)
ISOLAT_DEFINE_ERROR(NotRealizableInG, Error)
ISOLAT_DEFINE_ERROR(NotTotallyIsotropic, Error)
ISOLAT_DEFINE_ERROR(NotTangent, Error)
ISOLAT_DEFINE_ERROR(SchemaError, Error)
ISOLAT_DEFINE_ERROR(ValidationError, Error)
ISOLAT_DEFINE_ERROR(InvariantViolation, InternalError)

#undef ISOLAT_DEFINE_ERROR

}  // namespace isolat
