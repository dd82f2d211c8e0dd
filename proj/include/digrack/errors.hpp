#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace digrack {

// Validation / input failure. Carries a stable machine-readable kind so the
// CLI can report it and map it to exit code 2.
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define DIGRACK_ERROR(Name)                                       \
  class Name : public ValidationError {                           \
  public:                                                         \
    explicit Name(const std::string& message)                     \
        : ValidationError(#Name, message) {}                      \
  }

DIGRACK_ERROR(NotLatinSquare);
DIGRACK_ERROR(NotAssociative);
DIGRACK_ERROR(NoIdentity);
DIGRACK_ERROR(NoInverse);
DIGRACK_ERROR(CapExceeded);
DIGRACK_ERROR(IndexOutOfRange);
DIGRACK_ERROR(NotAnAction);
DIGRACK_ERROR(RowNotBijective);
DIGRACK_ERROR(IllDefined);
DIGRACK_ERROR(NotAFixedPoint);
DIGRACK_ERROR(NotSelfDistributive);
DIGRACK_ERROR(EmptySubset);
DIGRACK_ERROR(NotADigroup);
DIGRACK_ERROR(NotASubrackBase);
DIGRACK_ERROR(FiberNotStable);

#undef DIGRACK_ERROR

}  // namespace digrack
