#pragma once

#include <stdexcept>
#include <string>

namespace coxcat {

// Base of every error raised by the library. `kind()` is the stable name
// used in reports and by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define COXCAT_ERROR(Name)                                        \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

COXCAT_ERROR(ParseError)
COXCAT_ERROR(RootCountExceeded)
COXCAT_ERROR(InvalidBipartition)
COXCAT_ERROR(FlatNotInLattice)
COXCAT_ERROR(NotCoxeterElement)
COXCAT_ERROR(NotInNC)
COXCAT_ERROR(NotBipartite)
COXCAT_ERROR(IdentityElement)
COXCAT_ERROR(NotAnAutomorphism)
COXCAT_ERROR(NotPure)
COXCAT_ERROR(NotComparable)
COXCAT_ERROR(NotRanked)
COXCAT_ERROR(ProductNotUnique)
COXCAT_ERROR(ProductNotFound)
COXCAT_ERROR(RotationBudgetExceeded)
COXCAT_ERROR(ReducibleGroup)
COXCAT_ERROR(FussParameterUnsupported)
COXCAT_ERROR(NotAdmissible)
COXCAT_ERROR(NonIntegerRoots)
COXCAT_ERROR(NonCrystallographic)
COXCAT_ERROR(ArithmeticOverflow)

#undef COXCAT_ERROR

}  // namespace coxcat
