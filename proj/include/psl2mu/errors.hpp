#pragma once

#include <stdexcept>
#include <string>

namespace psl2mu {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PSL2MU_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

PSL2MU_DEFINE_ERROR(DegreeError);
PSL2MU_DEFINE_ERROR(InvalidPermutation);
PSL2MU_DEFINE_ERROR(CapExceeded);
PSL2MU_DEFINE_ERROR(NotAMember);
PSL2MU_DEFINE_ERROR(NotNormal);
PSL2MU_DEFINE_ERROR(NotRPrime);
PSL2MU_DEFINE_ERROR(PrimeNotInSpectrum);
PSL2MU_DEFINE_ERROR(CoprimalityViolation);
PSL2MU_DEFINE_ERROR(MalformedProfile);
PSL2MU_DEFINE_ERROR(NotPrime);
PSL2MU_DEFINE_ERROR(NotPrimePower);
PSL2MU_DEFINE_ERROR(BudgetExceeded);
PSL2MU_DEFINE_ERROR(ConstraintViolation);
PSL2MU_DEFINE_ERROR(NotADivisor);
PSL2MU_DEFINE_ERROR(DomainError);

#undef PSL2MU_DEFINE_ERROR

/// Malformed group description; carries the 1-based source line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace psl2mu
