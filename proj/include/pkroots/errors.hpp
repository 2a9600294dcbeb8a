#pragma once

#include <stdexcept>
#include <string>

namespace pkroots {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PKROOTS_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

PKROOTS_DEFINE_ERROR(InvalidModulus);
PKROOTS_DEFINE_ERROR(NotAUnit);
PKROOTS_DEFINE_ERROR(NotInvertible);
PKROOTS_DEFINE_ERROR(VariableMismatch);
PKROOTS_DEFINE_ERROR(InvalidIdeal);
PKROOTS_DEFINE_ERROR(InvalidFactorization);
PKROOTS_DEFINE_ERROR(CapExceeded);
PKROOTS_DEFINE_ERROR(NotMonicModP);
PKROOTS_DEFINE_ERROR(NotCoprimeModP);
PKROOTS_DEFINE_ERROR(DivisibilityViolation);
PKROOTS_DEFINE_ERROR(NotSquarefree);
PKROOTS_DEFINE_ERROR(ParseError);

#undef PKROOTS_DEFINE_ERROR

}  // namespace pkroots
