#pragma once

#include <stdexcept>
#include <string>

namespace isoregion {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ISOREGION_DECLARE_ERROR(Name)          \
  class Name : public Error {                  \
   public:                                     \
    using Error::Error;                        \
  }

ISOREGION_DECLARE_ERROR(SyntaxError);
ISOREGION_DECLARE_ERROR(LabelError);
ISOREGION_DECLARE_ERROR(InvalidProjection);
ISOREGION_DECLARE_ERROR(NotIrreducible);
ISOREGION_DECLARE_ERROR(NotConnected);
ISOREGION_DECLARE_ERROR(InvalidEdge);
ISOREGION_DECLARE_ERROR(InvalidRegion);
ISOREGION_DECLARE_ERROR(TrivialProjection);
ISOREGION_DECLARE_ERROR(NotAKnot);
ISOREGION_DECLARE_ERROR(SearchTooLarge);
ISOREGION_DECLARE_ERROR(RangeError);
ISOREGION_DECLARE_ERROR(LimitExceeded);

#undef ISOREGION_DECLARE_ERROR

}  // namespace isoregion
