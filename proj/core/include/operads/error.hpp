#pragma once

#include <stdexcept>
#include <string>

namespace operads {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define OPERADS_DEFINE_ERROR(Name)                                 \
  struct Name : Error {                                            \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

OPERADS_DEFINE_ERROR(LengthMismatch);
OPERADS_DEFINE_ERROR(ColorMismatch);
OPERADS_DEFINE_ERROR(PositionOutOfRange);
OPERADS_DEFINE_ERROR(ArityMismatch);
OPERADS_DEFINE_ERROR(ArityOutOfRange);
OPERADS_DEFINE_ERROR(ModeError);
OPERADS_DEFINE_ERROR(BoundaryMismatch);
OPERADS_DEFINE_ERROR(SignatureMismatch);
OPERADS_DEFINE_ERROR(DimensionMismatch);
OPERADS_DEFINE_ERROR(IllTypedWord);
OPERADS_DEFINE_ERROR(RequiresPairing);
OPERADS_DEFINE_ERROR(FrobeniusAxiomFailure);
OPERADS_DEFINE_ERROR(ParseError);

#undef OPERADS_DEFINE_ERROR

}  // namespace operads
