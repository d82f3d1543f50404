#pragma once

#include <stdexcept>
#include <string>

namespace boundent {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BOUNDENT_DEFINE_ERROR(Name)            \
  class Name : public Error {                  \
   public:                                     \
    using Error::Error;                        \
  };

BOUNDENT_DEFINE_ERROR(NonSquare)
BOUNDENT_DEFINE_ERROR(NotHermitian)
BOUNDENT_DEFINE_ERROR(NoConvergence)
BOUNDENT_DEFINE_ERROR(NonFinite)
BOUNDENT_DEFINE_ERROR(OutOfRange)
BOUNDENT_DEFINE_ERROR(BadSubsystem)
BOUNDENT_DEFINE_ERROR(BadKind)
BOUNDENT_DEFINE_ERROR(BadRange)
BOUNDENT_DEFINE_ERROR(BadCutoff)
BOUNDENT_DEFINE_ERROR(BadRate)
BOUNDENT_DEFINE_ERROR(InvariantViolation)
BOUNDENT_DEFINE_ERROR(ConfigError)
BOUNDENT_DEFINE_ERROR(UnknownPreset)
BOUNDENT_DEFINE_ERROR(IoError)

#undef BOUNDENT_DEFINE_ERROR

}  // namespace boundent
