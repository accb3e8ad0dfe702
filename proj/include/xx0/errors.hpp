#pragma once

#include <stdexcept>
#include <string>

namespace xx0 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  using Error::Error;
};
struct NonDivisible : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};
struct NotStrict : Error {
  using Error::Error;
};
struct RepeatedPoint : Error {
  using Error::Error;
};
struct ZeroLimitInvalid : Error {
  using Error::Error;
};
struct ZeroArgument : Error {
  using Error::Error;
};
// A determinant/sum identity that must hold exactly failed: distinguished
// failure mode, mapped to its own CLI exit code.
struct IdentityMismatch : Error {
  using Error::Error;
};
struct Collision : Error {
  using Error::Error;
};
struct SizeMismatch : Error {
  using Error::Error;
};
struct InvalidDeviation : Error {
  using Error::Error;
};
struct ModeEnumerationTooLarge : Error {
  using Error::Error;
};
struct PaletteExhausted : Error {
  using Error::Error;
};
struct InconsistentNest : Error {
  using Error::Error;
};

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw Error(what);
}

inline void ensure_identity(bool cond, const std::string& what) {
  if (!cond) throw IdentityMismatch(what);
}

}  // namespace xx0
