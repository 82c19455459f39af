#pragma once

#include <stdexcept>
#include <string>

namespace relweyl {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedType : Error {
  using Error::Error;
};
struct NotARoot : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};
struct BraidInconsistency : Error {
  using Error::Error;
};
struct NonIntegralEntry : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotPrime : Error {
  using Error::Error;
};
struct NotOneDimensional : Error {
  using Error::Error;
};
struct NotMultiplicative : Error {
  using Error::Error;
};
struct FactorizationFailure : Error {
  using Error::Error;
};
struct UsageError : Error {
  using Error::Error;
};

}  // namespace relweyl
