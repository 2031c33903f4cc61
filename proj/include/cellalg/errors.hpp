#pragma once

#include <stdexcept>
#include <string>

namespace cellalg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct FieldMismatch : Error {
  using Error::Error;
};
struct SingularMatrix : Error {
  using Error::Error;
};
struct SingularTrace : Error {
  using Error::Error;
};
struct NoSymmetrizingTrace : Error {
  using Error::Error;
};
struct NotCellular : Error {
  using Error::Error;
};
struct PhiZero : Error {
  using Error::Error;
};
struct InconsistentDatum : Error {
  using Error::Error;
};
struct EquivalenceViolation : Error {
  using Error::Error;
};
struct NotSemisimple : Error {
  using Error::Error;
};
struct UnsupportedField : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace cellalg
