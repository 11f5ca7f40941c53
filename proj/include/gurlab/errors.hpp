#pragma once

#include <stdexcept>
#include <string>

namespace gur {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

/// Construction-time validation failures (non-Hermitian observable,
/// unnormalized state, non-PSD density matrix, ...).
struct ValidationError : Error {
  using Error::Error;
};

struct EigenvalueOnBranchCut : Error {
  using Error::Error;
};

struct NotDiagonalizable : Error {
  using Error::Error;
};

struct ZeroExpectation : Error {
  using Error::Error;
};

struct ZeroObservable : Error {
  using Error::Error;
};

struct NonCommuting : Error {
  using Error::Error;
};

struct DegenerateVariance : Error {
  using Error::Error;
};

struct EtaOutOfRange : Error {
  using Error::Error;
};

struct UnknownInequality : Error {
  using Error::Error;
};

struct BindingError : Error {
  using Error::Error;
};

struct NoSignChange : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

} // namespace gur
