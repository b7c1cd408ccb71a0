#pragma once

#include <stdexcept>
#include <string>

namespace ep4 {

// Base class for every contract violation this library reports. Callers that
// only need "the operation failed" can catch this; the concrete types below
// exist because the CLI maps them to distinct exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// polyroots
class DegreeMismatch : public Error {
public:
  using Error::Error;
};

// domain
class NonpositiveGamma : public Error {
public:
  using Error::Error;
};

class BetaOutOfRange : public Error {
public:
  using Error::Error;
};

class DeltaTooLarge : public Error {
public:
  using Error::Error;
};

class InvalidGrid : public Error {
public:
  using Error::Error;
};

// epn
class NotAnEigenvalue : public Error {
public:
  using Error::Error;
};

class NotFullEPN : public Error {
public:
  using Error::Error;
};

class ChainSolveFailure : public Error {
public:
  using Error::Error;
};

class SingularTransition : public Error {
public:
  using Error::Error;
};

// metric
class NearDefective : public Error {
public:
  using Error::Error;
};

class ComplexSpectrum : public Error {
public:
  using Error::Error;
};

class InvalidMetric : public Error {
public:
  using Error::Error;
};

}  // namespace ep4
