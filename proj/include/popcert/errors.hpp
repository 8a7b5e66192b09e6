#pragma once

#include <stdexcept>
#include <string>

namespace popcert {

/// Base class of every library error. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class EqualPoints : public Error {
public:
  using Error::Error;
};

class ContradictorySamples : public Error {
public:
  using Error::Error;
};

class NonConvexData : public Error {
public:
  using Error::Error;
};

class TooFewSamples : public Error {
public:
  using Error::Error;
};

class LengthMismatch : public Error {
public:
  using Error::Error;
};

class FloatFunctionNotAllowed : public Error {
public:
  using Error::Error;
};

class NotZeroSum : public Error {
public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class InvalidSpec : public Error {
public:
  using Error::Error;
};

class InvalidFunction : public Error {
public:
  using Error::Error;
};

class InvalidInstance : public Error {
public:
  using Error::Error;
};

class NotCertified : public Error {
public:
  using Error::Error;
};

}  // namespace popcert
