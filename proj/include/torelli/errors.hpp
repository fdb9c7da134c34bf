#pragma once

#include <stdexcept>
#include <string>

namespace torelli {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented schema or precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonPrimitive : public Error {
 public:
  using Error::Error;
};

class NotUnimodular : public Error {
 public:
  using Error::Error;
};

/// The boundary duality pairing came out non-unimodular. Indicates a basis
/// bookkeeping bug; never raised for a valid link trace.
class NonUnimodularDuality : public Error {
 public:
  using Error::Error;
};

class NotPoincare : public Error {
 public:
  using Error::Error;
};

class NotTorelli : public Error {
 public:
  using Error::Error;
};

class InjectivityUnverified : public Error {
 public:
  using Error::Error;
};

class MalformedFront : public Error {
 public:
  using Error::Error;
};

class GeneratorMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

class InconsistentProfile : public Error {
 public:
  using Error::Error;
};

}  // namespace torelli
