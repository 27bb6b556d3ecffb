#pragma once

#include <stdexcept>
#include <string>

namespace posetblock {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Relation closure is not antisymmetric.
class CycleError : public Error {
public:
    using Error::Error;
};

/// An index, radius or parameter is outside its admissible range.
class BoundsError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed a configured cap.
class ExplosionError : public Error {
public:
    using Error::Error;
};

/// Operands have incompatible sizes.
class DimensionError : public Error {
public:
    using Error::Error;
};

class InvalidWeightError : public Error {
public:
    using Error::Error;
};

/// A method was called on an instance outside its domain of validity.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Quantity undefined for the zero code.
class TrivialCodeError : public Error {
public:
    using Error::Error;
};

class NonPrimeError : public Error {
public:
    using Error::Error;
};

/// A structural precondition (such as a unique ideal of some size) fails.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Two independent routes disagreed; always a bug.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

/// Malformed input document.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace posetblock
