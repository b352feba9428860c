#pragma once

#include <stdexcept>
#include <string>

namespace gpce {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Vector/point length does not match the expected dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Matrix is not square, not symmetric, or otherwise malformed.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Matrix failed the positive-definiteness check.
class DefinitenessError : public Error {
public:
    using Error::Error;
};

/// Conditioning too poor for a reliable factorization or solve.
class ConditioningError : public Error {
public:
    using Error::Error;
};

/// Integer count overflowed its 64-bit capacity.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Scalar argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Request exceeds a built-in table or resource limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A user-supplied output function returned a non-finite value.
class EvaluationError : public Error {
public:
    using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// File contents violate the expected schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed; indicates a library bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace gpce
