#pragma once

#include <stdexcept>
#include <string>

namespace qsteiner {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// p or n is not a prime integer.
class NonPrimeParameter : public Error {
public:
    using Error::Error;
};

/// The polynomial does not generate the full multiplicative group.
class NonPrimitivePolynomial : public Error {
public:
    using Error::Error;
};

/// Requested field exceeds the supported table size.
class ParameterBounds : public Error {
public:
    using Error::Error;
};

/// Two 2-subspaces induce overlapping but unequal coset 6-sets.
class GroupCollision : public Error {
public:
    using Error::Error;
};

/// A coset group has fewer than six distinct representatives.
class DegenerateGroup : public Error {
public:
    using Error::Error;
};

/// Signature requested for a subspace that is not coset complete.
class NotCosetComplete : public Error {
public:
    using Error::Error;
};

/// Exact-cover instance violates its structural invariants.
class MalformedInstance : public Error {
public:
    using Error::Error;
};

/// Candidate representatives fail the disjoint-cover condition.
class ConditionViolated : public Error {
public:
    using Error::Error;
};

/// A derived design failed its own invariant validator.
class ValidationFailed : public Error {
public:
    using Error::Error;
};

/// Coverage counting would exceed the configured memory budget.
class MemoryBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Block query received repeated points.
class PointsNotDistinct : public Error {
public:
    using Error::Error;
};

/// File could not be read, written, or parsed.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace qsteiner
