#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fewnom {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by the zero polynomial (or zero scalar).
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Exact division requested but the quotient is not integral.
class NonIntegralQuotient : public Error {
public:
    using Error::Error;
};

/// Operation undefined on the zero polynomial (e.g. reverse).
class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

/// A modulus handed to mod-p routines is unusable (composite, divides the
/// leading coefficient, or exceeds the word-size limit).
class BadPrime : public Error {
public:
    using Error::Error;
};

/// Factor recombination exceeded the configured subset budget.  The result is
/// "factorization incomplete", never a wrong answer.
class RecombinationOverflow : public Error {
public:
    using Error::Error;
};

/// A structural fact that the construction guarantees failed to hold
/// (a would-be counterexample; callers surface this loudly).
class StructureViolation : public Error {
public:
    using Error::Error;
};

/// An operation's documented precondition was violated by the caller.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// Recurrence evaluation fell off the table of base cases.
class MissingBaseCase : public Error {
public:
    using Error::Error;
};

/// multiplicity witness requested for an index that is not a cyclotomic factor.
class NotACyclotomicFactor : public Error {
public:
    using Error::Error;
};

/// Closure construction exceeded the element budget without stabilizing.
class ClosureBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A candidate handed to the exponent matcher does not have the required
/// five-term, two-positive/three-negative shape.
class MalformedCandidate : public Error {
public:
    using Error::Error;
};

/// Iterative numeric routine failed to converge within its budget.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

/// Torus quadrature hit the zero set of the integrand at every retry offset.
class SingularGrid : public Error {
public:
    using Error::Error;
};

/// Zero handed to an operation that requires a non-zero input value.
class ZeroInput : public Error {
public:
    using Error::Error;
};

/// Expression text failed to parse; `position` is a 0-based byte offset.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Expression used a variable outside the allowed alphabet.
class UnknownVariable : public Error {
public:
    UnknownVariable(const std::string& name, std::size_t position)
        : Error("unknown variable '" + name + "' (at position " +
                std::to_string(position) + ")"),
          position(position), name(name) {}
    std::size_t position;
    std::string name;
};

} // namespace fewnom
