#pragma once

#include <stdexcept>
#include <string>

namespace ppav {

/* Base of every error raised by the library. */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Input outside the domain of an operation (bad shapes, wrong spans, ...). */
class DomainError : public Error {
public:
    using Error::Error;
};

/* A documented precondition does not hold (e.g. some d_i does not divide m). */
class PreconditionError : public Error {
public:
    using Error::Error;
};

/* A value violates a type invariant (degenerate form, non-alternating, ...). */
class InvariantError : public Error {
public:
    using Error::Error;
};

/* Enumeration would exceed the configured group-order budget. */
class BudgetError : public Error {
public:
    using Error::Error;
};

/* The subgroup used for a quotient is not totally isotropic. */
class IsotropyError : public Error {
public:
    using Error::Error;
};

/* The adjoint of a lattice map is not integral. */
class AdjointError : public Error {
public:
    using Error::Error;
};

/* A sublattice does not carry a nondegenerate restricted form. */
class NotAbelianSubvarietyError : public Error {
public:
    using Error::Error;
};

/* j = 1 - m pr_B is not integral on the ambient lattice. */
class InconsistentPairError : public Error {
public:
    using Error::Error;
};

/* Voltages do not generate Z/m or the cover data is internally inconsistent. */
class CoverError : public Error {
public:
    using Error::Error;
};

/* An identity that a construction must satisfy failed. `identity()` names it. */
class CertificationError : public Error {
public:
    CertificationError(std::string identity, const std::string& what)
        : Error(what), identity_(std::move(identity)) {}
    const std::string& identity() const { return identity_; }

private:
    std::string identity_;
};

/* Malformed external input (fixture files, labels). */
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace ppav
