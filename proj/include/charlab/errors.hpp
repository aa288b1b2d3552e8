#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace charlab {

/// State outside a system's admissible set. The message names the violated
/// predicate (e.g. "h > 1e-12").
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A matrix produced a complex eigenvalue pair.
class NonHyperbolicError : public std::runtime_error {
public:
    NonHyperbolicError(const std::string& what, std::complex<double> pair)
        : std::runtime_error(what), pair_(pair) {}
    std::complex<double> offending_pair() const { return pair_; }

private:
    std::complex<double> pair_;
};

/// Depth at or below the resolvable floor.
class DryStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Denominator within the singularity margin; carries the offending value.
class SingularDenominatorError : public std::runtime_error {
public:
    SingularDenominatorError(const std::string& what, double denominator)
        : std::runtime_error(what), denominator_(denominator) {}
    double denominator() const { return denominator_; }

private:
    double denominator_;
};

/// Gradient blow-up detected mid-run.
class BlowupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Time step violates the advective stability restriction.
class CflError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Implicit wave equation has folded (multiple roots) at the query time.
class MultivaluedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Query point outside a field's or profile's domain.
class OutOfDomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration rejected by the schema.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Generic numerical failure (non-finite values, root solve not converged).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace charlab
