#ifndef POLAR_ERRORS_HPP
#define POLAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polar {

// Argument outside the domain where a formula or family is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Exact division left a nonzero remainder.
class NotDivisible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A weighted integrand did not reduce to a polynomial; the integral may diverge.
class NotReducible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A function does not lie in the span of the requested basis, or a linear
// system built from such a basis is singular.
class SpanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

}  // namespace polar

#endif  // POLAR_ERRORS_HPP
