#ifndef SPECDL_ERRORS_HPP
#define SPECDL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specdl {

// Base for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (edge lists, graph6, family specs).
struct parse_error : error {
    using error::error;
};

// Input graph violates an operation's domain (disconnected, wrong diameter, ...).
struct domain_error : error {
    using error::error;
};

// Disconnected input where a connected graph is required; the CLI maps this
// to its own exit code.
struct disconnected_error : domain_error {
    using domain_error::domain_error;
};

// Operation asked for with out-of-range parameters.
struct range_error : error {
    using error::error;
};

// Eigensolver failed to reach the requested off-diagonal residual.
struct convergence_error : error {
    convergence_error(const std::string& what, double residual_)
        : error(what), residual(residual_) {}
    double residual;
};

} // namespace specdl

#endif
