#ifndef OCP_ERRORS_HPP
#define OCP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ocp {

struct OcpError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (syntax, bad numbers, unknown keywords).
struct ParseError : OcpError {
    using OcpError::OcpError;
};

/// Structurally well-formed input that violates an instance invariant.
struct ValidationError : OcpError {
    using OcpError::OcpError;
};

/// A solver capacity guard was exceeded (universe size, edge count, states).
struct GuardError : OcpError {
    using OcpError::OcpError;
};

/// An operation was invoked without a required configuration (e.g. budget).
struct ConfigError : OcpError {
    using OcpError::OcpError;
};

} // namespace ocp

#endif
