#pragma once

#include <stdexcept>
#include <string>

namespace mentioncast {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input data: out-of-range values, malformed records, broken invariants.
// Maps to CLI exit code 1.
struct ValidationError : Error {
    using Error::Error;
};

// Missing or inconsistent run configuration (absent fixture files, a regime
// that needs a transcript without one, and so on). Maps to exit code 1.
struct ConfigError : Error {
    using Error::Error;
};

// A backend call failed for good. Maps to exit code 2.
struct BackendError : Error {
    using Error::Error;
};

// A transport-level backend failure (connection refused, timeout, 5xx).
// Eligible for retry with backoff; promoted to BackendError once retries
// are exhausted.
struct TransportError : BackendError {
    using BackendError::BackendError;
};

// The backend answered but the reply could not be turned into a 0-100 score.
// Carries the raw reply for diagnostics. Not retried.
struct ParseError : BackendError {
    ParseError(const std::string& what, std::string raw_reply)
        : BackendError(what), raw_reply(std::move(raw_reply)) {}
    std::string raw_reply;
};

}  // namespace mentioncast
