#ifndef TPKIT_ERRORS_HPP
#define TPKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tpkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidIndex : Error {
    using Error::Error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct InvalidOrder : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct HypothesisError : Error {
    using Error::Error;
};

// Internal arithmetic consistency violation (e.g. a condensation division
// that should be exact leaves a remainder). Always indicates a bug.
struct ConsistencyError : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

} // namespace tpkit

#endif
