#ifndef TVG_ERRORS_HPP
#define TVG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tvg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unknown entity, relation or paper id.
struct LookupError : Error {
    using Error::Error;
};

// Bad window, partition or journey arguments.
struct InvalidArgumentError : Error {
    using Error::Error;
};

// Malformed input data (adapter files, canonical records).
struct ParseError : Error {
    using Error::Error;
};

// Missing files, bad flags, unknown metric names.
struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace tvg

#endif // TVG_ERRORS_HPP
