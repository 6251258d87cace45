#pragma once

#include <stdexcept>
#include <string>

namespace wallcross {

/// Malformed textual input (partition strings, JSON, rationals).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters that are well-formed but unusable: an order vector on a wall,
/// incompatible Cherednik parameters, a path crossing several walls where one
/// was required.
class ConfigurationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wallcross
