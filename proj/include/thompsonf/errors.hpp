#ifndef THOMPSONF_ERRORS_HPP
#define THOMPSONF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tf {

// Error taxonomy shared by the C API and the CLI exit codes.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string & what) : std::runtime_error(what) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string & what) : std::runtime_error(what) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string & what) : std::runtime_error(what) {}
};

} // namespace tf

#endif
