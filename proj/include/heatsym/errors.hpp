#ifndef HEATSYM_ERRORS_HPP
#define HEATSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace heatsym {

/// Error taxonomy used across the library.  The CLI maps `validation`
/// (bad input) to exit code 2 and `internal` (broken invariant) to 3.
enum class ErrorKind { dimension, validation, truncation, domain, internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace heatsym

#endif
