#ifndef MSV_ERROR_HPP
#define MSV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace msv {

// Raised when caller-supplied data is malformed (CLI maps this to exit code 2).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal consistency guarantee is violated, e.g. a
// decomposition that should be prime splits anyway (CLI exit code 3).
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace msv

#endif
