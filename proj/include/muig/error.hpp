#ifndef MUIG_ERROR_HPP
#define MUIG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace muig {

// Input violates a documented precondition (duplicate ids, unknown vertex, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text or JSON input could not be parsed. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace muig

#endif // MUIG_ERROR_HPP
