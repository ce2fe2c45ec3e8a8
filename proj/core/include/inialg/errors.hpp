#ifndef INIALG_ERRORS_HPP
#define INIALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace inialg {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Raised when construction data violate one of the named input
/// conditions (A1), (A2), (A3), (C-face) or rho-positivity.
class ValidationError : public Error {
public:
    ValidationError(std::string condition, const std::string& what)
        : Error("[" + condition + "] " + what), condition_(std::move(condition)) {}

    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace inialg

#endif
