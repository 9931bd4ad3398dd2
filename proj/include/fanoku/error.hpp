#pragma once

#include <stdexcept>
#include <string>

namespace fanoku {

/// Malformed user input or a violated precondition. The CLI maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A character that is not numerically orthogonal to <O_X, O_X(H)>.
class NotInKuComponent : public std::domain_error {
public:
    NotInKuComponent(const std::string& what, std::string offending_chi)
        : std::domain_error(what), offending_chi_(std::move(offending_chi)) {}

    const std::string& offending_chi() const noexcept { return offending_chi_; }

private:
    std::string offending_chi_;
};

}  // namespace fanoku
