#pragma once

#include <stdexcept>
#include <string>

namespace algrest {

// A violated precondition or an input outside the engine's domain.
// `precondition` names the failing contract so the CLI can report it.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string precondition, const std::string &message)
        : std::runtime_error(precondition + ": " + message),
          precondition_(std::move(precondition)) {}

    const std::string &precondition() const { return precondition_; }

private:
    std::string precondition_;
};

}  // namespace algrest
