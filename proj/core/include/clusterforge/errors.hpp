#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace clusterforge {

// Bad user input: malformed edges, crossing diagonals, out-of-range sizes...
// CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
    input_error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// A structural identity that must hold by theory failed to hold.  Seeing one
// of these means the implementation (not the input) is wrong.  Exit code 3.
class internal_error : public std::logic_error {
public:
    internal_error(std::string kind, const std::string& msg)
        : std::logic_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

}  // namespace clusterforge
