#pragma once

#include <stdexcept>
#include <string>

namespace hankel_lab {

/// A polynomial division left a remainder or needed a non-integer
/// coefficient. Every division in this library is expected to be exact, so
/// this always points at a violated identity or a bug.
class NonExactDivision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A brute-force enumeration was asked for more than its configured budget.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::string cap_flag)
        : std::runtime_error(what), cap_flag_(std::move(cap_flag)) {}

    /// Name of the CLI flag / budget key that raises the cap.
    const std::string& cap_flag() const noexcept { return cap_flag_; }

private:
    std::string cap_flag_;
};

class InvalidModel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

} // namespace hankel_lab
