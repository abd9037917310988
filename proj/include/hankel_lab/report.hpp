#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hankel_lab/poly.hpp"

namespace hankel_lab {

/// Ordered key/value parameters; order is kept so output is deterministic.
using Params = std::vector<std::pair<std::string, std::string>>;

/// Outcome of checking one identity at one parameter point.
struct VerificationReport {
    std::string identity_id;
    Params params;
    Poly lhs;
    Poly rhs;
    bool pass = false;
    std::int64_t elapsed_ms = 0;
};

inline VerificationReport make_report(std::string id, Params params, Poly lhs, Poly rhs,
                                      std::int64_t elapsed_ms = 0) {
    const bool pass = lhs == rhs;
    return {std::move(id), std::move(params), std::move(lhs), std::move(rhs), pass, elapsed_ms};
}

/// Wall-clock milliseconds since construction.
class Stopwatch {
public:
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

} // namespace hankel_lab
