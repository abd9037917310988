#pragma once

/**
 * @file schroeder.hpp
 * @brief t-weighted large and small Schroeder numbers, and the paths they count.
 *
 * A large Schroeder path of length l runs from (0,0) to (2l,0) with steps
 * U=(1,1), D=(1,-1), L=(2,0) and never goes below the x-axis; every L step
 * carries weight t. A small path additionally has no L step on the x-axis.
 *
 * seq_poly() computes r_l(t) / s_l(t) by first-return decomposition,
 * enumerate_paths() lists the paths themselves. The two routes are checked
 * against each other in the tests.
 */

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hankel_lab/errors.hpp"
#include "hankel_lab/poly.hpp"

namespace hankel_lab {

enum class SequenceKind { Large, Small };

inline std::string_view to_string(SequenceKind k) { return k == SequenceKind::Large ? "large" : "small"; }

enum class Step : char { U = 'U', D = 'D', L = 'L' };

struct LatticePoint {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint advance(LatticePoint p, Step s) {
    switch (s) {
    case Step::U: return {p.x + 1, p.y + 1};
    case Step::D: return {p.x + 1, p.y - 1};
    case Step::L: return {p.x + 2, p.y};
    }
    return p;
}

struct SchroederPath {
    LatticePoint start;
    std::vector<Step> steps;

    /// Every vertex visited, start included. The interior of an L step is
    /// not a vertex.
    std::vector<LatticePoint> points() const {
        std::vector<LatticePoint> pts;
        pts.reserve(steps.size() + 1);
        pts.push_back(start);
        for (Step s : steps) pts.push_back(advance(pts.back(), s));
        return pts;
    }

    LatticePoint end() const {
        LatticePoint p = start;
        for (Step s : steps) p = advance(p, s);
        return p;
    }

    std::size_t level_steps() const {
        return static_cast<std::size_t>(std::count(steps.begin(), steps.end(), Step::L));
    }

    Poly weight() const { return Poly::monomial(1, level_steps()); }

    /// Never below the axis, and for Small no level step at height 0.
    bool respects(SequenceKind kind) const {
        LatticePoint p = start;
        if (p.y < 0) return false;
        for (Step s : steps) {
            if (kind == SequenceKind::Small && s == Step::L && p.y == 0) return false;
            p = advance(p, s);
            if (p.y < 0) return false;
        }
        return true;
    }

    /// Step string such as "UULDD".
    std::string to_string() const {
        std::string out;
        out.reserve(steps.size());
        for (Step s : steps) out.push_back(static_cast<char>(s));
        return out;
    }

    friend bool operator==(const SchroederPath&, const SchroederPath&) = default;
};

inline SchroederPath parse_path(std::string_view text, LatticePoint start = {}) {
    SchroederPath p{start, {}};
    for (char c : text) {
        switch (c) {
        case 'U': p.steps.push_back(Step::U); break;
        case 'D': p.steps.push_back(Step::D); break;
        case 'L': p.steps.push_back(Step::L); break;
        default: throw std::invalid_argument(std::string("parse_path: unexpected step '") + c + "'");
        }
    }
    return p;
}

/**
 * Memo table for r_l(t) and s_l(t).
 *
 *   r_l = t*r_{l-1} + sum_{j<l} r_j * r_{l-1-j}
 *   s_l =             sum_{j<l} r_j * s_{l-1-j}
 *
 * Safe for concurrent readers; extension takes an exclusive lock.
 */
class SequenceTable {
public:
    Poly get(SequenceKind kind, std::size_t ell) {
        {
            std::shared_lock lock(mutex_);
            if (ell < large_.size()) return kind == SequenceKind::Large ? large_[ell] : small_[ell];
        }
        std::unique_lock lock(mutex_);
        extend_to(ell);
        return kind == SequenceKind::Large ? large_[ell] : small_[ell];
    }

private:
    void extend_to(std::size_t ell) {
        if (large_.empty()) {
            large_.push_back(Poly{1});
            small_.push_back(Poly{1});
        }
        while (large_.size() <= ell) {
            const std::size_t l = large_.size();
            Poly r = Poly::t() * large_[l - 1];
            Poly s;
            for (std::size_t j = 0; j < l; ++j) {
                r += large_[j] * large_[l - 1 - j];
                s += large_[j] * small_[l - 1 - j];
            }
            large_.push_back(std::move(r));
            small_.push_back(std::move(s));
        }
    }

    std::shared_mutex mutex_;
    std::vector<Poly> large_;
    std::vector<Poly> small_;
};

inline SequenceTable& sequence_table() {
    static SequenceTable table;
    return table;
}

/// r_l(t) for Large, s_l(t) for Small.
inline Poly seq_poly(SequenceKind kind, std::size_t ell) { return sequence_table().get(kind, ell); }

namespace detail {

/**
 * Depth-first walk over Schroeder paths from `from` to `to` (both on y >= 0).
 * `blocked(p)` vetoes a vertex; `visit(steps, points)` sees each complete path.
 * Points are reported including the start vertex.
 */
template <typename Blocked, typename Visit>
class PathWalker {
public:
    PathWalker(SequenceKind kind, LatticePoint from, LatticePoint to, Blocked blocked, Visit visit)
        : kind_(kind), to_(to), blocked_(std::move(blocked)), visit_(std::move(visit)) {
        points_.push_back(from);
    }

    void run() {
        const LatticePoint from = points_.front();
        if (from.y < 0 || to_.y < 0 || from.x > to_.x) return;
        if (((to_.x - from.x) + (to_.y - from.y)) % 2 != 0) return;
        if (blocked_(from)) return;
        walk();
    }

private:
    void walk() {
        const LatticePoint p = points_.back();
        if (p == to_) {
            visit_(static_cast<const std::vector<Step>&>(steps_),
                   static_cast<const std::vector<LatticePoint>&>(points_));
            return;
        }
        for (Step s : {Step::U, Step::D, Step::L}) {
            if (s == Step::L && kind_ == SequenceKind::Small && p.y == 0) continue;
            const LatticePoint q = advance(p, s);
            if (q.y < 0 || q.x > to_.x) continue;
            // Must still be able to descend to the target height.
            if (std::abs(q.y - to_.y) > to_.x - q.x) continue;
            if (blocked_(q)) continue;
            steps_.push_back(s);
            points_.push_back(q);
            walk();
            points_.pop_back();
            steps_.pop_back();
        }
    }

    SequenceKind kind_;
    LatticePoint to_;
    Blocked blocked_;
    Visit visit_;
    std::vector<Step> steps_;
    std::vector<LatticePoint> points_;
};

template <typename Blocked, typename Visit>
void walk_paths(SequenceKind kind, LatticePoint from, LatticePoint to, Blocked blocked, Visit visit) {
    PathWalker<Blocked, Visit>(kind, from, to, std::move(blocked), std::move(visit)).run();
}

} // namespace detail

inline constexpr std::size_t kDefaultPathCap = 10;

/**
 * Every path of the given kind from (0,0) to (2*ell,0), each exactly once.
 * Throws CapExceeded for ell > cap.
 */
inline std::vector<SchroederPath> enumerate_paths(SequenceKind kind, std::size_t ell,
                                                  std::size_t cap = kDefaultPathCap) {
    if (ell > cap) {
        throw CapExceeded("enumerate_paths: length " + std::to_string(ell) + " exceeds cap " + std::to_string(cap),
                          "--max-path-len");
    }
    std::vector<SchroederPath> out;
    const LatticePoint origin{0, 0};
    detail::walk_paths(
        kind, origin, LatticePoint{2 * static_cast<int>(ell), 0}, [](LatticePoint) { return false; },
        [&](const std::vector<Step>& steps, const std::vector<LatticePoint>&) {
            out.push_back(SchroederPath{origin, steps});
        });
    return out;
}

/// Sum of path weights; equals seq_poly() when enumerate_paths is exhaustive.
inline Poly total_weight(const std::vector<SchroederPath>& paths) {
    std::vector<Integer> counts;
    for (const auto& p : paths) {
        const std::size_t d = p.level_steps();
        if (counts.size() <= d) counts.resize(d + 1);
        counts[d] += 1;
    }
    return Poly(std::move(counts));
}

} // namespace hankel_lab
