#pragma once

/**
 * @file lgv.hpp
 * @brief Brute-force enumeration of non-intersecting Schroeder path families.
 *
 * Path j (j = 0..n-1) of a model with shift k runs from (-k-2j, 0) to
 * (k+2j, 0); with a deleted index i, paths j >= i end at (k+2j+2, 0)
 * instead. Families are tuples of such paths that share no vertex. The
 * enumeration never touches a determinant, so comparing its totals with
 * hankel.hpp is an independent check of the LGV identities.
 *
 * Non-intersection is vertex-disjointness including endpoints. An L step
 * occupies only its two endpoints: its midpoint has the opposite x+y parity
 * from every vertex of every path in these models, so nothing can meet it.
 */

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hankel_lab/errors.hpp"
#include "hankel_lab/hankel.hpp"
#include "hankel_lab/poly.hpp"
#include "hankel_lab/report.hpp"
#include "hankel_lab/schroeder.hpp"

namespace hankel_lab {

/// Enumeration caps. HANKEL_LAB_BUDGET overrides them, e.g. "families=4,paths=12".
struct Budget {
    std::size_t max_path_length = kDefaultPathCap;
    int max_family_size = 3;
    int max_family_shift = 3;

    static Budget from_string(std::string_view text) {
        Budget b;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            const std::string_view item = text.substr(pos, comma - pos);
            pos = comma + 1;
            if (item.empty()) continue;
            const std::size_t eq = item.find('=');
            const std::string key(eq == std::string_view::npos ? std::string_view("families") : item.substr(0, eq));
            const std::string value(eq == std::string_view::npos ? item : item.substr(eq + 1));
            const int v = std::stoi(value);
            if (v < 0) throw std::invalid_argument("budget value must be nonnegative: " + std::string(item));
            if (key == "families") {
                b.max_family_size = v;
            } else if (key == "paths") {
                b.max_path_length = static_cast<std::size_t>(v);
            } else if (key == "shift") {
                b.max_family_shift = v;
            } else {
                throw std::invalid_argument("unknown budget key '" + key + "'");
            }
        }
        return b;
    }

    static Budget from_env() {
        const char* env = std::getenv("HANKEL_LAB_BUDGET");
        return env ? from_string(env) : Budget{};
    }
};

enum class Model { Pi, Omega, PiStar };

inline std::string_view to_string(Model m) {
    switch (m) {
    case Model::Pi: return "pi";
    case Model::Omega: return "omega";
    case Model::PiStar: return "pistar";
    }
    return "?";
}

inline Model parse_model(std::string_view s) {
    if (s == "pi") return Model::Pi;
    if (s == "omega") return Model::Omega;
    if (s == "pistar") return Model::PiStar;
    throw std::invalid_argument("unknown model '" + std::string(s) + "' (expected pi, omega or pistar)");
}

struct PathFamilyModel {
    Model model = Model::Pi;
    int k = 0;
    int n = 0;
    std::optional<int> deleted;
};

inline SequenceKind kind_of(Model m) { return m == Model::Omega ? SequenceKind::Small : SequenceKind::Large; }

inline void validate(const PathFamilyModel& m) {
    if (m.n < 0 || m.k < 0) throw InvalidModel("model: n and k must be nonnegative");
    if (m.deleted && (*m.deleted < 0 || *m.deleted > m.n))
        throw IndexOutOfRange("model: deleted index " + std::to_string(*m.deleted) + " outside [0," +
                              std::to_string(m.n) + "]");
    if (m.model == Model::PiStar) {
        if (m.k != 1) throw InvalidModel("pistar: requires k = 1");
        if (!m.deleted || *m.deleted < 1 || *m.deleted > m.n)
            throw InvalidModel("pistar: requires a deleted index i in [1, n]");
    }
}

inline void check_budget(const PathFamilyModel& m, const Budget& budget) {
    if (m.n > budget.max_family_size)
        throw CapExceeded("family size " + std::to_string(m.n) + " exceeds cap " +
                              std::to_string(budget.max_family_size),
                          "--max-family-n");
    if (m.k > budget.max_family_shift)
        throw CapExceeded("family shift " + std::to_string(m.k) + " exceeds cap " +
                              std::to_string(budget.max_family_shift),
                          "--max-family-k");
}

/// (start, end) of path j for every j in the tuple, innermost first.
inline std::vector<std::pair<LatticePoint, LatticePoint>> endpoints(const PathFamilyModel& m) {
    std::vector<std::pair<LatticePoint, LatticePoint>> out;
    for (int j = 0; j < m.n; ++j) {
        const bool shifted = m.deleted && j >= *m.deleted;
        out.push_back({{-m.k - 2 * j, 0}, {m.k + 2 * j + (shifted ? 2 : 0), 0}});
    }
    return out;
}

/// The single point no path of a PiStar tuple may touch.
inline std::optional<LatticePoint> forbidden_point(const PathFamilyModel& m) {
    if (m.model != Model::PiStar || !m.deleted) return std::nullopt;
    return LatticePoint{2 * *m.deleted + 1, 0};
}

namespace detail {

/// Occupancy grid over the bounding box of a model plus backtracking search.
class FamilySearch {
public:
    using OnFamily = std::function<void(const std::vector<std::vector<Step>>&, std::size_t level_steps)>;

    explicit FamilySearch(const PathFamilyModel& m) : model_(m), ends_(endpoints(m)) {
        for (const auto& [from, to] : ends_) {
            xmin_ = std::min(xmin_, from.x);
            xmax_ = std::max(xmax_, to.x);
        }
        width_ = xmax_ - xmin_ + 1;
        height_ = width_ / 2 + 2;
        occupied_.assign(static_cast<std::size_t>(width_ * height_), 0);
        if (auto f = forbidden_point(m); f && inside(*f)) occupied_[cell(*f)] = 1;
    }

    void run(OnFamily on_family) {
        on_family_ = std::move(on_family);
        tuple_.clear();
        place(0, 0);
    }

private:
    bool inside(LatticePoint p) const { return p.x >= xmin_ && p.x <= xmax_ && p.y >= 0 && p.y < height_; }
    std::size_t cell(LatticePoint p) const { return static_cast<std::size_t>((p.y * width_) + (p.x - xmin_)); }

    void place(std::size_t j, std::size_t levels) {
        if (j == ends_.size()) {
            on_family_(tuple_, levels);
            return;
        }
        const auto [from, to] = ends_[j];
        walk_paths(
            kind_of(model_.model), from, to,
            [this](LatticePoint p) { return !inside(p) || occupied_[cell(p)] != 0; },
            [&](const std::vector<Step>& steps, const std::vector<LatticePoint>& pts) {
                for (auto p : pts) occupied_[cell(p)] = 1;
                tuple_.push_back(steps);
                const auto own = static_cast<std::size_t>(std::count(steps.begin(), steps.end(), Step::L));
                place(j + 1, levels + own);
                tuple_.pop_back();
                for (auto p : pts) occupied_[cell(p)] = 0;
            });
    }

    PathFamilyModel model_;
    std::vector<std::pair<LatticePoint, LatticePoint>> ends_;
    int xmin_ = 0;
    int xmax_ = 0;
    int width_ = 1;
    int height_ = 1;
    std::vector<unsigned char> occupied_;
    std::vector<std::vector<Step>> tuple_;
    OnFamily on_family_;
};

} // namespace detail

/// Calls fn once per non-intersecting family, paths ordered innermost first.
template <typename Fn>
void for_each_family(const PathFamilyModel& m, const Budget& budget, Fn&& fn) {
    validate(m);
    check_budget(m, budget);
    const auto ends = endpoints(m);
    detail::FamilySearch search(m);
    search.run([&](const std::vector<std::vector<Step>>& tuple, std::size_t) {
        std::vector<SchroederPath> family;
        family.reserve(tuple.size());
        for (std::size_t j = 0; j < tuple.size(); ++j) family.push_back(SchroederPath{ends[j].first, tuple[j]});
        fn(static_cast<const std::vector<SchroederPath>&>(family));
    });
}

/// Total weight |X| of all families of the model.
inline Poly enumerate_families(const PathFamilyModel& m, const Budget& budget = Budget::from_env()) {
    validate(m);
    check_budget(m, budget);
    std::vector<Integer> counts;
    detail::FamilySearch search(m);
    search.run([&](const std::vector<std::vector<Step>>&, std::size_t levels) {
        if (counts.size() <= levels) counts.resize(levels + 1);
        counts[levels] += 1;
    });
    return Poly(std::move(counts));
}

inline Params model_params(const PathFamilyModel& m) {
    Params p{{"model", std::string(to_string(m.model))}, {"k", std::to_string(m.k)}, {"n", std::to_string(m.n)}};
    if (m.deleted) p.emplace_back("i", std::to_string(*m.deleted));
    return p;
}

/// The determinant the LGV lemma pairs with a Pi / Omega model.
inline Poly model_determinant(const PathFamilyModel& m) {
    validate(m);
    if (m.model == Model::PiStar) {
        return pow(Poly::one_plus_t(), static_cast<unsigned>(m.n)) * deleted_det(Family::G, 0, m.n, *m.deleted);
    }
    const Family f = m.model == Model::Pi ? Family::H : Family::G;
    return m.deleted ? deleted_det(f, m.k, m.n, *m.deleted) : hankel_det(f, m.k, m.n);
}

inline VerificationReport verify_lgv(const PathFamilyModel& m, const Budget& budget = Budget::from_env()) {
    if (m.model == Model::PiStar) throw InvalidModel("verify_lgv: use verify_key_lemma_1 for pistar");
    Stopwatch sw;
    Poly lhs = enumerate_families(m, budget);
    Poly rhs = model_determinant(m);
    return make_report("lgv", model_params(m), std::move(lhs), std::move(rhs), sw.elapsed_ms());
}

inline void require_deleted_range(int n, int i, const char* who) {
    if (i < 1 || i > n)
        throw IndexOutOfRange(std::string(who) + ": need 1 <= i <= n, got n=" + std::to_string(n) +
                              " i=" + std::to_string(i));
}

inline Params ni_params(int n, int i) { return {{"n", std::to_string(n)}, {"i", std::to_string(i)}}; }

/// |Pi*_{n,i}| by enumeration against (1+t)^n det(G_{n,i}^{(0)}).
inline VerificationReport verify_key_lemma_1(int n, int i, const Budget& budget = Budget::from_env()) {
    require_deleted_range(n, i, "verify_key_lemma_1");
    Stopwatch sw;
    const PathFamilyModel m{Model::PiStar, 1, n, i};
    Poly lhs = enumerate_families(m, budget);
    Poly rhs = model_determinant(m);
    return make_report("key_lemma_1.enumeration", ni_params(n, i), std::move(lhs), std::move(rhs), sw.elapsed_ms());
}

/**
 * Key Lemma I with the left side also written as determinants: tuples whose
 * innermost path is L contribute t*det(H_{n-1,i-1}^{(2)}), those whose
 * innermost path is UD contribute det(H_{n,i}^{(0)}).
 */
inline VerificationReport verify_key_lemma_1_determinant(int n, int i) {
    require_deleted_range(n, i, "verify_key_lemma_1_determinant");
    Stopwatch sw;
    Poly lhs = Poly::t() * deleted_det(Family::H, 2, n - 1, i - 1) + deleted_det(Family::H, 0, n, i);
    Poly rhs = pow(Poly::one_plus_t(), static_cast<unsigned>(n)) * deleted_det(Family::G, 0, n, i);
    return make_report("key_lemma_1.determinant", ni_params(n, i), std::move(lhs), std::move(rhs), sw.elapsed_ms());
}

/// det(G_{n,i}^{(0)}) = det(H_{n-1,i-1}^{(1)}) + (1+t)^{n-1} det(G_{n-1,i}^{(0)})
inline VerificationReport verify_key_lemma_2(int n, int i) {
    require_deleted_range(n, i, "verify_key_lemma_2");
    Stopwatch sw;
    Poly lhs = deleted_det(Family::G, 0, n, i);
    Poly rhs = deleted_det(Family::H, 1, n - 1, i - 1) +
               pow(Poly::one_plus_t(), static_cast<unsigned>(n - 1)) * deleted_det(Family::G, 0, n - 1, i);
    return make_report("key_lemma_2", ni_params(n, i), std::move(lhs), std::move(rhs), sw.elapsed_ms());
}

/// det(H_{n,i}^{(1)}) = (1+t)^n det(H_{n-1,i-1}^{(1)}) + (1+t)^{n+1} det(H_{n-1,i}^{(1)})
///                      + (1+t)^{2n-1} det(G_{n-1,i}^{(0)})
inline VerificationReport verify_deleted_h1_lemma(int n, int i) {
    require_deleted_range(n, i, "verify_deleted_h1_lemma");
    Stopwatch sw;
    const Poly L = Poly::one_plus_t();
    const auto un = static_cast<unsigned>(n);
    Poly lhs = deleted_det(Family::H, 1, n, i);
    Poly rhs = pow(L, un) * deleted_det(Family::H, 1, n - 1, i - 1) +
               pow(L, un + 1) * deleted_det(Family::H, 1, n - 1, i) +
               pow(L, 2 * un - 1) * deleted_det(Family::G, 0, n - 1, i);
    return make_report("deleted_h1", ni_params(n, i), std::move(lhs), std::move(rhs), sw.elapsed_ms());
}

/// det(H_{n,i}^{(0)}) = det(H_{n-1,i-1}^{(1)}) + t det(H_{n-1,i}^{(1)}) + (1+t)^{n-1} det(G_{n-1,i}^{(0)})
inline VerificationReport verify_deleted_h0_lemma(int n, int i) {
    require_deleted_range(n, i, "verify_deleted_h0_lemma");
    Stopwatch sw;
    Poly lhs = deleted_det(Family::H, 0, n, i);
    Poly rhs = deleted_det(Family::H, 1, n - 1, i - 1) + Poly::t() * deleted_det(Family::H, 1, n - 1, i) +
               pow(Poly::one_plus_t(), static_cast<unsigned>(n - 1)) * deleted_det(Family::G, 0, n - 1, i);
    return make_report("deleted_h0", ni_params(n, i), std::move(lhs), std::move(rhs), sw.elapsed_ms());
}

} // namespace hankel_lab
