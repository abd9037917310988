#pragma once

/**
 * @file hankel.hpp
 * @brief Hankel, deleted-Hankel and combined matrices of Schroeder
 * polynomials, and their exact determinants over Z[t].
 *
 * For a sequence a and shift k:
 *
 *   plain     A_n^{(k)}        (p,q) -> a_{k+p+q-2}
 *   deleted   A_{n,i}^{(k)}    (p,q) -> a_{k+p+q-2} for q <= i, a_{k+p+q-1} for q > i
 *   combined  A_n^{(k,k+1)}    (p,q) -> alpha*a_{k+p+q-2} + beta*a_{k+p+q-1}
 *
 * with 1-based p, q. Family H uses r_l(t), family G uses s_l(t).
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hankel_lab/errors.hpp"
#include "hankel_lab/poly.hpp"
#include "hankel_lab/report.hpp"
#include "hankel_lab/schroeder.hpp"

namespace hankel_lab {

enum class Family { H, G };

inline SequenceKind kind_of(Family f) { return f == Family::H ? SequenceKind::Large : SequenceKind::Small; }

inline std::string_view to_string(Family f) { return f == Family::H ? "H" : "G"; }

inline Family parse_family(std::string_view s) {
    if (s == "H" || s == "h") return Family::H;
    if (s == "G" || s == "g") return Family::G;
    throw std::invalid_argument("unknown family '" + std::string(s) + "' (expected H or G)");
}

/// Dense square matrix of polynomials with 1-based element access.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    std::size_t order() const noexcept { return n_; }

    Poly& at(std::size_t row, std::size_t col) { return entries_[index(row, col)]; }
    const Poly& at(std::size_t row, std::size_t col) const { return entries_[index(row, col)]; }

    PolyMatrix transpose() const {
        PolyMatrix t(n_);
        for (std::size_t p = 1; p <= n_; ++p)
            for (std::size_t q = 1; q <= n_; ++q) t.at(q, p) = at(p, q);
        return t;
    }

    /// Entrywise evaluation at an integer point.
    std::vector<std::vector<Integer>> evaluate(const Integer& x) const {
        std::vector<std::vector<Integer>> out(n_, std::vector<Integer>(n_));
        for (std::size_t p = 0; p < n_; ++p)
            for (std::size_t q = 0; q < n_; ++q) out[p][q] = eval_at(entries_[p * n_ + q], x);
        return out;
    }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t index(std::size_t row, std::size_t col) const {
        if (row < 1 || row > n_ || col < 1 || col > n_)
            throw IndexOutOfRange("PolyMatrix: index (" + std::to_string(row) + "," + std::to_string(col) +
                                  ") outside order " + std::to_string(n_));
        return (row - 1) * n_ + (col - 1);
    }

    std::size_t n_ = 0;
    std::vector<Poly> entries_;
};

struct Combo {
    Integer alpha;
    Integer beta;
};

struct MatrixSpec {
    Family family = Family::H;
    int k = 0;
    int n = 0;
    std::optional<int> deleted;  ///< column index i in [0, n]
    std::optional<Combo> combo;
};

inline PolyMatrix build(const MatrixSpec& spec) {
    if (spec.n < 0 || spec.k < 0) throw std::invalid_argument("build: n and k must be nonnegative");
    if (spec.deleted && spec.combo) throw std::invalid_argument("build: deleted and combo are mutually exclusive");
    if (spec.deleted && (*spec.deleted < 0 || *spec.deleted > spec.n))
        throw IndexOutOfRange("build: deleted index " + std::to_string(*spec.deleted) + " outside [0," +
                              std::to_string(spec.n) + "]");

    const SequenceKind kind = kind_of(spec.family);
    const auto a = [&](int ell) { return seq_poly(kind, static_cast<std::size_t>(ell)); };
    const std::size_t n = static_cast<std::size_t>(spec.n);
    PolyMatrix m(n);
    for (int p = 1; p <= spec.n; ++p) {
        for (int q = 1; q <= spec.n; ++q) {
            const int ell = spec.k + p + q - 2;
            Poly entry;
            if (spec.combo) {
                entry = a(ell) * spec.combo->alpha + a(ell + 1) * spec.combo->beta;
            } else if (spec.deleted && q > *spec.deleted) {
                entry = a(ell + 1);
            } else {
                entry = a(ell);
            }
            m.at(static_cast<std::size_t>(p), static_cast<std::size_t>(q)) = std::move(entry);
        }
    }
    return m;
}

/**
 * Determinant by fraction-free (Bareiss) elimination. Every division is
 * exact in Z[t]; a NonExactDivision escaping from here is a bug. Zero pivots
 * are replaced by the first nonzero entry below them, with a sign flip; an
 * all-zero column gives determinant 0. The 0x0 determinant is 1.
 */
inline Poly det(const PolyMatrix& matrix) {
    const std::size_t n = matrix.order();
    if (n == 0) return Poly{1};

    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) m[p][q] = matrix.at(p + 1, q + 1);

    bool negate = false;
    Poly prev{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return {};
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = div_exact(num, prev);
            }
            m[i][k] = Poly{};
        }
        prev = m[k][k];
    }
    Poly d = std::move(m[n - 1][n - 1]);
    return negate ? -d : d;
}

inline Poly hankel_det(Family family, int k, int n) { return det(build({family, k, n, std::nullopt, std::nullopt})); }

/// det(A_{n,i}^{(k)}); defined as 0 when i > n so boundary recurrences stay well-typed.
inline Poly deleted_det(Family family, int k, int n, int i) {
    if (i < 0) throw IndexOutOfRange("deleted_det: negative deleted index");
    if (i > n) return {};
    return det(build({family, k, n, i, std::nullopt}));
}

inline Poly combo_det(Family family, int k, int n, const Integer& alpha, const Integer& beta) {
    return det(build({family, k, n, std::nullopt, Combo{alpha, beta}}));
}

/// sum_{i=0}^{n} alpha^i beta^{n-i} det(A_{n,i}^{(k)}); equals combo_det by multilinearity.
inline Poly det_combo_via_expansion(Family family, int k, int n, const Integer& alpha, const Integer& beta) {
    if (n < 0) throw std::invalid_argument("det_combo_via_expansion: n must be nonnegative");
    Poly sum;
    for (int i = 0; i <= n; ++i) {
        const Integer coeff = ipow(alpha, static_cast<unsigned>(i)) * ipow(beta, static_cast<unsigned>(n - i));
        if (coeff == 0) continue;
        sum += deleted_det(family, k, n, i) * coeff;
    }
    return sum;
}

/**
 * Desnanot-Jacobi in Hankel-shift form:
 *   det(A_{n+1}^{(k)}) det(A_{n-1}^{(k+2)}) = det(A_n^{(k)}) det(A_n^{(k+2)}) - det(A_n^{(k+1)})^2
 */
inline VerificationReport dodgson_check(Family family, int k, int n) {
    if (n < 1) throw std::invalid_argument("dodgson_check: n must be at least 1");
    Stopwatch sw;
    Poly lhs = hankel_det(family, k, n + 1) * hankel_det(family, k + 2, n - 1);
    const Poly mid = hankel_det(family, k + 1, n);
    Poly rhs = hankel_det(family, k, n) * hankel_det(family, k + 2, n) - mid * mid;
    return make_report("dodgson",
                       {{"family", std::string(to_string(family))},
                        {"k", std::to_string(k)},
                        {"n", std::to_string(n)}},
                       std::move(lhs), std::move(rhs), sw.elapsed_ms());
}

inline unsigned long long binom2(long long n) { return n < 2 ? 0ULL : static_cast<unsigned long long>(n * (n - 1) / 2); }

} // namespace hankel_lab
