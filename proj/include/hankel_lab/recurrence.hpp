#pragma once

/**
 * @file recurrence.hpp
 * @brief Normalized deleted-Hankel tables (P, Q, R) and the four normalized
 * combined-Hankel sequences (Theta, Phi, Psi, Gamma), each computed both from
 * determinants and from recurrences.
 *
 *   P_{n,i} = det(H_{n,i}^{(0)}) / (1+t)^{C(n,2)}
 *   Q_{n,i} = det(H_{n,i}^{(1)}) / (1+t)^{C(n+1,2)}
 *   R_{n,i} = det(G_{n,i}^{(0)}) / (1+t)^{C(n,2)}
 *
 *   Theta_n = det(H_n^{(0,1)}) / (1+t)^{C(n,2)}
 *   Phi_n   = det(H_n^{(1,2)}) / (1+t)^{C(n+1,2)}
 *   Psi_n   = det(G_n^{(0,1)}) / (1+t)^{C(n,2)}
 *   Gamma_n = det(G_n^{(1,2)}) / (1+t)^{C(n,2)}
 *
 * All divisions are exact; NonExactDivision propagates if one is not.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hankel_lab/errors.hpp"
#include "hankel_lab/hankel.hpp"
#include "hankel_lab/poly.hpp"
#include "hankel_lab/report.hpp"

namespace hankel_lab {

enum class TableKind { P, Q, R };

inline std::string_view to_string(TableKind k) {
    switch (k) {
    case TableKind::P: return "P";
    case TableKind::Q: return "Q";
    case TableKind::R: return "R";
    }
    return "?";
}

inline TableKind parse_table_kind(std::string_view s) {
    if (s == "P") return TableKind::P;
    if (s == "Q") return TableKind::Q;
    if (s == "R") return TableKind::R;
    throw std::invalid_argument("unknown table '" + std::string(s) + "' (expected P, Q or R)");
}

/// Triangular table of values indexed by 0 <= i <= n <= n_max; reads with i > n give 0.
class NormalizedTable {
public:
    NormalizedTable() = default;
    NormalizedTable(TableKind which, int n_max) : which_(which), rows_(static_cast<std::size_t>(n_max + 1)) {
        for (int n = 0; n <= n_max; ++n) rows_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n + 1));
    }

    TableKind which() const noexcept { return which_; }
    int n_max() const noexcept { return static_cast<int>(rows_.size()) - 1; }

    Poly at(int n, int i) const {
        if (n < 0 || n > n_max() || i < 0)
            throw IndexOutOfRange(std::string(to_string(which_)) + " table: (" + std::to_string(n) + "," +
                                  std::to_string(i) + ") out of range");
        if (i > n) return {};
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    }

    void set(int n, int i, Poly v) { rows_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i)) = std::move(v); }

private:
    TableKind which_ = TableKind::P;
    std::vector<std::vector<Poly>> rows_;
};

/// Exponent of the (1+t) normalizer for a table at order n.
inline unsigned long long table_normalizer_exponent(TableKind k, int n) {
    return k == TableKind::Q ? binom2(n + 1) : binom2(n);
}

inline NormalizedTable build_table(TableKind which, int n_max) {
    if (n_max < 0) throw std::invalid_argument("build_table: n_max must be nonnegative");
    NormalizedTable table(which, n_max);
    const Family family = which == TableKind::R ? Family::G : Family::H;
    const int k = which == TableKind::Q ? 1 : 0;
    for (int n = 0; n <= n_max; ++n) {
        const Poly norm = pow(Poly::one_plus_t(), table_normalizer_exponent(which, n));
        for (int i = 0; i <= n; ++i) table.set(n, i, div_exact(deleted_det(family, k, n, i), norm));
    }
    return table;
}

struct Tables {
    NormalizedTable P;
    NormalizedTable Q;
    NormalizedTable R;
};

inline Tables build_tables(int n_max) {
    return {build_table(TableKind::P, n_max), build_table(TableKind::Q, n_max), build_table(TableKind::R, n_max)};
}

/// Every recurrence and boundary value relating P, Q and R, one report per (identity, n, i).
inline std::vector<VerificationReport> verify_table_identities(const Tables& tb) {
    const auto& P = tb.P;
    const auto& Q = tb.Q;
    const auto& R = tb.R;
    const int N = std::min({P.n_max(), Q.n_max(), R.n_max()});
    const Poly L = Poly::one_plus_t();
    std::vector<VerificationReport> out;

    for (int n = 1; n <= N; ++n) {
        for (int i = 1; i <= n; ++i) {
            const Params ps{{"n", std::to_string(n)}, {"i", std::to_string(i)}};
            out.push_back(make_report("tables.R", ps, R.at(n, i), Q.at(n - 1, i - 1) + R.at(n - 1, i)));
            out.push_back(
                make_report("tables.Q", ps, Q.at(n, i), Q.at(n - 1, i - 1) + L * Q.at(n - 1, i) + R.at(n - 1, i)));
            out.push_back(make_report("tables.P", ps, P.at(n, i),
                                      Q.at(n - 1, i - 1) + Poly::t() * Q.at(n - 1, i) + R.at(n - 1, i)));
            Poly q_sum = L * Q.at(n - 1, i);
            Poly p_sum = L * P.at(n - 1, i);
            for (int k = i; k <= n; ++k) {
                q_sum += Q.at(k - 1, i - 1);
                p_sum += P.at(k - 1, i - 1);
            }
            out.push_back(make_report("tables.Q_sum", ps, Q.at(n, i), std::move(q_sum)));
            out.push_back(make_report("tables.P_sum", ps, P.at(n, i), std::move(p_sum)));
        }
        const Params pn{{"n", std::to_string(n)}};
        out.push_back(make_report("tables.Q_boundary", pn, Q.at(n, 0), Poly{1} + L * Q.at(n - 1, 0)));
        out.push_back(make_report("tables.P_boundary", pn, P.at(n, 0), L * P.at(n - 1, 0)));
    }
    for (int n = 0; n <= N; ++n) {
        const Params pn{{"n", std::to_string(n)}};
        out.push_back(make_report("tables.Q_nn", pn, Q.at(n, n), Poly{1}));
        out.push_back(make_report("tables.P_n0", pn, P.at(n, 0), pow(L, static_cast<unsigned>(n))));
        out.push_back(make_report("tables.P_nn", pn, P.at(n, n), Poly{1}));
        out.push_back(make_report("tables.R_n0", pn, R.at(n, 0), Poly{1}));
        out.push_back(make_report("tables.R_nn", pn, R.at(n, n), Poly{1}));
    }
    return out;
}

enum class ThetaKind { Theta = 1, Phi = 2, Psi = 3, Gamma = 4 };

inline std::string_view to_string(ThetaKind k) {
    switch (k) {
    case ThetaKind::Theta: return "Theta";
    case ThetaKind::Phi: return "Phi";
    case ThetaKind::Psi: return "Psi";
    case ThetaKind::Gamma: return "Gamma";
    }
    return "?";
}

/// Part number 1..4 of the main recurrences.
inline ThetaKind theta_kind_from_part(int part) {
    if (part < 1 || part > 4) throw std::invalid_argument("part must be 1, 2, 3 or 4");
    return static_cast<ThetaKind>(part);
}

struct ThetaLikeSequence {
    ThetaKind which = ThetaKind::Theta;
    Integer alpha;
    Integer beta;
    std::vector<Poly> values;
};

struct CombinedMatrixShape {
    Family family;
    int k;
};

inline CombinedMatrixShape shape_of(ThetaKind which) {
    switch (which) {
    case ThetaKind::Theta: return {Family::H, 0};
    case ThetaKind::Phi: return {Family::H, 1};
    case ThetaKind::Psi: return {Family::G, 0};
    case ThetaKind::Gamma: return {Family::G, 1};
    }
    return {Family::H, 0};
}

inline unsigned long long sequence_normalizer_exponent(ThetaKind which, int n) {
    return which == ThetaKind::Phi ? binom2(n + 1) : binom2(n);
}

inline ThetaLikeSequence sequence_via_determinant(ThetaKind which, const Integer& alpha, const Integer& beta,
                                                  int n_max) {
    if (n_max < 0) throw std::invalid_argument("sequence_via_determinant: n_max must be nonnegative");
    ThetaLikeSequence seq{which, alpha, beta, {}};
    const auto [family, k] = shape_of(which);
    seq.values.push_back(Poly{1});
    for (int n = 1; n <= n_max; ++n) {
        const Poly norm = pow(Poly::one_plus_t(), sequence_normalizer_exponent(which, n));
        seq.values.push_back(div_exact(combo_det(family, k, n, alpha, beta), norm));
    }
    return seq;
}

/**
 * X_n = alpha * sum_{m=0}^{n-1} beta^m X_{n-1-m} + beta(1+t) X_{n-1} + c_n, X_0 = 1,
 * where c_n is 0 (Theta), beta^n (Phi, Gamma) or -t*beta^n (Psi).
 */
inline ThetaLikeSequence sequence_via_recurrence(ThetaKind which, const Integer& alpha, const Integer& beta,
                                                 int n_max) {
    if (n_max < 0) throw std::invalid_argument("sequence_via_recurrence: n_max must be nonnegative");
    ThetaLikeSequence seq{which, alpha, beta, {Poly{1}}};
    auto& x = seq.values;
    const Poly L = Poly::one_plus_t();
    for (int n = 1; n <= n_max; ++n) {
        Poly acc;
        Integer beta_pow = 1;
        for (int m = 0; m <= n - 1; ++m) {
            acc += x[static_cast<std::size_t>(n - 1 - m)] * beta_pow;
            beta_pow *= beta;
        }
        // beta_pow == beta^n here
        Poly next = acc * alpha + L * x[static_cast<std::size_t>(n - 1)] * beta;
        switch (which) {
        case ThetaKind::Theta: break;
        case ThetaKind::Phi:
        case ThetaKind::Gamma: next += Poly{beta_pow}; break;
        case ThetaKind::Psi: next -= Poly::monomial(beta_pow, 1); break;
        }
        x.push_back(std::move(next));
    }
    return seq;
}

inline Params theta_params(const Integer& alpha, const Integer& beta, int n) {
    return {{"alpha", alpha.str()}, {"beta", beta.str()}, {"n", std::to_string(n)}};
}

/// Determinant route vs recurrence route for every (alpha, beta) pair and 0 <= n <= n_max.
inline std::vector<VerificationReport> verify_theorem1(int part, const std::vector<Integer>& alphas,
                                                       const std::vector<Integer>& betas, int n_max) {
    const ThetaKind which = theta_kind_from_part(part);
    const std::string id = "theorem1.part" + std::to_string(part);
    std::vector<VerificationReport> out;
    for (const auto& a : alphas) {
        for (const auto& b : betas) {
            Stopwatch sw;
            const auto via_det = sequence_via_determinant(which, a, b, n_max);
            const auto via_rec = sequence_via_recurrence(which, a, b, n_max);
            const auto ms = sw.elapsed_ms();
            for (int n = 0; n <= n_max; ++n) {
                const auto idx = static_cast<std::size_t>(n);
                out.push_back(make_report(id, theta_params(a, b, n), via_det.values[idx], via_rec.values[idx], ms));
            }
        }
    }
    return out;
}

/// det(G_n^{(1,2)}) (1+t)^n == det(H_n^{(1,2)}): every entry of the H matrix is (1+t) times the G entry.
inline std::vector<VerificationReport> verify_gamma_phi_relation(const std::vector<Integer>& alphas,
                                                                 const std::vector<Integer>& betas, int n_max) {
    std::vector<VerificationReport> out;
    for (const auto& a : alphas)
        for (const auto& b : betas)
            for (int n = 0; n <= n_max; ++n) {
                Stopwatch sw;
                Poly lhs = combo_det(Family::G, 1, n, a, b) * pow(Poly::one_plus_t(), static_cast<unsigned>(n));
                Poly rhs = combo_det(Family::H, 1, n, a, b);
                out.push_back(make_report("theorem1.gamma_phi", theta_params(a, b, n), std::move(lhs),
                                          std::move(rhs), sw.elapsed_ms()));
            }
    return out;
}

/// Theta with (alpha, beta) = (1, 0) is identically 1, and with (0, 1) equals (1+t)^n.
inline std::vector<VerificationReport> verify_specializations(int n_max) {
    std::vector<VerificationReport> out;
    const auto plain = sequence_via_determinant(ThetaKind::Theta, 1, 0, n_max);
    const auto shifted = sequence_via_determinant(ThetaKind::Theta, 0, 1, n_max);
    for (int n = 0; n <= n_max; ++n) {
        const auto idx = static_cast<std::size_t>(n);
        out.push_back(make_report("theorem1.specialization", theta_params(1, 0, n), plain.values[idx], Poly{1}));
        out.push_back(make_report("theorem1.specialization", theta_params(0, 1, n), shifted.values[idx],
                                  pow(Poly::one_plus_t(), static_cast<unsigned>(n))));
    }
    return out;
}

/**
 * With alpha = beta = 1 the closed form for det(H_n^{(0,1)}) is a combination
 * of the n-th powers of the two roots of x^2 - (L+2)x + L, L = 1+t (their sum
 * is L+2 and their product L). Hence
 *   Theta_n = (t+3) Theta_{n-1} - (1+t) Theta_{n-2}.
 */
inline std::vector<VerificationReport> verify_rpb_equivalent(int n_max) {
    std::vector<VerificationReport> out;
    if (n_max < 2) return out;
    Stopwatch sw;
    const auto theta = sequence_via_determinant(ThetaKind::Theta, 1, 1, n_max).values;
    const auto ms = sw.elapsed_ms();
    const Poly trace{3, 1};
    const Poly norm = Poly::one_plus_t();
    for (int n = 2; n <= n_max; ++n) {
        const auto idx = static_cast<std::size_t>(n);
        out.push_back(make_report("rpb.two_term", {{"n", std::to_string(n)}}, theta[idx],
                                  trace * theta[idx - 1] - norm * theta[idx - 2], ms));
    }
    return out;
}

/// Published values at t = 1, alpha = beta = 1.
inline constexpr std::array<int, 5> kThetaAtOne{1, 3, 10, 34, 116};
inline constexpr std::array<int, 5> kPhiAtOne{1, 4, 14, 48, 164};

inline std::vector<VerificationReport> verify_worked_examples() {
    std::vector<VerificationReport> out;
    const int n_max = static_cast<int>(kThetaAtOne.size()) - 1;
    const auto theta = sequence_via_determinant(ThetaKind::Theta, 1, 1, n_max).values;
    const auto phi = sequence_via_determinant(ThetaKind::Phi, 1, 1, n_max).values;
    for (int n = 0; n <= n_max; ++n) {
        const auto idx = static_cast<std::size_t>(n);
        const Params ps{{"at", "1"}, {"n", std::to_string(n)}};
        out.push_back(make_report("worked.theta", ps, Poly{eval_at(theta[idx], 1)}, Poly{kThetaAtOne[idx]}));
        out.push_back(make_report("worked.phi", ps, Poly{eval_at(phi[idx], 1)}, Poly{kPhiAtOne[idx]}));
    }
    return out;
}

} // namespace hankel_lab
