#pragma once

/**
 * @file verify_all.hpp
 * @brief One-shot run of every identity the library checks.
 *
 * `n_max` bounds every determinant order; brute-force enumerations are further
 * bounded by the Budget. Groups run on worker threads, and the result is
 * concatenated in catalogue order so output does not depend on scheduling.
 */

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <string>
#include <string_view>
#include <vector>

#include "hankel_lab/hankel.hpp"
#include "hankel_lab/lgv.hpp"
#include "hankel_lab/recurrence.hpp"
#include "hankel_lab/report.hpp"
#include "hankel_lab/schroeder.hpp"

namespace hankel_lab {

/// Every identity id that verify_all can emit.
inline constexpr std::array<std::string_view, 37> kIdentityIds{
    "seq.enumeration",         "seq.large_small",        "seq.catalan_at_zero",    "seq.values_at_one",
    "det.closed_form_h0",      "det.closed_form_h1",     "det.closed_form_g0_at_one",
    "det.closed_form_g1_at_one", "dodgson",              "lemma_a",                "lgv",
    "key_lemma_1.enumeration", "key_lemma_1.determinant", "key_lemma_2",           "deleted_h1",
    "deleted_h0",              "tables.R",                 "tables.Q",                 "tables.P",
    "tables.Q_sum",              "tables.P_sum",             "tables.Q_boundary",        "tables.P_boundary",
    "tables.Q_nn",               "tables.P_n0",              "tables.P_nn",              "tables.R_n0",
    "tables.R_nn",               "theorem1.part1",         "theorem1.part2",         "theorem1.part3",
    "theorem1.part4",          "theorem1.gamma_phi",     "theorem1.specialization", "rpb.two_term",
    "worked.theta",            "worked.phi",
};

/// The default {-2..2} grid for alpha and beta.
inline std::vector<Integer> default_grid() { return {-2, -1, 0, 1, 2}; }

struct VerifyAllOptions {
    int n_max = 8;
    Budget budget{};
    std::vector<Integer> alphas = default_grid();
    std::vector<Integer> betas = default_grid();
    bool parallel = true;
};

namespace detail {

inline std::vector<VerificationReport> sequence_checks(const VerifyAllOptions& o) {
    std::vector<VerificationReport> out;
    const std::size_t enum_max = std::min<std::size_t>(static_cast<std::size_t>(std::max(o.n_max, 0)),
                                                       o.budget.max_path_length);
    for (auto kind : {SequenceKind::Large, SequenceKind::Small}) {
        for (std::size_t ell = 0; ell <= enum_max; ++ell) {
            Stopwatch sw;
            Poly lhs = total_weight(enumerate_paths(kind, ell, o.budget.max_path_length));
            Poly rhs = seq_poly(kind, ell);
            out.push_back(make_report("seq.enumeration",
                                      {{"kind", std::string(to_string(kind))}, {"len", std::to_string(ell)}},
                                      std::move(lhs), std::move(rhs), sw.elapsed_ms()));
        }
    }
    for (std::size_t ell = 1; ell <= 10; ++ell) {
        out.push_back(make_report("seq.large_small", {{"len", std::to_string(ell)}}, seq_poly(SequenceKind::Large, ell),
                                  Poly::one_plus_t() * seq_poly(SequenceKind::Small, ell)));
    }
    // Catalan numbers from the binomial formula, c_l = C(2l, l) / (l + 1).
    for (unsigned ell = 0; ell <= 8; ++ell) {
        Integer c = 1;
        for (unsigned j = 1; j <= ell; ++j) c = c * (ell + j) / j;
        c /= (ell + 1);
        out.push_back(make_report("seq.catalan_at_zero", {{"len", std::to_string(ell)}},
                                  Poly{eval_at(seq_poly(SequenceKind::Large, ell), 0)}, Poly{c}));
    }
    constexpr std::array<int, 7> large{1, 2, 6, 22, 90, 394, 1806};
    constexpr std::array<int, 7> small{1, 1, 3, 11, 45, 197, 903};
    for (std::size_t ell = 0; ell < large.size(); ++ell) {
        out.push_back(make_report("seq.values_at_one", {{"kind", "large"}, {"len", std::to_string(ell)}},
                                  Poly{eval_at(seq_poly(SequenceKind::Large, ell), 1)}, Poly{large[ell]}));
        out.push_back(make_report("seq.values_at_one", {{"kind", "small"}, {"len", std::to_string(ell)}},
                                  Poly{eval_at(seq_poly(SequenceKind::Small, ell), 1)}, Poly{small[ell]}));
    }
    return out;
}

inline std::vector<VerificationReport> closed_form_checks(const VerifyAllOptions& o) {
    std::vector<VerificationReport> out;
    const Poly L = Poly::one_plus_t();
    for (int n = 0; n <= o.n_max; ++n) {
        const Params pn{{"n", std::to_string(n)}};
        out.push_back(make_report("det.closed_form_h0", pn, hankel_det(Family::H, 0, n), pow(L, binom2(n))));
        out.push_back(make_report("det.closed_form_h1", pn, hankel_det(Family::H, 1, n), pow(L, binom2(n + 1))));
        const Poly two_pow{ipow(2, binom2(n))};
        out.push_back(make_report("det.closed_form_g0_at_one", pn, Poly{eval_at(hankel_det(Family::G, 0, n), 1)},
                                  two_pow));
        out.push_back(make_report("det.closed_form_g1_at_one", pn, Poly{eval_at(hankel_det(Family::G, 1, n), 1)},
                                  two_pow));
    }
    return out;
}

inline std::vector<VerificationReport> dodgson_checks(const VerifyAllOptions& o) {
    std::vector<VerificationReport> out;
    for (auto f : {Family::H, Family::G})
        for (int k = 0; k <= 3; ++k)
            for (int n = 1; n + 1 <= o.n_max; ++n) out.push_back(dodgson_check(f, k, n));
    return out;
}

inline std::vector<VerificationReport> lemma_a_checks(const VerifyAllOptions& o) {
    std::vector<VerificationReport> out;
    for (auto f : {Family::H, Family::G})
        for (int k = 0; k <= 1; ++k)
            for (const auto& a : o.alphas)
                for (const auto& b : o.betas)
                    for (int n = 1; n <= o.n_max; ++n) {
                        Stopwatch sw;
                        Poly lhs = combo_det(f, k, n, a, b);
                        Poly rhs = det_combo_via_expansion(f, k, n, a, b);
                        out.push_back(make_report("lemma_a",
                                                  {{"family", std::string(to_string(f))},
                                                   {"k", std::to_string(k)},
                                                   {"alpha", a.str()},
                                                   {"beta", b.str()},
                                                   {"n", std::to_string(n)}},
                                                  std::move(lhs), std::move(rhs), sw.elapsed_ms()));
                    }
    return out;
}

inline std::vector<VerificationReport> lgv_checks(const VerifyAllOptions& o) {
    std::vector<VerificationReport> out;
    const int fam_max = std::min(o.n_max, o.budget.max_family_size);
    for (auto model : {Model::Pi, Model::Omega})
        for (int k = 0; k <= std::min(1, o.budget.max_family_shift); ++k)
            for (int n = 0; n <= fam_max; ++n) {
                out.push_back(verify_lgv({model, k, n, std::nullopt}, o.budget));
                for (int i = 0; i <= n; ++i) out.push_back(verify_lgv({model, k, n, i}, o.budget));
            }
    for (int n = 1; n <= fam_max; ++n)
        for (int i = 1; i <= n; ++i) out.push_back(verify_key_lemma_1(n, i, o.budget));
    return out;
}

inline std::vector<VerificationReport> deleted_determinant_checks(const VerifyAllOptions& o) {
    std::vector<VerificationReport> out;
    for (int n = 1; n <= o.n_max; ++n)
        for (int i = 1; i <= n; ++i) {
            out.push_back(verify_key_lemma_1_determinant(n, i));
            out.push_back(verify_key_lemma_2(n, i));
            out.push_back(verify_deleted_h1_lemma(n, i));
            out.push_back(verify_deleted_h0_lemma(n, i));
        }
    return out;
}

inline std::vector<VerificationReport> table_checks(const VerifyAllOptions& o) {
    return verify_table_identities(build_tables(o.n_max));
}

inline std::vector<VerificationReport> theorem_checks(const VerifyAllOptions& o, int part) {
    return verify_theorem1(part, o.alphas, o.betas, o.n_max);
}

inline std::vector<VerificationReport> theorem_side_checks(const VerifyAllOptions& o) {
    auto out = verify_gamma_phi_relation(o.alphas, o.betas, o.n_max);
    for (auto& r : verify_specializations(o.n_max)) out.push_back(std::move(r));
    for (auto& r : verify_rpb_equivalent(o.n_max)) out.push_back(std::move(r));
    for (auto& r : verify_worked_examples()) out.push_back(std::move(r));
    return out;
}

} // namespace detail

/// Runs every identity group; throws CapExceeded if the budget cannot cover the request.
inline std::vector<VerificationReport> verify_all(const VerifyAllOptions& o) {
    if (o.n_max < 0) throw std::invalid_argument("verify_all: n must be nonnegative");
    // Warm the sequence memo so workers only take the shared lock.
    seq_poly(SequenceKind::Large, static_cast<std::size_t>(2 * o.n_max + 12));

    using Group = std::function<std::vector<VerificationReport>()>;
    const std::vector<Group> groups{
        [&] { return detail::sequence_checks(o); },
        [&] { return detail::closed_form_checks(o); },
        [&] { return detail::dodgson_checks(o); },
        [&] { return detail::lemma_a_checks(o); },
        [&] { return detail::lgv_checks(o); },
        [&] { return detail::deleted_determinant_checks(o); },
        [&] { return detail::table_checks(o); },
        [&] { return detail::theorem_checks(o, 1); },
        [&] { return detail::theorem_checks(o, 2); },
        [&] { return detail::theorem_checks(o, 3); },
        [&] { return detail::theorem_checks(o, 4); },
        [&] { return detail::theorem_side_checks(o); },
    };

    std::vector<std::vector<VerificationReport>> results(groups.size());
    if (o.parallel) {
        std::vector<std::future<std::vector<VerificationReport>>> futures;
        futures.reserve(groups.size());
        for (const auto& g : groups) futures.push_back(std::async(std::launch::async, g));
        for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < groups.size(); ++i) results[i] = groups[i]();
    }

    std::vector<VerificationReport> out;
    for (auto& r : results)
        for (auto& rep : r) out.push_back(std::move(rep));
    return out;
}

} // namespace hankel_lab
