#pragma once

/**
 * @file cli.hpp
 * @brief The `hankel_lab` command-line front end.
 *
 * Subcommands: seq, det, dodgson, lgv, keylemma, theorem1, tables, rpb,
 * verify-all. Machine output (JSON, or CSV with --format csv) goes to `out`;
 * the human summary goes to `err` unless --quiet.
 *
 * Exit codes: 0 every emitted report passes, 1 some report fails,
 * 2 usage error, 3 enumeration budget exceeded.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankel_lab/errors.hpp"
#include "hankel_lab/hankel.hpp"
#include "hankel_lab/io.hpp"
#include "hankel_lab/lgv.hpp"
#include "hankel_lab/recurrence.hpp"
#include "hankel_lab/report.hpp"
#include "hankel_lab/schroeder.hpp"
#include "hankel_lab/verify_all.hpp"

namespace hankel_lab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Thrown for malformed flag values that CLI11 itself accepts.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Integer parse_integer(const std::string& flag, const std::string& text) {
    const bool digits = !text.empty() && std::all_of(text.begin() + ((text[0] == '-' || text[0] == '+') ? 1 : 0),
                                                     text.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (!digits || text == "-" || text == "+") throw UsageError(flag + ": expected an integer, got '" + text + "'");
    return Integer(text[0] == '+' ? text.substr(1) : text);
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::string format = "json";
    bool quiet = false;
    Budget budget;

    bool csv() const { return format == "csv"; }

    void summary(const std::string& line) const {
        if (!quiet) err << line << '\n';
    }
};

/// Emits reports in the chosen format and returns the exit code they imply.
inline int emit_reports(const Context& ctx, const std::string& command, const std::vector<VerificationReport>& reports,
                        const std::optional<Integer>& at = std::nullopt) {
    if (ctx.csv()) {
        ctx.out << kReportCsvHeader << (at ? ",lhs_at,rhs_at" : "") << '\n';
        for (const auto& r : reports) {
            ctx.out << report_to_csv(r);
            if (at) ctx.out << ',' << eval_at(r.lhs, *at) << ',' << eval_at(r.rhs, *at);
            ctx.out << '\n';
        }
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            auto j = report_to_json(r);
            if (at) {
                j["at"] = integer_to_json(*at);
                j["lhs_at"] = integer_to_json(eval_at(r.lhs, *at));
                j["rhs_at"] = integer_to_json(eval_at(r.rhs, *at));
            }
            arr.push_back(std::move(j));
        }
        nlohmann::json doc = {{"schema", kSchemaVersion},
                              {"command", command},
                              {"count", reports.size()},
                              {"all_pass", all_pass(reports)},
                              {"reports", std::move(arr)}};
        ctx.out << doc.dump() << '\n';
    }

    if (!ctx.quiet) {
        std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // id -> (pass, total)
        std::vector<std::string> order;
        for (const auto& r : reports) {
            auto [it, inserted] = tally.try_emplace(r.identity_id, 0, 0);
            if (inserted) order.push_back(r.identity_id);
            it->second.first += r.pass ? 1 : 0;
            it->second.second += 1;
        }
        for (const auto& id : order) {
            const auto [pass, total] = tally[id];
            ctx.err << (pass == total ? "PASS " : "FAIL ") << id << ": " << pass << '/' << total << '\n';
        }
        ctx.err << command << ": " << (all_pass(reports) ? "all " : "NOT all ") << reports.size()
                << " reports pass\n";
    }
    return all_pass(reports) ? kExitOk : kExitFailed;
}

} // namespace detail

/**
 * Runs one command line (without the program name). Never throws for bad
 * input; returns the exit code instead.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::Context;
    Context ctx{out, err, "json", false, Budget{}};

    CLI::App app{"Exact Hankel determinants of weighted Schroeder numbers", "hankel_lab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--quiet", ctx.quiet, "Suppress the summary on standard error");
    std::optional<int> max_family_n;
    std::optional<int> max_family_k;
    std::optional<int> max_path_len;
    app.add_option("--max-family-n", max_family_n, "Largest family size the enumeration oracle accepts (default 3)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--max-family-k", max_family_k, "Largest shift k the enumeration oracle accepts (default 3)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--max-path-len", max_path_len, "Longest single path enumerate accepts (default 10)")
        ->check(CLI::NonNegativeNumber);

    // seq
    auto* seq = app.add_subcommand("seq", "Weighted Schroeder polynomial r_l(t) or s_l(t)");
    std::string seq_kind;
    int seq_len = 0;
    std::string seq_at;
    bool seq_paths = false;
    seq->add_option("--kind", seq_kind, "large or small")->required()->check(CLI::IsMember({"large", "small"}));
    seq->add_option("--len", seq_len, "Path length l")->required()->check(CLI::NonNegativeNumber);
    seq->add_option("--at", seq_at, "Evaluate at this integer t");
    seq->add_flag("--paths", seq_paths, "Also list every path as a U/D/L string");

    // det
    auto* det_cmd = app.add_subcommand("det", "Exact determinant of a Hankel-type matrix");
    std::string det_family;
    int det_k = 0;
    int det_n = 0;
    std::optional<int> det_i;
    std::string det_alpha;
    std::string det_beta;
    std::string det_at;
    det_cmd->add_option("--family", det_family, "H (large) or G (small)")->required()->check(CLI::IsMember({"H", "G"}));
    det_cmd->add_option("--k", det_k, "Shift k")->required()->check(CLI::NonNegativeNumber);
    det_cmd->add_option("--n", det_n, "Order n")->required()->check(CLI::NonNegativeNumber);
    auto* opt_i = det_cmd->add_option("--i", det_i, "Deleted column index i in [0, n]");
    auto* opt_alpha = det_cmd->add_option("--alpha", det_alpha, "Combined matrix coefficient alpha");
    auto* opt_beta = det_cmd->add_option("--beta", det_beta, "Combined matrix coefficient beta");
    opt_alpha->needs(opt_beta);
    opt_beta->needs(opt_alpha);
    opt_i->excludes(opt_alpha)->excludes(opt_beta);
    det_cmd->add_option("--at", det_at, "Evaluate at this integer t");

    // dodgson
    auto* dodgson = app.add_subcommand("dodgson", "Desnanot-Jacobi check for a Hankel family");
    std::string dj_family;
    int dj_k = 0;
    int dj_n = 1;
    dodgson->add_option("--family", dj_family, "H or G")->required()->check(CLI::IsMember({"H", "G"}));
    dodgson->add_option("--k", dj_k, "Shift k")->required()->check(CLI::NonNegativeNumber);
    dodgson->add_option("--n", dj_n, "Order n >= 1")->required()->check(CLI::PositiveNumber);

    // lgv
    auto* lgv = app.add_subcommand("lgv", "Brute-force non-intersecting path family total");
    std::string lgv_model;
    int lgv_k = 0;
    int lgv_n = 0;
    std::optional<int> lgv_i;
    bool lgv_compare = false;
    lgv->add_option("--model", lgv_model, "pi, omega or pistar")
        ->required()
        ->check(CLI::IsMember({"pi", "omega", "pistar"}));
    lgv->add_option("--k", lgv_k, "Shift k")->required()->check(CLI::NonNegativeNumber);
    lgv->add_option("--n", lgv_n, "Tuple size n")->required()->check(CLI::NonNegativeNumber);
    lgv->add_option("--i", lgv_i, "Deleted index i");
    lgv->add_flag("--compare", lgv_compare, "Compare against the matching determinant");

    // keylemma
    auto* keylemma = app.add_subcommand("keylemma", "Check Key Lemma I or II at one (n, i)");
    int kl_which = 1;
    int kl_n = 1;
    int kl_i = 1;
    keylemma->add_option("--which", kl_which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    keylemma->add_option("--n", kl_n, "n >= 1")->required()->check(CLI::PositiveNumber);
    keylemma->add_option("--i", kl_i, "1 <= i <= n")->required();

    // theorem1
    auto* theorem1 = app.add_subcommand("theorem1", "Determinant route vs recurrence route");
    int th_part = 1;
    std::string th_alpha;
    std::string th_beta;
    int th_n = 0;
    std::string th_at;
    theorem1->add_option("--part", th_part, "1 (Theta), 2 (Phi), 3 (Psi) or 4 (Gamma)")
        ->required()
        ->check(CLI::IsMember({1, 2, 3, 4}));
    theorem1->add_option("--alpha", th_alpha, "alpha")->required();
    theorem1->add_option("--beta", th_beta, "beta")->required();
    theorem1->add_option("--n", th_n, "Largest n")->required()->check(CLI::NonNegativeNumber);
    theorem1->add_option("--at", th_at, "Also evaluate both sides at this integer t");

    // tables
    auto* tables = app.add_subcommand("tables", "Normalized deleted-Hankel table P, Q or R");
    std::string tb_which;
    int tb_n = 0;
    tables->add_option("--which", tb_which, "P, Q or R")->required()->check(CLI::IsMember({"P", "Q", "R"}));
    tables->add_option("--n", tb_n, "Largest n")->required()->check(CLI::NonNegativeNumber);

    // rpb
    auto* rpb = app.add_subcommand("rpb", "Two-term recurrence for Theta at alpha = beta = 1");
    int rpb_n = 10;
    rpb->add_option("--n", rpb_n, "Largest n")->required()->check(CLI::NonNegativeNumber);

    // verify-all
    auto* verify = app.add_subcommand("verify-all", "Every identity at every parameter point");
    int va_n = 8;
    bool va_serial = false;
    verify->add_option("--n", va_n, "Largest determinant order")->check(CLI::NonNegativeNumber);
    verify->add_flag("--serial", va_serial, "Run on a single thread");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        ctx.budget = Budget::from_env();
    } catch (const std::exception& e) {
        err << "error: HANKEL_LAB_BUDGET: " << e.what() << '\n';
        return kExitUsage;
    }
    if (max_family_n) ctx.budget.max_family_size = *max_family_n;
    if (max_family_k) ctx.budget.max_family_shift = *max_family_k;
    if (max_path_len) ctx.budget.max_path_length = static_cast<std::size_t>(*max_path_len);

    try {
        if (*seq) {
            const SequenceKind kind = seq_kind == "large" ? SequenceKind::Large : SequenceKind::Small;
            const auto ell = static_cast<std::size_t>(seq_len);
            const Poly p = seq_poly(kind, ell);
            std::optional<Integer> at;
            if (!seq_at.empty()) at = detail::parse_integer("--at", seq_at);
            std::vector<SchroederPath> paths;
            if (seq_paths) paths = enumerate_paths(kind, ell, ctx.budget.max_path_length);
            if (ctx.csv()) {
                out << "kind,len,coeffs" << (at ? ",at" : "") << '\n';
                out << seq_kind << ',' << seq_len << ',' << csv_coeffs(p);
                if (at) out << ',' << eval_at(p, *at);
                out << '\n';
                for (const auto& path : paths) out << path.to_string() << '\n';
            } else {
                nlohmann::json doc = {{"schema", kSchemaVersion}, {"kind", seq_kind}, {"len", seq_len},
                                      {"coeffs", poly_to_json(p)}};
                if (at) doc["at"] = integer_to_json(eval_at(p, *at));
                if (seq_paths) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& path : paths) arr.push_back(path.to_string());
                    doc["paths"] = std::move(arr);
                }
                out << doc.dump() << '\n';
            }
            ctx.summary(std::string(seq_kind == "large" ? "r_" : "s_") + std::to_string(seq_len) + "(t) = " +
                        to_string(p));
            return kExitOk;
        }

        if (*det_cmd) {
            MatrixSpec spec{parse_family(det_family), det_k, det_n, det_i, std::nullopt};
            if (*opt_alpha)
                spec.combo = Combo{detail::parse_integer("--alpha", det_alpha), detail::parse_integer("--beta", det_beta)};
            std::optional<Integer> at;
            if (!det_at.empty()) at = detail::parse_integer("--at", det_at);
            const Poly d = det(build(spec));
            nlohmann::json spec_json = {{"family", det_family}, {"k", det_k}, {"n", det_n}};
            if (spec.deleted) spec_json["i"] = *spec.deleted;
            if (spec.combo) {
                spec_json["alpha"] = integer_to_json(spec.combo->alpha);
                spec_json["beta"] = integer_to_json(spec.combo->beta);
            }
            if (ctx.csv()) {
                out << "family,k,n,i,alpha,beta,det_coeffs" << (at ? ",det_at" : "") << '\n';
                out << det_family << ',' << det_k << ',' << det_n << ','
                    << (spec.deleted ? std::to_string(*spec.deleted) : "") << ','
                    << (spec.combo ? spec.combo->alpha.str() : "") << ',' << (spec.combo ? spec.combo->beta.str() : "")
                    << ',' << csv_coeffs(d);
                if (at) out << ',' << eval_at(d, *at);
                out << '\n';
            } else {
                nlohmann::json doc = {{"schema", kSchemaVersion}, {"spec", spec_json}, {"det_coeffs", poly_to_json(d)}};
                if (at) doc["det_at"] = integer_to_json(eval_at(d, *at));
                out << doc.dump() << '\n';
            }
            ctx.summary("det = " + to_string(d));
            return kExitOk;
        }

        if (*dodgson) {
            const auto report = dodgson_check(parse_family(dj_family), dj_k, dj_n);
            if (ctx.csv()) {
                out << kReportCsvHeader << '\n' << report_to_csv(report) << '\n';
            } else {
                auto doc = report_to_json(report);
                doc["schema"] = kSchemaVersion;
                out << doc.dump() << '\n';
            }
            ctx.summary(std::string(report.pass ? "PASS" : "FAIL") + " dodgson");
            return report.pass ? kExitOk : kExitFailed;
        }

        if (*lgv) {
            const PathFamilyModel model{parse_model(lgv_model), lgv_k, lgv_n, lgv_i};
            const Poly total = enumerate_families(model, ctx.budget);
            std::optional<Poly> determinant;
            if (lgv_compare) determinant = model_determinant(model);
            const bool equal = !determinant || *determinant == total;
            if (ctx.csv()) {
                out << "model,k,n,i,total_coeffs" << (determinant ? ",determinant_coeffs,equal" : "") << '\n';
                out << lgv_model << ',' << lgv_k << ',' << lgv_n << ',' << (lgv_i ? std::to_string(*lgv_i) : "") << ','
                    << csv_coeffs(total);
                if (determinant) out << ',' << csv_coeffs(*determinant) << ',' << (equal ? "true" : "false");
                out << '\n';
            } else {
                nlohmann::json m = {{"model", lgv_model}, {"k", lgv_k}, {"n", lgv_n}};
                if (lgv_i) m["i"] = *lgv_i;
                nlohmann::json doc = {{"schema", kSchemaVersion}, {"model", m}, {"total_coeffs", poly_to_json(total)}};
                if (determinant) {
                    doc["determinant_coeffs"] = poly_to_json(*determinant);
                    doc["equal"] = equal;
                }
                out << doc.dump() << '\n';
            }
            ctx.summary("total = " + to_string(total) + (determinant ? (equal ? " (matches)" : " (MISMATCH)") : ""));
            return equal ? kExitOk : kExitFailed;
        }

        if (*keylemma) {
            std::vector<VerificationReport> reports;
            if (kl_which == 1) {
                if (kl_n <= ctx.budget.max_family_size) {
                    reports.push_back(verify_key_lemma_1(kl_n, kl_i, ctx.budget));
                } else {
                    ctx.summary("n exceeds --max-family-n; enumeration skipped, determinant form only");
                }
                reports.push_back(verify_key_lemma_1_determinant(kl_n, kl_i));
            } else {
                reports.push_back(verify_key_lemma_2(kl_n, kl_i));
            }
            return detail::emit_reports(ctx, "keylemma", reports);
        }

        if (*theorem1) {
            const Integer alpha = detail::parse_integer("--alpha", th_alpha);
            const Integer beta = detail::parse_integer("--beta", th_beta);
            std::optional<Integer> at;
            if (!th_at.empty()) at = detail::parse_integer("--at", th_at);
            return detail::emit_reports(ctx, "theorem1", verify_theorem1(th_part, {alpha}, {beta}, th_n), at);
        }

        if (*tables) {
            const TableKind which = parse_table_kind(tb_which);
            const NormalizedTable table = build_table(which, tb_n);
            if (ctx.csv()) {
                out << "which,n,i,coeffs\n";
                for (int n = 0; n <= tb_n; ++n)
                    for (int i = 0; i <= n; ++i)
                        out << tb_which << ',' << n << ',' << i << ',' << csv_coeffs(table.at(n, i)) << '\n';
            } else {
                nlohmann::json entries = nlohmann::json::array();
                for (int n = 0; n <= tb_n; ++n)
                    for (int i = 0; i <= n; ++i)
                        entries.push_back({{"n", n}, {"i", i}, {"coeffs", poly_to_json(table.at(n, i))}});
                nlohmann::json doc = {
                    {"schema", kSchemaVersion}, {"which", tb_which}, {"n_max", tb_n}, {"entries", std::move(entries)}};
                out << doc.dump() << '\n';
            }
            ctx.summary(tb_which + " table built for n <= " + std::to_string(tb_n) + ", all divisions exact");
            return kExitOk;
        }

        if (*rpb) {
            return detail::emit_reports(ctx, "rpb", verify_rpb_equivalent(rpb_n));
        }

        if (*verify) {
            VerifyAllOptions opts;
            opts.n_max = va_n;
            opts.budget = ctx.budget;
            opts.parallel = !va_serial;
            return detail::emit_reports(ctx, "verify-all", verify_all(opts));
        }
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << " (raise with " << e.cap_flag() << " or HANKEL_LAB_BUDGET)\n";
        return kExitBudget;
    } catch (const NonExactDivision& e) {
        err << "error: non-exact division: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace hankel_lab::cli
