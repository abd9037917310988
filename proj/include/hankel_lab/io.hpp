#pragma once

/**
 * @file io.hpp
 * @brief JSON and CSV renderings of polynomials and reports.
 *
 * Polynomials are ascending coefficient arrays: t^2 + 3t + 2 <-> [2,3,1].
 * Integers within the 53-bit safe range are JSON numbers; larger magnitudes
 * are decimal strings so consumers never round.
 */

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hankel_lab/poly.hpp"
#include "hankel_lab/report.hpp"

namespace hankel_lab {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::int64_t kMaxSafeJsonInteger = (std::int64_t{1} << 53) - 1;

inline nlohmann::json integer_to_json(const Integer& v) {
    if (v <= kMaxSafeJsonInteger && v >= -kMaxSafeJsonInteger) return v.convert_to<std::int64_t>();
    return v.str();
}

inline Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

inline nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(integer_to_json(c));
    return arr;
}

inline Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a coefficient array");
    std::vector<Integer> cs;
    for (const auto& e : j) cs.push_back(integer_from_json(e));
    return Poly(std::move(cs));
}

inline nlohmann::json params_to_json(const Params& params) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [k, v] : params) obj[k] = v;
    return obj;
}

inline nlohmann::json report_to_json(const VerificationReport& r, bool with_timing = true) {
    nlohmann::json j = {
        {"identity_id", r.identity_id},
        {"params", params_to_json(r.params)},
        {"lhs", poly_to_json(r.lhs)},
        {"rhs", poly_to_json(r.rhs)},
        {"pass", r.pass},
    };
    if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline std::string csv_coeffs(const Poly& p) {
    std::ostringstream os;
    os << '"' << '[';
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? "," : "") << p.coeffs()[i];
    os << ']' << '"';
    return os.str();
}

inline std::string csv_params(const Params& params) {
    std::ostringstream os;
    os << '"';
    for (std::size_t i = 0; i < params.size(); ++i) os << (i ? ";" : "") << params[i].first << '=' << params[i].second;
    os << '"';
    return os.str();
}

inline constexpr const char* kReportCsvHeader = "identity_id,params,lhs,rhs,pass,elapsed_ms";

inline std::string report_to_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << r.identity_id << ',' << csv_params(r.params) << ',' << csv_coeffs(r.lhs) << ',' << csv_coeffs(r.rhs) << ','
       << (r.pass ? "true" : "false") << ',' << r.elapsed_ms;
    return os.str();
}

} // namespace hankel_lab
