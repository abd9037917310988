#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "hankel_lab/cli.hpp"

namespace hankel_lab {
namespace {

using nlohmann::json;

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json strip_timing(json doc) {
    if (doc.contains("reports"))
        for (auto& r : doc["reports"]) r.erase("elapsed_ms");
    return doc;
}

TEST(Io, BigIntegersAreStrings) {
    const Integer big = ipow(2, 60);
    EXPECT_EQ(integer_to_json(big), json("1152921504606846976"));
    EXPECT_EQ(integer_to_json(Integer(-7)), json(-7));
    EXPECT_EQ(integer_to_json(Integer(kMaxSafeJsonInteger)), json(kMaxSafeJsonInteger));
    EXPECT_TRUE(integer_to_json(Integer(kMaxSafeJsonInteger) + 1).is_string());
    const Poly p = pow(Poly::one_plus_t(), 80);
    EXPECT_EQ(poly_from_json(json::parse(poly_to_json(p).dump())), p);
    EXPECT_THROW(integer_from_json(json(1.5)), std::invalid_argument);
}

TEST(Io, ReportJsonAndCsv) {
    const auto r = make_report("x", {{"n", "2"}}, Poly{1, 1}, Poly{1, 1}, 5);
    const auto j = report_to_json(r);
    EXPECT_EQ(j["identity_id"], "x");
    EXPECT_EQ(j["params"]["n"], "2");
    EXPECT_EQ(j["lhs"], json::parse("[1,1]"));
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_FALSE(report_to_json(r, false).contains("elapsed_ms"));
    EXPECT_EQ(report_to_csv(r), "x,\"n=2\",\"[1,1]\",\"[1,1]\",true,5");
}

TEST(Cli, Seq) {
    const auto r = run_cli({"seq", "--kind", "large", "--len", "3", "--at", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["schema"], 1);
    EXPECT_EQ(doc["coeffs"], json::parse("[5,10,6,1]"));
    EXPECT_EQ(doc["at"], 22);
    const auto paths = json::parse(run_cli({"seq", "--kind", "small", "--len", "2", "--paths"}).out)["paths"];
    EXPECT_EQ(paths.size(), 3u);
}

TEST(Cli, Theorem1AtOne) {
    const auto r = run_cli({"theorem1", "--part", "2", "--alpha", "1", "--beta", "1", "--n", "3", "--at", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_TRUE(doc["all_pass"].get<bool>());
    ASSERT_EQ(doc["reports"].size(), 4u);
    EXPECT_EQ(doc["reports"].back()["rhs_at"], 48);
    EXPECT_EQ(doc["reports"].back()["lhs_at"], 48);
}

TEST(Cli, DetAndDodgson) {
    auto doc = json::parse(run_cli({"det", "--family", "H", "--k", "0", "--n", "3", "--alpha", "1", "--beta", "1",
                                    "--at", "1"})
                               .out);
    EXPECT_EQ(doc["det_coeffs"], json::parse("[13,53,87,74,35,9,1]"));
    EXPECT_EQ(doc["det_at"], 272);
    doc = json::parse(run_cli({"det", "--family", "G", "--k", "0", "--n", "3", "--i", "1"}).out);
    EXPECT_EQ(doc["det_coeffs"], json::parse("[6,22,31,21,7,1]"));
    const auto dj = run_cli({"dodgson", "--family", "G", "--k", "1", "--n", "4", "--quiet"});
    EXPECT_EQ(dj.code, 0);
    EXPECT_TRUE(dj.err.empty());
    EXPECT_TRUE(json::parse(dj.out)["pass"].get<bool>());
}

TEST(Cli, LgvKeylemmaTablesRpb) {
    auto r = run_cli({"lgv", "--model", "pi", "--k", "1", "--n", "2", "--compare"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["total_coeffs"], json::parse("[1,3,3,1]"));
    EXPECT_TRUE(json::parse(r.out)["equal"].get<bool>());

    r = run_cli({"keylemma", "--which", "1", "--n", "3", "--i", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["count"], 2);
    r = run_cli({"keylemma", "--which", "1", "--n", "6", "--i", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["count"], 1);

    r = run_cli({"tables", "--which", "Q", "--n", "3"});
    ASSERT_EQ(r.code, 0);
    const auto entries = json::parse(r.out)["entries"];
    EXPECT_EQ(entries.size(), 10u);
    EXPECT_EQ(entries[6]["coeffs"], json::parse("[4,6,4,1]"));

    r = run_cli({"rpb", "--n", "10"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["count"], 9);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"bogus"}).code, 2);
    EXPECT_EQ(run_cli({"det", "--family", "X", "--k", "0", "--n", "1"}).code, 2);
    EXPECT_EQ(run_cli({"det", "--family", "H", "--k", "0", "--n", "2", "--i", "3"}).code, 2);
    EXPECT_EQ(run_cli({"det", "--family", "H", "--k", "0", "--n", "2", "--i", "1", "--alpha", "1", "--beta", "1"}).code,
              2);
    EXPECT_EQ(run_cli({"theorem1", "--part", "1", "--alpha", "x", "--beta", "1", "--n", "2"}).code, 2);
    EXPECT_EQ(run_cli({"lgv", "--model", "pistar", "--k", "0", "--n", "1", "--i", "1"}).code, 2);
    EXPECT_EQ(run_cli({"keylemma", "--which", "2", "--n", "2", "--i", "0"}).code, 2);

    auto r = run_cli({"lgv", "--model", "pi", "--k", "0", "--n", "4"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("--max-family-n"), std::string::npos);
    EXPECT_EQ(run_cli({"seq", "--kind", "large", "--len", "11", "--paths"}).code, 3);
    EXPECT_EQ(run_cli({"--max-path-len", "11", "seq", "--kind", "large", "--len", "5", "--paths", "--quiet"}).code, 0);
    EXPECT_EQ(run_cli({"--max-family-n", "4", "lgv", "--model", "omega", "--k", "0", "--n", "4", "--compare"}).code, 0);
}

TEST(Cli, CsvOutput) {
    auto r = run_cli({"--format", "csv", "rpb", "--n", "3"});
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header, kReportCsvHeader);
    std::string row;
    std::size_t rows = 0;
    while (std::getline(lines, row)) {
        EXPECT_EQ(row.rfind("rpb.two_term,", 0), 0u) << row;
        ++rows;
    }
    EXPECT_EQ(rows, 2u);

    r = run_cli({"--format", "csv", "seq", "--kind", "small", "--len", "2", "--at", "1"});
    EXPECT_EQ(r.out, "kind,len,coeffs,at\nsmall,2,\"[2,1]\",3\n");
    EXPECT_EQ(run_cli({"--format", "xml", "rpb", "--n", "3"}).code, 2);
}

TEST(Cli, DeterministicUpToTiming) {
    const std::vector<std::string> args{"theorem1", "--part", "3", "--alpha", "-2", "--beta", "2", "--n", "5"};
    const auto a = strip_timing(json::parse(run_cli(args).out));
    const auto b = strip_timing(json::parse(run_cli(args).out));
    EXPECT_EQ(a, b);
}

TEST(Cli, VerifyAll) {
    const auto r = run_cli({"verify-all", "--n", "6", "--quiet"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = strip_timing(json::parse(r.out));
    EXPECT_TRUE(doc["all_pass"].get<bool>());
    const std::set<std::string> known(kIdentityIds.begin(), kIdentityIds.end());
    std::set<std::string> seen_ids;
    std::set<std::pair<std::string, std::string>> keys;
    for (const auto& rep : doc["reports"]) {
        const auto id = rep["identity_id"].get<std::string>();
        EXPECT_TRUE(known.count(id)) << id;
        seen_ids.insert(id);
        EXPECT_TRUE(keys.insert({id, rep["params"].dump()}).second) << id << ' ' << rep["params"].dump();
    }
    EXPECT_EQ(seen_ids, known);

    const auto serial = strip_timing(json::parse(run_cli({"verify-all", "--n", "6", "--quiet", "--serial"}).out));
    EXPECT_EQ(serial, doc);
}

} // namespace
} // namespace hankel_lab
