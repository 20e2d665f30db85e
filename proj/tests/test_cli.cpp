#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun run(const std::string& args) {
    const std::string cmd = std::string(COXETER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<nlohmann::json> lines(const std::string& out) {
    std::vector<nlohmann::json> v;
    std::istringstream is(out);
    for (std::string line; std::getline(is, line);)
        if (!line.empty()) v.push_back(nlohmann::json::parse(line));
    return v;
}

} // namespace

TEST(Cli, RootsA2) {
    const CliRun r = run("roots A2");
    ASSERT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["label"], "A2");
    EXPECT_EQ(doc["rank"], 2);
    EXPECT_EQ(doc["roots"].size(), 6u);
    EXPECT_EQ(doc["positive"].size(), 3u);
    EXPECT_EQ(doc["roots"][0][0], -1);   // crystallographic: plain integers
}

TEST(Cli, RootsH4GoldenPairs) {
    const CliRun r = run("roots H4");
    ASSERT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["roots"].size(), 120u);
    for (const auto& root : doc["roots"])
        for (const auto& x : root) ASSERT_TRUE(x.is_array() && x.size() == 2);
    EXPECT_EQ(doc["gram"][0][1], nlohmann::json::array({0, -1}));
}

TEST(Cli, UnknownLabelIsUsageError) {
    EXPECT_EQ(run("roots Z9").code, 2);
    EXPECT_EQ(run("fold A2").code, 2);
    EXPECT_EQ(run("verify --types Q3").code, 2);
    EXPECT_EQ(run("verify --checks nope").code, 2);
    EXPECT_EQ(run("verify --format xml").code, 2);
    EXPECT_EQ(run("verify --jobs").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(Cli, FoldH3) {
    const CliRun r = run("fold H3");
    ASSERT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["source"], "H3");
    EXPECT_EQ(doc["rank"], 6);
    EXPECT_EQ(doc["roots"].size(), 60u);
    EXPECT_EQ(doc["bundles"].size(), 30u);
}

TEST(Cli, VerifyPropA) {
    const CliRun r = run("verify --checks prop-a --types A3");
    ASSERT_EQ(r.code, 0);
    const auto v = lines(r.out);
    ASSERT_GE(v.size(), 3u);
    const auto& total = v.back();
    EXPECT_TRUE(total["summary"].get<bool>());
    EXPECT_EQ(total["fail"], 0);
    EXPECT_EQ(total["pass"].get<std::size_t>(), v.size() - 2);   // one per-task summary plus the total
}

TEST(Cli, SummaryCountsMatchStream) {
    const CliRun r = run("verify --types B3,H3 --checks prop-b,prop-c,decomposition");
    ASSERT_EQ(r.code, 0);
    std::map<std::pair<std::string, std::string>, std::map<std::string, std::size_t>> counted;
    std::vector<nlohmann::json> summaries;
    for (const auto& j : lines(r.out)) {
        if (j.contains("summary")) summaries.push_back(j);
        else ++counted[{j["type"], j["check"]}][j["status"]];
    }
    ASSERT_EQ(summaries.size(), 6u);   // decomposition does not apply to H3
    for (std::size_t i = 0; i + 1 < summaries.size(); ++i) {
        const auto& s = summaries[i];
        auto& c = counted[{s["type"], s["check"]}];
        EXPECT_EQ(s["pass"].get<std::size_t>(), c["pass"]);
        EXPECT_EQ(s["fail"].get<std::size_t>(), c["fail"]);
        EXPECT_EQ(s["skipped"].get<std::size_t>(), c["skipped"]);
    }
}

TEST(Cli, CounterexampleA3) {
    const CliRun r = run("verify --checks counterexample-a3");
    ASSERT_EQ(r.code, 0);
    const auto v = lines(r.out);
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[0]["type"], "A3");
    EXPECT_EQ(v[0]["status"], "pass");
}

TEST(Cli, FoldingAlias) {
    const CliRun r = run("verify --checks folding --types H3");
    ASSERT_EQ(r.code, 0);
    std::set<std::string> checks;
    bool d6 = false;
    for (const auto& j : lines(r.out)) {
        if (j.contains("summary")) continue;
        checks.insert(j["check"]);
        EXPECT_EQ(j["status"], "pass");
        if (j["check"] == "fold-type") d6 = j["note"].get<std::string>().find("identified D6") != std::string::npos;
    }
    EXPECT_TRUE(d6);
    EXPECT_EQ(checks.size(), 7u);
    EXPECT_TRUE(checks.count("fold-table") && checks.count("fold-length"));
}

TEST(Cli, Deterministic) {
    const std::string args = "verify --types B3,H3,F4 --checks prop-c,chamber-vector,fold-phi-prime --seed 9";
    const CliRun a = run(args + " --jobs 1");
    const CliRun b = run(args + " --jobs 3");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const CliRun c = run("verify --types B3 --checks prop-c --seed 10");
    const CliRun d = run("verify --types B3 --checks prop-c --seed 9");
    EXPECT_NE(c.out, d.out);
}

TEST(Cli, CsvAndSummaryFormats) {
    const CliRun csv = run("verify --types A2 --checks prop-b --format csv");
    ASSERT_EQ(csv.code, 0);
    std::istringstream is(csv.out);
    std::string header, row;
    std::getline(is, header);
    EXPECT_EQ(header, "type,check,J,alpha,inputs,status,witness,note");
    std::size_t rows = 0;
    while (std::getline(is, row)) rows += !row.empty();
    EXPECT_EQ(rows, 4u);
    const CliRun sum = run("verify --types A2 --checks prop-b --format summary");
    ASSERT_EQ(sum.code, 0);
    EXPECT_NE(sum.out.find("total"), std::string::npos);
}
