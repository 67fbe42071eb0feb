#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "strahler/bijection.hpp"
#include "strahler/cli.hpp"
#include "strahler/enumerate.hpp"

namespace {

using namespace strahler;
using nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) out.push_back(json::parse(line));
    }
    return out;
}

TEST(Cli, Tau) {
    EXPECT_EQ(run({"tau", "5"}).out, "(((..).)((..).))\n");
    EXPECT_EQ(run({"tau", "0"}).out, ".\n");
    EXPECT_EQ(json::parse(run({"--format", "json", "tau", "2"}).out), json({{"r", 2}, {"tree", "((..).)"}}));
}

TEST(Cli, HorntonStrahlerNumbers) {
    const auto text = run({"hs", "(((..).)((..).))"});
    EXPECT_EQ(text.code, cli::kOk);
    EXPECT_EQ(text.out, "refined 5\nclassical 2\n");
    const auto j = json::parse(run({"--format", "json", "hs", "(((..).)((..).))"}).out);
    EXPECT_EQ(j.at("refined"), 5);
    EXPECT_EQ(j.at("classical"), 2);
}

TEST(Cli, BijectionBothWays) {
    EXPECT_EQ(run({"d2t", "UUUUUDDDDD"}).out, "(((..).)((..).))\n");
    EXPECT_EQ(run({"d2t", "0,1,2,3,4,5,4,3,2,1,0"}).out, "(((..).)((..).))\n");
    EXPECT_EQ(run({"t2d", "(((..).)((..).))"}).out, "UUUUUDDDDD\n");
    EXPECT_EQ(run({"d2t", ""}).out, ".\n");
    EXPECT_EQ(run({"t2d", "."}).out, "\n");
}

TEST(Cli, BijectionRoundTripsUpToEight) {
    for (std::size_t n = 0; n <= 8; ++n) {
        for (const auto& d : all_dyck_paths(n)) {
            const auto tree = run({"d2t", to_string(d)});
            ASSERT_EQ(tree.code, cli::kOk);
            const auto back = run({"t2d", tree.out.substr(0, tree.out.size() - 1)});
            EXPECT_EQ(back.out, to_string(d) + "\n");
        }
    }
}

TEST(Cli, ReadsArgumentsFromStdin) {
    EXPECT_EQ(run({"d2t", "-"}, "UUDUDD\n").out, "(.((..).))\n");
    EXPECT_EQ(run({"hs", "-"}, "  (..)  ").out, "refined 1\nclassical 1\n");
}

TEST(Cli, DecomposeTreeTextAndJson) {
    EXPECT_EQ(run({"decompose-tree", "(((..).)((..).))"}).out, "h 5\nfix ((..).)\nfree ((..).)\n");
    const auto j = json::parse(run({"--format", "json", "decompose-tree", "(.((..).))"}).out);
    EXPECT_EQ(run({"decompose-tree", "(.((..).))"}).out, "h 2\nfix .\nfree (..)\nspine 1 .\n");
    EXPECT_EQ(j, json::parse(R"j({"h":2,"fix":".","free":"(..)","spine":[{"side":1,"tree":"."}]})j"));
}

TEST(Cli, DecomposePathTextAndJson) {
    EXPECT_EQ(run({"decompose-path", "UUDUDD"}).out, "h 2\nfix \nfree UD\nspine +1 \n");
    const auto j = json::parse(run({"--format", "json", "decompose-path", "UUDUDD"}).out);
    EXPECT_EQ(j, json::parse(R"j({"h":2,"fix":"","free":"UD","spine":[{"eps":1,"path":""}]})j"));
}

TEST(Cli, ComposeRoundTripsThroughBothFormats) {
    for (const auto& d : all_dyck_paths(6)) {
        const auto p = to_string(d);
        const auto t = to_string(phi(d));
        for (const std::string format : {"text", "json"}) {
            const auto dp = run({"--format", format, "decompose-path", p});
            const auto dt = run({"--format", format, "decompose-tree", t});
            if (d.empty()) {
                EXPECT_EQ(dp.code, cli::kUsage);
                EXPECT_EQ(dt.code, cli::kUsage);
                continue;
            }
            EXPECT_EQ(run({"compose-path", "-"}, dp.out).out, p + "\n") << format;
            EXPECT_EQ(run({"compose-tree", "-"}, dt.out).out, t + "\n") << format;
        }
    }
}

TEST(Cli, ComposeRejectsInvalidTuples) {
    const auto bad = run({"compose-tree", R"j({"h":2,"fix":".","free":".","spine":[]})j"});
    EXPECT_EQ(bad.code, cli::kUsage);
    EXPECT_NE(bad.err.find("membership-violation"), std::string::npos);
    EXPECT_EQ(run({"compose-path", R"j({"h":2,"fix":"UD","free":"UD","spine":[]})j"}).code, cli::kUsage);
    EXPECT_EQ(run({"compose-path", "{"}).code, cli::kUsage);
}

TEST(Cli, EnumerateTextAndJsonAgree) {
    EXPECT_EQ(run({"enumerate", "--n", "2", "--side", "paths"}).out, "UUDD 2\nUDUD 1\n");
    for (const std::string side : {"paths", "trees"}) {
        const auto text = run({"enumerate", "--n", "5", "--side", side});
        const auto records = json_lines(run({"--format", "json", "enumerate", "--n", "5", "--side", side}).out);
        ASSERT_EQ(records.size(), 42u);
        std::istringstream in(text.out);
        for (const auto& r : records) {
            std::string object;
            int h = -1;
            in >> object >> h;
            EXPECT_EQ(r.at(side == "paths" ? "path" : "tree").get<std::string>(), object);
            EXPECT_EQ(r.at("h").get<int>(), h);
            EXPECT_EQ(r.at("n").get<int>(), 5);
        }
    }
}

TEST(Cli, EnumerateHistogram) {
    EXPECT_EQ(run({"enumerate", "--n", "3", "--side", "trees", "--histogram"}).out, "n h count\n3 1 1\n3 2 3\n3 3 1\n");
    const auto records = json_lines(run({"--format", "json", "enumerate", "--n", "4", "--side", "paths", "--histogram"}).out);
    ASSERT_EQ(records.size(), 4u);
    EXPECT_EQ(records[1], json::parse(R"({"n":4,"h":2,"count":7})"));
    EXPECT_EQ(run({"enumerate", "--n", "31", "--side", "paths"}).code, cli::kUsage);
}

TEST(Cli, VerifyTextAndJsonAgree) {
    const auto text = run({"verify", "--max-n", "6"});
    EXPECT_EQ(text.code, cli::kOk);
    EXPECT_NE(text.out.find("mismatches 0 PASS"), std::string::npos);
    const auto records = json_lines(run({"--format", "json", "verify", "--max-n", "6", "--threads", "3"}).out);
    ASSERT_FALSE(records.empty());
    const auto& summary = records.back();
    EXPECT_EQ(summary.at("pass"), true);
    EXPECT_EQ(summary.at("mismatches"), 0);
    EXPECT_EQ(summary.at("max_n"), 6);
    EXPECT_EQ(summary.at("cells").get<std::size_t>(), records.size() - 1);
    EXPECT_NE(text.out.find("cells " + std::to_string(records.size() - 1) + " "), std::string::npos);
    for (std::size_t i = 0; i + 1 < records.size(); ++i) EXPECT_EQ(records[i].at("match"), true);
}

TEST(Cli, UsageAndInputErrorsExitWithTwo) {
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"tau"}).code, cli::kUsage);
    EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
    EXPECT_EQ(run({"--format", "xml", "tau", "1"}).code, cli::kUsage);
    EXPECT_EQ(run({"enumerate", "--n", "2", "--side", "forests"}).code, cli::kUsage);
    const auto bad = run({"hs", "garbage"});
    EXPECT_EQ(bad.code, cli::kUsage);
    EXPECT_TRUE(bad.out.empty());
    EXPECT_EQ(bad.err.rfind("error: parse-error", 0), 0u);
    EXPECT_EQ(run({"d2t", "UDD"}).code, cli::kUsage);
    EXPECT_EQ(run({"decompose-tree", "."}).code, cli::kUsage);
    EXPECT_EQ(run({"decompose-path", ""}).code, cli::kUsage);
}

TEST(Cli, HelpExitsCleanly) {
    const auto help = run({"--help"});
    EXPECT_EQ(help.code, cli::kOk);
    EXPECT_NE(help.out.find("verify"), std::string::npos);
}

}  // namespace
