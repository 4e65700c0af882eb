#include <gtest/gtest.h>

#include <sstream>

#include "cli_app.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = crs::cli::run(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

crs::json record(const Result& r) {
    // Exactly one line on stdout.
    EXPECT_FALSE(r.out.empty());
    EXPECT_EQ(r.out.find('\n'), r.out.size() - 1) << r.out;
    return crs::json::parse(r.out);
}

}  // namespace

TEST(Cli, CheckCrsFromStdin) {
    auto r = run({"check-crs"}, R"({"h":3,"elements":[3,4,5]})");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"is_crs\":true,\"profile\":[0,1,2]}\n");
    EXPECT_TRUE(r.err.empty());

    r = run({"check-crs"}, R"({"h":4,"elements":[0,2,4,6]})");
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "{\"is_crs\":false,\"profile\":[0,2,0,2]}\n");
}

TEST(Cli, CheckCrsInline) {
    auto r = run({"check-crs", "--h", "3", "--elements", "3,4,5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(record(r)["profile"], crs::json::parse("[0,1,2]"));
    r = run({"check-crs", "--h=3", "--elements=-1,-2,-3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(record(r)["profile"], crs::json::parse("[2,1,0]"));
}

TEST(Cli, MalformedInputsExitTwo) {
    for (const auto& [args, input] : std::vector<std::pair<std::vector<std::string>, std::string>>{
             {{"check-crs"}, R"({"h":1,"elements":[0]})"},
             {{"check-crs"}, "not json"},
             {{"check-crs"}, R"({"h":3})"},
             {{"check-crs"}, R"({"h":3,"elements":[1,2]})"},
             {{"check-crs", "--elements", "1,2"}, ""},
             {{"frobnicate"}, ""},
             {{}, ""},
             {{"solve-branches", "--h", "3"}, ""},
             {{"solve-branches", "--h", "1", "--p", "2"}, ""},
             {{"solve-branches", "--h", "3", "--p", "0"}, ""},
             {{"solve-branches", "--h", "x", "--p", "2"}, ""},
             {{"brute-branches", "--h", "10", "--p", "10", "--cap", "100"}, ""},
             {{"verify", "--hmax", "0"}, ""},
             {{"verify", "--hmax", "1"}, ""},
             {{"rational", "--h", "3", "--p", "2", "--q", "1", "--l", "0,5,0"}, ""},
             {{"affine", "--h", "3", "--elements", "0,1,2", "--p", "2"}, ""},
         }) {
        auto r = run(args, input);
        EXPECT_EQ(r.code, 2) << r.out;
        EXPECT_FALSE(r.err.empty());
        EXPECT_TRUE(record(r).contains("error"));
    }
}

TEST(Cli, SolveBranches) {
    auto r = run({"solve-branches", "--h", "3", "--p", "2"});
    EXPECT_EQ(r.code, 0);
    auto j = record(r);
    EXPECT_EQ(j["branch_vector"]["l"], crs::json::parse("[0,1,0]"));
    EXPECT_EQ(j["roots"].size(), 3u);

    r = run({"solve-branches", "--h", "4", "--p", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "{\"gcd\":2,\"witness_k\":1}\n");
}

TEST(Cli, TransformWrappers) {
    auto r = run({"scale", "--h", "4", "--elements", "0,1,2,3", "--p", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(record(r)["candidate"]["elements"], crs::json::parse("[0,3,6,9]"));

    r = run({"scale", "--p", "2"}, R"({"h":4,"elements":[0,1,2,3]})");
    EXPECT_EQ(r.code, 1);

    r = run({"affine", "--h", "3", "--elements", "0,1,2", "--p", "2", "--l", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(record(r)["candidate"]["elements"], crs::json::parse("[5,7,9]"));

    r = run({"shift", "--h", "3", "--elements", "0,1,2", "--l", "1,0,2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(record(r)["candidate"]["elements"], crs::json::parse("[3,1,8]"));

    r = run({"residues", "--h", "4", "--elements", "0,2,4,6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"h\":4,\"residues\":[0,2,0,2]}\n");
}

TEST(Cli, RootSetWrappers) {
    auto r = run({"omega", "--h", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[{\"num\":0,\"den\":1},{\"num\":1,\"den\":4},{\"num\":1,\"den\":2},{\"num\":3,\"den\":4}]\n");

    r = run({"power", "--h", "6", "--p", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(record(r)["roots"].size(), 3u);

    r = run({"power", "--h", "4", "--p", "3"});
    EXPECT_EQ(r.code, 0);

    r = run({"power", "--h", "3", "--elements", "3,4,5"});
    EXPECT_EQ(r.code, 0);
    r = run({"power", "--h", "3", "--elements", "0,0,1"});
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, BruteBranches) {
    auto r = run({"brute-branches", "--h", "3", "--p", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"h\":3,\"p\":2,\"solutions\":[{\"h\":3,\"p\":2,\"l\":[0,1,0]}],\"exhaustive\":true}\n");
    r = run({"brute-branches", "--h", "2", "--p", "4"});
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, Rational) {
    auto r = run({"rational", "--h", "3", "--p", "2", "--q", "2"});
    EXPECT_EQ(r.code, 0);
    auto j = record(r);
    EXPECT_TRUE(j["root_first"]["equals_omega"].get<bool>());
    EXPECT_TRUE(j["power_first"]["equals_omega"].get<bool>());

    r = run({"rational", "--h", "3", "--p", "2", "--q", "3", "--l", "0,1,0"});
    EXPECT_EQ(r.code, 1);
    j = record(r);
    EXPECT_TRUE(j["power_first"]["collapsed"].get<bool>());
    EXPECT_EQ(j["power_first"]["gcd"], 3);

    r = run({"rational", "--h", "4", "--p", "2", "--q", "1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "{\"gcd\":2,\"witness_k\":1}\n");
}

TEST(Cli, Verify) {
    auto r = run({"verify", "--hmax", "2", "--pmax", "1", "--cap", "8"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(record(r)["all_passed"].get<bool>());

    r = run({"verify", "--hmax", "16", "--pmax", "16"});
    EXPECT_EQ(r.code, 0) << r.out;
    auto j = record(r);
    for (const auto& p : j["properties"]) {
        EXPECT_EQ(p["counterexamples"], 0) << p.dump();
        EXPECT_GT(p["checks"].get<long long>(), 0) << p.dump();
    }
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"verify", "--hmax", "8", "--pmax", "8", "--cap", "4096"};
    EXPECT_EQ(run(args).out, run(args).out);
    EXPECT_EQ(run({"solve-branches", "--h", "11", "--p", "7"}).out, run({"solve-branches", "--h", "11", "--p", "7"}).out);
}
