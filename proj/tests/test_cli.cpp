#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "lamop/cli.hpp"
#include "lamop/presentation.hpp"

using namespace lamop;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ComposeWorkedExample) {
    const auto r = run({"compose", "-S", "a:1[b:3[c:2,d:1]]", "-v", "b", "-T", "e:2[h:1]"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "1 * a:1[e:2[c:2,d:1,h:1]]\n"
              "L * a:1[e:2[c:2,h:1[d:1]]]\n"
              "L^2 * a:1[e:2[d:1,h:1[c:2]]]\n"
              "L^3 * a:1[e:2[h:1[c:2,d:1]]]\n");
}

TEST(Cli, ComposeSpecialized) {
    const auto r = run({"compose", "-S", "a:1[b:3[c:2,d:1]]", "-v", "b", "-T", "e:2[h:1]", "--lambda", "0"});
    EXPECT_EQ(r.out, "1 * a:1[e:2[c:2,d:1,h:1]]\n");
    const auto half = run({"compose", "-S", "a:1[b:3[c:2,d:1]]", "-v", "b", "-T", "e:2[h:1]", "--lambda", "1/2"});
    EXPECT_NE(half.out.find("1/8 * a:1[e:2[h:1[c:2,d:1]]]"), std::string::npos);
}

TEST(Cli, WeightMismatchPrintsZero) {
    const auto r = run({"compose", "-S", "a:1[b:3]", "-v", "b", "-T", "e:2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, Arrow) {
    const auto r = run({"arrow", "-T", "r:1", "-S", "s:2"});
    EXPECT_EQ(r.out, "1 * r:1[s:2]\n");
}

TEST(Cli, OtherProducts) {
    EXPECT_EQ(run({"butcher", "-T", "a:1[b:1]", "-S", "c:2"}).out, "1 * a:1[b:1,c:2]\n");
    EXPECT_EQ(run({"nap", "-S", "a:1[b:3[c:2,d:1]]", "-v", "b", "-T", "e:2[h:1]"}).out, "1 * a:1[e:2[c:2,d:1,h:1]]\n");
    EXPECT_EQ(run({"circsum", "-T", "u:3", "-S", "e:2[h:1]"}).out, "1 * e:2[h:1]\n");
}

TEST(Cli, Dims) {
    EXPECT_EQ(run({"dims", "-n", "4"}).out, "64\n");
    EXPECT_EQ(run({"dims", "-n", "2", "--wmax", "2"}).out, "2\n1,1: 2\n2,1: 2\n1,2: 2\n2,2: 2\n");
}

TEST(Cli, Enumerate) {
    const auto r = run({"enumerate", "-n", "3", "--weights", "1,2,3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 9);
    EXPECT_EQ(run({"enumerate", "-n", "3", "--weights", "1,2"}).code, 2);
}

TEST(Cli, PsiPhi) {
    const auto p = run({"psi", "-T", "x:1[y:1,z:1]"});
    EXPECT_EQ(p.out, "1 * ((x_1 z_1) y_1)\n-L * (x_1 (z_1 y_1))\n");
    EXPECT_EQ(run({"phi", "-e", "(x_3 y_2)"}).out, "1 * x:3[y:2]\n");
}

TEST(Cli, ParseErrorsExitTwo) {
    const auto r = run({"compose", "-S", "a:1[b:3", "-v", "b", "-T", "e:2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("position 7"), std::string::npos);
    EXPECT_EQ(run({"phi", "-e", "(x_1 x_2)"}).code, 2);
    EXPECT_EQ(run({"compose", "-S", "a:1", "-v", "zz", "-T", "e:1"}).code, 2);
    EXPECT_EQ(run({"compose", "-S", "a:1", "-v", "a", "-T", "e:1", "--lambda", "x"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, JsonSchema) {
    const auto r = run({"compose", "-S", "a:1[b:3[c:2,d:1]]", "-v", "b", "-T", "e:2[h:1]", "--json"});
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["terms"].size(), 4u);
    EXPECT_EQ(j["terms"][3]["tree"], "a:1[e:2[h:1[c:2,d:1]]]");
    EXPECT_EQ(j["terms"][3]["coeff"], nlohmann::json::parse("[[3,1,1]]"));
    const auto p = nlohmann::json::parse(run({"psi", "-T", "x:1[y:1,z:1]", "--json"}).out);
    EXPECT_EQ(p["terms"][1]["expr"], "(x_1 (z_1 y_1))");
    EXPECT_EQ(p["terms"][1]["coeff"], nlohmann::json::parse("[[1,-1,1]]"));
}

TEST(Cli, PrintParseRoundTrip) {
    const auto r = run({"psi", "-T", "x:2[a:1,b:2[c:1],d:1]"});
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        const auto star = line.find(" * ");
        ASSERT_NE(star, std::string::npos);
        std::string coeff = line.substr(0, star);
        if (coeff.front() == '(') coeff = coeff.substr(1, coeff.size() - 2);
        EXPECT_EQ(LambdaPoly::parse(coeff).to_string(), coeff);
        const std::string e = line.substr(star + 3);
        EXPECT_EQ(BracketExpr::parse(e).to_string(), e);
    }
}

TEST(Cli, CheckSmall) {
    const auto r = run({"check", "--suite", "assoc", "--nmax", "2", "--wmax", "2"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("PASS nested-associativity"), std::string::npos);
    const auto bad = run({"check", "--suite", "assoc", "--nmax", "2", "--wmax", "2", "--fault", "height-off-by-one"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("counterexample:"), std::string::npos);
    const auto j = run({"check", "--suite", "morph", "--nmax", "2", "--json"});
    EXPECT_EQ(j.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(j.out).is_array());
    EXPECT_EQ(run({"check", "--suite", "nope"}).code, 2);
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("compose"), std::string::npos);
}
