#include <gtest/gtest.h>

#include <numeric>

#include "lamop/presentation.hpp"
#include "lamop/verify.hpp"

using namespace lamop;

namespace {

WeightedTree tree(const char* s) { return WeightedTree::parse(s); }
BracketExpr expr(const char* s) { return BracketExpr::parse(s); }

}  // namespace

TEST(BracketExpr, ParsePrint) {
    const auto e = expr("((x_1 z_1) y_1)");
    EXPECT_EQ(e.to_string(), "((x_1 z_1) y_1)");
    EXPECT_EQ(e.arity(), 3u);
    EXPECT_EQ(expr("(  a_b_12   c_3 )").to_string(), "(a_b_12 c_3)");
    EXPECT_EQ(expr("a_b_12").label(), "a_b");
    EXPECT_EQ(expr("a_b_12").weight(), 12u);
    EXPECT_EQ(expr("(__1 __2)").to_string(), "(__1 __2)");
}

TEST(BracketExpr, ParseErrors) {
    EXPECT_THROW(expr("x1"), ParseError);
    EXPECT_THROW(expr("x_0"), ParseError);
    EXPECT_THROW(expr("(x_1 y_1"), ParseError);
    EXPECT_THROW(expr("(x_1y_1)"), ParseError);
    EXPECT_THROW(expr("(x_1 x_2)"), ParseError);
    EXPECT_THROW(expr("(x_1 y_1) z_1"), ParseError);
    try {
        expr("((x_1 y_1) y_2)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 0u);
    }
}

TEST(Relation, Coefficients) {
    const auto r = relation_r(2, 3, 4);
    ASSERT_EQ(r.size(), 4u);
    EXPECT_EQ(r.coefficient(expr("((x_2 y_3) z_4)")), LambdaPoly(1));
    EXPECT_EQ(r.coefficient(expr("(x_2 (y_3 z_4))")), -LambdaPoly::power(4));
    EXPECT_EQ(r.coefficient(expr("((x_2 z_4) y_3)")), LambdaPoly(-1));
    EXPECT_EQ(r.coefficient(expr("(x_2 (z_4 y_3))")), LambdaPoly::power(3));
    EXPECT_THROW(relation_r(1, 1, 1, "x", "x", "z"), std::invalid_argument);
}

TEST(Relation, ClassicalAssociatorSymmetryAtOne) {
    // At L = 1 and unit weights: (xy)z - x(yz) = (xz)y - x(zy).
    BracketCombination specialized;
    const auto r = relation_r(1, 1, 1);
    for (const auto& [key, term] : r.terms()) specialized.add(term.expr, term.coeff.eval(1));
    BracketCombination expected;
    expected.add(expr("((x_1 y_1) z_1)"), 1);
    expected.add(expr("(x_1 (y_1 z_1))"), -1);
    expected.add(expr("((x_1 z_1) y_1)"), -1);
    expected.add(expr("(x_1 (z_1 y_1))"), 1);
    EXPECT_EQ(specialized, expected);
}

TEST(Relation, PhiVanishes) {
    for (Weight k = 1; k <= 3; ++k)
        for (Weight l = 1; l <= 3; ++l)
            for (Weight m = 1; m <= 3; ++m) EXPECT_TRUE(phi(relation_r(k, l, m)).is_zero()) << k << l << m;
}

TEST(Phi, Generators) {
    EXPECT_EQ(phi(expr("x_2")), TreeCombination(tree("x:2")));
    EXPECT_EQ(phi(expr("(x_3 y_2)")), TreeCombination(tree("x:3[y:2]")));
}

TEST(Phi, TwoProductsByHand) {
    // (x y) z: z grafted on x (height 0) or on y (height 1, weight |z| = 1).
    TreeCombination expected(tree("x:1[y:1,z:1]"));
    expected.add(tree("x:1[y:1[z:1]]"), LambdaPoly::power(1));
    EXPECT_EQ(phi(expr("((x_1 y_1) z_1)")), expected);
    // x (y z) with |y z| = 5: only the root of x.
    EXPECT_EQ(phi(expr("(x_1 (y_2 z_3))")), TreeCombination(tree("x:1[y:2[z:3]]")));
    TreeCombination weighted(tree("x:2[y:1,z:3]"));
    weighted.add(tree("x:2[y:1[z:3]]"), LambdaPoly::power(3));
    EXPECT_EQ(phi(expr("((x_2 y_1) z_3)")), weighted);
}

TEST(Psi, BaseCases) {
    EXPECT_EQ(psi(tree("x:4")), BracketCombination(expr("x_4")));
    EXPECT_EQ(psi(tree("x:2[y:3]")), BracketCombination(expr("(x_2 y_3)")));
}

TEST(Psi, Corolla) {
    const auto t = tree("x:1[y:1,z:1]");
    BracketCombination expected;
    expected.add(expr("((x_1 z_1) y_1)"), 1);
    expected.add(expr("(x_1 (z_1 y_1))"), -LambdaPoly::power(1));
    const auto p = psi(t);
    EXPECT_EQ(p, expected);
    EXPECT_EQ(phi(p), TreeCombination(t));
    EXPECT_TRUE(psi_order_independence_check(t, {0, 1}, {1, 0}));
    PsiRewriter rw;
    EXPECT_EQ(phi(rw.with_root_order(t, {1, 0})), TreeCombination(t));
}

TEST(Psi, ThreeBranchCorolla) {
    const auto t = tree("x:2[a:1,b:2[c:1],d:3]");
    EXPECT_TRUE(psi_order_independence_check(t, {0, 1, 2}, {1, 0, 2}));
    EXPECT_TRUE(psi_order_independence_check(t, {2, 1, 0}, {0, 2, 1}));
    EXPECT_THROW(psi_order_independence_check(t, {0, 0, 1}, {0, 1, 2}), std::invalid_argument);
    EXPECT_TRUE(psi_order_independence_check(tree("x:1[y:1]"), {0}, {0}));
}

TEST(Psi, RoundTripExhaustiveSmall) {
    PsiRewriter rw;
    for (const auto& t : verify::Universe{4, 2, LabelMode::labeled}.trees("v")) {
        const auto p = rw(t);
        ASSERT_EQ(phi(p), TreeCombination(t)) << t.to_string() << "\n" << p.to_string();
    }
}

TEST(Psi, UnlabeledTrees) {
    for (const auto& t : verify::Universe{4, 2, LabelMode::unlabeled}.trees())
        ASSERT_EQ(phi(psi(t)), TreeCombination(t)) << t.to_string();
}

TEST(Psi, Linearity) {
    TreeCombination c(tree("x:1[y:1,z:2]"), LambdaPoly(2) + LambdaPoly::power(3));
    c.add(tree("x:1[y:1[z:2]]"), Rational(-1, 2));
    PsiRewriter rw;
    const auto p = rw(c);
    EXPECT_EQ(phi(p), c);
    BracketCombination sum = rw(tree("x:1[y:1,z:2]"));
    sum *= LambdaPoly(2) + LambdaPoly::power(3);
    BracketCombination other = rw(tree("x:1[y:1[z:2]]"));
    other *= LambdaPoly(Rational(-1, 2));
    EXPECT_EQ(p, sum + other);
}

TEST(Psi, PhiIsLinear) {
    BracketCombination a(expr("((x_1 y_1) z_1)"), LambdaPoly::power(2));
    BracketCombination b(expr("(x_1 (y_1 z_1))"), 3);
    EXPECT_EQ(phi(a + b), phi(a) + phi(b));
    EXPECT_EQ(phi(LambdaPoly(5) * a), LambdaPoly(5) * phi(a));
}

TEST(Corolla, Reassembles) {
    const auto t = tree("x:1[y:2[w:1],z:1]");
    const auto c = Corolla::of(t);
    EXPECT_EQ(c.root_label, "x");
    EXPECT_EQ(c.branches.size(), 2u);
    EXPECT_EQ(canonical_encoding(c.assemble()), canonical_encoding(t));
    EXPECT_TRUE(Corolla::of(tree("x:3")).branches.empty());
}

TEST(BracketCombination, PrintFormat) {
    EXPECT_EQ(psi(tree("x:1[y:1,z:1]")).to_string(), "1 * ((x_1 z_1) y_1)\n-L * (x_1 (z_1 y_1))");
    EXPECT_EQ(BracketCombination().to_string(), "0");
}
