#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "lamop/combination.hpp"
#include "lamop/poly.hpp"

using namespace lamop;

namespace {

// Dense coefficient vector, index = exponent.
using Dense = std::vector<Rational>;

Dense dense(const LambdaPoly& p) {
    Dense out(static_cast<std::size_t>(p.degree() + 1), Rational(0));
    for (const auto& [k, c] : p.terms()) out[k] = c;
    return out;
}

Rational horner(const Dense& a, const Rational& x) {
    Rational acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Product by explicit convolution over integer coefficient arrays.
Dense convolve(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

LambdaPoly random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> coeff(-5, 5), den(1, 4), deg(0, max_degree);
    LambdaPoly p;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) p += LambdaPoly::monomial(Rational(coeff(rng), den(rng)), k);
    return p;
}

}  // namespace

TEST(Rational, LowestTerms) {
    Rational r = parse_rational("6/4");
    EXPECT_EQ(to_string(r), "3/2");
    EXPECT_EQ(to_string(parse_rational("-7")), "-7");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(LambdaPoly, EvalExamples) {
    const LambdaPoly p = LambdaPoly(1) + LambdaPoly::monomial(2, 3);
    EXPECT_EQ(poly_eval(p, 0), 1);
    EXPECT_EQ(poly_eval(p, 1), 3);
}

TEST(LambdaPoly, EvalMatchesHorner) {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_poly(rng, 9);
        for (Rational x : {Rational(2), Rational(-1, 3), Rational(5, 2)}) EXPECT_EQ(poly_eval(p, x), horner(dense(p), x));
    }
}

TEST(LambdaPoly, ProductMatchesConvolution) {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        const auto a = random_poly(rng, 8), b = random_poly(rng, 8);
        EXPECT_EQ(dense(a * b), convolve(dense(a), dense(b)));
    }
}

TEST(LambdaPoly, RingAxioms) {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(LambdaPoly, NoZeroCoefficientsStored) {
    LambdaPoly p = LambdaPoly::power(2) - LambdaPoly::power(2);
    EXPECT_TRUE(p.is_zero());
    EXPECT_TRUE(p.terms().empty());
    EXPECT_EQ(p.degree(), -1);
    EXPECT_EQ(p.to_string(), "0");
}

TEST(LambdaPoly, PrintFormat) {
    EXPECT_EQ((LambdaPoly(1) + LambdaPoly::monomial(2, 3)).to_string(), "1 + 2*L^3");
    EXPECT_EQ((-LambdaPoly::power(1)).to_string(), "-L");
    EXPECT_EQ((LambdaPoly::monomial(Rational(3, 2), 2) - LambdaPoly::monomial(Rational(1, 2), 5)).to_string(),
              "3/2*L^2 - 1/2*L^5");
}

TEST(LambdaPoly, ParsePrintRoundTrip) {
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_poly(rng, 7);
        EXPECT_EQ(LambdaPoly::parse(p.to_string()), p) << p.to_string();
    }
}

TEST(LambdaPoly, ParseAcceptsUnicodeLambda) {
    EXPECT_EQ(LambdaPoly::parse("1 + 2*\xCE\xBB^3"), LambdaPoly::parse("1 + 2*L^3"));
    EXPECT_EQ(LambdaPoly::parse("1 + -L"), LambdaPoly(1) - LambdaPoly::power(1));
    EXPECT_THROW(LambdaPoly::parse("1 + * L"), std::invalid_argument);
}

namespace {

WeightedTree tree(const char* s) { return WeightedTree::parse(s); }

}  // namespace

TEST(TreeCombination, VectorSpace) {
    const TreeCombination x(tree("a:1[b:2]"), LambdaPoly(3));
    EXPECT_EQ(combo_add(x, TreeCombination()), x);
    EXPECT_TRUE(combo_sub(x, x).is_zero());
    const auto t = tree("a:1");
    TreeCombination y(t, LambdaPoly::power(1));
    y += TreeCombination(t, LambdaPoly::power(2));
    EXPECT_EQ(y.size(), 1u);
    EXPECT_EQ(y.coefficient(t), LambdaPoly::power(1) + LambdaPoly::power(2));
}

TEST(TreeCombination, ChildOrderIsImmaterial) {
    TreeCombination a(tree("r:1[x:1,y:2]"));
    a -= TreeCombination(tree("r:1[y:2,x:1]"));
    EXPECT_TRUE(a.is_zero());
}

TEST(TreeCombination, MixedModesRejected) {
    TreeCombination a(tree("a:1"));
    EXPECT_THROW(a.add(tree("_:1"), 1), std::invalid_argument);
}

TEST(TreeCombination, Specialize) {
    TreeCombination c(tree("t:1"), LambdaPoly::power(1));
    c += TreeCombination(tree("s:1"));
    EXPECT_EQ(specialize(c, 0), TreeCombination(tree("s:1")));
    EXPECT_TRUE(specialize(TreeCombination(tree("t:1"), LambdaPoly(1) - LambdaPoly::power(1)), 1).is_zero());
}

TEST(TreeCombination, SpecializeCommutesWithAdd) {
    std::mt19937 rng(13);
    const std::vector<WeightedTree> pool{tree("a:1"), tree("a:1[b:1]"), tree("b:1[a:1]"), tree("a:2[b:1,c:1]")};
    for (int i = 0; i < 100; ++i) {
        TreeCombination x, y;
        for (const auto& t : pool) {
            x.add(t, random_poly(rng, 3));
            y.add(t, random_poly(rng, 3));
        }
        for (Rational at : {Rational(0), Rational(1), Rational(-2, 3)})
            EXPECT_EQ(specialize(x + y, at), specialize(x, at) + specialize(y, at));
    }
}

TEST(TreeCombination, ModuleOverPolynomials) {
    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
        TreeCombination c(tree("a:1[b:1]"), random_poly(rng, 3));
        c.add(tree("a:3"), random_poly(rng, 3));
        const auto p = random_poly(rng, 3), q = random_poly(rng, 3);
        EXPECT_EQ((p * q) * c, p * (q * c));
        EXPECT_EQ((p + q) * c, p * c + q * c);
    }
}

TEST(TreeCombination, PrintFormat) {
    TreeCombination c(tree("a:1[b:1]"), LambdaPoly(1) + LambdaPoly::power(2));
    c.add(tree("a:2"), -LambdaPoly::power(1));
    EXPECT_EQ(c.to_string(), "(1 + L^2) * a:1[b:1]\n-L * a:2");
    EXPECT_EQ(TreeCombination().to_string(), "0");
}
