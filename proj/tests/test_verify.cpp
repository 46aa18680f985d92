#include <gtest/gtest.h>

#include <json.hpp>
#include <set>

#include "lamop/verify.hpp"

using namespace lamop;
using namespace lamop::verify;

TEST(Universe, SizesMatchCayleyTimesWeights) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (Weight w = 1; w <= 3; ++w) {
            if (n == 4 && w == 3) continue;
            const auto trees = Universe{n, w, LabelMode::labeled}.trees("a");
            std::set<std::string> distinct;
            for (const auto& t : trees) distinct.insert(canonical_encoding(t));
            EXPECT_EQ(trees.size(), labeled_universe_size(n, w));
            EXPECT_EQ(distinct.size(), trees.size());
        }
}

TEST(Universe, UnlabeledClasses) {
    // rooted unlabeled shapes: 1, 1, 2, 4 on 1..4 vertices
    EXPECT_EQ((Universe{4, 1, LabelMode::unlabeled}.trees().size()), 1u + 1u + 2u + 4u);
    // weights <= 2 on <= 3 vertices: 2 + 4 + 8 chains + 6 cherries
    EXPECT_EQ((Universe{3, 2, LabelMode::unlabeled}.trees().size()), 20u);
}

TEST(Checks, PassOnSmallUniverses) {
    const Universe u{2, 2, LabelMode::labeled};
    for (const auto& r : {check_nested_associativity(u), check_disjoint_associativity(u), check_units(u),
                          check_equivariance(u), check_epsilon_formula(u), check_specializations(u),
                          check_roundtrip_psi_phi(u), check_morphisms_i_j(u, 4),
                          check_deformed_identity(Universe{2, 2, LabelMode::unlabeled})}) {
        EXPECT_TRUE(r.passed()) << r.to_text();
        EXPECT_GT(r.instances, 0u) << r.name;
    }
    EXPECT_TRUE(check_counts(5).passed());
}

TEST(Checks, DisjointVacuousOnSingleVertices) {
    const auto r = check_disjoint_associativity(Universe{1, 3, LabelMode::labeled});
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.instances, 0u);
}

TEST(Checks, FaultsProduceCounterexamples) {
    const Universe u{2, 2, LabelMode::labeled};
    const Operad off(Fault::height_off_by_one);
    EXPECT_FALSE(check_nested_associativity(u, off).passed());
    EXPECT_FALSE(check_epsilon_formula(u, off).passed());
    EXPECT_FALSE(check_units(u, off).passed());
    EXPECT_FALSE(check_specializations(u, off).passed());
    EXPECT_FALSE(check_roundtrip_psi_phi(u, off).passed());
    EXPECT_FALSE(check_morphisms_i_j(u, 4, off).passed());
    EXPECT_FALSE(check_deformed_identity(Universe{2, 2, LabelMode::unlabeled}, off).passed());
    EXPECT_FALSE(check_morphisms_i_j(u, 4, Operad(Fault::grading_off_by_one)).passed());
    EXPECT_FALSE(check_disjoint_associativity(Universe{3, 2, LabelMode::labeled},
                                              Operad(Fault::height_from_outer_root))
                     .passed());
}

TEST(Checks, LocalExponentShiftInvisibleToDisjointAssociativity) {
    // The shift depends only on the slot and its branches, which the other
    // slot's composition never changes.
    EXPECT_TRUE(check_disjoint_associativity(Universe{3, 2, LabelMode::labeled}, Operad(Fault::height_off_by_one))
                    .passed());
}

TEST(Checks, EquivarianceBlindToExponentFaults) {
    EXPECT_TRUE(check_equivariance(Universe{2, 2, LabelMode::labeled}, Operad(Fault::height_off_by_one)).passed());
}

TEST(Minimize, ShrinksToSmallestFailure) {
    // Fails whenever the tree has at least two vertices and weight >= 3.
    auto fails = [](const Instance& x) { return x.trees[0].size() >= 2 && weight(x.trees[0]) >= 3; };
    const Instance big{{WeightedTree::parse("a:3[b:2[c:1],d:4]")}, {}};
    const auto small = minimize(big, fails);
    EXPECT_EQ(small.trees[0].size(), 2u);
    EXPECT_EQ(weight(small.trees[0]), 3u);
}

TEST(Minimize, KeepsSlots) {
    auto fails = [](const Instance& x) { return x.trees[0].find("c").has_value(); };
    const auto small = minimize(Instance{{WeightedTree::parse("a:2[b:2[c:2],d:1]")}, {"c"}}, fails);
    EXPECT_EQ(canonical_encoding(small.trees[0]), "a:1[b:1[c:1]]");
}

TEST(Minimize, CounterexampleIsMinimizedInReport) {
    const auto r = check_nested_associativity(Universe{3, 2, LabelMode::labeled}, Operad(Fault::height_off_by_one));
    ASSERT_FALSE(r.failures.empty());
    EXPECT_EQ(r.failures.front(), "t1=a1:1[a2:1] t2=b1:1 t3=c1:1 v1=a1 v2=b1");
}

TEST(DeleteLeaf, Basic) {
    const auto t = WeightedTree::parse("a:1[b:1[c:1],d:1]");
    const auto c = t.vertex("c");
    EXPECT_EQ(canonical_encoding(delete_leaf(t, c.index)), "a:1[b:1,d:1]");
    EXPECT_THROW(delete_leaf(t, 0), std::invalid_argument);
    EXPECT_THROW(delete_leaf(t, t.vertex("b").index), std::invalid_argument);
}

TEST(Report, JsonShape) {
    const auto r = check_units(Universe{1, 2, LabelMode::labeled});
    const auto j = nlohmann::json::parse(r.to_json());
    EXPECT_EQ(j["check"], "unit-laws");
    EXPECT_EQ(j["passed"], true);
    EXPECT_EQ(j["instances"], r.instances);
    EXPECT_TRUE(j["counterexamples"].is_array());
    EXPECT_EQ(r.to_text().rfind("PASS unit-laws", 0), 0u);
}

TEST(BruteForce, RootedTreeCounts) {
    EXPECT_EQ(count_rooted_trees_brute_force(1), 1u);
    EXPECT_EQ(count_rooted_trees_brute_force(3), 9u);
    EXPECT_EQ(count_rooted_trees_brute_force(5), 625u);
}

TEST(Suites, Names) {
    for (Suite s : all_suites()) EXPECT_EQ(parse_suite(to_string(s)), s);
    EXPECT_THROW(parse_suite("bogus"), std::invalid_argument);
    for (Suite s : all_suites()) EXPECT_FALSE(faults_for(s).empty());
}
