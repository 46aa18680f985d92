#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lamop/operad.hpp"
#include "lamop/tree.hpp"

namespace lamop::verify {

/// Bounded, exhaustive tree universe.
struct Universe {
    std::size_t n_max = 3;
    Weight w_max = 3;
    LabelMode mode = LabelMode::labeled;

    /// Every tree with 1..n_max vertices and weights in 1..w_max. Labeled
    /// trees use the labels prefix1..prefixn; unlabeled trees are listed once
    /// per isomorphism class. Deterministic order.
    std::vector<WeightedTree> trees(const std::string& prefix = "") const;
};

/// Expected number of labeled trees in a universe: sum over n of
/// n^(n-1) * w_max^n.
std::size_t labeled_universe_size(std::size_t n_max, Weight w_max);

struct CheckReport {
    std::string name;
    std::size_t instances = 0;
    std::size_t failure_count = 0;
    /// Up to a handful of counterexamples; the first one is minimized.
    std::vector<std::string> failures;
    double seconds = 0;

    bool passed() const { return failure_count == 0; }
    std::string to_text() const;
    std::string to_json() const;
};

/// A counterexample: trees plus the vertex labels that address them.
struct Instance {
    std::vector<WeightedTree> trees;
    std::vector<std::string> slots;

    std::string to_string() const;
};

/// Shrinks `x` by deleting leaves (never the root or a slot vertex) and
/// decrementing weights while `fails` still holds. `fails` must return false
/// on instances it cannot evaluate.
Instance minimize(Instance x, const std::function<bool(const Instance&)>& fails);

/// Removes the non-root leaf at storage index `index`.
WeightedTree delete_leaf(const WeightedTree& t, std::size_t index);

CheckReport check_nested_associativity(const Universe& u, const Operad& op = Operad{});
CheckReport check_disjoint_associativity(const Universe& u, const Operad& op = Operad{});
CheckReport check_units(const Universe& u, const Operad& op = Operad{});
CheckReport check_equivariance(const Universe& u, const Operad& op = Operad{});
/// Exponents equal sum_e h_T(f(e)) |B_e|, are >= 0, and vanish only for f0
/// once T has an edge and v has children.
CheckReport check_epsilon_formula(const Universe& u, const Operad& op = Operad{});

/// The deformed identity on all triples of u, plus its lambda = 1, unit
/// weight form against the classical grafting oracle.
CheckReport check_deformed_identity(const Universe& u, const Operad& op = Operad{});

/// lambda = 0 against classical NAP on all compatible pairs, and lambda = 1
/// against the classical pre-Lie composition with unit weights away from the
/// slot.
CheckReport check_specializations(const Universe& u, const Operad& op = Operad{});

/// phi(psi(T)) = T, branch-order independence through phi, and phi of the
/// relation for every weight triple in 1..relation_w_max.
CheckReport check_roundtrip_psi_phi(const Universe& u, const Operad& op = Operad{}, Weight relation_w_max = 3);

/// Truncated i and j morphism checks on all pairs of unit-shape trees with
/// at most u.n_max vertices.
CheckReport check_morphisms_i_j(const Universe& u, Weight max_weight, const Operad& op = Operad{});

/// (T <- S) |> U = (T |> U) <- S + T <- (S |> U) with symbolic L, where |>
/// is circ_sum, on all labeled triples of u. Reported, never required.
CheckReport probe_deformed_derivation(const Universe& u, const Operad& op = Operad{});

/// Tree counts against a parent-map brute force, and the worked composition
/// with coefficients 1, L, L^2, L^3.
CheckReport check_counts(std::size_t n_max = 6);

/// Number of maps p: {1..n} -> {0..n} (0 = no parent) describing a rooted
/// tree, found by brute force.
std::size_t count_rooted_trees_brute_force(std::size_t n);

enum class Suite { assoc, deform, spec, iso, morph };

std::string to_string(Suite s);
Suite parse_suite(std::string_view name);
std::vector<Suite> all_suites();

struct SuiteOptions {
    /// Zero means the suite's default bound.
    std::size_t n_max = 0;
    Weight w_max = 0;
    Weight morph_weight = 5;
};

/// Runs every check of a suite with its default universes.
std::vector<CheckReport> run_suite(Suite s, const Operad& op = Operad{}, const SuiteOptions& options = {});

/// The deliberately broken operads used to show that a suite can fail.
std::vector<Fault> faults_for(Suite s);

struct FaultReport {
    Suite suite;
    Fault fault;
    std::size_t counterexamples = 0;
    std::string first_counterexample;

    bool detected() const { return counterexamples > 0; }
};

/// Runs each suite under each of its faults.
std::vector<FaultReport> run_fault_injection(const SuiteOptions& options = {});

}  // namespace lamop::verify
