#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lamop/combination.hpp"
#include "lamop/tree.hpp"

namespace lamop {

/// Deliberate, documented defects used by the verification harness to prove
/// that each suite can fail. Never enabled outside of fault-injection runs.
enum class Fault {
    none,
    /// Heights in the lambda exponents are counted in vertices instead of
    /// edges (off by one per grafted edge, and per grafting in arrow).
    height_off_by_one,
    /// Graft heights measured from the root of the composed tree instead of
    /// the root of the inserted tree (off by the height of the slot).
    height_from_outer_root,
    /// Grading test accepts |T| == |v| + 1 as well as |T| == |v|.
    grading_off_by_one,
};

std::string to_string(Fault f);
Fault parse_fault(std::string_view name);

/// Assignment of every child edge of a vertex v of S to a vertex of T.
/// targets[k] is the image of incoming_edges(S, v)[k]; each edge is identified
/// with the branch hanging from it.
struct GraftMap {
    std::vector<std::size_t> targets;  // vertex indices of T

    /// The map sending every edge to the root of T.
    static GraftMap to_root(std::size_t edge_count) { return GraftMap{std::vector<std::size_t>(edge_count, 0)}; }
    /// Builds a map from {child label of v -> target label in T}.
    static GraftMap from_labels(const WeightedTree& s, VertexRef v, const WeightedTree& t,
                                const std::map<std::string, std::string>& assignment);
    bool sends_all_to_root() const;

    friend bool operator==(const GraftMap&, const GraftMap&) = default;
};

/// One summand of a partial composition before terms are collected.
struct GraftTerm {
    GraftMap map;
    WeightedTree tree;
    std::uint64_t exponent = 0;
};

/// The lazily represented graded unit: one single-vertex tree per weight.
class UnitFamily {
public:
    /// The unit component of weight n, carrying `label`.
    static WeightedTree component(Weight n, std::string label = "u");
};

/// Composition engine for the lambda-deformed multigraded operad on weighted
/// rooted trees. Stateless apart from an optional injected fault; a default
/// constructed Operad is the correct operad.
class Operad {
public:
    explicit Operad(Fault fault = Fault::none) : fault_(fault) {}
    Fault fault() const { return fault_; }

    /// Weight compatibility of inserting a tree of weight `inserted` into a slot.
    bool grading_matches(Weight slot, Weight inserted) const;

    /// Every summand of S o_v T, one per graft map, in odometer order over
    /// the edges of v. Empty when the weights do not match.
    std::vector<GraftTerm> graft_terms(const WeightedTree& s, VertexRef v, const WeightedTree& t) const;

    /// Sum over graft maps f of L^(d(S o^f T) - d(S o^f0 T)) S o^f T, or 0
    /// when |T| != |v|.
    TreeCombination compose(const WeightedTree& s, VertexRef v, const WeightedTree& t) const;
    TreeCombination compose(const WeightedTree& s, std::string_view v, const WeightedTree& t) const {
        return compose(s, s.vertex(v), t);
    }
    /// Bilinear extension in the first argument; v is addressed by label.
    TreeCombination compose(const TreeCombination& s, std::string_view v, const WeightedTree& t) const;
    /// Linear extension in the second argument.
    TreeCombination compose(const WeightedTree& s, std::string_view v, const TreeCombination& t) const;

    /// Sum over vertices v of T of L^(|S| h(v)) times S grafted on v.
    TreeCombination arrow(const WeightedTree& t, const WeightedTree& s) const;
    TreeCombination arrow(const TreeCombination& t, const TreeCombination& s) const;

    /// Sum over vertices v of T of T o_v S.
    TreeCombination circ_sum(const WeightedTree& t, const WeightedTree& s) const;
    TreeCombination circ_sum(const TreeCombination& t, const TreeCombination& s) const;

    /// Global composition: the slots are filled one after the other in the
    /// given order (default: last vertex first, down to the first vertex).
    /// `inputs[i]` goes into a.vertices()[i]. Labeled trees only.
    TreeCombination gamma(const WeightedTree& a, std::span<const WeightedTree> inputs) const;
    TreeCombination gamma(const WeightedTree& a, std::span<const WeightedTree> inputs,
                          std::span<const std::size_t> slot_order) const;

    /// unit_n o T: T when |T| = n, zero otherwise.
    TreeCombination compose_unit_left(Weight n, const WeightedTree& t) const;
    /// S o_v unit_|v|, which equals S.
    TreeCombination compose_unit_right(const WeightedTree& s, VertexRef v) const;

private:
    std::uint64_t fault_shift(const WeightedTree& s, VertexRef v, const std::vector<Weight>& branch_weights) const;

    Fault fault_ = Fault::none;
};

/// The tree S o_v^f T: T replaces v, T's root inherits v's parent edge and
/// every branch hanging from v is reattached at f(e). Throws on label clash,
/// foreign v, or a map whose domain is not E(S, v).
WeightedTree compose_with_map(const WeightedTree& s, VertexRef v, const WeightedTree& t, const GraftMap& f);

/// Free-function forms of the correct (fault-free) operad.
TreeCombination compose_lambda(const WeightedTree& s, VertexRef v, const WeightedTree& t);
TreeCombination arrow_lambda(const WeightedTree& t, const WeightedTree& s);
TreeCombination arrow_lambda(const TreeCombination& t, const TreeCombination& s);
TreeCombination circ_sum(const WeightedTree& t, const WeightedTree& s);
TreeCombination circ_sum(const TreeCombination& t, const TreeCombination& s);
TreeCombination gamma(const WeightedTree& a, std::span<const WeightedTree> inputs);
TreeCombination compose_unit_left(Weight n, const WeightedTree& t);
TreeCombination compose_unit_right(const WeightedTree& s, VertexRef v);

/// Classical positional partial composition S o_i T for trees labeled
/// 1..n and 1..m: T's labels are shifted by i-1, the labels of S above i by
/// m-1, and the result is labeled 1..n+m-1.
TreeCombination compose_positional(const WeightedTree& s, std::size_t i, const WeightedTree& t);

/// The single root-graft term S o_v^f0 T. Throws std::domain_error when
/// |T| != |v|.
WeightedTree nap_compose(const WeightedTree& s, VertexRef v, const WeightedTree& t);

/// Right Butcher product: S attached as a new child of T's root.
WeightedTree butcher_product(const WeightedTree& t, const WeightedTree& s);

/// Sum of the exponents predicted for graft map f: each edge contributes the
/// height of its target in T times the weight of its branch.
std::uint64_t graft_exponent(const WeightedTree& s, VertexRef v, const WeightedTree& t, const GraftMap& f);

/// Truncated check that forgetting-the-weights morphisms commute with
/// composition: every weighting of the classical composite of S and T at v
/// of total weight <= max_weight appears exactly once on the graded side,
/// evaluated at lambda = 1 (pre-Lie, `nap == false`) or lambda = 0 (NAP).
/// Input weights are ignored; only shapes and labels matter.
bool morphism_check(const WeightedTree& s, std::string_view v, const WeightedTree& t, Weight max_weight,
                    bool nap, const Operad& op = Operad{});
inline bool morphism_i_check(const WeightedTree& s, std::string_view v, const WeightedTree& t, Weight max_weight,
                             const Operad& op = Operad{}) {
    return morphism_check(s, v, t, max_weight, false, op);
}
inline bool morphism_j_check(const WeightedTree& s, std::string_view v, const WeightedTree& t, Weight max_weight,
                             const Operad& op = Operad{}) {
    return morphism_check(s, v, t, max_weight, true, op);
}

/// All weight vectors of length n with entries >= 1 and sum <= max_total.
std::vector<std::vector<Weight>> weightings(std::size_t n, Weight max_total);

}  // namespace lamop
