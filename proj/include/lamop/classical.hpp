#pragma once

#include <map>
#include <string>
#include <vector>

#include "lamop/tree.hpp"

// Reference implementations of the classical (ungraded, undeformed) pre-Lie
// and NAP operads on labeled rooted trees. They use their own parent-map
// representation and share no code with the graded engine, so the
// verification suites can use them as independent oracles.
namespace lamop::classical {

/// label -> parent label; the root maps to "".
using ParentMap = std::map<std::string, std::string>;
/// Multiset of unlabeled shapes, keyed by shape code.
using ShapeMultiset = std::map<std::string, long>;

ParentMap from_tree(const WeightedTree& t);
/// Converts back, giving vertex x the weight weights.at(x) (1 if absent).
WeightedTree to_tree(const ParentMap& p, const std::map<std::string, Weight>& weights = {});

std::string root_of(const ParentMap& p);

/// S o_v T in the pre-Lie operad: one tree per map from the children of v
/// to the vertices of T.
std::vector<ParentMap> prelie_compose(const ParentMap& s, const std::string& v, const ParentMap& t);
/// S o_v T in the NAP operad: children of v go to the root of T.
ParentMap nap_compose(const ParentMap& s, const std::string& v, const ParentMap& t);
/// T <- S: S grafted on each vertex of T in turn.
std::vector<ParentMap> graft_sum(const ParentMap& t, const ParentMap& s);

/// Unlabeled isomorphism code (sorted nested parentheses).
std::string shape_code(const ParentMap& p);
ShapeMultiset shapes(const std::vector<ParentMap>& trees);

/// Copy of p with every label prefixed.
ParentMap prefixed(const ParentMap& p, const std::string& prefix);

}  // namespace lamop::classical
