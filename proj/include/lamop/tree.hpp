#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lamop {

using Weight = std::uint64_t;

/// LABELED trees carry pairwise distinct labels and are compared as labeled
/// trees. UNLABELED trees use the label "_" on every vertex and are compared
/// up to isomorphism.
enum class LabelMode { labeled, unlabeled };

inline constexpr std::string_view unlabeled_label = "_";

/// Thrown by the text parsers; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Handle to one vertex of one tree. Only valid against the tree that issued
/// it (or a structurally identical copy); anything else throws.
struct VertexRef {
    std::size_t index = 0;
    std::size_t tree_fingerprint = 0;

    friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

/// An edge of a rooted tree, oriented from child to parent.
struct Edge {
    VertexRef child;
    VertexRef parent;
};

/// Rooted tree whose vertices carry a label and a positive integer weight.
///
/// Vertices are stored in preorder with the root at index 0; children keep
/// the order they were given in. Children are semantically unordered:
/// `canonicalize` imposes the canonical order used for equality, hashing and
/// printing. Values are immutable once built.
class WeightedTree {
public:
    struct Vertex {
        std::string label;
        Weight weight = 1;
        std::ptrdiff_t parent = -1;
        std::vector<std::size_t> children;
    };

    /// Single vertex tree.
    static WeightedTree single(std::string label, Weight weight);
    /// Builds a tree from parallel arrays; `parents[i] == -1` marks the root.
    /// Throws std::invalid_argument unless the data describes exactly one
    /// connected, acyclic rooted tree with valid labels and weights >= 1.
    static WeightedTree from_parents(std::vector<std::string> labels, std::vector<Weight> weights,
                                     const std::vector<std::ptrdiff_t>& parents);
    /// Parses `label:weight[child,child,...]`. Throws ParseError.
    static WeightedTree parse(std::string_view text);

    std::size_t size() const { return vertices_.size(); }
    LabelMode mode() const { return mode_; }
    VertexRef root() const { return ref(0); }
    std::vector<VertexRef> vertices() const;

    const std::string& label(VertexRef v) const { return at(v).label; }
    Weight weight(VertexRef v) const { return at(v).weight; }
    std::optional<VertexRef> parent(VertexRef v) const;
    std::vector<VertexRef> children(VertexRef v) const;
    bool is_leaf(VertexRef v) const { return at(v).children.empty(); }

    /// Vertex with the given label (labeled mode only; unlabeled trees never match).
    std::optional<VertexRef> find(std::string_view label) const;
    /// Like find, but throws std::invalid_argument when absent.
    VertexRef vertex(std::string_view label) const;
    std::vector<std::string> labels() const;

    /// The full subtree hanging from v (v becomes the root).
    WeightedTree branch(VertexRef v) const;

    /// Raw storage access, index-based. Index i corresponds to vertices()[i].
    const std::vector<Vertex>& raw() const { return vertices_; }
    VertexRef ref(std::size_t index) const;
    std::size_t fingerprint() const { return fingerprint_; }

    /// Prints in the stored child order. Use canonical_encoding for a
    /// representation invariant under child reordering.
    std::string to_string() const;

    /// Storage-level equality (same layout, same child order).
    friend bool operator==(const WeightedTree& a, const WeightedTree& b);

private:
    WeightedTree() = default;
    const Vertex& at(VertexRef v) const;
    void finalize();

    std::vector<Vertex> vertices_;
    LabelMode mode_ = LabelMode::labeled;
    std::size_t fingerprint_ = 0;
};

/// Sum of all vertex weights.
Weight weight(const WeightedTree& t);
/// Number of edges on the path from v to the root.
std::size_t height(const WeightedTree& t, VertexRef v);
/// Sum over vertices of weight times height.
std::uint64_t potential_energy(const WeightedTree& t);
/// One edge per direct child of v.
std::vector<Edge> incoming_edges(const WeightedTree& t, VertexRef v);

/// Same tree with children sorted at every vertex by the canonical encoding
/// of the subtree they root. Idempotent.
WeightedTree canonicalize(const WeightedTree& t);
/// Text form of canonicalize(t); equal encodings <=> equal operad elements.
std::string canonical_encoding(const WeightedTree& t);

/// Unlabeled copy: every label replaced by "_".
WeightedTree forget_labels(const WeightedTree& t);
/// Copy with every weight set to w.
WeightedTree with_uniform_weight(const WeightedTree& t, Weight w);
/// Copy with weights replaced, indexed like vertices().
WeightedTree with_weights(const WeightedTree& t, std::span<const Weight> weights);

/// Applies a label bijection. `sigma` must be defined on exactly the label
/// set of t and be injective; weights travel with their labels.
WeightedTree relabel(const WeightedTree& t, const std::map<std::string, std::string>& sigma);

/// All rooted trees on the labels `labels` (default "1".."n"), vertex i
/// carrying weight_assignment[i]. Exactly n^(n-1) trees, no duplicates.
std::vector<WeightedTree> enumerate_labeled_trees(std::size_t n, std::span<const Weight> weight_assignment,
                                                  std::span<const std::string> labels = {});

/// Grafts S as a new child of vertex v of T.
WeightedTree graft_at(const WeightedTree& t, VertexRef v, const WeightedTree& s);

/// Throws std::invalid_argument if the two trees mix labeling modes, or if
/// both are labeled and share a label outside `ignored`.
void require_compatible(const WeightedTree& a, const WeightedTree& b, std::string_view ignored = {});

}  // namespace lamop
