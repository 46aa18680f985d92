#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lamop/combination.hpp"
#include "lamop/operad.hpp"
#include "lamop/poly.hpp"
#include "lamop/tree.hpp"

namespace lamop {

/// Fully parenthesised binary product of weighted generators x_k. Immutable;
/// copies share structure. Generator labels are pairwise distinct, except
/// that the unlabeled label "_" may repeat (expressions for unlabeled trees).
class BracketExpr {
public:
    static BracketExpr generator(std::string label, Weight weight);
    static BracketExpr product(BracketExpr left, BracketExpr right);
    /// `expr := gen | "(" expr " " expr ")"`, `gen := label "_" weight`.
    /// Whitespace between tokens is free. Throws ParseError.
    static BracketExpr parse(std::string_view text);

    bool is_generator() const { return !node_->left; }
    const std::string& label() const { return node_->label; }
    /// Generator weight, or the total weight of a product.
    Weight weight() const { return node_->weight; }
    BracketExpr left() const { return BracketExpr(node_->left); }
    BracketExpr right() const { return BracketExpr(node_->right); }
    /// Generator labels in left-to-right order.
    std::vector<std::string> labels() const;

    /// Number of generators.
    std::size_t arity() const { return node_->arity; }
    const std::string& to_string() const { return node_->text; }

    friend bool operator==(const BracketExpr& a, const BracketExpr& b) { return a.to_string() == b.to_string(); }

private:
    struct Node {
        std::string label;
        Weight weight = 0;
        std::shared_ptr<const Node> left, right;
        std::string text;
        std::size_t arity = 1;
    };
    explicit BracketExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Finite linear combination of bracket expressions with LambdaPoly
/// coefficients, keyed (and ordered) by printed form.
class BracketCombination {
public:
    struct Term {
        BracketExpr expr;
        LambdaPoly coeff;
    };
    using TermMap = std::map<std::string, Term>;

    BracketCombination() = default;
    explicit BracketCombination(const BracketExpr& e, const LambdaPoly& coeff = LambdaPoly(1));

    void add(const BracketExpr& e, const LambdaPoly& coeff);
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    LambdaPoly coefficient(const BracketExpr& e) const;

    BracketCombination& operator+=(const BracketCombination& other);
    BracketCombination& operator-=(const BracketCombination& other);
    BracketCombination& operator*=(const LambdaPoly& scalar);
    friend BracketCombination operator+(BracketCombination a, const BracketCombination& b) { return a += b; }
    friend BracketCombination operator-(BracketCombination a, const BracketCombination& b) { return a -= b; }
    friend BracketCombination operator*(const LambdaPoly& s, BracketCombination c) { return c *= s; }
    friend bool operator==(const BracketCombination& a, const BracketCombination& b);

    std::string to_string() const;

private:
    TermMap terms_;
};

/// The defining relation
///   ((x_k y_l) z_m) - L^m (x_k (y_l z_m)) - ((x_k z_m) y_l) + L^l (x_k (z_m y_l)).
/// Throws std::invalid_argument unless x, y, z are distinct.
BracketCombination relation_r(Weight k, Weight l, Weight m, const std::string& x = "x", const std::string& y = "y",
                              const std::string& z = "z");

/// Evaluation into trees: generators become single vertices, products become
/// the deformed grafting product.
TreeCombination phi(const BracketExpr& e, const Operad& op = Operad{});
TreeCombination phi(const BracketCombination& c, const Operad& op = Operad{});

/// Corolla decomposition of a tree: its root and its root branches, in the
/// canonical branch order.
struct Corolla {
    std::string root_label;
    Weight root_weight = 0;
    std::vector<WeightedTree> branches;

    static Corolla of(const WeightedTree& t);
    /// Reassembles B[x, T_1, ..., T_p].
    WeightedTree assemble() const;
};

/// Rewrites labeled trees into bracket expressions by recursion on the root
/// valence:
///   psi(x)              = x_l
///   psi(B[x, T1])       = (x_l psi(T1))
///   psi(B[x, T1..Tp])   = (psi(B[x, T2..Tp]) psi(T1))
///                         - L^|T1| sum_{j>=2} psi(B[x, T2, .., Tj * T1, .., Tp])
/// with T1 the first branch in canonical order, and linear extension where a
/// branch slot holds a combination. Results are memoised per instance; an
/// instance must not be shared between threads.
class PsiRewriter {
public:
    explicit PsiRewriter(const Operad& op = Operad{}) : op_(op) {}

    BracketCombination operator()(const WeightedTree& t);
    /// psi(t) with the root branches taken in `order` (a permutation of the
    /// canonical branch indices) for the outermost step.
    BracketCombination with_root_order(const WeightedTree& t, const std::vector<std::size_t>& order);
    BracketCombination operator()(const TreeCombination& c);

private:
    BracketCombination expand(const Corolla& corolla, std::size_t vertex_count);

    Operad op_;
    std::unordered_map<std::string, BracketCombination> memo_;
};

BracketCombination psi(const WeightedTree& t, const Operad& op = Operad{});

/// phi(psi(t) with root branches in order1) == phi(psi(t) with order2).
bool psi_order_independence_check(const WeightedTree& t, const std::vector<std::size_t>& order1,
                                  const std::vector<std::size_t>& order2, const Operad& op = Operad{});

}  // namespace lamop
