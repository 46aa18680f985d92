#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lamop/poly.hpp"
#include "lamop/tree.hpp"

namespace lamop {

/// Finite formal linear combination of canonical trees with LambdaPoly
/// coefficients. Keys are canonical encodings, so iteration order is the
/// deterministic output order. Zero coefficients are pruned eagerly.
class TreeCombination {
public:
    struct Term {
        WeightedTree tree;  // canonical
        LambdaPoly coeff;
    };
    using TermMap = std::map<std::string, Term>;

    TreeCombination() = default;
    explicit TreeCombination(const WeightedTree& t, const LambdaPoly& coeff = LambdaPoly(1));

    /// Adds coeff * t. Throws std::invalid_argument on a labeling-mode mismatch.
    void add(const WeightedTree& t, const LambdaPoly& coeff);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Labeling mode of the stored trees; empty for the zero combination.
    std::optional<LabelMode> mode() const { return mode_; }
    /// Coefficient of t (zero if absent).
    LambdaPoly coefficient(const WeightedTree& t) const;

    TreeCombination& operator+=(const TreeCombination& other);
    TreeCombination& operator-=(const TreeCombination& other);
    TreeCombination& operator*=(const LambdaPoly& scalar);

    friend TreeCombination operator+(TreeCombination a, const TreeCombination& b) { return a += b; }
    friend TreeCombination operator-(TreeCombination a, const TreeCombination& b) { return a -= b; }
    friend TreeCombination operator*(const LambdaPoly& s, TreeCombination c) { return c *= s; }
    friend bool operator==(const TreeCombination& a, const TreeCombination& b);

    /// One term per line: "<coeff> * <tree>"; multi-term coefficients are
    /// parenthesised. The zero combination prints as "0".
    std::string to_string() const;

private:
    void add_canonical(std::string key, WeightedTree canonical, const LambdaPoly& coeff);

    TermMap terms_;
    std::optional<LabelMode> mode_;
};

TreeCombination combo_add(const TreeCombination& a, const TreeCombination& b);
TreeCombination combo_sub(const TreeCombination& a, const TreeCombination& b);
TreeCombination combo_scale(const TreeCombination& c, const LambdaPoly& scalar);
/// Evaluates every coefficient at lambda = at, pruning zeros.
TreeCombination specialize(const TreeCombination& c, const Rational& at);

/// Formats a coefficient for term printing: bare when it has a single term.
std::string format_coefficient(const LambdaPoly& p);

}  // namespace lamop
