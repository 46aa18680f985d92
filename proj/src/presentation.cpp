#include "lamop/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lamop {

BracketExpr BracketExpr::generator(std::string label, Weight weight) {
    if (label.empty()) throw std::invalid_argument("generator label must be non-empty");
    for (char c : label)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            throw std::invalid_argument("invalid generator label '" + label + "'");
    if (weight == 0) throw std::invalid_argument("generator weight must be >= 1");
    auto node = std::make_shared<Node>();
    node->text = label + "_" + std::to_string(weight);
    node->label = std::move(label);
    node->weight = weight;
    return BracketExpr(std::move(node));
}

std::vector<std::string> BracketExpr::labels() const {
    if (is_generator()) return {label()};
    auto out = left().labels();
    auto more = right().labels();
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

BracketExpr BracketExpr::product(BracketExpr left, BracketExpr right) {
    auto a = left.labels();
    std::set<std::string> seen(a.begin(), a.end());
    for (const auto& x : right.labels())
        if (x != unlabeled_label && seen.count(x)) throw std::invalid_argument("repeated generator label '" + x + "'");
    const bool left_unlabeled = std::all_of(a.begin(), a.end(), [](const auto& x) { return x == unlabeled_label; });
    auto b = right.labels();
    const bool right_unlabeled = std::all_of(b.begin(), b.end(), [](const auto& x) { return x == unlabeled_label; });
    if (left_unlabeled != right_unlabeled) throw std::invalid_argument("cannot mix labeled and unlabeled generators");

    auto node = std::make_shared<Node>();
    node->text = "(" + left.to_string() + " " + right.to_string() + ")";
    node->arity = left.arity() + right.arity();
    node->weight = left.weight() + right.weight();
    node->left = std::move(left.node_);
    node->right = std::move(right.node_);
    return BracketExpr(std::move(node));
}

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    BracketExpr parse_all() {
        BracketExpr e = parse_expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
        return e;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    BracketExpr parse_expr() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError(pos_, "expected expression");
        if (text_[pos_] == '(') {
            const std::size_t open = pos_++;
            BracketExpr left = parse_expr();
            const std::size_t gap = pos_;
            skip_space();
            if (pos_ == gap) throw ParseError(pos_, "expected whitespace between factors");
            BracketExpr right = parse_expr();
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError(pos_, "expected ')'");
            ++pos_;
            try {
                return BracketExpr::product(std::move(left), std::move(right));
            } catch (const std::invalid_argument& e) {
                throw ParseError(open, e.what());
            }
        }
        return parse_generator();
    }

    BracketExpr parse_generator() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) throw ParseError(start, "expected generator");
        std::string_view token = text_.substr(start, pos_ - start);
        const auto split = token.rfind('_');
        if (split == std::string_view::npos || split == 0 || split + 1 == token.size())
            throw ParseError(start, "generator must be label_weight");
        std::string_view digits = token.substr(split + 1);
        if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError(start + split + 1, "generator weight must be a decimal integer");
        if (digits.size() > 18) throw ParseError(start + split + 1, "weight too large");
        const Weight w = std::stoull(std::string(digits));
        if (w == 0) throw ParseError(start + split + 1, "weight must be >= 1");
        return BracketExpr::generator(std::string(token.substr(0, split)), w);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BracketExpr BracketExpr::parse(std::string_view text) { return ExprParser(text).parse_all(); }

BracketCombination::BracketCombination(const BracketExpr& e, const LambdaPoly& coeff) { add(e, coeff); }

void BracketCombination::add(const BracketExpr& e, const LambdaPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(e.to_string());
    if (it == terms_.end()) {
        terms_.emplace(e.to_string(), Term{e, coeff});
        return;
    }
    it->second.coeff += coeff;
    if (it->second.coeff.is_zero()) terms_.erase(it);
}

LambdaPoly BracketCombination::coefficient(const BracketExpr& e) const {
    auto it = terms_.find(e.to_string());
    return it == terms_.end() ? LambdaPoly() : it->second.coeff;
}

BracketCombination& BracketCombination::operator+=(const BracketCombination& other) {
    for (const auto& [key, term] : other.terms_) add(term.expr, term.coeff);
    return *this;
}

BracketCombination& BracketCombination::operator-=(const BracketCombination& other) {
    for (const auto& [key, term] : other.terms_) add(term.expr, -term.coeff);
    return *this;
}

BracketCombination& BracketCombination::operator*=(const LambdaPoly& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, term] : terms_) term.coeff *= scalar;
    return *this;
}

bool operator==(const BracketCombination& a, const BracketCombination& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
        if (i->first != j->first || !(i->second.coeff == j->second.coeff)) return false;
    return true;
}

std::string BracketCombination::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, term] : terms_) {
        if (!first) os << '\n';
        first = false;
        os << format_coefficient(term.coeff) << " * " << key;
    }
    return os.str();
}

BracketCombination relation_r(Weight k, Weight l, Weight m, const std::string& x, const std::string& y,
                              const std::string& z) {
    if (x == y || y == z || x == z) throw std::invalid_argument("relation labels must be distinct");
    const auto X = BracketExpr::generator(x, k);
    const auto Y = BracketExpr::generator(y, l);
    const auto Z = BracketExpr::generator(z, m);
    using E = BracketExpr;
    BracketCombination r;
    r.add(E::product(E::product(X, Y), Z), 1);
    r.add(E::product(X, E::product(Y, Z)), -LambdaPoly::power(m));
    r.add(E::product(E::product(X, Z), Y), -1);
    r.add(E::product(X, E::product(Z, Y)), LambdaPoly::power(l));
    return r;
}

TreeCombination phi(const BracketExpr& e, const Operad& op) {
    if (e.is_generator()) return TreeCombination(WeightedTree::single(e.label(), e.weight()));
    return op.arrow(phi(e.left(), op), phi(e.right(), op));
}

TreeCombination phi(const BracketCombination& c, const Operad& op) {
    TreeCombination out;
    for (const auto& [key, term] : c.terms()) out += term.coeff * phi(term.expr, op);
    return out;
}

Corolla Corolla::of(const WeightedTree& t) {
    const WeightedTree c = canonicalize(t);
    Corolla out;
    out.root_label = c.label(c.root());
    out.root_weight = c.weight(c.root());
    for (auto child : c.children(c.root())) out.branches.push_back(c.branch(child));
    return out;
}

WeightedTree Corolla::assemble() const {
    WeightedTree t = WeightedTree::single(root_label, root_weight);
    for (const auto& b : branches) t = graft_at(t, t.root(), b);
    return t;
}

namespace {

BracketCombination products(const BracketCombination& a, const BracketCombination& b) {
    BracketCombination out;
    for (const auto& [ka, ta] : a.terms())
        for (const auto& [kb, tb] : b.terms()) out.add(BracketExpr::product(ta.expr, tb.expr), ta.coeff * tb.coeff);
    return out;
}

using Metric = std::pair<std::size_t, std::size_t>;

Metric metric_of(std::size_t vertex_count, std::size_t valence) { return {vertex_count, valence}; }

void require_descent(const Metric& parent, const WeightedTree& child) {
    const Metric m = metric_of(child.size(), child.children(child.root()).size());
    if (!(m < parent)) throw std::logic_error("psi recursion does not decrease (vertex count, root valence)");
}

}  // namespace

BracketCombination PsiRewriter::operator()(const WeightedTree& t) {
    const std::string key = canonical_encoding(t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BracketCombination result = expand(Corolla::of(t), t.size());
    memo_.emplace(key, result);
    return result;
}

BracketCombination PsiRewriter::operator()(const TreeCombination& c) {
    BracketCombination out;
    for (const auto& [key, term] : c.terms()) out += term.coeff * (*this)(term.tree);
    return out;
}

BracketCombination PsiRewriter::with_root_order(const WeightedTree& t, const std::vector<std::size_t>& order) {
    Corolla c = Corolla::of(t);
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i) throw std::invalid_argument("branch order must be a permutation");
    if (sorted.size() != c.branches.size()) throw std::invalid_argument("branch order has the wrong length");

    Corolla ordered{c.root_label, c.root_weight, {}};
    for (std::size_t i : order) ordered.branches.push_back(c.branches[i]);

    // Unrolled along the ordered chain B[x, T_o1..], B[x, T_o2..], ...: the
    // first factor keeps the caller's order, everything else is canonical.
    std::function<BracketCombination(const Corolla&, std::size_t)> run = [&](const Corolla& k, std::size_t n) {
        const std::size_t p = k.branches.size();
        if (p <= 1) return expand(k, n);
        Corolla rest{k.root_label, k.root_weight, {k.branches.begin() + 1, k.branches.end()}};
        const WeightedTree& t1 = k.branches.front();
        BracketCombination out = products(run(rest, n - t1.size()), (*this)(t1));
        for (std::size_t j = 1; j < p; ++j) {
            const TreeCombination grafted = op_.arrow(k.branches[j], t1);
            for (const auto& [key, term] : grafted.terms()) {
                Corolla next = rest;
                next.branches[j - 1] = term.tree;
                out -= (LambdaPoly::power(weight(t1)) * term.coeff) * (*this)(next.assemble());
            }
        }
        return out;
    };
    return run(ordered, t.size());
}

BracketCombination PsiRewriter::expand(const Corolla& corolla, std::size_t vertex_count) {
    const std::size_t p = corolla.branches.size();
    const Metric here = metric_of(vertex_count, p);
    const auto x = BracketExpr::generator(corolla.root_label, corolla.root_weight);
    if (p == 0) return BracketCombination(x);

    const WeightedTree& t1 = corolla.branches.front();
    require_descent(here, t1);
    const BracketCombination psi_t1 = (*this)(t1);
    if (p == 1) return products(BracketCombination(x), psi_t1);

    Corolla rest{corolla.root_label, corolla.root_weight, {corolla.branches.begin() + 1, corolla.branches.end()}};
    const WeightedTree rest_tree = rest.assemble();
    require_descent(here, rest_tree);
    BracketCombination out = products((*this)(rest_tree), psi_t1);

    const LambdaPoly scale = LambdaPoly::power(weight(t1));
    for (std::size_t j = 1; j < p; ++j) {
        const TreeCombination grafted = op_.arrow(corolla.branches[j], t1);
        for (const auto& [key, term] : grafted.terms()) {
            Corolla next = rest;
            next.branches[j - 1] = term.tree;
            const WeightedTree merged = next.assemble();
            require_descent(here, merged);
            out -= (scale * term.coeff) * (*this)(merged);
        }
    }
    return out;
}

BracketCombination psi(const WeightedTree& t, const Operad& op) { return PsiRewriter(op)(t); }

bool psi_order_independence_check(const WeightedTree& t, const std::vector<std::size_t>& order1,
                                  const std::vector<std::size_t>& order2, const Operad& op) {
    PsiRewriter rw(op);
    return phi(rw.with_root_order(t, order1), op) == phi(rw.with_root_order(t, order2), op);
}

}  // namespace lamop
