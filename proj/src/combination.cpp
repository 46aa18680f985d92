#include "lamop/combination.hpp"

#include <sstream>

namespace lamop {

TreeCombination::TreeCombination(const WeightedTree& t, const LambdaPoly& coeff) { add(t, coeff); }

void TreeCombination::add(const WeightedTree& t, const LambdaPoly& coeff) {
    if (mode_ && *mode_ != t.mode()) throw std::invalid_argument("cannot mix labeled and unlabeled trees");
    if (coeff.is_zero()) return;
    WeightedTree canonical = canonicalize(t);
    std::string key = canonical.to_string();
    add_canonical(std::move(key), std::move(canonical), coeff);
}

void TreeCombination::add_canonical(std::string key, WeightedTree canonical, const LambdaPoly& coeff) {
    if (mode_ && *mode_ != canonical.mode()) throw std::invalid_argument("cannot mix labeled and unlabeled trees");
    if (coeff.is_zero()) return;
    mode_ = canonical.mode();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Term{std::move(canonical), coeff});
        return;
    }
    it->second.coeff += coeff;
    if (it->second.coeff.is_zero()) terms_.erase(it);
}

LambdaPoly TreeCombination::coefficient(const WeightedTree& t) const {
    auto it = terms_.find(canonical_encoding(t));
    return it == terms_.end() ? LambdaPoly() : it->second.coeff;
}

TreeCombination& TreeCombination::operator+=(const TreeCombination& other) {
    if (mode_ && other.mode_ && *mode_ != *other.mode_)
        throw std::invalid_argument("cannot mix labeled and unlabeled trees");
    for (const auto& [key, term] : other.terms_) add_canonical(key, term.tree, term.coeff);
    return *this;
}

TreeCombination& TreeCombination::operator-=(const TreeCombination& other) {
    if (mode_ && other.mode_ && *mode_ != *other.mode_)
        throw std::invalid_argument("cannot mix labeled and unlabeled trees");
    for (const auto& [key, term] : other.terms_) add_canonical(key, term.tree, -term.coeff);
    return *this;
}

TreeCombination& TreeCombination::operator*=(const LambdaPoly& scalar) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second.coeff *= scalar;
        it = it->second.coeff.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

bool operator==(const TreeCombination& a, const TreeCombination& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second.coeff == ib->second.coeff)) return false;
    return true;
}

std::string format_coefficient(const LambdaPoly& p) {
    return p.terms().size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
}

std::string TreeCombination::to_string() const {
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

TreeCombination combo_add(const TreeCombination& a, const TreeCombination& b) { return a + b; }
TreeCombination combo_sub(const TreeCombination& a, const TreeCombination& b) { return a - b; }
TreeCombination combo_scale(const TreeCombination& c, const LambdaPoly& scalar) { return scalar * c; }

TreeCombination specialize(const TreeCombination& c, const Rational& at) {
    TreeCombination out;
    for (const auto& [key, term] : c.terms()) out.add(term.tree, LambdaPoly(term.coeff.eval(at)));
    return out;
}

}  // namespace lamop
