#include "lamop/operad.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lamop/classical.hpp"

namespace lamop {

std::string to_string(Fault f) {
    switch (f) {
        case Fault::none: return "none";
        case Fault::height_off_by_one: return "height-off-by-one";
        case Fault::height_from_outer_root: return "height-from-outer-root";
        case Fault::grading_off_by_one: return "grading-off-by-one";
    }
    return "unknown";
}

Fault parse_fault(std::string_view name) {
    for (Fault f : {Fault::none, Fault::height_off_by_one, Fault::height_from_outer_root, Fault::grading_off_by_one})
        if (to_string(f) == name) return f;
    throw std::invalid_argument("unknown fault '" + std::string(name) + "'");
}

GraftMap GraftMap::from_labels(const WeightedTree& s, VertexRef v, const WeightedTree& t,
                               const std::map<std::string, std::string>& assignment) {
    auto kids = s.children(v);
    if (assignment.size() != kids.size()) throw std::invalid_argument("graft map domain must be the edges into v");
    GraftMap f;
    for (auto c : kids) {
        auto it = assignment.find(s.label(c));
        if (it == assignment.end()) throw std::invalid_argument("graft map misses edge from '" + s.label(c) + "'");
        f.targets.push_back(t.vertex(it->second).index);
    }
    return f;
}

bool GraftMap::sends_all_to_root() const {
    return std::all_of(targets.begin(), targets.end(), [](std::size_t x) { return x == 0; });
}

WeightedTree UnitFamily::component(Weight n, std::string label) { return WeightedTree::single(std::move(label), n); }

WeightedTree compose_with_map(const WeightedTree& s, VertexRef v, const WeightedTree& t, const GraftMap& f) {
    const auto& sv = s.raw();
    const auto& tv = t.raw();
    const std::size_t slot = v.index;
    s.label(v);  // validates v
    require_compatible(s, t, s.mode() == LabelMode::labeled ? std::string_view(s.label(v)) : std::string_view{});
    const auto& edges = sv[slot].children;
    if (f.targets.size() != edges.size()) throw std::invalid_argument("graft map domain does not match E(S, v)");
    for (std::size_t x : f.targets)
        if (x >= tv.size()) throw std::invalid_argument("graft map target outside T");

    std::vector<std::string> labels;
    std::vector<Weight> weights;
    std::vector<std::ptrdiff_t> parents;
    labels.reserve(sv.size() + tv.size() - 1);

    // T occupies indices [0, m); S minus the slot follows.
    const auto m = static_cast<std::ptrdiff_t>(tv.size());
    std::vector<std::ptrdiff_t> s_index(sv.size(), -1);
    for (std::size_t i = 0, next = 0; i < sv.size(); ++i)
        if (i != slot) s_index[i] = m + static_cast<std::ptrdiff_t>(next++);

    for (const auto& x : tv) {
        labels.push_back(x.label);
        weights.push_back(x.weight);
        if (x.parent >= 0)
            parents.push_back(x.parent);
        else
            parents.push_back(sv[slot].parent < 0 ? -1 : s_index[static_cast<std::size_t>(sv[slot].parent)]);
    }
    for (std::size_t i = 0; i < sv.size(); ++i) {
        if (i == slot) continue;
        labels.push_back(sv[i].label);
        weights.push_back(sv[i].weight);
        auto p = sv[i].parent;
        if (p == static_cast<std::ptrdiff_t>(slot)) {
            auto k = static_cast<std::size_t>(std::find(edges.begin(), edges.end(), i) - edges.begin());
            parents.push_back(static_cast<std::ptrdiff_t>(f.targets[k]));
        } else {
            parents.push_back(p < 0 ? -1 : s_index[static_cast<std::size_t>(p)]);
        }
    }
    return WeightedTree::from_parents(std::move(labels), std::move(weights), parents);
}

namespace {

std::vector<Weight> subtree_weights(const WeightedTree& t) {
    const auto& vs = t.raw();
    std::vector<Weight> w(vs.size());
    for (std::size_t k = vs.size(); k-- > 0;) {
        w[k] = vs[k].weight;
        for (std::size_t c : vs[k].children) w[k] += w[c];
    }
    return w;
}

std::vector<std::size_t> depths(const WeightedTree& t) {
    const auto& vs = t.raw();
    std::vector<std::size_t> d(vs.size(), 0);
    for (std::size_t i = 1; i < vs.size(); ++i) d[i] = d[static_cast<std::size_t>(vs[i].parent)] + 1;
    return d;
}

std::string fresh_label(const std::set<std::string>& taken, const std::string& stem) {
    if (!taken.count(stem)) return stem;
    for (std::size_t i = 0;; ++i) {
        std::string candidate = stem + std::to_string(i);
        if (!taken.count(candidate)) return candidate;
    }
}

}  // namespace

bool Operad::grading_matches(Weight slot, Weight inserted) const {
    if (fault_ == Fault::grading_off_by_one) return inserted == slot || inserted == slot + 1;
    return inserted == slot;
}

std::uint64_t Operad::fault_shift(const WeightedTree& s, VertexRef v,
                                  const std::vector<Weight>& branch_weights) const {
    std::uint64_t total = std::accumulate(branch_weights.begin(), branch_weights.end(), std::uint64_t{0});
    switch (fault_) {
        case Fault::height_off_by_one: return total;
        case Fault::height_from_outer_root: return height(s, v) * total;
        default: return 0;
    }
}

std::vector<GraftTerm> Operad::graft_terms(const WeightedTree& s, VertexRef v, const WeightedTree& t) const {
    s.label(v);
    require_compatible(s, t, s.mode() == LabelMode::labeled ? std::string_view(s.label(v)) : std::string_view{});
    if (!grading_matches(s.weight(v), weight(t))) return {};

    const auto& edges = s.raw()[v.index].children;
    const auto sub = subtree_weights(s);
    std::vector<Weight> branch_weights;
    for (std::size_t c : edges) branch_weights.push_back(sub[c]);
    const std::uint64_t shift = fault_shift(s, v, branch_weights);

    GraftMap f = GraftMap::to_root(edges.size());
    const std::uint64_t base = potential_energy(compose_with_map(s, v, t, f));

    std::vector<GraftTerm> out;
    while (true) {
        WeightedTree tree = compose_with_map(s, v, t, f);
        const std::uint64_t d = potential_energy(tree);
        if (d < base)
            throw std::logic_error("graft map " + tree.to_string() + " has lower potential energy than the root graft");
        out.push_back(GraftTerm{f, std::move(tree), d - base + shift});

        std::size_t k = 0;
        while (k < f.targets.size() && ++f.targets[k] == t.size()) f.targets[k++] = 0;
        if (k == f.targets.size()) break;
    }
    return out;
}

TreeCombination Operad::compose(const WeightedTree& s, VertexRef v, const WeightedTree& t) const {
    TreeCombination out;
    for (auto& term : graft_terms(s, v, t)) out.add(term.tree, LambdaPoly::power(term.exponent));
    return out;
}

TreeCombination Operad::compose(const TreeCombination& s, std::string_view v, const WeightedTree& t) const {
    TreeCombination out;
    for (const auto& [key, term] : s.terms()) {
        auto part = compose(term.tree, term.tree.vertex(v), t);
        out += term.coeff * std::move(part);
    }
    return out;
}

TreeCombination Operad::compose(const WeightedTree& s, std::string_view v, const TreeCombination& t) const {
    TreeCombination out;
    const VertexRef slot = s.vertex(v);
    for (const auto& [key, term] : t.terms()) out += term.coeff * compose(s, slot, term.tree);
    return out;
}

TreeCombination Operad::arrow(const WeightedTree& t, const WeightedTree& s) const {
    require_compatible(t, s);
    const Weight ws = weight(s);
    const auto d = depths(t);
    TreeCombination out;
    for (auto v : t.vertices()) {
        std::uint64_t exponent = ws * d[v.index];
        if (fault_ == Fault::height_off_by_one) exponent += ws;
        out.add(graft_at(t, v, s), LambdaPoly::power(exponent));
    }
    return out;
}

TreeCombination Operad::arrow(const TreeCombination& t, const TreeCombination& s) const {
    TreeCombination out;
    for (const auto& [kt, tt] : t.terms())
        for (const auto& [ks, ts] : s.terms()) out += (tt.coeff * ts.coeff) * arrow(tt.tree, ts.tree);
    return out;
}

TreeCombination Operad::circ_sum(const WeightedTree& t, const WeightedTree& s) const {
    TreeCombination out;
    for (auto v : t.vertices()) out += compose(t, v, s);
    return out;
}

TreeCombination Operad::circ_sum(const TreeCombination& t, const TreeCombination& s) const {
    TreeCombination out;
    for (const auto& [kt, tt] : t.terms())
        for (const auto& [ks, ts] : s.terms()) out += (tt.coeff * ts.coeff) * circ_sum(tt.tree, ts.tree);
    return out;
}

TreeCombination Operad::gamma(const WeightedTree& a, std::span<const WeightedTree> inputs) const {
    std::vector<std::size_t> order(a.size());
    std::iota(order.rbegin(), order.rend(), std::size_t{0});
    return gamma(a, inputs, order);
}

TreeCombination Operad::gamma(const WeightedTree& a, std::span<const WeightedTree> inputs,
                              std::span<const std::size_t> slot_order) const {
    if (a.mode() != LabelMode::labeled) throw std::invalid_argument("global composition needs a labeled tree");
    if (inputs.size() != a.size()) throw std::invalid_argument("need one input per vertex");
    std::vector<std::size_t> sorted(slot_order.begin(), slot_order.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i || sorted.size() != a.size())
            throw std::invalid_argument("slot order must be a permutation of the vertices");

    TreeCombination current(a);
    for (std::size_t slot : slot_order) {
        const std::string& label = a.raw()[slot].label;
        current = compose(current, label, inputs[slot]);
        if (current.is_zero()) break;
    }
    return current;
}

TreeCombination Operad::compose_unit_left(Weight n, const WeightedTree& t) const {
    std::string label(unlabeled_label);
    if (t.mode() == LabelMode::labeled) {
        auto labels = t.labels();
        label = fresh_label(std::set<std::string>(labels.begin(), labels.end()), "unit");
    }
    auto unit = UnitFamily::component(n, label);
    return compose(unit, unit.root(), t);
}

TreeCombination Operad::compose_unit_right(const WeightedTree& s, VertexRef v) const {
    return compose(s, v, UnitFamily::component(s.weight(v), s.label(v)));
}

TreeCombination compose_lambda(const WeightedTree& s, VertexRef v, const WeightedTree& t) {
    return Operad{}.compose(s, v, t);
}
TreeCombination arrow_lambda(const WeightedTree& t, const WeightedTree& s) { return Operad{}.arrow(t, s); }
TreeCombination arrow_lambda(const TreeCombination& t, const TreeCombination& s) { return Operad{}.arrow(t, s); }
TreeCombination circ_sum(const WeightedTree& t, const WeightedTree& s) { return Operad{}.circ_sum(t, s); }
TreeCombination circ_sum(const TreeCombination& t, const TreeCombination& s) { return Operad{}.circ_sum(t, s); }
TreeCombination gamma(const WeightedTree& a, std::span<const WeightedTree> inputs) {
    return Operad{}.gamma(a, inputs);
}
TreeCombination compose_unit_left(Weight n, const WeightedTree& t) { return Operad{}.compose_unit_left(n, t); }
TreeCombination compose_unit_right(const WeightedTree& s, VertexRef v) {
    return Operad{}.compose_unit_right(s, v);
}

namespace {

std::size_t positional_label(const std::string& label, std::size_t n) {
    std::size_t value = 0;
    try {
        std::size_t used = 0;
        value = std::stoul(label, &used);
        if (used != label.size()) value = 0;
    } catch (const std::exception&) {
        value = 0;
    }
    if (value < 1 || value > n) throw std::invalid_argument("positional composition needs labels 1..n");
    return value;
}

}  // namespace

TreeCombination compose_positional(const WeightedTree& s, std::size_t i, const WeightedTree& t) {
    const std::size_t n = s.size();
    const std::size_t m = t.size();
    if (i < 1 || i > n) throw std::invalid_argument("position out of range");
    std::map<std::string, std::string> shift_s, shift_t;
    for (const auto& label : s.labels()) {
        std::size_t j = positional_label(label, n);
        shift_s[label] = std::to_string(j > i ? j + m - 1 : j);
    }
    for (const auto& label : t.labels()) shift_t[label] = std::to_string(positional_label(label, m) + i - 1);
    auto s2 = relabel(s, shift_s);
    return compose_lambda(s2, s2.vertex(std::to_string(i)), relabel(t, shift_t));
}

WeightedTree nap_compose(const WeightedTree& s, VertexRef v, const WeightedTree& t) {
    if (s.weight(v) != weight(t)) throw std::domain_error("NAP composition needs |T| == |v|");
    return compose_with_map(s, v, t, GraftMap::to_root(s.raw()[v.index].children.size()));
}

WeightedTree butcher_product(const WeightedTree& t, const WeightedTree& s) { return graft_at(t, t.root(), s); }

std::uint64_t graft_exponent(const WeightedTree& s, VertexRef v, const WeightedTree& t, const GraftMap& f) {
    auto edges = incoming_edges(s, v);
    if (f.targets.size() != edges.size()) throw std::invalid_argument("graft map domain does not match E(S, v)");
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < edges.size(); ++k)
        total += height(t, t.ref(f.targets[k])) * weight(s.branch(edges[k].child));
    return total;
}

std::vector<std::vector<Weight>> weightings(std::size_t n, Weight max_total) {
    std::vector<std::vector<Weight>> out;
    if (n == 0 || max_total < n) return out;
    std::vector<Weight> w(n, 1);
    Weight sum = n;
    while (true) {
        out.push_back(w);
        // Odometer over entries, bounded by the running sum.
        std::size_t k = 0;
        while (k < n) {
            if (sum < max_total) {
                ++w[k];
                ++sum;
                break;
            }
            sum -= w[k] - 1;
            w[k] = 1;
            ++k;
        }
        if (k == n) break;
    }
    return out;
}

bool morphism_check(const WeightedTree& s, std::string_view v, const WeightedTree& t, Weight max_weight, bool nap,
                    const Operad& op) {
    using namespace classical;
    const std::string slot(v);
    const ParentMap ps = from_tree(s), pt = from_tree(t);
    std::vector<ParentMap> shapes_out =
        nap ? std::vector<ParentMap>{classical::nap_compose(ps, slot, pt)} : prelie_compose(ps, slot, pt);

    TreeCombination expected;
    for (const auto& shape : shapes_out) {
        WeightedTree base = to_tree(shape);
        for (const auto& w : weightings(base.size(), max_weight)) expected.add(with_weights(base, w), 1);
    }

    const Rational at = nap ? 0 : 1;
    TreeCombination actual;
    const auto slot_index = s.vertex(slot).index;
    for (const auto& alpha : weightings(s.size(), max_weight)) {
        WeightedTree sa = with_weights(s, alpha);
        for (const auto& beta : weightings(t.size(), max_weight)) {
            if (!op.grading_matches(alpha[slot_index], std::accumulate(beta.begin(), beta.end(), Weight{0})))
                continue;
            actual += specialize(op.compose(sa, sa.ref(slot_index), with_weights(t, beta)), at);
        }
    }
    TreeCombination truncated;
    for (const auto& [key, term] : actual.terms())
        if (weight(term.tree) <= max_weight) truncated.add(term.tree, term.coeff);
    return truncated == expected;
}

}  // namespace lamop
