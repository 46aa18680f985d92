#include "lamop/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lamop/classical.hpp"
#include "lamop/presentation.hpp"

namespace lamop::verify {

namespace {

std::vector<std::vector<Weight>> all_weight_vectors(std::size_t n, Weight w_max) {
    std::vector<std::vector<Weight>> out;
    std::vector<Weight> w(n, 1);
    while (true) {
        out.push_back(w);
        std::size_t k = 0;
        while (k < n && ++w[k] > w_max) w[k++] = 1;
        if (k == n) break;
    }
    return out;
}

std::vector<std::string> prefixed_labels(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

}  // namespace

std::vector<WeightedTree> Universe::trees(const std::string& prefix) const {
    std::vector<WeightedTree> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto labels = prefixed_labels(prefix.empty() ? "" : prefix, n);
        for (const auto& w : all_weight_vectors(n, w_max))
            for (auto& t : enumerate_labeled_trees(n, w, labels)) out.push_back(std::move(t));
    }
    if (mode == LabelMode::labeled) return out;
    std::vector<WeightedTree> unique;
    std::set<std::string> seen;
    for (const auto& t : out) {
        auto u = canonicalize(forget_labels(t));
        if (seen.insert(canonical_encoding(u)).second) unique.push_back(std::move(u));
    }
    return unique;
}

std::size_t labeled_universe_size(std::size_t n_max, Weight w_max) {
    std::size_t total = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::size_t term = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) term *= n;
        for (std::size_t i = 0; i < n; ++i) term *= w_max;
        total += term;
    }
    return total;
}

std::string Instance::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (i) out += " ";
        out += "t" + std::to_string(i + 1) + "=" + canonical_encoding(trees[i]);
    }
    for (std::size_t i = 0; i < slots.size(); ++i) out += " v" + std::to_string(i + 1) + "=" + slots[i];
    return out;
}

WeightedTree delete_leaf(const WeightedTree& t, std::size_t index) {
    const auto& vs = t.raw();
    if (index == 0 || index >= vs.size() || !vs[index].children.empty())
        throw std::invalid_argument("can only delete a non-root leaf");
    std::vector<std::string> labels;
    std::vector<Weight> weights;
    std::vector<std::ptrdiff_t> parents;
    auto remap = [&](std::ptrdiff_t p) { return p > static_cast<std::ptrdiff_t>(index) ? p - 1 : p; };
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i == index) continue;
        labels.push_back(vs[i].label);
        weights.push_back(vs[i].weight);
        parents.push_back(vs[i].parent < 0 ? -1 : remap(vs[i].parent));
    }
    return WeightedTree::from_parents(std::move(labels), std::move(weights), parents);
}

Instance minimize(Instance x, const std::function<bool(const Instance&)>& fails) {
    auto protected_vertex = [&](const WeightedTree& t, std::size_t i) {
        if (t.mode() != LabelMode::labeled) return false;
        return std::find(x.slots.begin(), x.slots.end(), t.raw()[i].label) != x.slots.end();
    };
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t k = 0; k < x.trees.size() && !progress; ++k) {
            const WeightedTree& t = x.trees[k];
            for (std::size_t i = 1; i < t.size() && !progress; ++i) {
                if (!t.raw()[i].children.empty() || protected_vertex(t, i)) continue;
                Instance y = x;
                y.trees[k] = delete_leaf(t, i);
                if (fails(y)) {
                    x = std::move(y);
                    progress = true;
                }
            }
            for (std::size_t i = 0; i < t.size() && !progress; ++i) {
                if (t.raw()[i].weight == 1) continue;
                std::vector<Weight> w;
                for (const auto& v : t.raw()) w.push_back(v.weight);
                --w[i];
                Instance y = x;
                y.trees[k] = with_weights(t, w);
                if (fails(y)) {
                    x = std::move(y);
                    progress = true;
                }
            }
        }
    }
    return x;
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    os << (passed() ? "PASS " : "FAIL ") << name << " instances=" << instances << " failures=" << failure_count
       << " time=" << std::fixed << std::setprecision(2) << seconds << "s";
    for (const auto& f : failures) os << "\n  counterexample: " << f;
    return os.str();
}

std::string CheckReport::to_json() const {
    nlohmann::json j;
    j["check"] = name;
    j["passed"] = passed();
    j["instances"] = instances;
    j["failures"] = failure_count;
    j["counterexamples"] = failures;
    j["seconds"] = seconds;
    return j.dump();
}

namespace {

constexpr std::size_t kStoredFailures = 5;

/// Accumulates one CheckReport; the first failure is minimized at the end.
class Checker {
public:
    explicit Checker(std::string name) : start_(std::chrono::steady_clock::now()) { report_.name = std::move(name); }

    void instance() { ++report_.instances; }

    /// Records the outcome of `fails` on x (which is evaluated here).
    void expect(const Instance& x, const std::function<bool(const Instance&)>& fails) {
        instance();
        bool failed;
        try {
            failed = fails(x);
        } catch (const std::exception&) {
            failed = true;
        }
        if (!failed) return;
        fail(x, fails);
    }

    void fail(const Instance& x, const std::function<bool(const Instance&)>& fails) {
        ++report_.failure_count;
        if (report_.failures.size() < kStoredFailures) report_.failures.push_back(x.to_string());
        if (!first_) first_.emplace(x, fails);
    }

    CheckReport finish() {
        if (first_) {
            auto safe = [&](const Instance& y) {
                try {
                    return first_->second(y);
                } catch (const std::exception&) {
                    return false;
                }
            };
            report_.failures.front() = minimize(first_->first, safe).to_string();
        }
        report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return report_;
    }

private:
    CheckReport report_;
    std::chrono::steady_clock::time_point start_;
    std::optional<std::pair<Instance, std::function<bool(const Instance&)>>> first_;
};

std::map<Weight, std::vector<WeightedTree>> by_weight(const std::vector<WeightedTree>& trees) {
    std::map<Weight, std::vector<WeightedTree>> out;
    for (const auto& t : trees) out[weight(t)].push_back(t);
    return out;
}

/// Trees of `pool` that the operad accepts in a slot of weight `slot`.
std::vector<const WeightedTree*> compatible(const std::map<Weight, std::vector<WeightedTree>>& pool, Weight slot,
                                            const Operad& op) {
    std::vector<const WeightedTree*> out;
    for (const auto& [w, trees] : pool)
        if (op.grading_matches(slot, w))
            for (const auto& t : trees) out.push_back(&t);
    return out;
}

TreeCombination relabel_combination(const TreeCombination& c, const std::map<std::string, std::string>& sigma) {
    TreeCombination out;
    for (const auto& [key, term] : c.terms()) {
        std::map<std::string, std::string> restricted;
        for (const auto& x : term.tree.labels()) restricted[x] = sigma.at(x);
        out.add(relabel(term.tree, restricted), term.coeff);
    }
    return out;
}

TreeCombination from_shapes(const std::vector<classical::ParentMap>& trees,
                            const std::map<std::string, Weight>& weights = {}) {
    TreeCombination out;
    for (const auto& p : trees) out.add(classical::to_tree(p, weights), 1);
    return out;
}

TreeCombination unit_weights(const TreeCombination& c) {
    TreeCombination out;
    for (const auto& [key, term] : c.terms()) out.add(with_uniform_weight(term.tree, 1), term.coeff);
    return out;
}

std::map<std::string, Weight> weight_map(const WeightedTree& t) {
    std::map<std::string, Weight> out;
    for (const auto& v : t.raw()) out[v.label] = v.weight;
    return out;
}

}  // namespace

CheckReport check_nested_associativity(const Universe& u, const Operad& op) {
    Checker c("nested-associativity");
    const auto ss = u.trees("a");
    const auto ts = by_weight(u.trees("b"));
    const auto us = by_weight(u.trees("c"));
    auto fails = [&op](const Instance& x) {
        const auto& [s, t, w] = std::tie(x.trees[0], x.trees[1], x.trees[2]);
        if (!op.grading_matches(s.weight(s.vertex(x.slots[0])), weight(t))) return false;
        if (!op.grading_matches(t.weight(t.vertex(x.slots[1])), weight(w))) return false;
        auto lhs = op.compose(op.compose(s, x.slots[0], t), x.slots[1], w);
        auto rhs = op.compose(s, x.slots[0], op.compose(t, x.slots[1], w));
        return !(lhs == rhs);
    };
    for (const auto& s : ss)
        for (auto v : s.vertices())
            for (const auto* t : compatible(ts, s.weight(v), op))
                for (auto w : t->vertices())
                    for (const auto* x : compatible(us, t->weight(w), op))
                        c.expect(Instance{{s, *t, *x}, {s.label(v), t->label(w)}}, fails);
    return c.finish();
}

CheckReport check_disjoint_associativity(const Universe& u, const Operad& op) {
    Checker c("disjoint-associativity");
    const auto ss = u.trees("a");
    const auto ts = by_weight(u.trees("b"));
    const auto us = by_weight(u.trees("c"));
    auto fails = [&op](const Instance& x) {
        const auto& [s, t, w] = std::tie(x.trees[0], x.trees[1], x.trees[2]);
        if (!op.grading_matches(s.weight(s.vertex(x.slots[0])), weight(t))) return false;
        if (!op.grading_matches(s.weight(s.vertex(x.slots[1])), weight(w))) return false;
        auto lhs = op.compose(op.compose(s, x.slots[0], t), x.slots[1], w);
        auto rhs = op.compose(op.compose(s, x.slots[1], w), x.slots[0], t);
        return !(lhs == rhs);
    };
    for (const auto& s : ss)
        for (auto v : s.vertices())
            for (auto w : s.vertices()) {
                if (v == w) continue;
                for (const auto* t : compatible(ts, s.weight(v), op))
                    for (const auto* x : compatible(us, s.weight(w), op))
                        c.expect(Instance{{s, *t, *x}, {s.label(v), s.label(w)}}, fails);
            }
    return c.finish();
}

CheckReport check_units(const Universe& u, const Operad& op) {
    Checker c("unit-laws");
    auto right_fails = [&op](const Instance& x) {
        const auto& s = x.trees[0];
        return !(op.compose_unit_right(s, s.vertex(x.slots[0])) == TreeCombination(s));
    };
    auto left_fails = [&op](const Instance& x) {
        const auto& t = x.trees[0];
        return !(op.compose_unit_left(weight(t), t) == TreeCombination(t)) ||
               !op.compose_unit_left(weight(t) + 1, t).is_zero();
    };
    for (const auto& s : u.trees("a")) {
        c.expect(Instance{{s}, {}}, left_fails);
        for (auto v : s.vertices()) c.expect(Instance{{s}, {s.label(v)}}, right_fails);
    }
    return c.finish();
}

CheckReport check_equivariance(const Universe& u, const Operad& op) {
    Checker c("equivariance");
    const auto ss = u.trees("a");
    const auto ts = by_weight(u.trees("b"));
    auto fails = [&op](const Instance& x) {
        const auto& [s, t] = std::tie(x.trees[0], x.trees[1]);
        const std::string& v = x.slots[0];
        if (!op.grading_matches(s.weight(s.vertex(v)), weight(t))) return false;
        const auto base = op.compose(s, v, t);
        auto ls = s.labels(), lt = t.labels();
        std::vector<std::size_t> ps(ls.size()), pt(lt.size());
        std::iota(ps.begin(), ps.end(), std::size_t{0});
        do {
            std::map<std::string, std::string> sigma;
            for (std::size_t i = 0; i < ls.size(); ++i) sigma[ls[i]] = "p" + std::to_string(ps[i] + 1);
            std::iota(pt.begin(), pt.end(), std::size_t{0});
            do {
                std::map<std::string, std::string> tau;
                for (std::size_t i = 0; i < lt.size(); ++i) tau[lt[i]] = "q" + std::to_string(pt[i] + 1);
                auto both = sigma;
                both.insert(tau.begin(), tau.end());
                auto s2 = relabel(s, sigma);
                auto moved = op.compose(s2, sigma.at(v), relabel(t, tau));
                if (!(moved == relabel_combination(base, both))) return true;
            } while (std::next_permutation(pt.begin(), pt.end()));
        } while (std::next_permutation(ps.begin(), ps.end()));
        return false;
    };
    for (const auto& s : ss)
        for (auto v : s.vertices())
            for (const auto* t : compatible(ts, s.weight(v), op)) c.expect(Instance{{s, *t}, {s.label(v)}}, fails);
    return c.finish();
}

CheckReport check_epsilon_formula(const Universe& u, const Operad& op) {
    Checker c("epsilon-formula");
    const auto ss = u.trees("a");
    const auto ts = by_weight(u.trees("b"));
    auto fails = [&op](const Instance& x) {
        const auto& [s, t] = std::tie(x.trees[0], x.trees[1]);
        const VertexRef v = s.vertex(x.slots[0]);
        if (!op.grading_matches(s.weight(v), weight(t))) return false;
        const auto terms = op.graft_terms(s, v, t);
        const std::size_t edges = incoming_edges(s, v).size();
        std::size_t expected = 1;
        for (std::size_t i = 0; i < edges; ++i) expected *= t.size();
        if (terms.size() != expected) return true;
        for (const auto& term : terms) {
            if (term.exponent != graft_exponent(s, v, t, term.map)) return true;
            if (term.map.sends_all_to_root() && term.exponent != 0) return true;
            if (!term.map.sends_all_to_root() && term.exponent == 0) return true;
        }
        return false;
    };
    for (const auto& s : ss)
        for (auto v : s.vertices())
            for (const auto* t : compatible(ts, s.weight(v), op)) c.expect(Instance{{s, *t}, {s.label(v)}}, fails);
    return c.finish();
}

namespace {

TreeCombination deformed_side(const Operad& op, const WeightedTree& u, const WeightedTree& t,
                              const WeightedTree& s) {
    const TreeCombination U(u), T(t), S(s);
    return op.arrow(op.arrow(U, T), S) - LambdaPoly::power(weight(s)) * op.arrow(U, op.arrow(T, S));
}

std::vector<classical::ParentMap> oracle_arrow(const std::vector<classical::ParentMap>& ts,
                                               const classical::ParentMap& s) {
    std::vector<classical::ParentMap> out;
    for (const auto& t : ts)
        for (auto& r : classical::graft_sum(t, s)) out.push_back(std::move(r));
    return out;
}

std::vector<classical::ParentMap> oracle_arrow(const classical::ParentMap& u,
                                               const std::vector<classical::ParentMap>& ts) {
    std::vector<classical::ParentMap> out;
    for (const auto& t : ts)
        for (auto& r : classical::graft_sum(u, t)) out.push_back(std::move(r));
    return out;
}

}  // namespace

CheckReport check_deformed_identity(const Universe& u, const Operad& op) {
    Checker c("deformed-identity");
    auto fails = [&op](const Instance& x) {
        const auto& [s, t, w] = std::tie(x.trees[0], x.trees[1], x.trees[2]);
        return !(deformed_side(op, w, t, s) == deformed_side(op, w, s, t));
    };
    {
        const auto ss = u.trees("s"), ts = u.trees("t"), ws = u.trees("u");
        for (const auto& s : ss)
            for (const auto& t : ts)
                for (const auto& w : ws) c.expect(Instance{{s, t, w}, {}}, fails);
    }

    // lambda = 1, unit weights: each grafting term against the classical oracle.
    const Universe shapes{u.n_max, 1, LabelMode::labeled};
    auto classical_fails = [&op](const Instance& x) {
        const auto& [s, t, w] = std::tie(x.trees[0], x.trees[1], x.trees[2]);
        using namespace classical;
        const ParentMap ps = from_tree(s), pt = from_tree(t), pu = from_tree(w);
        auto engine = [&](const WeightedTree& a, const WeightedTree& b, const WeightedTree& d, bool nested) {
            const TreeCombination A(a), B(b), D(d);
            return specialize(nested ? op.arrow(A, op.arrow(B, D)) : op.arrow(op.arrow(A, B), D), 1);
        };
        const auto ut_s = oracle_arrow(graft_sum(pu, pt), ps);
        const auto u_ts = oracle_arrow(pu, graft_sum(pt, ps));
        const auto us_t = oracle_arrow(graft_sum(pu, ps), pt);
        const auto u_st = oracle_arrow(pu, graft_sum(ps, pt));
        if (!(engine(w, t, s, false) == from_shapes(ut_s))) return true;
        if (!(engine(w, t, s, true) == from_shapes(u_ts))) return true;
        if (!(engine(w, s, t, false) == from_shapes(us_t))) return true;
        if (!(engine(w, s, t, true) == from_shapes(u_st))) return true;
        return !(from_shapes(ut_s) - from_shapes(u_ts) == from_shapes(us_t) - from_shapes(u_st));
    };
    const auto ss = shapes.trees("s"), ts = shapes.trees("t"), ws = shapes.trees("u");
    for (const auto& s : ss)
        for (const auto& t : ts)
            for (const auto& w : ws) c.expect(Instance{{s, t, w}, {}}, classical_fails);
    return c.finish();
}

CheckReport check_specializations(const Universe& u, const Operad& op) {
    Checker c("specializations");
    auto nap_fails = [&op](const Instance& x) {
        const auto& [s, t] = std::tie(x.trees[0], x.trees[1]);
        const VertexRef v = s.vertex(x.slots[0]);
        if (s.weight(v) != weight(t)) return false;
        auto weights = weight_map(s);
        const auto wt = weight_map(t);
        weights.insert(wt.begin(), wt.end());
        const auto expected =
            classical::to_tree(classical::nap_compose(classical::from_tree(s), x.slots[0], classical::from_tree(t)),
                               weights);
        return !(specialize(op.compose(s, v, t), 0) == TreeCombination(expected));
    };
    auto prelie_fails = [&op](const Instance& x) {
        const auto& [s, t] = std::tie(x.trees[0], x.trees[1]);
        const VertexRef v = s.vertex(x.slots[0]);
        if (s.weight(v) != weight(t)) return false;
        for (auto y : s.vertices())
            if (y != v && s.weight(y) != 1) return false;
        for (auto y : t.vertices())
            if (t.weight(y) != 1) return false;
        const auto expected = from_shapes(
            classical::prelie_compose(classical::from_tree(s), x.slots[0], classical::from_tree(t)));
        return !(unit_weights(specialize(op.compose(s, v, t), 1)) == expected);
    };

    // Weighted pairs of the universe at lambda = 0.
    const auto ss = u.trees("a");
    const auto ts = by_weight(u.trees("b"));
    for (const auto& s : ss)
        for (auto v : s.vertices()) {
            auto it = ts.find(s.weight(v));
            if (it == ts.end()) continue;
            for (const auto& t : it->second) c.expect(Instance{{s, t}, {s.label(v)}}, nap_fails);
        }

    // Unit weights away from the slot, which carries |T|: lambda = 1 and 0.
    const Universe shapes{u.n_max, 1, LabelMode::labeled};
    const auto sshapes = shapes.trees("a"), tshapes = shapes.trees("b");
    for (const auto& s : sshapes)
        for (auto v : s.vertices())
            for (const auto& t : tshapes) {
                std::vector<Weight> w(s.size(), 1);
                w[v.index] = t.size();
                const WeightedTree sw = with_weights(s, w);
                c.expect(Instance{{sw, t}, {s.label(v)}}, prelie_fails);
                c.expect(Instance{{sw, t}, {s.label(v)}}, nap_fails);
            }
    return c.finish();
}

CheckReport check_roundtrip_psi_phi(const Universe& u, const Operad& op, Weight relation_w_max) {
    Checker c("roundtrip-psi-phi");
    PsiRewriter rw(op);
    auto roundtrip_fails = [&](const Instance& x) {
        const auto& t = x.trees[0];
        return !(phi(rw(t), op) == TreeCombination(t));
    };
    auto order_fails = [&](const Instance& x) {
        const auto& t = x.trees[0];
        std::vector<std::size_t> order(t.children(t.root()).size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        const TreeCombination expected(t);
        do {
            if (!(phi(rw.with_root_order(t, order), op) == expected)) return true;
        } while (std::next_permutation(order.begin(), order.end()));
        return false;
    };
    for (const auto& t : u.trees("x")) {
        c.expect(Instance{{t}, {}}, roundtrip_fails);
        if (t.children(t.root()).size() > 1) c.expect(Instance{{t}, {}}, order_fails);
    }
    for (Weight k = 1; k <= relation_w_max; ++k)
        for (Weight l = 1; l <= relation_w_max; ++l)
            for (Weight m = 1; m <= relation_w_max; ++m) {
                c.instance();
                if (!phi(relation_r(k, l, m), op).is_zero()) {
                    c.fail(Instance{{WeightedTree::single("x", k), WeightedTree::single("y", l),
                                     WeightedTree::single("z", m)},
                                    {}},
                           [&op](const Instance& x) {
                               return !phi(relation_r(x.trees[0].weight(x.trees[0].root()),
                                                      x.trees[1].weight(x.trees[1].root()),
                                                      x.trees[2].weight(x.trees[2].root())),
                                           op)
                                           .is_zero();
                           });
                }
            }
    return c.finish();
}

CheckReport check_morphisms_i_j(const Universe& u, Weight max_weight, const Operad& op) {
    Checker c("morphisms-i-j");
    const Universe shapes{u.n_max, 1, LabelMode::labeled};
    auto fails = [&op, max_weight](const Instance& x) {
        const auto& [s, t] = std::tie(x.trees[0], x.trees[1]);
        return !morphism_i_check(s, x.slots[0], t, max_weight, op) ||
               !morphism_j_check(s, x.slots[0], t, max_weight, op);
    };
    const auto ss = shapes.trees("a"), ts = shapes.trees("b");
    for (const auto& s : ss)
        for (auto v : s.vertices())
            for (const auto& t : ts) c.expect(Instance{{s, t}, {s.label(v)}}, fails);
    return c.finish();
}

CheckReport probe_deformed_derivation(const Universe& u, const Operad& op) {
    Checker c("deformed-derivation-probe");
    auto fails = [&op](const Instance& x) {
        const TreeCombination T(x.trees[0]), S(x.trees[1]), U(x.trees[2]);
        const auto lhs = op.circ_sum(op.arrow(T, S), U);
        const auto rhs = op.arrow(op.circ_sum(T, U), S) + op.arrow(T, op.circ_sum(S, U));
        return !(lhs == rhs);
    };
    const auto ts = u.trees("t"), ss = u.trees("s"), us = u.trees("u");
    for (const auto& t : ts)
        for (const auto& s : ss)
            for (const auto& w : us) c.expect(Instance{{t, s, w}, {}}, fails);
    return c.finish();
}

std::size_t count_rooted_trees_brute_force(std::size_t n) {
    // p[i] in 0..n, 0 meaning root; valid iff exactly one root and following
    // parents from any vertex reaches the root within n steps.
    std::vector<std::size_t> p(n + 1, 0);
    std::size_t count = 0;
    while (true) {
        std::size_t roots = 0;
        bool ok = true;
        for (std::size_t i = 1; i <= n && ok; ++i) {
            if (p[i] == i) ok = false;
            if (p[i] == 0) ++roots;
        }
        if (ok && roots == 1) {
            for (std::size_t i = 1; i <= n && ok; ++i) {
                std::size_t x = i, steps = 0;
                while (x != 0 && steps <= n) {
                    x = p[x];
                    ++steps;
                }
                ok = x == 0;
            }
            if (ok) ++count;
        }
        std::size_t k = 1;
        while (k <= n && ++p[k] > n) p[k++] = 0;
        if (k > n) break;
    }
    return count;
}

CheckReport check_counts(std::size_t n_max) {
    Checker c("counts");
    for (std::size_t n = 1; n <= n_max; ++n) {
        c.instance();
        std::vector<Weight> w(n, 1);
        const auto trees = enumerate_labeled_trees(n, w);
        std::set<std::string> distinct;
        for (const auto& t : trees) distinct.insert(canonical_encoding(t));
        std::size_t cayley = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) cayley *= n;
        if (trees.size() != cayley || distinct.size() != cayley || count_rooted_trees_brute_force(n) != cayley)
            c.fail(Instance{{WeightedTree::single("n" + std::to_string(n), 1)}, {}},
                   [](const Instance&) { return false; });
    }

    c.instance();
    const auto s = WeightedTree::parse("a:1[b:3[c:2,d:1]]");
    const auto t = WeightedTree::parse("e:2[h:1]");
    const auto result = compose_lambda(s, s.vertex("b"), t);
    std::multiset<std::string> coeffs;
    for (const auto& [key, term] : result.terms()) coeffs.insert(term.coeff.to_string());
    const std::multiset<std::string> expected{"1", "L", "L^2", "L^3"};
    const auto top = WeightedTree::parse("a:1[e:2[h:1[c:2,d:1]]]");
    if (coeffs != expected || !(result.coefficient(top) == LambdaPoly::power(3)))
        c.fail(Instance{{s, t}, {"b"}}, [](const Instance&) { return false; });
    return c.finish();
}

std::string to_string(Suite s) {
    switch (s) {
        case Suite::assoc: return "assoc";
        case Suite::deform: return "deform";
        case Suite::spec: return "spec";
        case Suite::iso: return "iso";
        case Suite::morph: return "morph";
    }
    return "unknown";
}

Suite parse_suite(std::string_view name) {
    for (Suite s : all_suites())
        if (to_string(s) == name) return s;
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<Suite> all_suites() { return {Suite::assoc, Suite::deform, Suite::spec, Suite::iso, Suite::morph}; }

std::vector<CheckReport> run_suite(Suite s, const Operad& op, const SuiteOptions& options) {
    auto universe = [&](std::size_t n, Weight w, LabelMode mode) {
        return Universe{options.n_max ? options.n_max : n, options.w_max ? options.w_max : w, mode};
    };
    switch (s) {
        case Suite::assoc: {
            const Universe u = universe(3, 3, LabelMode::labeled);
            return {check_nested_associativity(u, op), check_disjoint_associativity(u, op), check_units(u, op),
                    check_equivariance(u, op), check_epsilon_formula(u, op)};
        }
        case Suite::deform: return {check_deformed_identity(universe(3, 2, LabelMode::unlabeled), op)};
        case Suite::spec: return {check_specializations(universe(4, 2, LabelMode::labeled), op)};
        case Suite::iso: return {check_roundtrip_psi_phi(universe(5, 2, LabelMode::labeled), op)};
        case Suite::morph: return {check_morphisms_i_j(universe(3, 1, LabelMode::labeled), options.morph_weight, op)};
    }
    return {};
}

std::vector<Fault> faults_for(Suite s) {
    switch (s) {
        case Suite::assoc: return {Fault::height_off_by_one, Fault::height_from_outer_root};
        case Suite::morph: return {Fault::height_off_by_one, Fault::grading_off_by_one};
        default: return {Fault::height_off_by_one};
    }
}

std::vector<FaultReport> run_fault_injection(const SuiteOptions& options) {
    std::vector<FaultReport> out;
    for (Suite s : all_suites())
        for (Fault f : faults_for(s)) {
            FaultReport r{s, f, 0, {}};
            for (const auto& report : run_suite(s, Operad(f), options)) {
                r.counterexamples += report.failure_count;
                if (r.first_counterexample.empty() && !report.failures.empty())
                    r.first_counterexample = report.name + ": " + report.failures.front();
            }
            out.push_back(std::move(r));
        }
    return out;
}

}  // namespace lamop::verify
