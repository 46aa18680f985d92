#include "lamop/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

namespace lamop {

namespace {

bool valid_label(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

void encode(const std::vector<WeightedTree::Vertex>& vs, std::size_t i, std::string& out) {
    const auto& v = vs[i];
    out += v.label;
    out += ':';
    out += std::to_string(v.weight);
    if (v.children.empty()) return;
    out += '[';
    for (std::size_t k = 0; k < v.children.size(); ++k) {
        if (k) out += ',';
        encode(vs, v.children[k], out);
    }
    out += ']';
}

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    WeightedTree run() {
        skip_ws();
        parse_tree(-1);
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        try {
            return WeightedTree::from_parents(std::move(labels_), std::move(weights_), parents_);
        } catch (const std::invalid_argument& e) {
            throw ParseError(0, e.what());
        }
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void parse_tree(std::ptrdiff_t parent) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected label");
        std::string label(text_.substr(start, pos_ - start));
        expect(':');
        skip_ws();
        std::size_t wstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == wstart) fail("expected weight");
        std::string digits(text_.substr(wstart, pos_ - wstart));
        if (digits.size() > 18) {
            pos_ = wstart;
            fail("weight too large");
        }
        Weight w = std::stoull(digits);
        if (w == 0) {
            pos_ = wstart;
            fail("weight must be a positive integer");
        }
        auto self = static_cast<std::ptrdiff_t>(labels_.size());
        labels_.push_back(std::move(label));
        weights_.push_back(w);
        parents_.push_back(parent);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '[') {
            ++pos_;
            parse_tree(self);
            skip_ws();
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                parse_tree(self);
                skip_ws();
            }
            expect(']');
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<std::string> labels_;
    std::vector<Weight> weights_;
    std::vector<std::ptrdiff_t> parents_;
};

}  // namespace

WeightedTree WeightedTree::single(std::string label, Weight weight) {
    return from_parents({std::move(label)}, {weight}, {-1});
}

WeightedTree WeightedTree::from_parents(std::vector<std::string> labels, std::vector<Weight> weights,
                                        const std::vector<std::ptrdiff_t>& parents) {
    const std::size_t n = labels.size();
    if (n == 0) throw std::invalid_argument("a tree needs at least one vertex");
    if (weights.size() != n || parents.size() != n)
        throw std::invalid_argument("labels, weights and parents must have equal length");

    std::size_t underscores = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!valid_label(labels[i])) throw std::invalid_argument("invalid label '" + labels[i] + "'");
        if (weights[i] == 0) throw std::invalid_argument("vertex weights must be >= 1");
        if (labels[i] == unlabeled_label) ++underscores;
    }
    LabelMode mode = LabelMode::labeled;
    if (underscores == n) {
        mode = LabelMode::unlabeled;
    } else if (underscores > 0) {
        throw std::invalid_argument("label '_' is reserved for unlabeled trees");
    } else {
        std::set<std::string_view> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second) throw std::invalid_argument("duplicate label '" + l + "'");
    }

    std::ptrdiff_t root = -1;
    std::vector<std::vector<std::size_t>> kids(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto p = parents[i];
        if (p == -1) {
            if (root != -1) throw std::invalid_argument("more than one root");
            root = static_cast<std::ptrdiff_t>(i);
        } else if (p < 0 || static_cast<std::size_t>(p) >= n || static_cast<std::size_t>(p) == i) {
            throw std::invalid_argument("invalid parent index");
        } else {
            kids[static_cast<std::size_t>(p)].push_back(i);
        }
    }
    if (root == -1) throw std::invalid_argument("no root");

    // Preorder relayout; also detects cycles / disconnected parts.
    WeightedTree t;
    t.mode_ = mode;
    t.vertices_.reserve(n);
    std::vector<bool> visited(n, false);
    std::function<void(std::size_t, std::ptrdiff_t)> visit = [&](std::size_t old, std::ptrdiff_t new_parent) {
        visited[old] = true;
        std::size_t self = t.vertices_.size();
        t.vertices_.push_back(Vertex{std::move(labels[old]), weights[old], new_parent, {}});
        for (std::size_t c : kids[old]) {
            t.vertices_[self].children.push_back(t.vertices_.size());
            visit(c, static_cast<std::ptrdiff_t>(self));
        }
    };
    visit(static_cast<std::size_t>(root), -1);
    if (t.vertices_.size() != n) throw std::invalid_argument("parent map is not connected (cycle or forest)");
    t.finalize();
    return t;
}

WeightedTree WeightedTree::parse(std::string_view text) { return TreeParser(text).run(); }

void WeightedTree::finalize() { fingerprint_ = std::hash<std::string>{}(to_string()); }

const WeightedTree::Vertex& WeightedTree::at(VertexRef v) const {
    if (v.tree_fingerprint != fingerprint_ || v.index >= vertices_.size())
        throw std::invalid_argument("vertex reference does not belong to this tree");
    return vertices_[v.index];
}

VertexRef WeightedTree::ref(std::size_t index) const {
    if (index >= vertices_.size()) throw std::out_of_range("vertex index out of range");
    return VertexRef{index, fingerprint_};
}

std::vector<VertexRef> WeightedTree::vertices() const {
    std::vector<VertexRef> out;
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(ref(i));
    return out;
}

std::optional<VertexRef> WeightedTree::parent(VertexRef v) const {
    auto p = at(v).parent;
    if (p < 0) return std::nullopt;
    return ref(static_cast<std::size_t>(p));
}

std::vector<VertexRef> WeightedTree::children(VertexRef v) const {
    std::vector<VertexRef> out;
    for (std::size_t c : at(v).children) out.push_back(ref(c));
    return out;
}

std::optional<VertexRef> WeightedTree::find(std::string_view label) const {
    if (mode_ == LabelMode::unlabeled) return std::nullopt;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].label == label) return ref(i);
    return std::nullopt;
}

VertexRef WeightedTree::vertex(std::string_view label) const {
    auto v = find(label);
    if (!v) throw std::invalid_argument("no vertex labeled '" + std::string(label) + "'");
    return *v;
}

std::vector<std::string> WeightedTree::labels() const {
    std::vector<std::string> out;
    for (const auto& v : vertices_) out.push_back(v.label);
    return out;
}

WeightedTree WeightedTree::branch(VertexRef v) const {
    at(v);
    std::vector<std::string> labels;
    std::vector<Weight> weights;
    std::vector<std::ptrdiff_t> parents;
    // Preorder layout keeps every subtree contiguous.
    std::function<void(std::size_t, std::ptrdiff_t)> walk = [&](std::size_t i, std::ptrdiff_t p) {
        auto self = static_cast<std::ptrdiff_t>(labels.size());
        labels.push_back(vertices_[i].label);
        weights.push_back(vertices_[i].weight);
        parents.push_back(p);
        for (std::size_t c : vertices_[i].children) walk(c, self);
    };
    walk(v.index, -1);
    return from_parents(std::move(labels), std::move(weights), parents);
}

std::string WeightedTree::to_string() const {
    std::string out;
    encode(vertices_, 0, out);
    return out;
}

bool operator==(const WeightedTree& a, const WeightedTree& b) {
    if (a.vertices_.size() != b.vertices_.size()) return false;
    for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
        const auto& x = a.vertices_[i];
        const auto& y = b.vertices_[i];
        if (x.label != y.label || x.weight != y.weight || x.parent != y.parent || x.children != y.children)
            return false;
    }
    return true;
}

Weight weight(const WeightedTree& t) {
    Weight sum = 0;
    for (const auto& v : t.raw()) sum += v.weight;
    return sum;
}

std::size_t height(const WeightedTree& t, VertexRef v) {
    std::size_t h = 0;
    for (auto p = t.parent(v); p; p = t.parent(*p)) ++h;
    return h;
}

std::uint64_t potential_energy(const WeightedTree& t) {
    const auto& vs = t.raw();
    std::vector<std::uint64_t> depth(vs.size(), 0);
    std::uint64_t d = 0;
    // Parents precede children in preorder.
    for (std::size_t i = 1; i < vs.size(); ++i) {
        depth[i] = depth[static_cast<std::size_t>(vs[i].parent)] + 1;
        d += vs[i].weight * depth[i];
    }
    return d;
}

std::vector<Edge> incoming_edges(const WeightedTree& t, VertexRef v) {
    std::vector<Edge> out;
    for (auto c : t.children(v)) out.push_back(Edge{c, v});
    return out;
}

namespace {

// Canonical encodings of every subtree plus the sorted child order.
struct CanonicalData {
    std::vector<std::string> code;
    std::vector<std::vector<std::size_t>> order;
};

CanonicalData canonical_data(const WeightedTree& t) {
    const auto& vs = t.raw();
    CanonicalData data{std::vector<std::string>(vs.size()), std::vector<std::vector<std::size_t>>(vs.size())};
    for (std::size_t k = vs.size(); k-- > 0;) {
        const auto& v = vs[k];
        auto& order = data.order[k];
        order = v.children;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return data.code[a] < data.code[b]; });
        std::string code = v.label + ":" + std::to_string(v.weight);
        if (!order.empty()) {
            code += '[';
            for (std::size_t j = 0; j < order.size(); ++j) {
                if (j) code += ',';
                code += data.code[order[j]];
            }
            code += ']';
        }
        data.code[k] = std::move(code);
    }
    return data;
}

}  // namespace

std::string canonical_encoding(const WeightedTree& t) { return std::move(canonical_data(t).code[0]); }

WeightedTree canonicalize(const WeightedTree& t) {
    auto data = canonical_data(t);
    const auto& vs = t.raw();
    std::vector<std::string> labels;
    std::vector<Weight> weights;
    std::vector<std::ptrdiff_t> parents;
    std::function<void(std::size_t, std::ptrdiff_t)> walk = [&](std::size_t i, std::ptrdiff_t p) {
        auto self = static_cast<std::ptrdiff_t>(labels.size());
        labels.push_back(vs[i].label);
        weights.push_back(vs[i].weight);
        parents.push_back(p);
        for (std::size_t c : data.order[i]) walk(c, self);
    };
    walk(0, -1);
    return WeightedTree::from_parents(std::move(labels), std::move(weights), parents);
}

namespace {

WeightedTree rebuild(const WeightedTree& t, const std::function<std::string(std::size_t)>& label_of,
                     const std::function<Weight(std::size_t)>& weight_of) {
    const auto& vs = t.raw();
    std::vector<std::string> labels;
    std::vector<Weight> weights;
    std::vector<std::ptrdiff_t> parents;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        labels.push_back(label_of(i));
        weights.push_back(weight_of(i));
        parents.push_back(vs[i].parent);
    }
    return WeightedTree::from_parents(std::move(labels), std::move(weights), parents);
}

}  // namespace

WeightedTree forget_labels(const WeightedTree& t) {
    return rebuild(
        t, [](std::size_t) { return std::string(unlabeled_label); },
        [&](std::size_t i) { return t.raw()[i].weight; });
}

WeightedTree with_uniform_weight(const WeightedTree& t, Weight w) {
    return rebuild(
        t, [&](std::size_t i) { return t.raw()[i].label; }, [w](std::size_t) { return w; });
}

WeightedTree with_weights(const WeightedTree& t, std::span<const Weight> weights) {
    if (weights.size() != t.size()) throw std::invalid_argument("weight vector length mismatch");
    return rebuild(
        t, [&](std::size_t i) { return t.raw()[i].label; }, [&](std::size_t i) { return weights[i]; });
}

WeightedTree relabel(const WeightedTree& t, const std::map<std::string, std::string>& sigma) {
    if (t.mode() == LabelMode::unlabeled) {
        if (!sigma.empty()) throw std::invalid_argument("unlabeled trees cannot be relabeled");
        return t;
    }
    if (sigma.size() != t.size()) throw std::invalid_argument("relabeling is not defined on exactly the label set");
    std::set<std::string> image;
    for (const auto& v : t.raw()) {
        auto it = sigma.find(v.label);
        if (it == sigma.end()) throw std::invalid_argument("relabeling misses label '" + v.label + "'");
        if (!image.insert(it->second).second) throw std::invalid_argument("relabeling is not injective");
    }
    return rebuild(
        t, [&](std::size_t i) { return sigma.at(t.raw()[i].label); },
        [&](std::size_t i) { return t.raw()[i].weight; });
}

std::vector<WeightedTree> enumerate_labeled_trees(std::size_t n, std::span<const Weight> weight_assignment,
                                                  std::span<const std::string> labels) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    if (weight_assignment.size() != n) throw std::invalid_argument("need one weight per vertex");
    std::vector<std::string> names;
    if (labels.empty()) {
        for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    } else {
        if (labels.size() != n) throw std::invalid_argument("need one label per vertex");
        names.assign(labels.begin(), labels.end());
    }
    std::vector<Weight> weights(weight_assignment.begin(), weight_assignment.end());

    std::vector<WeightedTree> out;
    auto emit_rooted = [&](const std::vector<std::vector<std::size_t>>& adj) {
        for (std::size_t root = 0; root < n; ++root) {
            std::vector<std::ptrdiff_t> parents(n, -2);
            parents[root] = -1;
            std::vector<std::size_t> stack{root};
            while (!stack.empty()) {
                std::size_t u = stack.back();
                stack.pop_back();
                for (std::size_t w : adj[u])
                    if (parents[w] == -2) {
                        parents[w] = static_cast<std::ptrdiff_t>(u);
                        stack.push_back(w);
                    }
            }
            out.push_back(WeightedTree::from_parents(names, weights, parents));
        }
    };

    if (n == 1) {
        out.push_back(WeightedTree::from_parents(names, weights, {-1}));
        return out;
    }
    // Decode every Pruefer sequence of length n-2 into an unrooted tree, then
    // root it at each of its n vertices.
    std::vector<std::size_t> seq(n - 2, 0);
    while (true) {
        std::vector<std::size_t> degree(n, 1);
        for (std::size_t s : seq) ++degree[s];
        std::vector<std::vector<std::size_t>> adj(n);
        for (std::size_t s : seq) {
            std::size_t leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            adj[leaf].push_back(s);
            adj[s].push_back(leaf);
            --degree[leaf];
            --degree[s];
        }
        std::size_t u = n, w = n;
        for (std::size_t i = 0; i < n; ++i)
            if (degree[i] == 1) (u == n ? u : w) = i;
        adj[u].push_back(w);
        adj[w].push_back(u);
        emit_rooted(adj);

        std::size_t k = 0;
        while (k < seq.size() && ++seq[k] == n) seq[k++] = 0;
        if (k == seq.size()) break;
    }
    return out;
}

void require_compatible(const WeightedTree& a, const WeightedTree& b, std::string_view ignored) {
    if (a.mode() != b.mode()) throw std::invalid_argument("cannot combine labeled and unlabeled trees");
    if (a.mode() == LabelMode::unlabeled) return;
    std::set<std::string_view> la;
    for (const auto& v : a.raw())
        if (v.label != ignored) la.insert(v.label);
    for (const auto& v : b.raw())
        if (la.count(v.label)) throw std::invalid_argument("label clash on '" + v.label + "'");
}

WeightedTree graft_at(const WeightedTree& t, VertexRef v, const WeightedTree& s) {
    t.label(v);  // validates v
    require_compatible(t, s);
    std::vector<std::string> labels;
    std::vector<Weight> weights;
    std::vector<std::ptrdiff_t> parents;
    for (const auto& x : t.raw()) {
        labels.push_back(x.label);
        weights.push_back(x.weight);
        parents.push_back(x.parent);
    }
    const auto offset = static_cast<std::ptrdiff_t>(t.size());
    for (const auto& x : s.raw()) {
        labels.push_back(x.label);
        weights.push_back(x.weight);
        parents.push_back(x.parent < 0 ? static_cast<std::ptrdiff_t>(v.index) : x.parent + offset);
    }
    return WeightedTree::from_parents(std::move(labels), std::move(weights), parents);
}

}  // namespace lamop
