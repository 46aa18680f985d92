#include "lamop/classical.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lamop::classical {

ParentMap from_tree(const WeightedTree& t) {
    if (t.mode() != LabelMode::labeled) throw std::invalid_argument("classical trees are labeled");
    ParentMap p;
    for (const auto& v : t.raw())
        p[v.label] = v.parent < 0 ? std::string() : t.raw()[static_cast<std::size_t>(v.parent)].label;
    return p;
}

WeightedTree to_tree(const ParentMap& p, const std::map<std::string, Weight>& weights) {
    std::vector<std::string> labels;
    std::vector<Weight> ws;
    std::map<std::string, std::ptrdiff_t> index;
    for (const auto& [x, parent] : p) {
        index[x] = static_cast<std::ptrdiff_t>(labels.size());
        labels.push_back(x);
        auto it = weights.find(x);
        ws.push_back(it == weights.end() ? 1 : it->second);
    }
    std::vector<std::ptrdiff_t> parents;
    for (const auto& [x, parent] : p) parents.push_back(parent.empty() ? -1 : index.at(parent));
    return WeightedTree::from_parents(std::move(labels), std::move(ws), parents);
}

std::string root_of(const ParentMap& p) {
    for (const auto& [x, parent] : p)
        if (parent.empty()) return x;
    throw std::invalid_argument("tree without root");
}

std::vector<ParentMap> prelie_compose(const ParentMap& s, const std::string& v, const ParentMap& t) {
    if (!s.count(v)) throw std::invalid_argument("vertex not in tree");
    std::vector<std::string> moved;  // vertices of S hanging from v
    for (const auto& [x, parent] : s)
        if (parent == v) moved.push_back(x);
    std::vector<std::string> targets;
    for (const auto& [x, parent] : t) targets.push_back(x);

    std::vector<ParentMap> out;
    std::vector<std::size_t> choice(moved.size(), 0);
    while (true) {
        ParentMap r;
        for (const auto& [x, parent] : s) {
            if (x == v) continue;
            r[x] = parent;
        }
        for (const auto& [x, parent] : t) {
            if (r.count(x)) throw std::invalid_argument("label clash");
            r[x] = parent.empty() ? s.at(v) : parent;
        }
        for (std::size_t k = 0; k < moved.size(); ++k) r[moved[k]] = targets[choice[k]];
        out.push_back(std::move(r));

        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == targets.size()) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return out;
}

ParentMap nap_compose(const ParentMap& s, const std::string& v, const ParentMap& t) {
    ParentMap r;
    std::string troot = root_of(t);
    for (const auto& [x, parent] : s) {
        if (x == v) continue;
        r[x] = parent == v ? troot : parent;
    }
    for (const auto& [x, parent] : t) {
        if (r.count(x)) throw std::invalid_argument("label clash");
        r[x] = parent.empty() ? s.at(v) : parent;
    }
    return r;
}

std::vector<ParentMap> graft_sum(const ParentMap& t, const ParentMap& s) {
    std::string sroot = root_of(s);
    std::vector<ParentMap> out;
    for (const auto& [target, unused] : t) {
        ParentMap r = t;
        for (const auto& [x, parent] : s) {
            if (r.count(x)) throw std::invalid_argument("label clash");
            r[x] = parent.empty() ? target : parent;
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string shape_code(const ParentMap& p) {
    std::map<std::string, std::vector<std::string>> kids;
    for (const auto& [x, parent] : p)
        if (!parent.empty()) kids[parent].push_back(x);
    std::function<std::string(const std::string&)> code = [&](const std::string& x) {
        std::vector<std::string> parts;
        for (const auto& c : kids[x]) parts.push_back(code(c));
        std::sort(parts.begin(), parts.end());
        std::string out = "(";
        for (const auto& part : parts) out += part;
        return out + ")";
    };
    return code(root_of(p));
}

ShapeMultiset shapes(const std::vector<ParentMap>& trees) {
    ShapeMultiset out;
    for (const auto& t : trees) ++out[shape_code(t)];
    return out;
}

ParentMap prefixed(const ParentMap& p, const std::string& prefix) {
    ParentMap r;
    for (const auto& [x, parent] : p) r[prefix + x] = parent.empty() ? parent : prefix + parent;
    return r;
}

}  // namespace lamop::classical
