#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lamop/operad.hpp"
#include "lamop/presentation.hpp"
#include "lamop/verify.hpp"

namespace py = pybind11;
using namespace lamop;

namespace {

// (exponent, numerator, denominator) with big integers as decimal strings.
using Coeff = std::vector<std::tuple<std::uint64_t, std::string, std::string>>;
using Terms = std::vector<std::pair<std::string, Coeff>>;

Coeff coeff_of(const LambdaPoly& p) {
    Coeff out;
    for (const auto& [exp, c] : p.terms()) out.emplace_back(exp, c.get_num().get_str(), c.get_den().get_str());
    return out;
}

Terms terms_of(const TreeCombination& c) {
    Terms out;
    for (const auto& [key, term] : c.terms()) out.emplace_back(term.tree.to_string(), coeff_of(term.coeff));
    return out;
}

Terms terms_of(const BracketCombination& c) {
    Terms out;
    for (const auto& [key, term] : c.terms()) out.emplace_back(term.expr.to_string(), coeff_of(term.coeff));
    return out;
}

WeightedTree tree(const std::string& text) { return WeightedTree::parse(text); }

Operad operad(const std::string& fault) { return Operad(parse_fault(fault)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact lambda-deformed grafting of weighted rooted trees";
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("canonical", [](const std::string& t) { return canonical_encoding(tree(t)); });
    m.def("weight", [](const std::string& t) { return weight(tree(t)); });
    m.def("height", [](const std::string& t, const std::string& v) {
        const auto w = tree(t);
        return height(w, w.vertex(v));
    });
    m.def(
        "compose",
        [](const std::string& s, const std::string& v, const std::string& t, const std::string& fault) {
            const auto st = tree(s);
            return terms_of(operad(fault).compose(st, st.vertex(v), tree(t)));
        },
        py::arg("s"), py::arg("v"), py::arg("t"), py::arg("fault") = "none");
    m.def("nap", [](const std::string& s, const std::string& v, const std::string& t) {
        const auto st = tree(s);
        return canonical_encoding(nap_compose(st, st.vertex(v), tree(t)));
    });
    m.def("arrow", [](const std::string& t, const std::string& s) { return terms_of(arrow_lambda(tree(t), tree(s))); });
    m.def("circ_sum", [](const std::string& t, const std::string& s) { return terms_of(circ_sum(tree(t), tree(s))); });
    m.def("butcher", [](const std::string& t, const std::string& s) { return canonical_encoding(butcher_product(tree(t), tree(s))); });
    m.def("psi", [](const std::string& t) { return terms_of(psi(tree(t))); });
    m.def("phi", [](const std::string& e) { return terms_of(phi(BracketExpr::parse(e))); });
    m.def("relation", [](Weight k, Weight l, Weight m_) { return terms_of(relation_r(k, l, m_)); });
    m.def("enumerate_trees", [](std::size_t n, const std::vector<Weight>& weights) {
        std::vector<std::string> out;
        for (const auto& t : enumerate_labeled_trees(n, weights)) out.push_back(t.to_string());
        return out;
    });
    m.def(
        "check",
        [](const std::string& suite, std::size_t n_max, Weight w_max, const std::string& fault) {
            verify::SuiteOptions options;
            options.n_max = n_max;
            options.w_max = w_max;
            std::vector<std::string> out;
            for (const auto& r : verify::run_suite(verify::parse_suite(suite), operad(fault), options))
                out.push_back(r.to_json());
            return out;
        },
        py::arg("suite"), py::arg("n_max") = 0, py::arg("w_max") = 0, py::arg("fault") = "none");
}
