#include "lamop/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lamop/operad.hpp"
#include "lamop/presentation.hpp"
#include "lamop/verify.hpp"

namespace lamop::cli {

namespace {

using nlohmann::json;

/// Malformed command-line input (exit code 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json integer(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json coefficient_json(const LambdaPoly& p) {
    json out = json::array();
    for (const auto& [k, c] : p.terms()) out.push_back({k, integer(c.get_num()), integer(c.get_den())});
    return out;
}

struct Options {
    std::string s, t, v, e, lambda = "symbolic", weights, suite = "all", fault = "none";
    std::size_t n = 0, nmax = 0;
    Weight wmax = 0, morph_weight = 5;
    bool as_json = false, fault_injection = false;
};

WeightedTree tree_arg(const std::string& text) {
    try {
        return WeightedTree::parse(text);
    } catch (const ParseError& e) {
        throw InputError(std::string("tree '") + text + "': " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("tree '") + text + "': " + e.what());
    }
}

std::optional<Rational> lambda_arg(const std::string& text) {
    if (text == "symbolic") return std::nullopt;
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--lambda: ") + e.what());
    }
}

void print(const TreeCombination& c, const Options& o, std::ostream& out) {
    TreeCombination shown = c;
    if (auto at = lambda_arg(o.lambda)) shown = specialize(c, *at);
    if (!o.as_json) {
        out << shown.to_string() << '\n';
        return;
    }
    json terms = json::array();
    for (const auto& [key, term] : shown.terms()) terms.push_back({{"coeff", coefficient_json(term.coeff)}, {"tree", key}});
    out << json{{"terms", terms}}.dump() << '\n';
}

void print(const BracketCombination& c, const Options& o, std::ostream& out) {
    BracketCombination shown;
    auto at = lambda_arg(o.lambda);
    for (const auto& [key, term] : c.terms()) shown.add(term.expr, at ? LambdaPoly(term.coeff.eval(*at)) : term.coeff);
    if (!o.as_json) {
        out << shown.to_string() << '\n';
        return;
    }
    json terms = json::array();
    for (const auto& [key, term] : shown.terms()) terms.push_back({{"coeff", coefficient_json(term.coeff)}, {"expr", key}});
    out << json{{"terms", terms}}.dump() << '\n';
}

std::vector<Weight> weights_arg(const std::string& text, std::size_t n) {
    std::vector<Weight> w;
    if (text.empty()) return std::vector<Weight>(n, 1);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.size() > 18 || !std::all_of(item.begin(), item.end(), ::isdigit))
            throw InputError("--weights: '" + item + "' is not a positive integer");
        w.push_back(std::stoull(item));
        if (w.back() == 0) throw InputError("--weights: weights must be >= 1");
    }
    if (w.size() != n) throw InputError("--weights: expected " + std::to_string(n) + " weights");
    return w;
}

std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

int run_check(const Options& o, std::ostream& out) {
    verify::SuiteOptions options{o.nmax, o.wmax, o.morph_weight};
    if (o.fault_injection) {
        bool all = true;
        json rows = json::array();
        for (const auto& r : verify::run_fault_injection(options)) {
            all = all && r.detected();
            if (o.as_json)
                rows.push_back({{"suite", verify::to_string(r.suite)},
                                {"fault", to_string(r.fault)},
                                {"counterexamples", r.counterexamples},
                                {"first", r.first_counterexample}});
            else
                out << (r.detected() ? "DETECTED " : "MISSED ") << verify::to_string(r.suite) << " "
                    << to_string(r.fault) << " counterexamples=" << r.counterexamples
                    << (r.first_counterexample.empty() ? "" : "\n  " + r.first_counterexample) << '\n';
        }
        if (o.as_json) out << rows.dump() << '\n';
        return all ? 0 : 1;
    }

    const Operad op(parse_fault(o.fault));
    std::vector<verify::Suite> suites;
    if (o.suite == "all")
        suites = verify::all_suites();
    else
        suites = {verify::parse_suite(o.suite)};

    std::vector<verify::CheckReport> reports;
    for (auto s : suites)
        for (auto& r : verify::run_suite(s, op, options)) reports.push_back(std::move(r));
    if (o.suite == "all") reports.push_back(verify::check_counts());

    bool passed = true;
    json rows = json::array();
    for (const auto& r : reports) {
        passed = passed && r.passed();
        if (o.as_json)
            rows.push_back(json::parse(r.to_json()));
        else
            out << r.to_text() << '\n';
    }
    if (o.as_json) out << rows.dump() << '\n';
    return passed ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compositions, products and checks for the lambda-deformed operad of weighted rooted trees", "lamop"};
    app.require_subcommand(1);
    Options o;

    auto tree_opts = [&](CLI::App* sub, bool with_slot) {
        if (with_slot) {
            sub->add_option("-S", o.s, "outer tree")->required();
            sub->add_option("-v", o.v, "label of the vertex of S to substitute")->required();
            sub->add_option("-T", o.t, "inserted tree")->required();
        } else {
            sub->add_option("-T", o.t, "left tree")->required();
            sub->add_option("-S", o.s, "right tree")->required();
        }
    };
    auto output_opts = [&](CLI::App* sub) {
        sub->add_option("--lambda", o.lambda, "rational value of L, or 'symbolic'");
        sub->add_flag("--json", o.as_json, "JSON output");
    };

    auto* compose = app.add_subcommand("compose", "partial composition S o_v T");
    tree_opts(compose, true);
    output_opts(compose);
    auto* arrow = app.add_subcommand("arrow", "deformed grafting product T <- S");
    tree_opts(arrow, false);
    output_opts(arrow);
    auto* circsum = app.add_subcommand("circsum", "sum over v of T o_v S");
    tree_opts(circsum, false);
    output_opts(circsum);
    auto* butcher = app.add_subcommand("butcher", "S grafted on the root of T");
    tree_opts(butcher, false);
    output_opts(butcher);
    auto* nap = app.add_subcommand("nap", "root-only composition S o_v T");
    tree_opts(nap, true);
    output_opts(nap);
    auto* psi_cmd = app.add_subcommand("psi", "rewrite a tree as bracket expressions");
    psi_cmd->add_option("-T", o.t, "tree")->required();
    output_opts(psi_cmd);
    auto* phi_cmd = app.add_subcommand("phi", "evaluate a bracket expression");
    phi_cmd->add_option("-e", o.e, "bracket expression")->required();
    output_opts(phi_cmd);
    auto* enumerate = app.add_subcommand("enumerate", "list all rooted trees on labels 1..n");
    enumerate->add_option("-n", o.n, "vertex count")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--weights", o.weights, "comma separated weights a1,..,an");
    auto* dims = app.add_subcommand("dims", "number of trees per weight vector");
    dims->add_option("-n", o.n, "vertex count")->required()->check(CLI::PositiveNumber);
    dims->add_option("--wmax", o.wmax, "also list every weight vector with entries up to wmax");
    auto* check = app.add_subcommand("check", "run verification suites");
    check->add_option("--suite", o.suite, "all|assoc|deform|spec|iso|morph")
        ->check(CLI::IsMember({"all", "assoc", "deform", "spec", "iso", "morph"}));
    check->add_option("--nmax", o.nmax, "vertex bound (default: per suite)");
    check->add_option("--wmax", o.wmax, "weight bound (default: per suite)");
    check->add_option("--morph-weight", o.morph_weight, "total weight bound of the morphism checks");
    check->add_option("--fault", o.fault, "run against a deliberately broken operad")
        ->check(CLI::IsMember({"none", "height-off-by-one", "height-from-outer-root", "grading-off-by-one"}));
    check->add_flag("--fault-injection", o.fault_injection, "show that every suite catches its faults");
    check->add_flag("--json", o.as_json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (compose->parsed() || nap->parsed()) {
            const auto s = tree_arg(o.s), t = tree_arg(o.t);
            auto slot = s.find(o.v);
            if (!slot) throw InputError("-v: no vertex labeled '" + o.v + "' in S");
            if (s.weight(*slot) != weight(t)) {
                out << "0\n";
                return 0;
            }
            if (compose->parsed())
                print(compose_lambda(s, *slot, t), o, out);
            else
                print(TreeCombination(nap_compose(s, *slot, t)), o, out);
        } else if (arrow->parsed()) {
            print(arrow_lambda(tree_arg(o.t), tree_arg(o.s)), o, out);
        } else if (circsum->parsed()) {
            print(circ_sum(tree_arg(o.t), tree_arg(o.s)), o, out);
        } else if (butcher->parsed()) {
            print(TreeCombination(butcher_product(tree_arg(o.t), tree_arg(o.s))), o, out);
        } else if (psi_cmd->parsed()) {
            print(psi(tree_arg(o.t)), o, out);
        } else if (phi_cmd->parsed()) {
            BracketExpr e = [&] {
                try {
                    return BracketExpr::parse(o.e);
                } catch (const ParseError& x) {
                    throw InputError(std::string("expression '") + o.e + "': " + x.what());
                }
            }();
            print(phi(e), o, out);
        } else if (enumerate->parsed()) {
            const auto w = weights_arg(o.weights, o.n);
            for (const auto& t : enumerate_labeled_trees(o.n, w)) out << canonical_encoding(t) << '\n';
        } else if (dims->parsed()) {
            out << power(o.n, o.n - 1) << '\n';
            if (o.wmax > 0) {
                std::vector<Weight> w(o.n, 1);
                while (true) {
                    std::string key;
                    for (std::size_t i = 0; i < w.size(); ++i) key += (i ? "," : "") + std::to_string(w[i]);
                    out << key << ": " << enumerate_labeled_trees(o.n, w).size() << '\n';
                    std::size_t k = 0;
                    while (k < w.size() && ++w[k] > o.wmax) w[k++] = 1;
                    if (k == w.size()) break;
                }
            }
        } else if (check->parsed()) {
            return run_check(o, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace lamop::cli
