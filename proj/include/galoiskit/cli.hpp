#pragma once

// Command-line front end: verb dispatch, text and JSON output, exit codes
// 0 ok, 1 parse or usage error, 2 cap exceeded, 3 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "classical.hpp"
#include "error.hpp"
#include "expr.hpp"
#include "factor.hpp"
#include "finite_field.hpp"
#include "galois.hpp"
#include "group.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "splitting.hpp"

namespace galoiskit::cli {

using json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kUsage = 1, kCap = 2, kInternal = 3 };

struct Output {
    std::string text;
    json result;
};

namespace detail {

inline std::string route_name(SolvabilityRoute r) {
    switch (r) {
    case SolvabilityRoute::LowDegree: return "low-degree";
    case SolvabilityRoute::PrimeDegree: return "prime-degree";
    case SolvabilityRoute::DerivedSeries: return "derived-series";
    }
    return "";
}

inline json optional_json(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

template <typename T>
std::string join(const std::vector<T>& xs, const std::string& sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
    return os.str();
}

template <FieldDomain F>
Output factor_output(const Factorization<F>& fac) {
    Output o;
    o.text = to_string(fac);
    o.result["field"] = fac.field.name();
    o.result["unit"] = fac.field.format(fac.unit);
    o.result["factors"] = json::array();
    for (const auto& [g, m] : fac.factors) o.result["factors"].push_back({{"factor", to_string(g)}, {"multiplicity", m}});
    o.result["irreducible"] = fac.is_irreducible();
    return o;
}

inline Output do_factor(const std::string& src, std::optional<std::uint64_t> mod) {
    if (mod) {
        const FpPoly f = parse_poly(src, PrimeField(*mod));
        return factor_output(factor_mod_p(f));
    }
    const QPoly f = parse_qpoly(src);
    if (f.is_zero()) throw DomainError("factor: zero polynomial");
    return factor_output(factor_over_Q(f));
}

inline Output do_gal(const std::string& src, int cap, bool table) {
    const GaloisReport R = galois_group_of(parse_qpoly(src), {.max_degree = cap, .table = table});
    Output o;
    o.text = "degree " + std::to_string(R.degree) + ", order " + std::to_string(R.order) + ", " + R.name + ", " +
             (R.solvable ? "solvable" : "not solvable") + "\n";
    if (table) o.text += render_chart(R);
    o.result["degree"] = R.degree;
    o.result["order"] = R.order;
    o.result["name"] = R.name;
    o.result["solvable"] = R.solvable;
    o.result["rows"] = json::array();
    for (const auto& row : R.rows)
        o.result["rows"].push_back({{"subgroup_order", row.subgroup.order()},
                                    {"index", row.index},
                                    {"normal", row.is_normal_subgroup},
                                    {"fixed_minpoly", to_string(row.fixed.minpoly)}});
    return o;
}

inline Output do_split(const std::string& src, int cap) {
    const SplittingField S = splitting_field(parse_qpoly(src), cap);
    Output o;
    o.text = "degree " + std::to_string(S.degree()) + "\nK = " + S.K.describe() + "\n";
    const auto labels = S.root_labels();
    o.result["degree"] = S.degree();
    o.result["minpoly"] = to_string(S.K.minpoly(), S.K.var());
    o.result["roots"] = json::array();
    for (std::size_t i = 0; i < S.roots.size(); ++i) {
        const std::string value = to_string(S.roots[i].as_poly(), S.K.var());
        o.text += labels[i] + " = " + value + "\n";
        o.result["roots"].push_back({{"label", labels[i]}, {"value", value}});
    }
    o.result["provenance"] = S.provenance;
    return o;
}

inline Output do_cyclotomic(long n, std::optional<std::uint64_t> mod) {
    if (n < 1) throw DomainError("cyclotomic: n must be >= 1");
    const QPoly phi = cyclotomic(static_cast<unsigned long>(n));
    Output o;
    if (mod) {
        const PrimeField F(*mod);
        std::vector<Zp> cs;
        for (const auto& c : phi.coeffs()) cs.push_back(F.from_rat(c));
        o.text = to_string(FpPoly(F, std::move(cs)));
    } else {
        o.text = to_string(phi);
    }
    o.result["n"] = n;
    o.result["polynomial"] = o.text;
    o.result["degree"] = phi.degree();
    return o;
}

inline Output do_solvable(const std::string& src, int cap) {
    const SolvabilityVerdict v = solvable_by_radicals(parse_qpoly(src), cap);
    Output o;
    o.text = std::string(v.solvable ? "solvable" : "not solvable") + "\n" + v.witness;
    o.result["solvable"] = v.solvable;
    o.result["route"] = route_name(v.route);
    o.result["witness"] = v.witness;
    if (!v.group_name.empty()) o.result["group"] = v.group_name;
    if (v.route == SolvabilityRoute::PrimeDegree) {
        o.result["irreducibility"] = v.irreducibility;
        o.result["real_roots"] = *v.real_roots;
        o.result["generated_order"] = v.generated_order ? json(*v.generated_order) : json(nullptr);
    }
    if (!v.derived_orders.empty()) o.result["derived_orders"] = v.derived_orders;
    return o;
}

inline Output do_ngon(long n) {
    const NgonVerdict v = ngon_constructible(n);
    Output o;
    o.text = std::string(v.constructible ? "constructible" : "not constructible") + "\n" + v.witness;
    o.result["n"] = n;
    o.result["constructible"] = v.constructible;
    o.result["phi"] = v.phi.get_str();
    o.result["factorization"] = json::array();
    for (const auto& [p, e] : v.factorization) o.result["factorization"].push_back({p.get_str(), e});
    o.result["witness"] = v.witness;
    return o;
}

inline json verdict_json(const ConstructibilityVerdict& v) {
    json j;
    j["constructible"] = optional_json(v.constructible);
    j["necessary_pass"] = v.necessary_pass;
    j["closure_pass"] = optional_json(v.closure_pass);
    j["closure_degree"] = v.closure_degree ? json(*v.closure_degree) : json(nullptr);
    j["reason"] = v.reason;
    return j;
}

inline Output do_constructible(const std::string& src, int cap) {
    Output o;
    if (src == "classical") {
        o.result = json::array();
        for (const auto& p : classical_problems()) {
            o.text += p.name + ": " + (p.possible ? "possible" : "impossible") + "\n  " + p.reason + "\n";
            json j{{"problem", p.name}, {"possible", p.possible}, {"reason", p.reason}};
            j["polynomial"] = p.polynomial ? json(to_string(*p.polynomial)) : json(nullptr);
            o.result.push_back(std::move(j));
        }
        return o;
    }
    const ConstructibilityVerdict v = real_constructible(parse_qpoly(src), cap);
    const std::string verdict = v.constructible ? (*v.constructible ? "constructible" : "not constructible") : "unknown";
    o.text = verdict + "\n" + v.reason;
    o.result = verdict_json(v);
    return o;
}

/// "S4", "A_5", "D4", "C6" or generators "(1 2 3), (1 2)".
inline FiniteGroup parse_group(const std::string& spec, std::size_t cap) {
    std::string s;
    for (char c : spec)
        if (c != '_' && !std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() >= 2 && std::string("SADC").find(s[0]) != std::string::npos &&
        s.find_first_not_of("0123456789", 1) == std::string::npos) {
        if (s.size() > 4) throw ParseError("group degree too large", 1);
        const int n = std::stoi(s.substr(1));
        if (n < 1) throw DomainError("group: degree must be >= 1");
        switch (s[0]) {
        case 'S': return symmetric_group(n);
        case 'A': return alternating_group(n);
        case 'D': return dihedral_group(n);
        default: return cyclic_group(n);
        }
    }
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= spec.size(); ++i)
        if (i == spec.size() || spec[i] == ',' || spec[i] == ';') {
            parts.push_back(spec.substr(start, i - start));
            start = i + 1;
        }
    int degree = 1;
    for (const auto& p : parts) degree = std::max(degree, parse_cycles(p).degree());
    std::vector<Perm> gens;
    for (const auto& p : parts) gens.push_back(parse_cycles(p, degree));
    return generate(gens, cap);
}

inline Output do_group(const std::string& spec, std::size_t cap) {
    const FiniteGroup G = parse_group(spec, cap);
    const DerivedSeries ds = derived_series(G);
    std::vector<std::size_t> orders;
    for (const auto& H : ds.series) orders.push_back(H.order());
    Output o;
    const std::string name = identify(G);
    const bool simple = is_simple_by_normal_closures(G);
    o.text = name + ", order " + std::to_string(G.order()) + ", degree " + std::to_string(G.degree()) + "\n" +
             (is_abelian(G) ? "abelian" : "non-abelian") + ", " + (ds.solvable ? "solvable" : "not solvable") + ", " +
             (simple ? "simple" : "not simple") + "\nderived series orders " + join(orders, " > ") + "\n";
    o.result["name"] = name;
    o.result["order"] = G.order();
    o.result["degree"] = G.degree();
    o.result["abelian"] = is_abelian(G);
    o.result["solvable"] = ds.solvable;
    o.result["simple"] = simple;
    o.result["derived_orders"] = orders;
    o.result["sylow"] = json::array();
    if (G.order() > 1)
        for (const auto& [p, e] : factor_int(Int(static_cast<unsigned long>(G.order())))) {
            (void)e;
            const std::size_t k = sylow(G, p).order();
            o.text += "Sylow " + p.get_str() + "-subgroup of order " + std::to_string(k) + "\n";
            o.result["sylow"].push_back({{"p", p.get_ui()}, {"order", k}});
        }
    return o;
}

inline Output do_ff(std::uint64_t p, int n) {
    const FiniteField K = finite_field(p, n);
    const auto subs = ff_subfields(p, n);
    Output o;
    o.text = K.describe() + ", " + std::to_string(K.order()) + " elements\nFrobenius order " +
             std::to_string(frobenius_order(K)) + "\nsubfield degrees " + join(subs, ", ");
    o.result["field"] = K.describe();
    o.result["order"] = K.order();
    o.result["modulus"] = to_string(K.modulus);
    o.result["frobenius_order"] = frobenius_order(K);
    o.result["subfields"] = subs;
    return o;
}

inline std::optional<long> env_cap() {
    const char* s = std::getenv("GALOISKIT_CAP");
    if (!s || !*s) return std::nullopt;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 1) throw DomainError(std::string("GALOISKIT_CAP must be a positive integer, got '") + s + "'");
    return v;
}

} // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Exact Galois theory toolkit", "galoiskit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit a single JSON object");

    std::string poly_arg, group_arg;
    long n_arg = 0;
    std::uint64_t p_arg = 0;
    int deg_arg = 0;
    std::optional<std::uint64_t> mod;
    std::optional<long> cap;
    bool table = false;

    auto add_cap = [&](CLI::App* c, const std::string& what) {
        c->add_option("--cap", cap, what)->check(CLI::PositiveNumber);
    };
    auto* factor = app.add_subcommand("factor", "Factor a polynomial over Q or F_p");
    factor->add_option("poly", poly_arg, "Polynomial in x")->required();
    factor->add_option("--mod", mod, "Work over F_p");
    auto* gal = app.add_subcommand("gal", "Galois group of the splitting field");
    gal->add_option("poly", poly_arg)->required();
    gal->add_flag("--table", table, "Print the subgroup / fixed-field chart");
    add_cap(gal, "Splitting-field degree cap");
    auto* split = app.add_subcommand("split", "Splitting field and its roots");
    split->add_option("poly", poly_arg)->required();
    add_cap(split, "Splitting-field degree cap");
    auto* cyclo = app.add_subcommand("cyclotomic", "n-th cyclotomic polynomial");
    cyclo->add_option("n", n_arg)->required();
    cyclo->add_option("--mod", mod, "Reduce modulo p");
    auto* solv = app.add_subcommand("solvable", "Decide solvability by radicals");
    solv->add_option("poly", poly_arg)->required();
    add_cap(solv, "Splitting-field degree cap on the general route");
    auto* ngon = app.add_subcommand("ngon", "Constructibility of the regular n-gon");
    ngon->add_option("n", n_arg)->required();
    auto* cons = app.add_subcommand("constructible", "Constructibility of a real root, or 'classical'");
    cons->add_option("poly", poly_arg)->required();
    add_cap(cons, "Galois-closure degree cap");
    auto* group = app.add_subcommand("group", "Permutation group: S4, A5, D4, C6 or generators");
    group->add_option("spec", group_arg)->required();
    add_cap(group, "Element closure cap");
    auto* ff = app.add_subcommand("ff", "Finite field F_{p^n}");
    ff->add_option("p", p_arg)->required();
    ff->add_option("n", deg_arg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    CLI::App* cmd = app.get_subcommands().front();
    const std::string verb = cmd->get_name();
    std::string input = poly_arg;
    try {
        if (mod && *mod > (1ull << 62)) throw DomainError("--mod: modulus too large");
        const std::optional<long> env = detail::env_cap();
        const long field_cap = cap.value_or(env.value_or(kDefaultFieldDegreeCap));
        if (field_cap > std::numeric_limits<int>::max()) throw DomainError("--cap too large");
        Output o;
        if (verb == "factor") {
            o = detail::do_factor(poly_arg, mod);
        } else if (verb == "gal") {
            o = detail::do_gal(poly_arg, static_cast<int>(field_cap), table);
        } else if (verb == "split") {
            o = detail::do_split(poly_arg, static_cast<int>(field_cap));
        } else if (verb == "cyclotomic") {
            input = std::to_string(n_arg);
            o = detail::do_cyclotomic(n_arg, mod);
        } else if (verb == "solvable") {
            o = detail::do_solvable(poly_arg, static_cast<int>(field_cap));
        } else if (verb == "ngon") {
            input = std::to_string(n_arg);
            o = detail::do_ngon(n_arg);
        } else if (verb == "constructible") {
            o = detail::do_constructible(poly_arg, static_cast<int>(field_cap));
        } else if (verb == "group") {
            input = group_arg;
            o = detail::do_group(group_arg, static_cast<std::size_t>(cap.value_or(env.value_or(kDefaultClosureCap))));
        } else {
            input = std::to_string(p_arg) + " " + std::to_string(deg_arg);
            o = detail::do_ff(p_arg, deg_arg);
        }
        if (as_json) {
            json doc;
            doc["command"] = verb;
            doc["input"] = input;
            doc["result"] = std::move(o.result);
            out << doc.dump(2) << "\n";
        } else {
            out << o.text;
            if (o.text.empty() || o.text.back() != '\n') out << "\n";
        }
        return kOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kCap;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"galoiskit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace galoiskit::cli
