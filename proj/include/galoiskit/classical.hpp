#pragma once

// Straightedge-and-compass questions: regular n-gons, real algebraic
// numbers given by their minimal polynomial, and the three classical problems.

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "exactnum.hpp"
#include "factor.hpp"
#include "poly.hpp"
#include "splitting.hpp"

namespace galoiskit {

struct NgonVerdict {
    long n = 0;
    bool constructible = false;
    std::vector<std::pair<Int, unsigned>> factorization;
    Int phi;
    std::string witness;
};

/// Regular n-gon: constructible iff n = 2^k times distinct Fermat primes,
/// cross-checked against phi(n) being a power of two.
inline NgonVerdict ngon_constructible(long n) {
    if (n < 3) throw DomainError("ngon_constructible: n must be >= 3");
    NgonVerdict v;
    v.n = n;
    v.factorization = factor_int(Int(n));
    v.phi = euler_phi(Int(n));
    bool fermat = true;
    std::string bad;
    for (const auto& [p, e] : v.factorization) {
        if (p == 2) continue;
        if (!is_fermat_prime(p)) {
            fermat = false;
            bad = p.get_str() + " is not a Fermat prime";
            break;
        }
        if (e > 1) {
            fermat = false;
            bad = "Fermat prime " + p.get_str() + " appears squared";
            break;
        }
    }
    if (fermat != is_power_of_two(v.phi))
        throw InternalError("ngon_constructible: Fermat-prime and phi criteria disagree for n = " + std::to_string(n));
    v.constructible = fermat;
    std::string fact;
    for (const auto& [p, e] : v.factorization) {
        if (!fact.empty()) fact += " * ";
        fact += p.get_str() + (e > 1 ? "^" + std::to_string(e) : "");
    }
    v.witness = std::to_string(n) + " = " + fact + ", phi = " + v.phi.get_str() +
                (fermat ? "; odd part is a product of distinct Fermat primes" : "; " + bad);
    return v;
}

struct ConstructibilityVerdict {
    /// Empty when the closure could not be computed within the cap.
    std::optional<bool> constructible;
    /// Degree is a power of two.
    bool necessary_pass = false;
    /// Galois closure degree is a power of two; empty when not computed.
    std::optional<bool> closure_pass;
    std::optional<std::size_t> closure_degree;
    std::string reason;
};

inline std::string to_string(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : "unknown"; }

/// A real root of the irreducible m is constructible iff the splitting
/// field of m has 2-power degree. The degree test alone is only necessary.
inline ConstructibilityVerdict real_constructible(const QPoly& m, int max_degree = kDefaultFieldDegreeCap) {
    if (m.degree() < 1) throw DomainError("real_constructible: degree must be >= 1");
    if (!is_irreducible(m)) throw DomainError("real_constructible: " + to_string(m) + " is reducible over Q");
    if (sturm_real_roots(m) < 1) throw DomainError("real_constructible: " + to_string(m) + " has no real root");
    ConstructibilityVerdict v;
    const std::string d = std::to_string(m.degree());
    v.necessary_pass = is_power_of_two(Int(static_cast<long>(m.degree())));
    if (!v.necessary_pass) {
        v.constructible = false;
        v.reason = "degree " + d + " is not a power of two";
        return v;
    }
    try {
        v.closure_degree = splitting_field(m, max_degree).degree();
    } catch (const CapExceeded& e) {
        v.reason = "degree " + d + " is a power of two (necessary); Galois closure exceeds the degree cap " +
                   std::to_string(max_degree) + ", so the verdict is unknown";
        return v;
    }
    const std::string cd = std::to_string(*v.closure_degree);
    v.closure_pass = is_power_of_two(Int(static_cast<unsigned long>(*v.closure_degree)));
    v.constructible = *v.closure_pass;
    v.reason = *v.closure_pass
                   ? "degree " + d + " and Galois closure degree " + cd + " are powers of two"
                   : "degree " + d + " is a power of two, but the Galois closure has degree " + cd +
                         "; the degree test alone would wrongly accept this number";
    return v;
}

struct ClassicalProblem {
    std::string name;
    bool possible = false;
    std::string reason;
    std::optional<QPoly> polynomial;
    std::optional<ConstructibilityVerdict> verdict;
};

inline std::vector<ClassicalProblem> classical_problems() {
    std::vector<ClassicalProblem> out;
    out.push_back({"squaring the circle", false,
                   "requires sqrt(pi), but pi is transcendental (cited fact, not proved here)", std::nullopt,
                   std::nullopt});
    const RationalField Q;
    const QPoly cube(Q, {Rat(-2), Rat(0), Rat(0), Rat(1)});
    const QPoly trisect(Q, {Rat(-1), Rat(-6), Rat(0), Rat(8)});
    for (auto [name, what, poly] : std::vector<std::tuple<std::string, std::string, QPoly>>{
             {"doubling the cube", "the cube root of 2", cube},
             {"trisecting pi/3", "cos(pi/9)", trisect}}) {
        const ConstructibilityVerdict v = real_constructible(poly);
        ClassicalProblem p{name, v.constructible.value_or(false), what + " is a root of " + to_string(poly) + ": " + v.reason,
                           poly, v};
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace galoiskit
