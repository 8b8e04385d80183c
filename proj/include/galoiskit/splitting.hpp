#pragma once

// Simple extensions and splitting fields: adjoin a root of an irreducible
// polynomial over K and collapse the tower K(b) to a single primitive
// element a + c*b over Q; iterate until a rational polynomial splits.

#include <algorithm>
#include <complex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "exactnum.hpp"
#include "factor.hpp"
#include "linalg.hpp"
#include "number_field.hpp"
#include "poly.hpp"
#include "roots.hpp"

namespace galoiskit {

inline constexpr int kDefaultFieldDegreeCap = 64;

/// Number field from a minimal polynomial, irreducibility checked.
inline NumberField make_number_field(const QPoly& m, std::string var = "a") {
    if (m.degree() < 1) throw DomainError("number field minimal polynomial must have degree >= 1");
    if (!is_irreducible(m, {.max_degree = kDefaultFieldDegreeCap}))
        throw DomainError("minimal polynomial " + to_string(m) + " is reducible over Q");
    return NumberField(m, std::move(var));
}

/// x(theta) evaluated at theta_image: the image of x under the embedding
/// that sends the generator of x's field to theta_image.
inline NFElement embed(const NFElement& x, const NFElement& theta_image) {
    const NumberField& L = theta_image.field();
    NFElement acc = L.zero();
    for (std::size_t k = x.coords().size(); k-- > 0;) acc = acc * theta_image + L.from_rat(x[k]);
    return acc;
}

inline KPoly embed(const KPoly& p, const NFElement& theta_image) {
    std::vector<NFElement> cs;
    for (const auto& c : p.coeffs()) cs.push_back(embed(c, theta_image));
    return KPoly(NumberFieldDomain(theta_image.field()), std::move(cs));
}

struct Adjunction {
    NumberField field;
    /// Image in the new field of the old generator.
    NFElement theta_image;
    /// A root of the adjoined polynomial.
    NFElement new_root;
    /// New generator = old generator + shift * new_root.
    long shift = 0;

    NFElement embed(const NFElement& x) const { return galoiskit::embed(x, theta_image); }
    KPoly embed(const KPoly& p) const { return galoiskit::embed(p, theta_image); }
};

struct AdjoinOptions {
    int max_degree = kDefaultFieldDegreeCap;
    bool check_irreducible = true;
};

namespace detail {

// Elements of the tower K[z]/(p) as coefficient vectors in z over K.
struct Tower {
    const NumberField& K;
    const KPoly& p;  // monic
    std::size_t e;

    std::vector<NFElement> mul(const std::vector<NFElement>& a, const std::vector<NFElement>& b) const {
        std::vector<NFElement> prod(2 * e - 1, K.zero());
        for (std::size_t i = 0; i < e; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < e; ++j)
                if (!b[j].is_zero()) prod[i + j] += a[i] * b[j];
        }
        for (std::size_t k = prod.size(); k-- > e;) {
            if (prod[k].is_zero()) continue;
            const NFElement c = prod[k];
            for (std::size_t j = 0; j < e; ++j) prod[k - e + j] -= c * p[j];
            prod[k] = K.zero();
        }
        prod.resize(e);
        return prod;
    }

    RatVector flatten(const std::vector<NFElement>& a) const {
        RatVector v;
        v.reserve(K.degree() * e);
        for (std::size_t j = 0; j < e; ++j)
            for (const auto& c : a[j].coords()) v.push_back(c);
        return v;
    }
};

} // namespace detail

/// K(b) for a root b of p (irreducible over K), presented over Q by the
/// primitive element theta + c*b with the least c >= 0 that works.
inline Adjunction adjoin_root(const NumberField& K, const KPoly& p, const AdjoinOptions& opt = {}) {
    if (!(p.field().K == K)) throw DomainError("adjoin_root: polynomial is not over the given field");
    if (p.degree() < 1) throw DomainError("adjoin_root: polynomial must have degree >= 1");
    const std::size_t d = K.degree();
    const std::size_t e = static_cast<std::size_t>(p.degree());
    const std::size_t D = d * e;
    if (D > static_cast<std::size_t>(opt.max_degree))
        throw CapExceeded("adjoin_root: field degree " + std::to_string(D) + " exceeds cap " +
                              std::to_string(opt.max_degree),
                          d);
    if (opt.check_irreducible && !is_irreducible(p, {.max_norm_degree = std::max<int>(opt.max_degree, D)}))
        throw DomainError("adjoin_root: polynomial is reducible over " + K.describe());
    const KPoly pm = p.monic();
    if (e == 1) return {K, K.generator(), -pm[0], 0};

    const detail::Tower T{K, pm, e};
    const NFElement theta = K.generator();
    for (long c = 0;; ++c) {
        if (c == 0) continue;  // theta alone spans only K when e > 1
        if (c > static_cast<long>(D * D) + 1) throw InternalError("adjoin_root: no primitive element found");
        // gamma = theta + c*z
        std::vector<NFElement> gamma(e, K.zero());
        gamma[0] = theta;
        gamma[1] = K.from_rat(Rat(c));
        RatMatrix A(D, D), B(D, 3);
        std::vector<NFElement> power(e, K.zero());
        power[0] = K.one();
        for (std::size_t k = 0; k < D; ++k) {
            A.set_column(k, T.flatten(power));
            power = T.mul(power, gamma);
        }
        B.set_column(0, T.flatten(power));
        std::vector<NFElement> th(e, K.zero()), z(e, K.zero());
        th[0] = theta;
        z[1] = K.one();
        B.set_column(1, T.flatten(th));
        B.set_column(2, T.flatten(z));
        auto X = solve(A, B);
        if (!X) continue;
        RatVector m(D + 1, Rat(0));
        for (std::size_t k = 0; k < D; ++k) m[k] = -(*X)(k, 0);
        m[D] = 1;
        const NumberField L(QPoly(RationalField{}, m), K.var());
        const NFElement theta_image = L.element(X->column(1));
        const NFElement root = L.element(X->column(2));
        Adjunction adj{L, theta_image, root, c};
        // tower law and defining relations, exactly
        if (L.degree() != d * e) throw InternalError("adjoin_root: tower law violated");
        if (!lift_poly(K.minpoly(), L).eval(theta_image).is_zero())
            throw InternalError("adjoin_root: old generator does not embed");
        if (!embed(pm, theta_image).eval(root).is_zero()) throw InternalError("adjoin_root: new root is not a root");
        return adj;
    }
}

/// Convenience: adjoin a root of a rational polynomial to Q.
inline Adjunction adjoin_root(const QPoly& p, const AdjoinOptions& opt = {}) {
    const NumberField Q = NumberField::rationals();
    return adjoin_root(Q, lift_poly(p, Q), opt);
}

struct SplittingField {
    QPoly f;
    /// Monic squarefree part of f.
    QPoly squarefree;
    NumberField K;
    /// All roots of f in K, ordered by their complex approximations.
    std::vector<NFElement> roots;
    std::vector<std::complex<double>> approx;
    /// Generator of K as sum of coeff * roots[index] over adjoined roots.
    std::vector<std::pair<std::size_t, long>> theta_combo;
    /// Which polynomial's root was adjoined at each step.
    std::vector<std::string> provenance;

    std::size_t degree() const { return K.degree(); }

    std::vector<std::string> root_labels() const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < approx.size(); ++i)
            out.push_back("r" + std::to_string(i + 1) + " ≈ " + format_approx(approx[i]));
        return out;
    }
};

namespace detail {

/// Images of the roots under the embedding K -> C that sends the
/// generator to the first root of its minimal polynomial.
inline std::vector<BigComplex> embed_numerically(const NumberField& K, const std::vector<NFElement>& xs) {
    BigComplex z0;
    if (K.degree() > 1) z0 = complex_roots(K.minpoly()).front();
    std::vector<BigComplex> out;
    for (const auto& x : xs) out.push_back(K.degree() > 1 ? eval_big(x.as_poly(), z0) : to_big(x[0]));
    return out;
}

/// A divisor of the splitting-field degree of the squarefree f, from
/// degrees of irreducible factors (transitivity) and cycle types of
/// Frobenius at good primes (Dedekind). An irreducible factor of prime
/// degree q whose cycle type has one 2-cycle and otherwise odd cycles
/// yields a transposition, hence the full S_q and q! divides the degree.
inline Int closure_degree_divisor(const QPoly& f, int primes_to_try = 40) {
    Int L = 1;
    std::vector<std::vector<Int>> parts;
    for (const auto& [g, m] : factor_over_Q(f, {.max_degree = std::max(30, f.degree())}).factors) {
        (void)m;
        L = lcm(L, Int(g.degree()));
        parts.push_back(detail::to_primitive(g).second);
    }
    int tried = 0;
    for (unsigned long p = 3; tried < primes_to_try && p < 100000; p += 2) {
        if (!is_prime(Int(p))) continue;
        const PrimeField F(p);
        std::vector<FpPoly> reduced;
        FpPoly prod = FpPoly::constant(F, F.one());
        bool good = true;
        for (const auto& z : parts) {
            FpPoly gp = detail::to_fp(z, F);
            if (gp.degree() != detail::zdeg(z)) good = false;
            if (!good) break;
            prod = prod * gp;
            reduced.push_back(std::move(gp));
        }
        if (!good || !is_separable(prod)) continue;
        ++tried;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            int twos = 0;
            bool odd_rest = true;
            for (const auto& [h, m] : factor_mod_p(reduced[i]).factors) {
                (void)m;
                L = lcm(L, Int(h.degree()));
                if (h.degree() == 2) ++twos;
                else if (h.degree() % 2 == 0) odd_rest = false;
            }
            const int q = reduced[i].degree();
            if (twos == 1 && odd_rest && is_prime(Int(q))) {
                Int fact = 1;
                for (int k = 2; k <= q; ++k) fact *= k;
                L = lcm(L, fact);
            }
        }
    }
    return L;
}

} // namespace detail

inline SplittingField splitting_field(const QPoly& f, int max_degree = kDefaultFieldDegreeCap) {
    if (f.degree() < 1) throw DomainError("splitting_field: degree must be >= 1");
    SplittingField S;
    S.f = f;
    S.squarefree = squarefree_part(f.monic());
    if (const Int L = detail::closure_degree_divisor(S.squarefree); L > max_degree)
        throw CapExceeded("splitting_field: field degree is a multiple of " + L.get_str() + " (cap " +
                              std::to_string(max_degree) + ")",
                          1);
    NumberField K = NumberField::rationals();
    std::vector<NFElement> roots;
    std::vector<std::pair<std::size_t, long>> combo;
    // the field-degree cap governs; norms may be larger than the field
    const NumberFieldFactorOptions fopt{.max_norm_degree = std::max(64, max_degree) * S.squarefree.degree()};

    for (;;) {
        KPoly h = lift_poly(S.squarefree, K);
        for (const auto& r : roots) h = exact_div(h, KPoly(NumberFieldDomain(K), {-r, K.one()}));
        if (h.degree() <= 0) break;
        const auto fac = factor_over_numberfield(h, fopt);
        const KPoly* smallest = nullptr;
        for (const auto& [g, m] : fac.factors) {
            if (g.degree() == 1)
                roots.push_back(-g[0]);
            else if (!smallest || g.degree() < smallest->degree())
                smallest = &g;
        }
        if (!smallest) continue;
        const long next_degree = static_cast<long>(K.degree()) * smallest->degree();
        if (next_degree > max_degree)
            throw CapExceeded("splitting_field: field degree would reach " + std::to_string(next_degree) +
                                  " (cap " + std::to_string(max_degree) + "); partial tower has degree " +
                                  std::to_string(K.degree()),
                              K.degree());
        const Adjunction adj = adjoin_root(K, *smallest, {.max_degree = max_degree, .check_irreducible = false});
        S.provenance.push_back("root of " + to_string(*smallest) + " over " + K.describe());
        for (auto& r : roots) r = adj.embed(r);
        roots.push_back(adj.new_root);
        combo.emplace_back(roots.size() - 1, adj.shift);
        K = adj.field;
    }
    if (roots.size() != static_cast<std::size_t>(S.squarefree.degree()))
        throw InternalError("splitting_field: root count mismatch");

    // presentation order from numerical images
    const auto images = detail::embed_numerically(K, roots);
    const auto reference = complex_roots(S.squarefree);
    std::vector<std::size_t> order(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        // nearest reference root
        std::size_t best = 0;
        mpf_class best_d = (images[i] - reference[0]).abs2();
        for (std::size_t j = 1; j < reference.size(); ++j) {
            const mpf_class dj = (images[i] - reference[j]).abs2();
            if (dj < best_d) {
                best_d = dj;
                best = j;
            }
        }
        order[i] = best;
    }
    {
        std::vector<std::size_t> check = order;
        std::sort(check.begin(), check.end());
        for (std::size_t i = 0; i < check.size(); ++i)
            if (check[i] != i) throw InternalError("splitting_field: numerical root matching is ambiguous");
    }
    S.roots.assign(roots.size(), K.zero());
    S.approx.resize(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        S.roots[order[i]] = roots[i];
        S.approx[order[i]] = reference[order[i]].to_double();
    }
    for (auto& [idx, c] : combo) idx = order[idx];
    S.theta_combo = std::move(combo);
    S.K = K;
    return S;
}

} // namespace galoiskit
