#pragma once

// Galois groups of splitting fields over Q: automorphisms as images of the
// primitive element, root permutations, fixed fields, the subgroup/field
// correspondence, trace and norm, and solvability by radicals.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "exactnum.hpp"
#include "factor.hpp"
#include "group.hpp"
#include "linalg.hpp"
#include "number_field.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "roots.hpp"
#include "splitting.hpp"

namespace galoiskit {

struct Automorphism {
    NumberField field;
    /// Image of the generator.
    NFElement theta_image;

    NFElement operator()(const NFElement& x) const { return embed(x, theta_image); }

    /// Column j holds the coordinates of sigma(generator^j).
    RatMatrix matrix() const {
        const std::size_t d = field.degree();
        RatMatrix M(d, d);
        NFElement power = field.one();
        for (std::size_t j = 0; j < d; ++j) {
            M.set_column(j, power.coords());
            power = power * theta_image;
        }
        return M;
    }
};

struct GaloisGroup {
    SplittingField splitting;
    /// Indexed like group.elements(); entry 0 is the identity.
    std::vector<Automorphism> autos;
    std::vector<RatMatrix> matrices;
    std::vector<Perm> root_perms;
    FiniteGroup group;

    std::size_t order() const { return autos.size(); }
    const NumberField& field() const { return splitting.K; }

    NFElement apply(std::size_t element, const NFElement& x) const { return field().element(matrices[element] * x.coords()); }
};

namespace detail {

inline NFElement eval_rational(const QPoly& m, const NFElement& x) {
    const NumberField& K = x.field();
    NFElement acc = K.zero();
    for (std::size_t k = m.size(); k-- > 0;) acc = acc * x + K.from_rat(m[k]);
    return acc;
}

inline std::size_t find_root(const std::vector<NFElement>& roots, const NFElement& x) {
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == x) return i;
    throw InternalError("automorphism does not permute the roots");
}

} // namespace detail

/// Every automorphism of the splitting field. The generator is a fixed
/// integer combination of adjoined roots, so each automorphism sends it to
/// the same combination of conjugate roots; the candidates that satisfy
/// the generator's minimal polynomial are exactly the automorphisms.
inline GaloisGroup automorphism_group(const SplittingField& S) {
    const NumberField& K = S.K;
    const std::size_t d = K.degree();
    const std::size_t n = S.roots.size();
    if (n > static_cast<std::size_t>(kMaxPermDegree))
        throw CapExceeded("automorphism_group: more than " + std::to_string(kMaxPermDegree) + " roots", d);

    // rational minimal polynomial of each root, to prune root images
    const auto qfac = factor_over_Q(S.squarefree);
    std::vector<std::size_t> factor_of(n);
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (std::size_t k = 0; k < qfac.factors.size() && !found; ++k)
            if (detail::eval_rational(qfac.factors[k].first, S.roots[i]).is_zero()) {
                factor_of[i] = k;
                found = true;
            }
        if (!found) throw InternalError("automorphism_group: root of no rational factor");
    }

    // candidate images of the generator; powers are kept for the matrix
    std::vector<NFElement> images;
    std::vector<RatMatrix> mats;
    auto try_image = [&](const NFElement& t) {
        RatMatrix M(d, d);
        NFElement power = K.one();
        NFElement value = K.zero();
        for (std::size_t j = 0; j < d; ++j) {
            M.set_column(j, power.coords());
            value = value + power.scaled(K.minpoly()[j]);
            power = power * t;
        }
        value = value + power;
        if (!value.is_zero()) return;
        images.push_back(t);
        mats.push_back(std::move(M));
    };
    if (d == 1) {
        try_image(K.generator());
    } else {
        const auto& combo = S.theta_combo;
        std::vector<std::size_t> pick(combo.size());
        std::vector<bool> used(n, false);
        auto search = [&](auto&& self, std::size_t pos) -> void {
            if (pos == combo.size()) {
                NFElement t = K.zero();
                for (std::size_t j = 0; j < combo.size(); ++j) t = t + S.roots[pick[j]].scaled(Rat(combo[j].second));
                try_image(t);
                return;
            }
            const std::size_t src = combo[pos].first;
            for (std::size_t r = 0; r < n; ++r) {
                if (used[r] || factor_of[r] != factor_of[src]) continue;
                used[r] = true;
                pick[pos] = r;
                self(self, pos + 1);
                used[r] = false;
            }
        };
        search(search, 0);
    }
    if (images.size() != d)
        throw InternalError("automorphism_group: found " + std::to_string(images.size()) + " automorphisms for degree " +
                            std::to_string(d));

    std::vector<Perm> perms;
    for (const auto& M : mats) {
        std::vector<int> img(n);
        for (std::size_t j = 0; j < n; ++j)
            img[j] = static_cast<int>(detail::find_root(S.roots, K.element(M * S.roots[j].coords()))) + 1;
        perms.emplace_back(std::move(img));
    }
    GaloisGroup G;
    G.splitting = S;
    G.group = generate(perms, d);
    if (G.group.order() != d) throw InternalError("automorphism_group: root permutations are not faithful");
    G.autos.assign(d, Automorphism{K, K.generator()});
    G.root_perms.assign(d, Perm::identity(static_cast<int>(n)));
    G.matrices.assign(d, RatMatrix());
    std::vector<bool> seen(d, false);
    for (std::size_t i = 0; i < d; ++i) {
        const std::size_t idx = *G.group.index_of(perms[i]);
        if (seen[idx]) throw InternalError("automorphism_group: two automorphisms induce one permutation");
        seen[idx] = true;
        G.autos[idx] = Automorphism{K, images[i]};
        G.root_perms[idx] = perms[i];
        G.matrices[idx] = std::move(mats[i]);
    }
    return G;
}

inline GaloisGroup automorphism_group(const QPoly& f, int max_degree = kDefaultFieldDegreeCap) {
    return automorphism_group(splitting_field(f, max_degree));
}

/// Images of the generator under all embeddings K -> K: the roots of its
/// minimal polynomial that lie in K, sorted.
inline std::vector<NFElement> generator_images(const NumberField& K, int max_norm_degree = 4096) {
    if (K.degree() == 1) return {K.generator()};
    auto roots = roots_in_field(lift_poly(K.minpoly(), K), {.max_norm_degree = max_norm_degree});
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return coords_less(a, b); });
    return roots;
}

/// K/Q is Galois iff the minimal polynomial of the generator splits in K.
inline bool is_galois(const NumberField& K, int max_norm_degree = 4096) {
    return generator_images(K, max_norm_degree).size() == K.degree();
}

/// Primitive-element candidates whose minimal polynomial is computed.
inline constexpr std::size_t kFixedFieldCandidates = 8;

struct FixedField {
    Subgroup subgroup;
    /// Q-basis of the fixed subspace, in coordinates of K.
    std::vector<RatVector> basis;
    NFElement primitive;
    QPoly minpoly;
    std::size_t degree = 1;
};

namespace detail {

// Prime factorization of v by trial division up to limit; a cofactor
// that must be prime is kept, anything larger is dropped.
inline std::map<Int, unsigned> small_prime_valuations(Int v, const Int& limit = 100000) {
    std::map<Int, unsigned> out;
    v = abs(v);
    for (Int p = 2; p <= limit && p * p <= v; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
            ++out[p];
            v /= p;
        }
    }
    if (v > 1 && v <= limit * limit) ++out[v];
    return out;
}

inline unsigned valuation(Int v, const Int& p) {
    unsigned k = 0;
    v = abs(v);
    while (v != 0 && mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
        v /= p;
        ++k;
    }
    return k;
}

struct Canonical {
    NFElement element;
    QPoly minpoly;
    Int height;
};

// lambda * (x - mean of conjugates) with lambda making the minimal
// polynomial integral, primitive in the weighted sense and sign-normalized.
inline Canonical canonicalize(const NFElement& x, const QPoly& m) {
    const long e = m.degree();
    const Rat mean = -m[e - 1] / Rat(e);
    QPoly shifted = taylor_shift(m, mean);
    std::vector<Rat> a(shifted.coeffs().begin(), shifted.coeffs().end());
    // coefficient k scales by lambda^(e-k)
    auto scale = [&](const Rat& lambda) {
        Rat pw = 1;
        for (long k = e; k-- > 0;) {
            pw *= lambda;
            a[k] *= pw;
        }
    };
    // integral: the common denominator works since every weight is >= 1
    Int lambda_den = 1;
    for (long k = 0; k < e; ++k) lambda_den = lcm(lambda_den, Int(a[k].get_den()));
    scale(Rat(lambda_den));
    // remove common weighted prime powers
    Int g = 0;
    for (long k = 0; k < e; ++k)
        if (a[k] != 0) g = gcd(g, Int(a[k].get_num()));
    Int s = 1;
    if (g > 1) {
        for (const auto& [p, v0] : small_prime_valuations(g)) {
            (void)v0;
            unsigned best = ~0u;
            for (long k = 0; k < e; ++k)
                if (a[k] != 0) best = std::min(best, valuation(Int(a[k].get_num()), p) / static_cast<unsigned>(e - k));
            if (best != ~0u) s *= pow(p, best);
        }
        scale(make_rat(Int(1), s));
    }
    // sign: the first nonzero odd-weight coefficient from the top is negative
    long sign = 1;
    for (long k = e - 1; k >= 0; --k)
        if ((e - k) % 2 == 1 && a[k] != 0) {
            sign = a[k] > 0 ? -1 : 1;
            break;
        }
    if (sign < 0) scale(Rat(-1));
    const Rat lambda = make_rat(lambda_den * sign, s);
    Canonical c{(x - x.field().from_rat(mean)).scaled(lambda), QPoly(RationalField{}, a), 0};
    for (const auto& q : a) c.height = std::max(c.height, Int(abs(q.get_num())));
    return c;
}

inline bool canonical_better(const Canonical& a, const Canonical& b) {
    if (a.height != b.height) return a.height < b.height;
    if (!(a.minpoly == b.minpoly)) return canonical_less(a.minpoly, b.minpoly);
    return coords_less(a.element, b.element);
}

inline bool fixed_by(const GaloisGroup& G, std::size_t element, const NFElement& x) {
    return G.matrices[element] * x.coords() == x.coords();
}

} // namespace detail

/// Fixed field of H: the common fixed subspace of its generators, with a
/// canonical primitive element: the least-height canonical minimal
/// polynomial among the first few generating candidates, scanned in a
/// fixed order (orbit sums and products of roots and of root pairs, the
/// Vandermonde product, x + 2y for pairs of those fixed by a larger group,
/// basis vectors, then small combinations).
inline FixedField fixed_field(const GaloisGroup& G, const Subgroup& H) {
    require_subgroup_of(G.group, H);
    const NumberField& K = G.field();
    const std::size_t d = K.degree();
    FixedField out;
    out.subgroup = H;

    const auto hgens = generators_of(H);
    if (hgens.empty()) {
        for (std::size_t i = 0; i < d; ++i) {
            RatVector v(d, Rat(0));
            v[i] = 1;
            out.basis.push_back(std::move(v));
        }
    } else {
        RatMatrix A(d * hgens.size(), d);
        for (std::size_t g = 0; g < hgens.size(); ++g)
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    A(g * d + r, c) = G.matrices[hgens[g]](r, c) - (r == c ? Rat(1) : Rat(0));
        out.basis = null_space(std::move(A));
    }
    out.degree = out.basis.size();
    if (out.degree * H.order() != d)
        throw InternalError("fixed_field: [K:K^H] = " + std::to_string(d) + "/" + std::to_string(out.degree) +
                            " differs from |H| = " + std::to_string(H.order()));

    // x has degree out.degree iff its stabilizer in G is exactly H
    auto generates = [&](const NFElement& x) {
        for (std::size_t g = 0; g < G.order(); ++g)
            if (!H.contains(g) && detail::fixed_by(G, g, x)) return false;
        return true;
    };
    std::optional<detail::Canonical> best;
    std::size_t tried = 0;
    // fixed by H but by a larger group too; pairs of these are combined later
    std::vector<NFElement> partial;
    auto consider = [&](const NFElement& x) {
        if (tried >= kFixedFieldCandidates) return;
        for (auto h : hgens)
            if (!detail::fixed_by(G, h, x)) return;
        if (!generates(x)) {
            if (!x.is_rational() && partial.size() < 12 && std::find(partial.begin(), partial.end(), x) == partial.end())
                partial.push_back(x);
            return;
        }
        ++tried;
        const QPoly m = minpoly_of(x);
        if (static_cast<std::size_t>(m.degree()) != out.degree)
            throw InternalError("fixed_field: stabilizer and minimal polynomial disagree");
        detail::Canonical c = detail::canonicalize(x, m);
        if (!best || detail::canonical_better(c, *best)) best = std::move(c);
    };

    if (H.is_trivial()) consider(K.generator());
    // H-orbit sums and products of simple expressions in the roots
    const auto& roots = G.splitting.roots;
    const std::size_t n = roots.size();
    auto image = [&](std::uint32_t h, std::size_t i) {
        return static_cast<std::size_t>(G.root_perms[h](static_cast<int>(i) + 1) - 1);
    };
    auto orbit_candidates = [&](auto&& expr, auto&& key) {
        if (tried >= kFixedFieldCandidates) return;
        std::vector<std::vector<std::size_t>> seen;
        NFElement sum = K.zero(), prod = K.one();
        for (auto h : H.members()) {
            auto k = key(h);
            if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
            seen.push_back(std::move(k));
            const NFElement x = expr(h);
            sum = sum + x;
            prod = prod * x;
        }
        consider(sum);
        consider(prod);
    };
    for (std::size_t i = 0; i < n; ++i)
        orbit_candidates([&](std::uint32_t h) { return roots[image(h, i)]; },
                         [&](std::uint32_t h) { return std::vector<std::size_t>{image(h, i)}; });
    {
        NFElement vandermonde = K.one();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) vandermonde = vandermonde * (roots[i] - roots[j]);
        consider(vandermonde);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (i < j)
                orbit_candidates([&](std::uint32_t h) { return roots[image(h, i)] * roots[image(h, j)]; },
                                 [&](std::uint32_t h) {
                                     std::vector<std::size_t> k{image(h, i), image(h, j)};
                                     std::sort(k.begin(), k.end());
                                     return k;
                                 });
            orbit_candidates([&](std::uint32_t h) { return roots[image(h, i)] + roots[image(h, j)].scaled(Rat(2)); },
                             [&](std::uint32_t h) { return std::vector<std::size_t>{image(h, i), image(h, j)}; });
        }
    for (std::size_t i = 0; i < partial.size(); ++i)
        for (std::size_t j = 0; j < partial.size(); ++j)
            if (i != j) consider(partial[i] + partial[j].scaled(Rat(2)));
    for (const auto& v : out.basis) consider(K.element(v));
    for (long c = 1; !best; ++c) {
        if (c > static_cast<long>(d * d) + 2) throw InternalError("fixed_field: no primitive element found");
        RatVector v(d, Rat(0));
        Rat w = 1;
        for (const auto& b : out.basis) {
            for (std::size_t i = 0; i < d; ++i) v[i] += w * b[i];
            w *= c;
        }
        consider(K.element(v));
    }
    out.primitive = best->element;
    out.minpoly = best->minpoly;
    return out;
}

struct CorrespondenceRow {
    Subgroup subgroup;
    std::string label;
    FixedField fixed;
    std::size_t degree_over_Q = 1;
    std::size_t index = 1;
    bool is_normal_subgroup = false;
    bool is_galois_over_Q = false;
};

/// "{e}", "G", "{e, (1 2)}" or generators "<(1 2 3 4 5), (2 5)(3 4)>".
inline std::string subgroup_label(const Subgroup& H) {
    if (H.is_trivial()) return "{e}";
    if (H.is_whole()) return "G";
    const FiniteGroup& G = H.parent();
    auto cyc = [&](std::uint32_t i) { return to_cycle_string(G.element(i)); };
    std::string s;
    if (H.order() <= 4) {
        std::vector<std::string> parts;
        for (auto m : H.members())
            if (m != 0) parts.push_back(cyc(m));
        std::sort(parts.begin(), parts.end());
        s = "{e";
        for (const auto& p : parts) s += ", " + p;
        return s + "}";
    }
    std::vector<std::string> parts;
    for (auto g : generators_of(H)) parts.push_back(cyc(g));
    s = "<";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
    return s + ">";
}

namespace detail {

// K^H is Galois over Q iff every conjugate of its generator stays in K^H.
inline bool fixed_field_is_galois(const GaloisGroup& G, const FixedField& E) {
    const auto hgens = generators_of(E.subgroup);
    for (std::size_t s = 0; s < G.order(); ++s) {
        const NFElement conj = G.field().element(G.matrices[s] * E.primitive.coords());
        for (auto h : hgens)
            if (!fixed_by(G, h, conj)) return false;
    }
    return true;
}

inline std::vector<std::string> sorted_members(const Subgroup& H) {
    std::vector<std::string> out;
    for (auto m : H.members()) out.push_back(to_cycle_string(H.parent().element(m)));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// One row per subgroup, ordered by subgroup order then member cycles.
inline std::vector<CorrespondenceRow> correspondence_table(const GaloisGroup& G,
                                                           std::size_t subgroup_cap = kDefaultSubgroupCap) {
    auto subs = subgroups(G.group, subgroup_cap);
    std::stable_sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return detail::sorted_members(a) < detail::sorted_members(b);
    });
    std::vector<CorrespondenceRow> rows;
    for (const auto& H : subs) {
        CorrespondenceRow row;
        row.subgroup = H;
        row.label = subgroup_label(H);
        row.fixed = fixed_field(G, H);
        row.degree_over_Q = row.fixed.degree;
        row.index = G.order() / H.order();
        row.is_normal_subgroup = is_normal(G.group, H);
        row.is_galois_over_Q = detail::fixed_field_is_galois(G, row.fixed);
        // Gal(K/K^H) = H: the stabilizer of the primitive element is H
        for (std::size_t g = 0; g < G.order(); ++g)
            if (detail::fixed_by(G, g, row.fixed.primitive) != H.contains(g))
                throw InternalError("correspondence_table: stabilizer of K^H differs from H");
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Sum of the conjugates of x.
inline Rat trace(const GaloisGroup& G, const NFElement& x) {
    NFElement acc = G.field().zero();
    for (const auto& M : G.matrices) acc = acc + G.field().element(M * x.coords());
    if (!acc.is_rational()) throw InternalError("trace: sum of conjugates is not rational");
    return acc.rational_value();
}

/// Product of the conjugates of x.
inline Rat norm(const GaloisGroup& G, const NFElement& x) {
    NFElement acc = G.field().one();
    for (const auto& M : G.matrices) acc = acc * G.field().element(M * x.coords());
    if (!acc.is_rational()) throw InternalError("norm: product of conjugates is not rational");
    return acc.rational_value();
}

struct GaloisOptions {
    int max_degree = kDefaultFieldDegreeCap;
    std::size_t subgroup_cap = kDefaultSubgroupCap;
    bool table = true;
};

struct GaloisReport {
    QPoly f;
    GaloisGroup galois;
    std::size_t degree = 1;
    std::size_t order = 1;
    std::string name;
    bool solvable = true;
    std::vector<std::size_t> derived_orders;
    std::vector<CorrespondenceRow> rows;
};

inline GaloisReport galois_group_of(const QPoly& f, const GaloisOptions& opt = {}) {
    if (f.degree() < 1) throw DomainError("galois_group_of: degree must be >= 1");
    GaloisReport R;
    R.f = f;
    R.galois = automorphism_group(splitting_field(f, opt.max_degree));
    R.degree = R.galois.field().degree();
    R.order = R.galois.order();
    R.name = identify(R.galois.group);
    const auto ds = derived_series(R.galois.group);
    R.solvable = ds.solvable;
    for (const auto& H : ds.series) R.derived_orders.push_back(H.order());
    if (opt.table) R.rows = correspondence_table(R.galois, opt.subgroup_cap);
    return R;
}

/// Two-column chart "H | K^H" with degree, index and normality.
inline std::string render_chart(const GaloisReport& R) {
    std::vector<std::array<std::string, 5>> cells;
    cells.push_back({"H", "|H|", "[K^H:Q]", "normal", "K^H"});
    for (const auto& row : R.rows) {
        std::string field = row.degree_over_Q == 1 ? "Q" : "Q(b), b root of " + to_string(row.fixed.minpoly);
        cells.push_back({row.label, std::to_string(row.subgroup.order()), std::to_string(row.degree_over_Q),
                         row.is_normal_subgroup ? "yes" : "no", field});
    }
    std::array<std::size_t, 5> width{};
    for (const auto& c : cells)
        for (std::size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], c[i].size());
    std::string out;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        std::string line;
        for (std::size_t i = 0; i < 5; ++i) {
            line += cells[r][i];
            if (i + 1 < 5) line += std::string(width[i] - cells[r][i].size(), ' ') + " | ";
        }
        out += line + "\n";
        if (r == 0) {
            std::string rule;
            for (std::size_t i = 0; i < 5; ++i) rule += std::string(width[i], '-') + (i + 1 < 5 ? "-+-" : "");
            out += rule + "\n";
        }
    }
    return out;
}

enum class SolvabilityRoute { LowDegree, PrimeDegree, DerivedSeries };

struct SolvabilityVerdict {
    bool solvable = true;
    SolvabilityRoute route = SolvabilityRoute::LowDegree;
    std::string witness;
    /// Prime-degree certificate details.
    std::string irreducibility;
    std::optional<long> real_roots;
    std::optional<std::size_t> generated_order;
    /// General route.
    std::string group_name;
    std::vector<std::size_t> derived_orders;
};

/// "Eisenstein at 5" when some prime of the constant term works, otherwise
/// "factorization over Q"; empty when f is reducible.
inline std::string irreducibility_certificate(const QPoly& f) {
    const auto [content, z] = detail::to_primitive(f);
    (void)content;
    const QPoly g = detail::from_zpoly(z);
    const Int a0 = abs(Int(g[0].get_num()));
    if (a0 != 0 && a0 < Int("1000000000000"))
        for (const auto& [p, e] : factor_int(a0)) {
            (void)e;
            if (eisenstein(g, p)) return "Eisenstein at " + p.get_str();
        }
    return is_irreducible(f) ? "factorization over Q" : "";
}

/// Order of the group generated by (1 2 ... p) and each transposition: p!
/// for every choice is the generation fact, checked for this p.
inline std::optional<std::size_t> verify_cycle_transposition_generation(int p) {
    if (p > 7) return std::nullopt;
    std::vector<int> cyc(p);
    for (int i = 0; i < p; ++i) cyc[i] = (i + 1) % p + 1;
    const Perm c(cyc);
    std::size_t order = 0;
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) {
            const std::size_t o = generate({c, Perm::from_cycles(p, {{i, j}})}).order();
            if (order != 0 && o != order) return std::nullopt;
            order = o;
        }
    return order;
}

inline SolvabilityVerdict solvable_by_radicals(const QPoly& f, int max_degree = kDefaultFieldDegreeCap) {
    if (f.degree() < 1) throw DomainError("solvable_by_radicals: degree must be >= 1");
    SolvabilityVerdict v;
    const int n = f.degree();
    if (n <= 4) {
        v.route = SolvabilityRoute::LowDegree;
        v.witness = "degree " + std::to_string(n) + " <= 4";
        return v;
    }
    if (is_prime(Int(n))) {
        const std::string cert = irreducibility_certificate(f);
        if (!cert.empty()) {
            const long real = sturm_real_roots(f);
            if (real == n - 2) {
                v.solvable = false;
                v.route = SolvabilityRoute::PrimeDegree;
                v.irreducibility = cert;
                v.real_roots = real;
                v.generated_order = verify_cycle_transposition_generation(n);
                unsigned long fact = 1;
                for (int i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
                if (v.generated_order && *v.generated_order != fact)
                    throw InternalError("p-cycle and transposition do not generate S_p");
                v.group_name = "S_" + std::to_string(n);
                v.witness = "irreducible, prime degree " + std::to_string(n) + ", " + std::to_string(real) +
                            " real roots ⇒ S_" + std::to_string(n);
                return v;
            }
        }
    }
    const GaloisReport R = galois_group_of(f, {.max_degree = max_degree, .table = false});
    v.solvable = R.solvable;
    v.route = SolvabilityRoute::DerivedSeries;
    v.group_name = R.name;
    v.derived_orders = R.derived_orders;
    std::string s = "derived series orders ";
    for (std::size_t i = 0; i < R.derived_orders.size(); ++i)
        s += (i ? " > " : "") + std::to_string(R.derived_orders[i]);
    v.witness = s;
    return v;
}

} // namespace galoiskit
