#include <gtest/gtest.h>

#include <galoiskit/expr.hpp>
#include <galoiskit/galois.hpp>

#include <random>

using namespace galoiskit;

namespace {

QPoly Q(const std::string& s) { return parse_qpoly(s); }

// Normality by brute force over all conjugates.
bool normal_by_conjugation(const FiniteGroup& G, const Subgroup& H) {
    for (const auto& g : G.elements())
        for (auto h : H.members())
            if (!H.contains(*G.index_of(g * G.element(h) * g.inverse()))) return false;
    return true;
}

std::size_t index_where(const GaloisGroup& G, auto&& pred) {
    for (std::size_t i = 0; i < G.order(); ++i)
        if (pred(i)) return i;
    ADD_FAILURE() << "no such automorphism";
    return 0;
}

// The root whose square is c and whose approximation is positive.
NFElement positive_sqrt(const SplittingField& S, long c) {
    for (std::size_t i = 0; i < S.roots.size(); ++i)
        if (S.roots[i] * S.roots[i] == S.K.from_rat(c) && S.approx[i].real() > 0) return S.roots[i];
    ADD_FAILURE() << "no square root of " << c;
    return S.K.zero();
}

bool fixed_by_subgroup(const GaloisGroup& G, const Subgroup& H, const NFElement& x) {
    for (auto h : H.members())
        if (!(G.apply(h, x) == x)) return false;
    return true;
}

const CorrespondenceRow& row_containing(const std::vector<CorrespondenceRow>& rows, std::size_t element) {
    for (const auto& r : rows)
        if (r.subgroup.order() == 2 && r.subgroup.contains(element)) return r;
    throw std::runtime_error("no row");
}

const std::vector<const char*> kSample = {"x^2 - 2", "(x^2 - 2)(x^2 - 3)", "x^3 - 2", "x^4 + 4", "x^4 - 2",
                                          "x^3 - 3x + 1", "x^4 + x^3 + x^2 + x + 1", "x^4 - 10x^2 + 1",
                                          "(x^2 + 1)(x^3 - 2)", "x^6 - 1", "x^4 + 1"};

} // namespace

TEST(Automorphisms, QuadraticConjugation) {
    const GaloisGroup G = automorphism_group(Q("x^2 - 2"));
    ASSERT_EQ(G.order(), 2u);
    const NumberField& K = G.field();
    const NFElement r2 = positive_sqrt(G.splitting, 2);
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            const NFElement x = K.from_rat(a) + r2.scaled(Rat(b));
            EXPECT_EQ(G.apply(1, x), K.from_rat(a) - r2.scaled(Rat(b)));
            EXPECT_EQ(G.apply(0, x), x);
        }
}

TEST(Automorphisms, WorkedExampleGroups) {
    const GaloisGroup V = automorphism_group(Q("(x^2 - 2)(x^2 - 3)"));
    EXPECT_EQ(V.order(), 4u);
    EXPECT_EQ(identify(V.group), "V4");
    const GaloisGroup S = automorphism_group(Q("x^3 - 2"));
    EXPECT_EQ(S.order(), 6u);
    EXPECT_EQ(identify(S.group), "S_3");
}

TEST(Automorphisms, MatchEmbeddingsFromFactoring) {
    for (const char* s : kSample) {
        const GaloisGroup G = automorphism_group(Q(s));
        std::vector<NFElement> mine;
        for (const auto& a : G.autos) mine.push_back(a.theta_image);
        std::sort(mine.begin(), mine.end(), [](const auto& a, const auto& b) { return coords_less(a, b); });
        EXPECT_EQ(mine, generator_images(G.field())) << s;
    }
}

TEST(Automorphisms, AreFieldHomomorphisms) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (const char* s : {"x^3 - 2", "(x^2 - 2)(x^2 - 3)", "x^4 - 2"}) {
        const GaloisGroup G = automorphism_group(Q(s));
        const NumberField& K = G.field();
        auto rand_el = [&] {
            RatVector v;
            for (std::size_t i = 0; i < K.degree(); ++i) v.push_back(Rat(coef(rng)));
            return K.element(v);
        };
        for (std::size_t g = 0; g < G.order(); ++g)
            for (int t = 0; t < 5; ++t) {
                const NFElement a = rand_el(), b = rand_el();
                EXPECT_EQ(G.apply(g, a * b), G.apply(g, a) * G.apply(g, b));
                EXPECT_EQ(G.apply(g, a + b), G.apply(g, a) + G.apply(g, b));
                EXPECT_EQ(G.autos[g](a), G.apply(g, a));
            }
    }
}

TEST(Automorphisms, CountEqualsDegreeAndFaithful) {
    for (const char* s : kSample) {
        const GaloisGroup G = automorphism_group(Q(s));
        EXPECT_EQ(G.order(), G.field().degree()) << s;
        for (std::size_t i = 0; i < G.order(); ++i)
            for (std::size_t j = i + 1; j < G.order(); ++j) EXPECT_FALSE(G.root_perms[i] == G.root_perms[j]);
        // composition: sigma(tau(theta)) is the automorphism of the product permutation
        const NumberField& K = G.field();
        for (std::size_t a = 0; a < G.order(); ++a)
            for (std::size_t b = 0; b < G.order(); ++b) {
                const std::size_t ab = G.group.mul(a, b);
                EXPECT_EQ(G.apply(a, G.apply(b, K.generator())), G.apply(ab, K.generator())) << s;
            }
    }
}

TEST(Automorphisms, TransitiveOnRootsOfIrreducible) {
    for (const char* s : {"x^3 - 2", "x^4 - 2", "x^4 + x^3 + x^2 + x + 1", "x^3 - 3x + 1", "x^4 - 10x^2 + 1", "x^5 - 2"}) {
        const GaloisGroup G = automorphism_group(Q(s));
        std::vector<bool> reached(G.splitting.roots.size(), false);
        for (const auto& p : G.root_perms) reached[p(1) - 1] = true;
        for (bool b : reached) EXPECT_TRUE(b) << s;
    }
}

TEST(Automorphisms, CyclotomicGroupsAreUnitGroups) {
    for (unsigned long n = 1; n <= 12; ++n) {
        const GaloisGroup G = automorphism_group(cyclotomic(n));
        EXPECT_EQ(Int(static_cast<unsigned long>(G.order())), euler_phi(Int(n)));
        for (const auto& a : G.root_perms)
            for (const auto& b : G.root_perms) EXPECT_TRUE(a * b == b * a) << n;
        // sigma(zeta) = zeta^k for a unit k, and k determines sigma
        if (n < 3) continue;
        const NFElement zeta = G.splitting.roots[0];
        std::set<unsigned long> units;
        for (std::size_t g = 0; g < G.order(); ++g) {
            const NFElement img = G.apply(g, zeta);
            NFElement pw = G.field().one();
            for (unsigned long k = 0; k < n; ++k, pw = pw * zeta)
                if (pw == img) {
                    EXPECT_EQ(gcd(Int(k), Int(n)), 1);
                    units.insert(k);
                }
        }
        EXPECT_EQ(units.size(), G.order());
    }
    const auto R = galois_group_of(cyclotomic(5));
    EXPECT_EQ(R.order, 4u);
    EXPECT_EQ(R.name, "C_4");
}

TEST(IsGalois, Examples) {
    EXPECT_TRUE(is_galois(make_number_field(Q("x^2 - 2"))));
    EXPECT_FALSE(is_galois(make_number_field(Q("x^3 - 2"))));
    EXPECT_TRUE(is_galois(make_number_field(cyclotomic(5))));
    EXPECT_TRUE(is_galois(NumberField::rationals()));
    EXPECT_FALSE(is_galois(make_number_field(Q("x^4 - 2"))));
    EXPECT_TRUE(is_galois(make_number_field(Q("x^4 - 10x^2 + 1"))));
}

TEST(FixedField, Examples) {
    const GaloisGroup V = automorphism_group(Q("(x^2 - 2)(x^2 - 3)"));
    const NFElement r2 = positive_sqrt(V.splitting, 2), r3 = positive_sqrt(V.splitting, 3);
    const std::size_t st = index_where(V, [&](std::size_t i) { return V.apply(i, r2) == -r2 && V.apply(i, r3) == -r3; });
    const FixedField F6 = fixed_field(V, closure(V.group, std::vector<std::uint32_t>{static_cast<std::uint32_t>(st)}));
    EXPECT_EQ(F6.minpoly, Q("x^2 - 6"));
    EXPECT_TRUE(fixed_by_subgroup(V, F6.subgroup, r2 * r3));
    const FixedField whole = fixed_field(V, whole_group(V.group));
    EXPECT_EQ(whole.degree, 1u);
    EXPECT_EQ(whole.minpoly, Q("x"));

    const GaloisGroup S = automorphism_group(Q("x^3 - 2"));
    const auto p23 = *S.group.index_of(Perm::from_cycles(3, {{2, 3}}));
    const FixedField F = fixed_field(S, closure(S.group, std::vector<std::uint32_t>{static_cast<std::uint32_t>(p23)}));
    EXPECT_EQ(F.degree, 3u);
    EXPECT_EQ(F.minpoly, Q("x^3 - 2"));
    EXPECT_EQ(F.primitive, S.splitting.roots[0]);
}

TEST(Correspondence, BiquadraticChart) {
    const GaloisGroup G = automorphism_group(Q("(x^2 - 2)(x^2 - 3)"));
    const auto rows = correspondence_table(G);
    ASSERT_EQ(rows.size(), 5u);
    std::vector<std::size_t> orders;
    for (const auto& r : rows) orders.push_back(r.subgroup.order());
    EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 2, 2, 4}));
    EXPECT_EQ(rows.front().degree_over_Q, 4u);
    EXPECT_EQ(rows.back().fixed.minpoly, Q("x"));

    const NFElement r2 = positive_sqrt(G.splitting, 2), r3 = positive_sqrt(G.splitting, 3);
    const std::size_t sigma = index_where(G, [&](std::size_t i) { return G.apply(i, r2) == -r2 && G.apply(i, r3) == r3; });
    const std::size_t tau = index_where(G, [&](std::size_t i) { return G.apply(i, r2) == r2 && G.apply(i, r3) == -r3; });
    const std::size_t st = G.group.mul(sigma, tau);
    // {e, sigma} | Q(sqrt 3), {e, tau} | Q(sqrt 2), {e, sigma tau} | Q(sqrt 6)
    const auto& rs = row_containing(rows, sigma);
    EXPECT_EQ(rs.fixed.minpoly, Q("x^2 - 3"));
    EXPECT_TRUE(fixed_by_subgroup(G, rs.subgroup, r3));
    const auto& rt = row_containing(rows, tau);
    EXPECT_EQ(rt.fixed.minpoly, Q("x^2 - 2"));
    EXPECT_TRUE(fixed_by_subgroup(G, rt.subgroup, r2));
    const auto& rst = row_containing(rows, st);
    EXPECT_EQ(rst.fixed.minpoly, Q("x^2 - 6"));
    EXPECT_TRUE(fixed_by_subgroup(G, rst.subgroup, r2 * r3));
    for (const auto& r : rows) EXPECT_TRUE(r.is_normal_subgroup);
}

TEST(Correspondence, CubeRootChart) {
    const GaloisReport R = galois_group_of(Q("x^3 - 2"));
    EXPECT_EQ(R.degree, 6u);
    EXPECT_EQ(R.order, 6u);
    EXPECT_EQ(R.name, "S_3");
    EXPECT_TRUE(R.solvable);
    EXPECT_EQ(R.derived_orders, (std::vector<std::size_t>{6, 3, 1}));
    ASSERT_EQ(R.rows.size(), 6u);
    std::vector<std::string> labels;
    for (const auto& r : R.rows) labels.push_back(r.label);
    EXPECT_EQ(labels, (std::vector<std::string>{"{e}", "{e, (1 2)}", "{e, (1 3)}", "{e, (2 3)}", "{e, (1 2 3), (1 3 2)}", "G"}));
    const auto& roots = R.galois.splitting.roots;
    // {e,(1 2)} | Q(w3), {e,(1 3)} | Q(w2), {e,(2 3)} | Q(w1)
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto& row = R.rows[k];
        EXPECT_EQ(row.fixed.minpoly, Q("x^3 - 2"));
        EXPECT_EQ(row.fixed.primitive, roots[3 - k]);
        EXPECT_FALSE(row.is_normal_subgroup);
        EXPECT_FALSE(row.is_galois_over_Q);
    }
    EXPECT_EQ(R.rows[4].fixed.minpoly, Q("x^2 + 3"));
    EXPECT_TRUE(R.rows[4].is_normal_subgroup);
    // the A_3 row is Q(sqrt(3) i): (w2 - w3)^2 / w1^2 = -3
    const NFElement d = (roots[1] - roots[2]) * nf_inverse(roots[0]);
    EXPECT_EQ(d * d, R.galois.field().from_rat(-3));
    EXPECT_TRUE(fixed_by_subgroup(R.galois, R.rows[4].subgroup, d));
}

TEST(Correspondence, SmallCharts) {
    EXPECT_EQ(correspondence_table(automorphism_group(Q("x^2 - 2"))).size(), 2u);
    EXPECT_EQ(galois_group_of(Q("x^4 + 4")).order, 2u);
    EXPECT_EQ(galois_group_of(Q("x^4 - 2")).rows.size(), 10u);
}

TEST(Correspondence, FundamentalTheoremProperties) {
    for (const char* s : {"(x^2 - 2)(x^2 - 3)", "x^3 - 2", "x^4 - 2", "x^4 + x^3 + x^2 + x + 1", "(x^2 + 1)(x^3 - 2)"}) {
        const GaloisGroup G = automorphism_group(Q(s));
        const auto rows = correspondence_table(G);
        EXPECT_EQ(rows.size(), subgroups(G.group).size());
        for (const auto& r : rows) {
            // Artin and FTGT(1)
            EXPECT_EQ(G.field().degree(), r.fixed.degree * r.subgroup.order()) << s;
            EXPECT_EQ(r.degree_over_Q, r.index) << s;
            EXPECT_EQ(static_cast<std::size_t>(r.fixed.minpoly.degree()), r.degree_over_Q);
            EXPECT_TRUE(is_irreducible(r.fixed.minpoly));
            // FTGT(2), each side computed independently
            EXPECT_EQ(normal_by_conjugation(G.group, r.subgroup), r.is_normal_subgroup) << s;
            if (r.degree_over_Q > 1) {
                EXPECT_EQ(is_galois(NumberField(r.fixed.minpoly)), r.is_normal_subgroup) << s << " " << r.label;
            }
            EXPECT_EQ(r.is_galois_over_Q, r.is_normal_subgroup);
            // Gal(K/K^H) = H
            for (std::size_t g = 0; g < G.order(); ++g)
                EXPECT_EQ(G.apply(g, r.fixed.primitive) == r.fixed.primitive, r.subgroup.contains(g));
        }
        // FTGT(3): H1 in H2 gives K^H2 inside K^H1
        for (const auto& a : rows)
            for (const auto& b : rows) {
                if (!a.subgroup.subset_of(b.subgroup)) continue;
                EXPECT_EQ(a.fixed.degree % b.fixed.degree, 0u);
                EXPECT_TRUE(fixed_by_subgroup(G, a.subgroup, b.fixed.primitive));
                if (b.fixed.degree > 1 && a.fixed.degree <= 8) {
                    const NumberField E(a.fixed.minpoly);
                    EXPECT_FALSE(roots_in_field(lift_poly(b.fixed.minpoly, E)).empty()) << s;
                }
            }
        // distinct subgroups give distinct fields
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i + 1; j < rows.size(); ++j)
                EXPECT_FALSE(fixed_by_subgroup(G, rows[j].subgroup, rows[i].fixed.primitive) &&
                             fixed_by_subgroup(G, rows[i].subgroup, rows[j].fixed.primitive));
    }
}

TEST(TraceNorm, Quadratic) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-50, 50);
    for (long D : {2, 3, -1, 5, -7}) {
        const GaloisGroup G = automorphism_group(Q("x^2 - " + std::to_string(D)));
        const NFElement s = G.splitting.roots[0];
        for (int i = 0; i < 20; ++i) {
            const Rat a = make_rat(coef(rng), 1 + rng() % 4), b = make_rat(coef(rng), 1 + rng() % 4);
            const NFElement x = G.field().from_rat(a) + s.scaled(b);
            EXPECT_EQ(trace(G, x), 2 * a);
            EXPECT_EQ(norm(G, x), a * a - Rat(D) * b * b);
        }
    }
}

TEST(TraceNorm, Examples) {
    for (unsigned long p : {3, 5, 7}) {
        const GaloisGroup G = automorphism_group(cyclotomic(p));
        const NFElement zeta = G.splitting.roots[0];
        EXPECT_EQ(trace(G, zeta), Rat(-1));
        EXPECT_EQ(trace(G, G.field().one()), Rat(static_cast<long>(p - 1)));
        EXPECT_EQ(norm(G, G.field().one()), Rat(1));
    }
    const GaloisGroup G = automorphism_group(Q("x^3 - 2"));
    EXPECT_EQ(trace(G, G.field().from_rat(Rat(2, 3))), Rat(4));
    // full-degree element: norm is (-1)^d a0 of its minimal polynomial
    const NFElement t = G.field().generator();
    const QPoly m = minpoly_of(t);
    EXPECT_EQ(norm(G, t), (m.degree() % 2 ? Rat(-1) : Rat(1)) * m[0]);
}

TEST(TraceNorm, MatchMatrixRouteAndAreHomomorphisms) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> coef(-6, 6);
    const GaloisGroup G = automorphism_group(Q("(x^2 - 2)(x^2 - 3)"));
    const NumberField& K = G.field();
    auto rand_el = [&] {
        RatVector v;
        for (std::size_t i = 0; i < K.degree(); ++i) v.push_back(make_rat(coef(rng), 1 + rng() % 3));
        return K.element(v);
    };
    for (int i = 0; i < 100; ++i) {
        const NFElement a = rand_el(), b = rand_el();
        EXPECT_EQ(trace(G, a + b), trace(G, a) + trace(G, b));
        EXPECT_EQ(norm(G, a * b), norm(G, a) * norm(G, b));
        EXPECT_EQ(trace(G, a), element_trace(a));
        EXPECT_EQ(norm(G, a), element_norm(a));
    }
}

TEST(Solvability, AbelRuffiniQuintics) {
    for (const char* s : {"x^5 - 80x + 5", "x^5 - 4x + 2"}) {
        const auto v = solvable_by_radicals(Q(s));
        EXPECT_FALSE(v.solvable) << s;
        EXPECT_EQ(v.route, SolvabilityRoute::PrimeDegree);
        EXPECT_EQ(v.real_roots, 3);
        EXPECT_EQ(v.generated_order, 120u);
        EXPECT_EQ(v.group_name, "S_5");
        EXPECT_EQ(v.witness, "irreducible, prime degree 5, 3 real roots ⇒ S_5");
    }
    EXPECT_EQ(solvable_by_radicals(Q("x^5 - 80x + 5")).irreducibility, "Eisenstein at 5");
    EXPECT_EQ(solvable_by_radicals(Q("x^5 - 4x + 2")).irreducibility, "Eisenstein at 2");
}

TEST(Solvability, GenerationFactForSmallPrimes) {
    EXPECT_EQ(verify_cycle_transposition_generation(3), 6u);
    EXPECT_EQ(verify_cycle_transposition_generation(5), 120u);
    EXPECT_EQ(verify_cycle_transposition_generation(7), 5040u);
    EXPECT_EQ(verify_cycle_transposition_generation(11), std::nullopt);
}

TEST(Solvability, LowDegreeAlwaysSolvable) {
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int i = 0; i < 50; ++i) {
        std::vector<Rat> c;
        const int deg = 1 + i % 4;
        for (int k = 0; k < deg; ++k) c.push_back(Rat(coef(rng)));
        c.push_back(Rat(1 + rng() % 3));
        const auto v = solvable_by_radicals(QPoly(RationalField{}, c));
        EXPECT_TRUE(v.solvable);
        EXPECT_EQ(v.route, SolvabilityRoute::LowDegree);
    }
}

TEST(Solvability, GeneralRoute) {
    const auto v = solvable_by_radicals(Q("x^6 - 1"));
    EXPECT_TRUE(v.solvable);
    EXPECT_EQ(v.route, SolvabilityRoute::DerivedSeries);
    // quintic with one real root: not on the fast path, S_5 closure exceeds the cap
    EXPECT_THROW(solvable_by_radicals(Q("x^5 - x - 1"), 16), CapExceeded);
    // reducible quintic: cyclic pieces
    const auto r = solvable_by_radicals(Q("(x^2 + 1)(x^3 - 2)"));
    EXPECT_TRUE(r.solvable);
    EXPECT_EQ(r.derived_orders.back(), 1u);
}

TEST(Solvability, RadicalQuinticStretch) {
    const auto v = solvable_by_radicals(Q("x^5 - 2"));
    EXPECT_TRUE(v.solvable);
    EXPECT_EQ(v.derived_orders.front(), 20u);
    EXPECT_EQ(v.derived_orders.back(), 1u);
}
