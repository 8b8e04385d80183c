#include <gtest/gtest.h>

#include <random>

#include "galoiskit/expr.hpp"
#include "galoiskit/poly.hpp"

using namespace galoiskit;

namespace {

QPoly random_qpoly(std::mt19937& rng, int max_deg, int range = 9) {
    const int deg = static_cast<int>(rng() % (max_deg + 1));
    std::vector<Rat> cs;
    for (int i = 0; i <= deg; ++i)
        cs.push_back(make_rat(static_cast<long>(rng() % (2 * range + 1)) - range, 1 + rng() % 3));
    return QPoly(RationalField{}, cs);
}

FpPoly random_fppoly(std::mt19937& rng, std::uint64_t p, int max_deg) {
    const int deg = static_cast<int>(rng() % (max_deg + 1));
    PrimeField F(p);
    std::vector<Zp> cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(F.from_int(static_cast<long>(rng() % p)));
    return FpPoly(F, cs);
}

// Oracle: Sylvester determinant by Gaussian elimination over Q.
Rat sylvester_resultant(const QPoly& f, const QPoly& g) {
    const int m = f.degree(), n = g.degree();
    const int N = m + n;
    if (N == 0) return 1;
    std::vector<std::vector<Rat>> M(N, std::vector<Rat>(N, Rat(0)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[r][r + k] = f[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[n + r][r + k] = g[n - k];
    Rat det = 1;
    for (int c = 0; c < N; ++c) {
        int piv = c;
        while (piv < N && M[piv][c] == 0) ++piv;
        if (piv == N) return 0;
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        det *= M[c][c];
        for (int r = c + 1; r < N; ++r) {
            if (M[r][c] == 0) continue;
            const Rat f2 = M[r][c] / M[c][c];
            for (int k = c; k < N; ++k) M[r][k] -= f2 * M[c][k];
        }
    }
    return det;
}

// Oracle: highest-degree monic common divisor found by enumerating every
// monic polynomial over F_p up to the given degree.
FpPoly gcd_by_enumeration(const FpPoly& f, const FpPoly& g, int max_deg) {
    const PrimeField F = f.field();
    FpPoly best = FpPoly::constant(F, F.one());
    for (int d = 1; d <= max_deg; ++d) {
        std::vector<long> digits(d, 0);
        for (;;) {
            std::vector<Zp> cs;
            for (long v : digits) cs.push_back(F.from_int(v));
            cs.push_back(F.one());
            FpPoly h(F, cs);
            if ((f % h).is_zero() && (g % h).is_zero()) best = h;
            int k = 0;
            while (k < d && ++digits[k] == static_cast<long>(F.p)) digits[k++] = 0;
            if (k == d) break;
        }
    }
    return best;
}

} // namespace

TEST(Poly, ZeroDegreeSentinel) {
    const QPoly z(RationalField{});
    EXPECT_LT(z.degree(), 0);
    EXPECT_LT(z.degree(), qpoly({5}).degree());
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(qpoly({1, 2, 0, 0}).degree(), 1);
}

TEST(Poly, DivRemExamples) {
    const QPoly f = qpoly({1, 0, -2, 1});  // x^3 - 2x^2 + 1
    const QPoly g = qpoly({-3, -1, 1});    // x^2 - x - 3
    auto [q, r] = div_rem(f, g);
    EXPECT_EQ(q, qpoly({-1, 1}));
    EXPECT_EQ(r, qpoly({-2, 2}));
    EXPECT_EQ(g * q + r, f);

    auto [q1, r1] = div_rem(f, f);
    EXPECT_EQ(q1, qpoly({1}));
    EXPECT_TRUE(r1.is_zero());

    auto [q2, r2] = div_rem(g, f);
    EXPECT_TRUE(q2.is_zero());
    EXPECT_EQ(r2, g);
    EXPECT_THROW(div_rem(f, QPoly(RationalField{})), DomainError);
    EXPECT_THROW(fppoly(5, {1, 1}) * fppoly(7, {1, 1}), DomainError);
}

TEST(PolyProperty, DivRemRoundTrip) {
    std::mt19937 rng(1);
    for (int t = 0; t < 1000; ++t) {
        const QPoly f = random_qpoly(rng, 8), g = random_qpoly(rng, 5);
        if (g.is_zero()) continue;
        auto [q, r] = div_rem(f, g);
        EXPECT_EQ(g * q + r, f);
        EXPECT_LT(r.degree(), g.degree());
    }
    for (int t = 0; t < 1000; ++t) {
        const FpPoly f = random_fppoly(rng, 5, 8), g = random_fppoly(rng, 5, 5);
        if (g.is_zero()) continue;
        auto [q, r] = div_rem(f, g);
        EXPECT_EQ(g * q + r, f);
        EXPECT_LT(r.degree(), g.degree());
    }
}

TEST(Poly, XgcdExamples) {
    const QPoly f = qpoly({4, 0, 2});
    const auto x0 = xgcd(f, QPoly(RationalField{}));
    EXPECT_EQ(x0.d, qpoly({2, 0, 1}));
    EXPECT_EQ(x0.a, QPoly::constant(RationalField{}, make_rat(1, 2)));
    EXPECT_TRUE(x0.b.is_zero());

    // distinct monic irreducibles are coprime
    const auto x1 = xgcd(qpoly({-2, 0, 1}), qpoly({-3, 0, 1}));
    EXPECT_EQ(x1.d, qpoly({1}));

    const FpPoly a = fppoly(5, {1, 0, 0, 0, 1}), b = fppoly(5, {2, 2, 3, 1, 1});
    const auto x2 = xgcd(a, b);
    EXPECT_EQ(x2.d, gcd_by_enumeration(a, b, 4));
    EXPECT_EQ(x2.a * a + x2.b * b, x2.d);
    EXPECT_TRUE(x2.d.is_monic());
    EXPECT_THROW(xgcd(QPoly(RationalField{}), QPoly(RationalField{})), DomainError);
}

TEST(PolyProperty, XgcdBezout) {
    std::mt19937 rng(2);
    for (int t = 0; t < 1000; ++t) {
        const QPoly common = random_qpoly(rng, 2);
        const QPoly f = random_qpoly(rng, 5) * common, g = random_qpoly(rng, 5) * common;
        if (f.is_zero() && g.is_zero()) continue;
        const auto r = xgcd(f, g);
        EXPECT_EQ(r.a * f + r.b * g, r.d);
        EXPECT_TRUE(r.d.is_monic());
        if (!f.is_zero()) {
            EXPECT_TRUE((f % r.d).is_zero());
        }
        if (!g.is_zero()) {
            EXPECT_TRUE((g % r.d).is_zero());
        }
        if (!common.is_zero()) {
            EXPECT_TRUE((r.d % common.monic()).is_zero());
        }
    }
    for (int t = 0; t < 300; ++t) {
        const FpPoly f = random_fppoly(rng, 3, 4), g = random_fppoly(rng, 3, 4);
        if (f.is_zero() || g.is_zero()) continue;
        const auto r = xgcd(f, g);
        EXPECT_EQ(r.a * f + r.b * g, r.d);
        EXPECT_EQ(r.d, gcd_by_enumeration(f, g, std::min(f.degree(), g.degree())));
    }
}

TEST(Poly, Derivative) {
    EXPECT_TRUE(derivative(qpoly({7})).is_zero());
    // x^(p^n) - x over F_p has derivative -1
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const PrimeField F(p);
        const FpPoly f = FpPoly::monomial(F, F.one(), p * p) - FpPoly::x(F);
        EXPECT_EQ(derivative(f), FpPoly::constant(F, -F.one()));
    }
    // x^n - 1 -> n x^(n-1)
    for (unsigned n = 1; n < 10; ++n) {
        const QPoly f = QPoly::monomial(RationalField{}, 1, n) - qpoly({1});
        EXPECT_EQ(derivative(f), QPoly::monomial(RationalField{}, Rat(n), n - 1));
    }
    std::mt19937 rng(3);
    for (int t = 0; t < 300; ++t) {
        const QPoly f = random_qpoly(rng, 6), g = random_qpoly(rng, 6);
        EXPECT_EQ(derivative(f * g), derivative(f) * g + f * derivative(g));
        EXPECT_EQ(derivative(f + g), derivative(f) + derivative(g));
    }
}

TEST(Poly, Separability) {
    EXPECT_TRUE(is_separable(qpoly({-3, 0, 1})));
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const PrimeField F(p);
        const FpPoly f = FpPoly::monomial(F, F.one(), p * p * p) - FpPoly::x(F);
        EXPECT_TRUE(is_separable(f));
        const FpPoly g = FpPoly::monomial(F, F.one(), 2 * p) - FpPoly::constant(F, F.one());
        EXPECT_FALSE(is_separable(g));
    }
    EXPECT_FALSE(is_separable(qpoly({1, 2, 1})));
    EXPECT_THROW(is_separable(QPoly(RationalField{})), DomainError);
}

TEST(Poly, CyclotomicList) {
    EXPECT_EQ(cyclotomic(1), qpoly({-1, 1}));
    EXPECT_EQ(cyclotomic(4), qpoly({1, 0, 1}));
    EXPECT_EQ(cyclotomic(6), qpoly({1, -1, 1}));
    EXPECT_EQ(cyclotomic(8), qpoly({1, 0, 0, 0, 1}));
    EXPECT_EQ(cyclotomic(9), qpoly({1, 0, 0, 1, 0, 0, 1}));
    EXPECT_EQ(cyclotomic(10), qpoly({1, -1, 1, -1, 1}));
    EXPECT_EQ(cyclotomic(12), qpoly({1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic(7), qpoly({1, 1, 1, 1, 1, 1, 1}));
    EXPECT_THROW(cyclotomic(0), DomainError);
}

TEST(Poly, CyclotomicProperties) {
    for (unsigned long n = 1; n <= 60; ++n) {
        QPoly prod = qpoly({1});
        for (const auto& d : divisors(Int(n))) prod *= cyclotomic(d.get_ui());
        EXPECT_EQ(prod, QPoly::monomial(RationalField{}, 1, n) - qpoly({1})) << n;
        const QPoly phi = cyclotomic(n);
        EXPECT_TRUE(is_separable(phi));
        EXPECT_EQ(phi.degree(), euler_phi(Int(n)).get_si());
        EXPECT_TRUE(phi[0] == 1 || phi[0] == -1);
        for (const auto& c : phi.coeffs()) EXPECT_EQ(c.get_den(), 1);
    }
}

TEST(Poly, Resultant) {
    const RationalField Q;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) EXPECT_EQ(resultant(qpoly({-a, 1}), qpoly({-b, 1})), Rat(a - b));
    EXPECT_EQ(resultant(qpoly({-2, 0, 1}), qpoly({-3, 0, 1})), 1);
    EXPECT_THROW(resultant(qpoly({1}), QPoly(Q)), DomainError);

    std::mt19937 rng(4);
    int zero_cases = 0;
    for (int t = 0; t < 50; ++t) {
        QPoly f = random_qpoly(rng, 4), g = random_qpoly(rng, 4);
        if (t % 3 == 0) {
            const QPoly c = qpoly({static_cast<long>(rng() % 5) - 2, 1});
            f *= c;
            g *= c;
        }
        if (f.is_zero() || g.is_zero()) continue;
        const Rat r = resultant(f, g);
        EXPECT_EQ(r == 0, gcd(f, g).degree() > 0);
        EXPECT_EQ(r, sylvester_resultant(f, g));
        if (r == 0) ++zero_cases;
    }
    EXPECT_GT(zero_cases, 0);
}

TEST(Poly, SturmCounts) {
    EXPECT_EQ(sturm_real_roots(qpoly({1, 0, 1})), 0);
    EXPECT_EQ(sturm_real_roots(qpoly({-3, 0, 1})), 2);
    const QPoly quintic = qpoly({5, -80, 0, 0, 0, 1});
    EXPECT_EQ(sturm_real_roots(quintic), 3);
    // oracle: sign changes on a rational grid over [-10, 10]
    int changes = 0;
    int last = sgn(quintic.eval(Rat(-10)));
    for (long k = -999; k <= 1000; ++k) {
        const int s = sgn(quintic.eval(make_rat(k, 100)));
        if (s != 0 && s != last) {
            ++changes;
            last = s;
        }
    }
    EXPECT_EQ(changes, 3);
    EXPECT_EQ(sturm_real_roots(qpoly({-2, 0, 0, 0, 0, 1})), 1);
    EXPECT_EQ(sturm_real_roots(qpoly({2, -4, 0, 0, 0, 1})), 3);
    EXPECT_THROW(sturm_real_roots(qpoly({1, 2, 1})), DomainError);
}

TEST(Poly, PrintAndParse) {
    EXPECT_EQ(to_string(qpoly({5, -80, 0, 0, 0, 1})), "x^5 - 80*x + 5");
    EXPECT_EQ(to_string(cyclotomic(12)), "x^4 - x^2 + 1");
    EXPECT_EQ(to_string(qpoly({-1, 1})), "x - 1");
    EXPECT_EQ(to_string(QPoly(RationalField{}, {make_rat(1, 2), Rat(0), make_rat(-3, 4)})), "-3/4*x^2 + 1/2");

    EXPECT_EQ(parse_qpoly("x^5 - 80*x + 5").coeffs(), qpoly({5, -80, 0, 0, 0, 1}).coeffs());
    EXPECT_EQ(parse_qpoly("(x^2-2)*(x^2-3)"), qpoly({6, 0, -5, 0, 1}));
    EXPECT_EQ(parse_qpoly("x"), qpoly({0, 1}));
    EXPECT_EQ(parse_qpoly("2x^2 + 3(x+1)"), qpoly({3, 3, 2}));
    EXPECT_EQ(parse_qpoly("-x^2"), qpoly({0, 0, -1}));
    EXPECT_EQ(parse_qpoly("1/2*x - 3/4"), QPoly(RationalField{}, {make_rat(-3, 4), make_rat(1, 2)}));
    EXPECT_EQ(parse_poly("1/2*x", PrimeField(5)), fppoly(5, {0, 3}));
    EXPECT_THROW(parse_poly("1/5*x", PrimeField(5)), ParseError);
    EXPECT_THROW(parse_qpoly("x^"), ParseError);
    EXPECT_THROW(parse_qpoly("x/x"), ParseError);
    EXPECT_THROW(parse_qpoly("(x+1"), ParseError);
    EXPECT_THROW(parse_qpoly("y+1"), ParseError);
    EXPECT_THROW(parse_qpoly(""), ParseError);
    try {
        parse_qpoly("x + * 2");
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
}

TEST(PolyProperty, PrintParseFixedPoint) {
    std::mt19937 rng(5);
    for (int t = 0; t < 500; ++t) {
        const QPoly f = random_qpoly(rng, 7);
        const std::string s = to_string(f);
        EXPECT_EQ(parse_qpoly(s), f) << s;
        EXPECT_EQ(to_string(parse_qpoly(s)), s);
    }
}
