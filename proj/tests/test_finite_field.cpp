#include <gtest/gtest.h>

#include <galoiskit/finite_field.hpp>

#include <set>

using namespace galoiskit;

namespace {

// Irreducibility by brute force: no monic factor of degree <= n/2.
bool irreducible_by_search(const FpPoly& f) {
    const PrimeField F = f.field();
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= F.p;
        for (std::uint64_t c = 0; c < count; ++c)
            if ((f % monic_from_code(F, d, c)).is_zero()) return false;
    }
    return true;
}

std::uint64_t multiplicative_order(const FiniteField& K, const FpPoly& a) {
    const FpPoly one = K.reduce(FpPoly::constant(a.field(), a.field().one()));
    FpPoly y = a;
    std::uint64_t k = 1;
    while (!(y == one)) {
        y = K.mul(y, a);
        ++k;
    }
    return k;
}

} // namespace

TEST(FiniteField, FourElements) {
    const FiniteField K = finite_field(2, 2);
    EXPECT_EQ(K.modulus, fppoly(2, {1, 1, 1}));
    EXPECT_EQ(K.order(), 4u);
    std::set<std::uint64_t> codes;
    for (const auto& a : K.elements()) codes.insert(K.code(a));
    EXPECT_EQ(codes.size(), 4u);
    EXPECT_EQ(K.describe(), "F_2[a]/(a^2 + a + 1)");
}

TEST(FiniteField, PrimeFieldItself) {
    const FiniteField K = finite_field(7, 1);
    EXPECT_EQ(K.order(), 7u);
    EXPECT_EQ(frobenius_order(K), 1);
    EXPECT_EQ(K.describe(), "F_7");
}

TEST(FiniteField, NineElementsCyclicGroup) {
    const FiniteField K = finite_field(3, 2);
    EXPECT_EQ(K.order(), 9u);
    std::uint64_t best = 0;
    for (const auto& a : K.elements())
        if (!a.is_zero()) best = std::max(best, multiplicative_order(K, a));
    EXPECT_EQ(best, 8u);
    // the powers of an element of order 8 are every nonzero element
    for (const auto& a : K.elements()) {
        if (a.is_zero() || multiplicative_order(K, a) != 8) continue;
        std::set<std::uint64_t> powers;
        FpPoly y = a;
        for (int i = 0; i < 8; ++i) {
            powers.insert(K.code(y));
            y = K.mul(y, a);
        }
        EXPECT_EQ(powers.size(), 8u);
        EXPECT_FALSE(powers.count(0));
        break;
    }
}

TEST(FiniteField, ModulusIsLeastIrreducible) {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 3}}) {
        const FiniteField K = finite_field(p, n);
        const PrimeField F(p);
        std::uint64_t first = 0;
        while (!irreducible_by_search(monic_from_code(F, n, first))) ++first;
        EXPECT_EQ(K.modulus, monic_from_code(F, n, first)) << p << "^" << n;
    }
    EXPECT_EQ(finite_field(2, 4).modulus, fppoly(2, {1, 1, 0, 0, 1}));
}

TEST(FiniteField, EveryElementSatisfiesFieldEquation) {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, int>>{{2, 4}, {3, 3}, {5, 2}, {2, 6}}) {
        const FiniteField K = finite_field(p, n);
        const Int q(static_cast<unsigned long>(K.order()));
        for (const auto& a : K.elements()) EXPECT_EQ(K.pow(a, q), a);
    }
}

TEST(FiniteField, Frobenius) {
    EXPECT_EQ(frobenius_order(finite_field(2, 2)), 2);
    EXPECT_EQ(frobenius_order(finite_field(2, 4)), 4);
    EXPECT_EQ(frobenius_order(finite_field(3, 5)), 5);
    const FiniteField K = finite_field(2, 4);
    std::vector<FpPoly> fixed;
    for (const auto& a : K.elements())
        if (K.frobenius(K.frobenius(a)) == a) fixed.push_back(a);
    ASSERT_EQ(fixed.size(), 4u);
    // closed under multiplication and addition
    for (const auto& a : fixed)
        for (const auto& b : fixed) {
            EXPECT_NE(std::find(fixed.begin(), fixed.end(), K.mul(a, b)), fixed.end());
            EXPECT_NE(std::find(fixed.begin(), fixed.end(), K.reduce(a + b)), fixed.end());
        }
}

TEST(FiniteField, Subfields) {
    EXPECT_EQ(ff_subfields(2, 4), (std::vector<int>{1, 2, 4}));
    EXPECT_EQ(ff_subfields(2, 1), (std::vector<int>{1}));
    EXPECT_EQ(ff_subfields(2, 6), (std::vector<int>{1, 2, 3, 6}));
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, int>>{{2, 12}, {3, 6}, {5, 4}, {7, 2}, {2, 7}}) {
        std::vector<int> divs;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) divs.push_back(d);
        EXPECT_EQ(ff_subfields(p, n), divs);
        // fixed set of the d-th power has p^d elements, counted directly
        const FiniteField K = finite_field(p, n);
        if (K.order() > 4096) continue;
        for (int d : divs) {
            Int e = 1;
            for (int i = 0; i < d; ++i) e *= static_cast<unsigned long>(p);
            std::uint64_t count = 0;
            for (const auto& a : K.elements()) count += K.pow(a, e) == a;
            std::uint64_t pd = 1;
            for (int i = 0; i < d; ++i) pd *= p;
            EXPECT_EQ(count, pd);
        }
    }
}

TEST(FiniteField, Bounds) {
    EXPECT_THROW(finite_field(4, 2), DomainError);
    EXPECT_THROW(finite_field(2, 21), DomainError);
    EXPECT_THROW(finite_field(2, 0), DomainError);
    EXPECT_NO_THROW(finite_field(2, 20));
}
