#pragma once

// Finite fields F_{p^n} = F_p[x]/(m) with m the least monic irreducible of
// degree n in lexicographic order, Frobenius and the subfield lattice.

#include <string>
#include <vector>

#include "error.hpp"
#include "exactnum.hpp"
#include "factor.hpp"
#include "fields.hpp"
#include "poly.hpp"

namespace galoiskit {

inline constexpr std::uint64_t kMaxFiniteFieldOrder = 1u << 20;

struct FiniteField {
    std::uint64_t p = 2;
    int n = 1;
    FpPoly modulus;

    PrimeField base() const { return PrimeField(p); }
    std::uint64_t order() const {
        std::uint64_t q = 1;
        for (int i = 0; i < n; ++i) q *= p;
        return q;
    }

    FpPoly reduce(const FpPoly& a) const { return a % modulus; }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const { return (a * b) % modulus; }
    FpPoly pow(const FpPoly& a, const Int& e) const { return detail::powmod(a, e, modulus); }
    FpPoly frobenius(const FpPoly& a) const { return pow(a, Int(static_cast<unsigned long>(p))); }
    FpPoly generator() const { return reduce(FpPoly::x(modulus.field())); }

    /// Element with base-p digits of code as coefficients, c0 least significant.
    FpPoly element(std::uint64_t code) const {
        const PrimeField F = modulus.field();
        std::vector<Zp> cs;
        for (int i = 0; i < n; ++i) {
            cs.push_back(F.from_int(static_cast<long>(code % p)));
            code /= p;
        }
        return FpPoly(F, std::move(cs));
    }

    std::uint64_t code(const FpPoly& a) const {
        std::uint64_t c = 0;
        for (int i = n; i-- > 0;) c = c * p + a.coeff(static_cast<std::size_t>(i)).v;
        return c;
    }

    std::vector<FpPoly> elements() const {
        std::vector<FpPoly> out;
        const std::uint64_t q = order();
        out.reserve(q);
        for (std::uint64_t c = 0; c < q; ++c) out.push_back(element(c));
        return out;
    }

    std::string describe() const {
        if (n == 1) return "F_" + std::to_string(p);
        return "F_" + std::to_string(p) + "[a]/(" + to_string(modulus, "a") + ")";
    }
};

/// Monic polynomial x^n + (digits of code) over F_p.
inline FpPoly monic_from_code(const PrimeField& F, int n, std::uint64_t code) {
    std::vector<Zp> cs;
    for (int i = 0; i < n; ++i) {
        cs.push_back(F.from_int(static_cast<long>(code % F.p)));
        code /= F.p;
    }
    cs.push_back(F.one());
    return FpPoly(F, std::move(cs));
}

inline FiniteField finite_field(std::uint64_t p, int n) {
    if (n < 1) throw DomainError("finite_field: n must be >= 1");
    if (!is_prime(Int(static_cast<unsigned long>(p)))) throw DomainError("finite_field: " + std::to_string(p) + " is not prime");
    std::uint64_t q = 1;
    for (int i = 0; i < n; ++i) {
        if (q > kMaxFiniteFieldOrder / p) throw DomainError("finite_field: p^n exceeds 2^20");
        q *= p;
    }
    const PrimeField F(p);
    // lexicographic on (c_{n-1}, ..., c_0) is numeric order on the code
    for (std::uint64_t code = 0; code < q; ++code) {
        FpPoly m = monic_from_code(F, n, code);
        if (n == 1 || is_irreducible(m)) {
            FiniteField K{p, n, std::move(m)};
            if (K.elements().size() != q) throw InternalError("finite_field: element count mismatch");
            return K;
        }
    }
    throw InternalError("finite_field: no irreducible polynomial of degree " + std::to_string(n));
}

/// Order of a -> a^p as an automorphism: the generator determines it.
inline int frobenius_order(const FiniteField& K) {
    const FpPoly g = K.generator();
    FpPoly y = K.frobenius(g);
    int k = 1;
    while (!(y == g)) {
        y = K.frobenius(y);
        ++k;
        if (k > K.n) throw InternalError("frobenius_order: exceeds extension degree");
    }
    return k;
}

namespace detail {

// Matrix of a -> a^(p^d) on the basis 1, x, ..., x^(n-1), row-major.
inline std::vector<std::vector<Zp>> frobenius_matrix(const FiniteField& K, int d) {
    const PrimeField F = K.base();
    const std::size_t n = static_cast<std::size_t>(K.n);
    std::vector<std::vector<Zp>> M(n, std::vector<Zp>(n, F.zero()));
    Int e = 1;
    for (int i = 0; i < d; ++i) e *= static_cast<unsigned long>(K.p);
    const FpPoly xq = K.pow(K.generator(), e);
    FpPoly col = FpPoly::constant(F, F.one());
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) M[i][j] = col.coeff(i);
        col = K.mul(col, xq);
    }
    return M;
}

} // namespace detail

/// F_p-dimension of the fixed set of a -> a^(p^d).
inline int fixed_dimension(const FiniteField& K, int d) {
    auto M = detail::frobenius_matrix(K, d);
    const PrimeField F = K.base();
    for (std::size_t i = 0; i < M.size(); ++i) M[i][i] = M[i][i] - F.one();
    return static_cast<int>(detail::null_space_fp(std::move(M), F).size());
}

/// Degrees d over F_p of the subfields of F_{p^n}: those d whose Frobenius
/// power a -> a^(p^d) fixes exactly p^d elements.
inline std::vector<int> ff_subfields(std::uint64_t p, int n) {
    const FiniteField K = finite_field(p, n);
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (fixed_dimension(K, d) == d) out.push_back(d);
    return out;
}

} // namespace galoiskit
