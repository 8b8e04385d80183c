#pragma once

// Exact scalars: arbitrary-precision integers and rationals (GMP backed),
// residues modulo m, and the elementary number theory the rest of the
// library leans on.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace galoiskit {

using Int = mpz_class;
using Rat = mpq_class;

/// Normalized rational num/den. Throws on a zero denominator.
inline Rat make_rat(const Int& num, const Int& den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sgn(const Int& a) { return ::sgn(a); }
inline int sgn(const Rat& a) { return ::sgn(a); }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// Non-negative remainder of a modulo m (m > 0).
inline Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow(const Rat& base, unsigned long e) {
    Rat r(pow(base.get_num(), e), pow(base.get_den(), e));
    return r;  // already canonical
}

inline bool fits_long(const Int& a) { return a.fits_slong_p(); }

/// Element of Z/mZ with 0 <= value < modulus, modulus >= 2.
class Residue {
public:
    Residue(const Int& value, const Int& modulus) : modulus_(modulus) {
        if (modulus < 2) throw DomainError("residue modulus must be >= 2");
        value_ = galoiskit::mod(value, modulus);
    }

    const Int& value() const { return value_; }
    const Int& modulus() const { return modulus_; }

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.modulus_ == b.modulus_ && a.value_ == b.value_;
    }
    friend Residue operator+(const Residue& a, const Residue& b) {
        check_same(a, b);
        return Residue(a.value_ + b.value_, a.modulus_);
    }
    friend Residue operator-(const Residue& a, const Residue& b) {
        check_same(a, b);
        return Residue(a.value_ - b.value_, a.modulus_);
    }
    friend Residue operator*(const Residue& a, const Residue& b) {
        check_same(a, b);
        return Residue(a.value_ * b.value_, a.modulus_);
    }

private:
    static void check_same(const Residue& a, const Residue& b) {
        if (a.modulus_ != b.modulus_) throw DomainError("residue modulus mismatch");
    }

    Int value_;
    Int modulus_;
};

/// a^e mod m by square-and-multiply; e >= 0, m >= 2.
inline Residue pow_mod(const Int& a, const Int& e, const Int& m) {
    if (e < 0) throw DomainError("pow_mod: negative exponent");
    if (m < 2) throw DomainError("pow_mod: modulus must be >= 2");
    Int base = galoiskit::mod(a, m);
    Int result = 1;
    Int exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = galoiskit::mod(result * base, m);
        base = galoiskit::mod(base * base, m);
        exp >>= 1;
    }
    return Residue(result, m);
}

/// Inverse of a modulo m; throws when gcd(a, m) != 1.
inline Int inverse_mod(const Int& a, const Int& m) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("no inverse modulo " + m.get_str());
    return inv;
}

/// The unique x mod m1*m2 with x = r1 (m1) and x = r2 (m2).
inline Residue crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
    if (m1 < 1 || m2 < 1) throw DomainError("crt: moduli must be positive");
    if (gcd(m1, m2) != 1) throw DomainError("crt: moduli not coprime, no unique solution");
    const Int m = m1 * m2;
    if (m < 2) return Residue(0, 2);  // degenerate 1*1; callers never rely on it
    // x = r1 + m1 * ((r2 - r1) * m1^{-1} mod m2)
    Int t = 0;
    if (m2 > 1) t = galoiskit::mod((r2 - r1) * inverse_mod(galoiskit::mod(m1, m2), m2), m2);
    return Residue(r1 + m1 * t, m);
}

/// Prime power factorization by trial division, primes increasing.
inline std::vector<std::pair<Int, unsigned>> factor_int(const Int& n) {
    if (n < 1) throw DomainError("factor_int: n must be >= 1");
    std::vector<std::pair<Int, unsigned>> out;
    Int rest = n;
    for (Int p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    }
    if (rest > 1) out.emplace_back(rest, 1u);
    return out;
}

/// Trial division up to 10^12; above that GMP's BPSW test, which has no
/// known counterexample and is exact below 2^64.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    if (n >= Int("1000000000000")) return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
    for (Int d = 3; d * d <= n; d += 2)
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
    return true;
}

inline Int next_prime(const Int& n) {
    Int c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

/// Count of 1 <= m <= n with gcd(m, n) = 1.
inline Int euler_phi(const Int& n) {
    if (n < 1) throw DomainError("euler_phi: n must be >= 1");
    Int phi = n;
    for (const auto& [p, e] : factor_int(n)) phi = phi / p * (p - 1);
    return phi;
}

inline bool is_power_of_two(const Int& n) {
    return n > 0 && mpz_popcount(n.get_mpz_t()) == 1;
}

/// True iff p is prime and p = 2^(2^k) + 1 for some k >= 0.
inline bool is_fermat_prime(const Int& p) {
    if (p < 3 || !is_prime(p)) return false;
    const Int m = p - 1;
    if (!is_power_of_two(m)) return false;
    const auto exponent = mpz_sizeinbase(m.get_mpz_t(), 2) - 1;
    return exponent == 0 || (exponent & (exponent - 1)) == 0;
}

/// Positive divisors of n, increasing.
inline std::vector<Int> divisors(const Int& n) {
    std::vector<Int> ds{1};
    for (const auto& [p, e] : factor_int(n)) {
        const std::size_t base = ds.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

/// Decimal text of a rational, "a" or "a/b".
inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& r) { return r.get_str(); }

} // namespace galoiskit
