#pragma once

// Scalar field domains. A domain is a small value describing the field
// (its runtime parameters); elements are plain values with arithmetic
// operators. Polynomials carry their domain so the zero polynomial still
// knows where it lives.

#include <concepts>
#include <cstdint>
#include <string>

#include "error.hpp"
#include "exactnum.hpp"

namespace galoiskit {

template <class F>
concept FieldDomain = requires(const F& f, const typename F::value_type& a, const Rat& q) {
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_rat(q) } -> std::same_as<typename F::value_type>;
    { f.inv(a) } -> std::same_as<typename F::value_type>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.characteristic() } -> std::same_as<Int>;
    { f.format(a) } -> std::same_as<std::string>;
    { a + a } -> std::convertible_to<typename F::value_type>;
    { a - a } -> std::convertible_to<typename F::value_type>;
    { a * a } -> std::convertible_to<typename F::value_type>;
    { -a } -> std::convertible_to<typename F::value_type>;
    { a == a } -> std::convertible_to<bool>;
};

/// The rationals.
struct RationalField {
    using value_type = Rat;

    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat from_rat(const Rat& q) const { return q; }
    Rat from_int(long v) const { return Rat(v); }
    Rat inv(const Rat& a) const {
        if (a == 0) throw DomainError("division by zero in Q");
        return Rat(1 / a);
    }
    bool is_zero(const Rat& a) const { return a == 0; }
    Int characteristic() const { return 0; }
    std::string format(const Rat& a) const { return a.get_str(); }
    /// Printers pull a leading minus sign out of negative coefficients.
    bool is_negative(const Rat& a) const { return sgn(a) < 0; }
    std::string name() const { return "Q"; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Element of F_p; p < 2^63.
struct Zp {
    std::uint64_t v = 0;
    std::uint64_t p = 2;

    friend Zp operator+(Zp a, Zp b) {
        std::uint64_t s = a.v + b.v;
        if (s >= a.p) s -= a.p;
        return {s, a.p};
    }
    friend Zp operator-(Zp a, Zp b) { return {a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p}; }
    friend Zp operator-(Zp a) { return {a.v == 0 ? 0 : a.p - a.v, a.p}; }
    friend Zp operator*(Zp a, Zp b) {
        return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v) * b.v % a.p), a.p};
    }
    friend bool operator==(Zp a, Zp b) { return a.v == b.v; }
};

inline std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on signed 128-bit to stay exact
    __int128 t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        const __int128 q = r / nr;
        const __int128 tt = t - q * nt;
        t = nt;
        nt = tt;
        const __int128 rr = r - q * nr;
        r = nr;
        nr = rr;
    }
    if (r != 1) throw DomainError("element not invertible mod " + std::to_string(p));
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

/// The prime field F_p.
struct PrimeField {
    using value_type = Zp;

    std::uint64_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (!is_prime(Int(static_cast<unsigned long>(prime)))) throw DomainError("modulus " + std::to_string(prime) + " is not prime");
    }

    Zp zero() const { return {0, p}; }
    Zp one() const { return {1 % p, p}; }
    Zp from_int(const Int& a) const { return {mod(a, Int(static_cast<unsigned long>(p))).get_ui(), p}; }
    Zp from_int(long a) const {
        long r = a % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return {static_cast<std::uint64_t>(r), p};
    }
    /// a/b maps to a * b^{-1}; a denominator divisible by p is an error.
    Zp from_rat(const Rat& q) const {
        const Zp den = from_int(Int(q.get_den()));
        if (den.v == 0) throw DomainError("denominator divisible by " + std::to_string(p));
        return from_int(Int(q.get_num())) * inv(den);
    }
    Zp inv(const Zp& a) const {
        if (a.v == 0) throw DomainError("division by zero in F_" + std::to_string(p));
        return {inv_mod_u64(a.v, p), p};
    }
    bool is_zero(const Zp& a) const { return a.v == 0; }
    Int characteristic() const { return Int(static_cast<unsigned long>(p)); }
    std::string format(const Zp& a) const { return std::to_string(a.v); }
    bool is_negative(const Zp&) const { return false; }
    std::string name() const { return "F_" + std::to_string(p); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

} // namespace galoiskit
