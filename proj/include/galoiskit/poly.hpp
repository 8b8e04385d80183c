#pragma once

// Dense univariate polynomials over an exact field domain, with the
// Euclidean toolkit (division, xgcd), derivative and separability,
// resultants, Sturm counting and cyclotomic polynomials.

#include <climits>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "exactnum.hpp"
#include "fields.hpp"

namespace galoiskit {

/// Degree of the zero polynomial: below every real degree, and still safe
/// to add to another degree without overflow.
inline constexpr int kZeroPolyDegree = INT_MIN / 4;

template <FieldDomain F>
class Poly {
public:
    using Scalar = typename F::value_type;

    Poly() = default;
    explicit Poly(F field) : field_(std::move(field)) {}
    Poly(F field, std::vector<Scalar> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const F& field, const Scalar& c) { return Poly(field, {c}); }

    static Poly monomial(const F& field, const Scalar& c, std::size_t k) {
        std::vector<Scalar> cs(k + 1, field.zero());
        cs[k] = c;
        return Poly(field, std::move(cs));
    }

    static Poly x(const F& field) { return monomial(field, field.one(), 1); }

    const F& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kZeroPolyDegree : static_cast<int>(c_.size()) - 1; }
    /// Number of stored coefficients (degree + 1, or 0).
    std::size_t size() const { return c_.size(); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }

    const Scalar& lc() const {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

    Scalar eval(const Scalar& a) const {
        Scalar acc = field_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
        return acc;
    }

    Poly monic() const {
        if (c_.empty()) return *this;
        const Scalar inv = field_.inv(c_.back());
        return scaled(inv);
    }

    Poly scaled(const Scalar& s) const {
        std::vector<Scalar> cs;
        cs.reserve(c_.size());
        for (const auto& c : c_) cs.push_back(c * s);
        return Poly(field_, std::move(cs));
    }

    /// Multiply by x^k.
    Poly shifted(std::size_t k) const {
        if (c_.empty()) return *this;
        std::vector<Scalar> cs(k, field_.zero());
        cs.insert(cs.end(), c_.begin(), c_.end());
        return Poly(field_, std::move(cs));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_same(a, b);
        std::vector<Scalar> cs(std::max(a.size(), b.size()), a.field_.zero());
        for (std::size_t i = 0; i < a.size(); ++i) cs[i] = a.c_[i];
        for (std::size_t i = 0; i < b.size(); ++i) cs[i] = cs[i] + b.c_[i];
        return Poly(a.field_, std::move(cs));
    }

    friend Poly operator-(const Poly& a) {
        std::vector<Scalar> cs;
        cs.reserve(a.size());
        for (const auto& c : a.c_) cs.push_back(-c);
        return Poly(a.field_, std::move(cs));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        check_same(a, b);
        std::vector<Scalar> cs(std::max(a.size(), b.size()), a.field_.zero());
        for (std::size_t i = 0; i < a.size(); ++i) cs[i] = a.c_[i];
        for (std::size_t i = 0; i < b.size(); ++i) cs[i] = cs[i] - b.c_[i];
        return Poly(a.field_, std::move(cs));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(a.field_);
        std::vector<Scalar> cs(a.size() + b.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.field_.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) cs[i + j] = cs[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(a.field_, std::move(cs));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

private:
    static void check_same(const Poly& a, const Poly& b) {
        if (!(a.field_ == b.field_)) throw DomainError("polynomials over different fields");
    }

    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }

    F field_{};
    std::vector<Scalar> c_;
};

using QPoly = Poly<RationalField>;
using FpPoly = Poly<PrimeField>;

/// Polynomial over Q from integer coefficients, constant term first.
inline QPoly qpoly(std::initializer_list<long> coeffs) {
    std::vector<Rat> cs;
    for (long c : coeffs) cs.emplace_back(c);
    return QPoly(RationalField{}, std::move(cs));
}

inline FpPoly fppoly(std::uint64_t p, std::initializer_list<long> coeffs) {
    PrimeField F(p);
    std::vector<Zp> cs;
    for (long c : coeffs) cs.push_back(F.from_int(c));
    return FpPoly(F, std::move(cs));
}

template <FieldDomain F>
Poly<F> pow(const Poly<F>& f, unsigned long e) {
    Poly<F> result = Poly<F>::constant(f.field(), f.field().one());
    Poly<F> base = f;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

template <FieldDomain F>
struct DivRem {
    Poly<F> quotient;
    Poly<F> remainder;
};

/// f = g*q + r with deg r < deg g.
template <FieldDomain F>
DivRem<F> div_rem(const Poly<F>& f, const Poly<F>& g) {
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    if (!(f.field() == g.field())) throw DomainError("polynomials over different fields");
    const F& K = f.field();
    if (f.degree() < g.degree()) return {Poly<F>(K), f};
    using S = typename F::value_type;
    std::vector<S> r = f.coeffs();
    const std::size_t dg = g.size() - 1;
    std::vector<S> q(f.size() - dg, K.zero());
    const S inv_lc = K.inv(g.lc());
    const bool monic = g.lc() == K.one();
    for (std::size_t k = q.size(); k-- > 0;) {
        S coef = r[k + dg];
        if (K.is_zero(coef)) continue;
        if (!monic) coef = coef * inv_lc;
        q[k] = coef;
        for (std::size_t j = 0; j <= dg; ++j) r[k + j] = r[k + j] - coef * g[j];
    }
    r.resize(dg);
    return {Poly<F>(K, std::move(q)), Poly<F>(K, std::move(r))};
}

template <FieldDomain F>
Poly<F> operator%(const Poly<F>& f, const Poly<F>& g) {
    return div_rem(f, g).remainder;
}

template <FieldDomain F>
Poly<F> operator/(const Poly<F>& f, const Poly<F>& g) {
    return div_rem(f, g).quotient;
}

/// Exact division; throws when g does not divide f.
template <FieldDomain F>
Poly<F> exact_div(const Poly<F>& f, const Poly<F>& g) {
    auto [q, r] = div_rem(f, g);
    if (!r.is_zero()) throw InternalError("exact_div: nonzero remainder");
    return q;
}

template <FieldDomain F>
struct XGcd {
    Poly<F> d;  // monic gcd
    Poly<F> a;
    Poly<F> b;  // d = a*f + b*g
};

template <FieldDomain F>
XGcd<F> xgcd(const Poly<F>& f, const Poly<F>& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("xgcd of two zero polynomials");
    const F& K = f.field();
    Poly<F> r0 = f, r1 = g;
    Poly<F> s0 = Poly<F>::constant(K, K.one()), s1(K);
    Poly<F> t0(K), t1 = Poly<F>::constant(K, K.one());
    while (!r1.is_zero()) {
        auto [q, r] = div_rem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<F> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const auto inv = K.inv(r0.lc());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <FieldDomain F>
Poly<F> gcd(const Poly<F>& f, const Poly<F>& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
    Poly<F> a = f, b = g;
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <FieldDomain F>
Poly<F> derivative(const Poly<F>& f) {
    const F& K = f.field();
    if (f.size() <= 1) return Poly<F>(K);
    std::vector<typename F::value_type> cs;
    cs.reserve(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) cs.push_back(f[i] * K.from_rat(Rat(static_cast<unsigned long>(i))));
    return Poly<F>(K, std::move(cs));
}

/// f is prime to its derivative.
template <FieldDomain F>
bool is_separable(const Poly<F>& f) {
    if (f.is_zero()) throw DomainError("is_separable: zero polynomial");
    if (f.degree() == 0) return true;
    return gcd(f, derivative(f)).degree() == 0;
}

/// f divided by gcd(f, f'); valid in characteristic zero (and whenever
/// f' != 0 is enough, which the callers guarantee).
template <FieldDomain F>
Poly<F> squarefree_part(const Poly<F>& f) {
    if (f.degree() <= 0) return f;
    const Poly<F> g = gcd(f, derivative(f));
    return exact_div(f, g).monic();
}

/// f(g(x)).
template <FieldDomain F>
Poly<F> compose(const Poly<F>& f, const Poly<F>& g) {
    Poly<F> acc(f.field());
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * g + Poly<F>::constant(f.field(), f[i]);
    return acc;
}

/// f(x + c).
template <FieldDomain F>
Poly<F> taylor_shift(const Poly<F>& f, const typename F::value_type& c) {
    const F& K = f.field();
    return compose(f, Poly<F>(K, {c, K.one()}));
}

/// lc(f)^deg g * lc(g)^deg f * prod (a_i - b_j) over roots.
template <FieldDomain F>
typename F::value_type resultant(const Poly<F>& f, const Poly<F>& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
    const F& K = f.field();
    using S = typename F::value_type;
    auto power = [&](S base, long e) {
        S r = K.one();
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    };
    Poly<F> a = f, b = g;
    S acc = K.one();
    for (;;) {
        const long da = a.degree(), db = b.degree();
        if (db == 0) return acc * power(b.lc(), da);
        if (da == 0) return acc * power(a.lc(), db);
        Poly<F> r = a % b;
        if (r.is_zero()) return K.zero();
        const long dr = r.degree();
        if ((da * db) % 2 == 1) acc = -acc;
        acc = acc * power(b.lc(), da - dr);
        a = std::move(b);
        b = std::move(r);
    }
}

/// Number of distinct real roots of a squarefree polynomial over Q, by
/// sign variations of the Sturm sequence at -inf and +inf.
inline long sturm_real_roots(const QPoly& f) {
    if (f.is_zero()) throw DomainError("sturm_real_roots: zero polynomial");
    if (f.degree() == 0) return 0;
    if (!is_separable(f)) throw DomainError("sturm_real_roots: polynomial is not squarefree");
    std::vector<QPoly> seq{f, derivative(f)};
    while (seq.back().degree() > 0) {
        QPoly r = seq[seq.size() - 2] % seq.back();
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    auto variations = [&](bool at_plus) {
        long v = 0;
        int last = 0;
        for (const auto& p : seq) {
            int s = sgn(p.lc());
            if (!at_plus && p.degree() % 2 == 1) s = -s;
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    };
    return variations(false) - variations(true);
}

namespace detail {

struct CyclotomicCache {
    std::mutex mu;
    std::map<unsigned long, QPoly> table;
};

inline CyclotomicCache& cyclotomic_cache() {
    static CyclotomicCache cache;
    return cache;
}

} // namespace detail

/// n-th cyclotomic polynomial: x^n - 1 divided by every Phi_d with d | n, d < n.
inline QPoly cyclotomic(unsigned long n) {
    if (n == 0) throw DomainError("cyclotomic: n must be >= 1");
    auto& cache = detail::cyclotomic_cache();
    {
        std::lock_guard lock(cache.mu);
        if (auto it = cache.table.find(n); it != cache.table.end()) return it->second;
    }
    const RationalField Q;
    QPoly num = QPoly::monomial(Q, Rat(1), n) - QPoly::constant(Q, Rat(1));
    for (const auto& d : divisors(Int(n))) {
        if (d == n) continue;
        num = exact_div(num, cyclotomic(d.get_ui()));
    }
    std::lock_guard lock(cache.mu);
    cache.table.emplace(n, num);
    return num;
}

/// Canonical text: descending powers, "x^5 - 80*x + 5".
template <FieldDomain F>
std::string to_string(const Poly<F>& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    const F& K = f.field();
    std::string out;
    bool first = true;
    for (std::size_t k = f.size(); k-- > 0;) {
        const auto& c = f[k];
        if (K.is_zero(c)) continue;
        const bool neg = K.is_negative(c);
        typename F::value_type mag = c;
        if (neg) mag = -c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string body = K.format(mag);
        const bool unit = mag == K.one();
        const bool compound = body.find_first_of(" +-", 1) != std::string::npos ||
                              (!body.empty() && body[0] == '-');
        if (compound) body = "(" + body + ")";
        if (k == 0) {
            out += body;
            continue;
        }
        if (!unit) out += body + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

} // namespace galoiskit
