#pragma once

// Irreducibility tests and complete factorization over F_p (Berlekamp),
// over Q (Zassenhaus: modular factorization, quadratic Hensel lifting,
// subset recombination) and over number fields (Trager's norm method).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "error.hpp"
#include "exactnum.hpp"
#include "fields.hpp"
#include "linalg.hpp"
#include "number_field.hpp"
#include "poly.hpp"

namespace galoiskit {

enum class LowDegreeVerdict { Irreducible, Reducible, Inconclusive };

inline bool scalar_less(const Rat& a, const Rat& b) { return a < b; }
inline bool scalar_less(const Zp& a, const Zp& b) { return a.v < b.v; }
inline bool scalar_less(const NFElement& a, const NFElement& b) { return coords_less(a, b); }

/// Canonical order: degree, then coefficients from the leading one down.
template <FieldDomain F>
bool canonical_less(const Poly<F>& a, const Poly<F>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t k = a.size(); k-- > 0;) {
        if (scalar_less(a[k], b[k])) return true;
        if (scalar_less(b[k], a[k])) return false;
    }
    return false;
}

template <FieldDomain F>
struct Factorization {
    F field;
    typename F::value_type unit;
    std::vector<std::pair<Poly<F>, unsigned>> factors;

    /// unit * prod f_i^m_i
    Poly<F> expand() const {
        Poly<F> acc = Poly<F>::constant(field, unit);
        for (const auto& [f, m] : factors) acc = acc * pow(f, m);
        return acc;
    }

    bool is_irreducible() const { return factors.size() == 1 && factors[0].second == 1; }

    std::size_t count_with_multiplicity() const {
        std::size_t n = 0;
        for (const auto& fm : factors) n += fm.second;
        return n;
    }

    void sort() {
        std::sort(factors.begin(), factors.end(),
                  [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
    }
};

using QFactorization = Factorization<RationalField>;
using FpFactorization = Factorization<PrimeField>;
using KFactorization = Factorization<NumberFieldDomain>;

/// "(x - 1)*(x + 1)^2"; the unit is shown only when it is not 1.
template <FieldDomain F>
std::string to_string(const Factorization<F>& fac, const std::string& var = "x") {
    std::string out;
    const F& K = fac.field;
    if (!(fac.unit == K.one()) || fac.factors.empty()) {
        std::string u = K.format(fac.unit);
        if (u.find_first_of(" +-", 1) != std::string::npos) u = "(" + u + ")";
        out = u;
    }
    for (const auto& [f, m] : fac.factors) {
        if (!out.empty()) out += "*";
        out += "(" + to_string(f, var) + ")";
        if (m > 1) out += "^" + std::to_string(m);
    }
    return out;
}

struct FactorOptions {
    int max_degree = 30;
    /// Caller guarantees the input is squarefree; skips the gcd split.
    bool assume_squarefree = false;
    /// Subset trials allowed during recombination before giving up.
    std::size_t recombination_budget = 1u << 20;
};

struct NumberFieldFactorOptions {
    /// Bound on [K:Q] * deg f, the degree of the norm polynomial.
    int max_norm_degree = 64;
    std::size_t recombination_budget = 1u << 20;
};

namespace detail {

/// Squarefree decomposition in characteristic zero (Yun). f monic, deg >= 1.
template <FieldDomain F>
std::vector<std::pair<Poly<F>, unsigned>> yun_squarefree(const Poly<F>& f) {
    std::vector<std::pair<Poly<F>, unsigned>> out;
    const Poly<F> df = derivative(f);
    const Poly<F> a0 = gcd(f, df);
    Poly<F> b = exact_div(f, a0);
    Poly<F> c = exact_div(df, a0);
    Poly<F> d = c - derivative(b);
    unsigned i = 1;
    while (b.degree() > 0) {
        const Poly<F> a = gcd(b, d);
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - derivative(b);
        if (a.degree() > 0) out.emplace_back(a.monic(), i);
        ++i;
    }
    return out;
}

// ---------- F_p ----------

inline FpPoly powmod(const FpPoly& base, Int e, const FpPoly& m) {
    const PrimeField& K = m.field();
    FpPoly result = FpPoly::constant(K, K.one()) % m;
    FpPoly b = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = (result * b) % m;
        e >>= 1;
        if (e > 0) b = (b * b) % m;
    }
    return result;
}

inline FpPoly pth_root(const FpPoly& f) {
    const PrimeField& K = f.field();
    const std::size_t p = K.p;
    std::vector<Zp> cs;
    for (std::size_t i = 0; i < f.size(); i += p) cs.push_back(f[i]);
    return FpPoly(K, std::move(cs));
}

/// f monic, deg >= 1.
inline std::vector<std::pair<FpPoly, unsigned>> squarefree_fp(const FpPoly& f) {
    std::vector<std::pair<FpPoly, unsigned>> out;
    const PrimeField& K = f.field();
    const unsigned p = static_cast<unsigned>(K.p);
    const FpPoly df = derivative(f);
    if (df.is_zero()) {
        for (auto& [g, m] : squarefree_fp(pth_root(f))) out.emplace_back(std::move(g), m * p);
        return out;
    }
    FpPoly c = gcd(f, df);
    FpPoly w = exact_div(f, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        const FpPoly y = gcd(w, c);
        const FpPoly z = exact_div(w, y);
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        ++i;
        w = y;
        c = exact_div(c, y);
    }
    if (c.degree() > 0)
        for (auto& [g, m] : squarefree_fp(pth_root(c.monic()))) out.emplace_back(std::move(g), m * p);
    return out;
}

/// Null space of an n x n matrix over F_p (row-major).
inline std::vector<std::vector<Zp>> null_space_fp(std::vector<std::vector<Zp>> A, const PrimeField& K) {
    const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t piv = row;
        while (piv < rows && A[piv][c].v == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[row]);
        const Zp inv = K.inv(A[row][c]);
        for (auto& x : A[row]) x = x * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || A[r][c].v == 0) continue;
            const Zp f = A[r][c];
            for (std::size_t k = 0; k < cols; ++k) A[r][k] = A[r][k] - f * A[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Zp>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Zp> v(cols, K.zero());
        v[free] = K.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -A[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Irreducible factors of a monic squarefree f over F_p (Berlekamp).
inline std::vector<FpPoly> berlekamp(const FpPoly& f) {
    const PrimeField& K = f.field();
    const int n = f.degree();
    if (n <= 1) return {f};
    const Int p = K.characteristic();
    // row i = x^(i p) mod f
    std::vector<FpPoly> rows;
    rows.reserve(n);
    const FpPoly xp = powmod(FpPoly::x(K), p, f);
    FpPoly cur = FpPoly::constant(K, K.one());
    for (int i = 0; i < n; ++i) {
        rows.push_back(cur);
        cur = (cur * xp) % f;
    }
    // (Q - I)^T v = 0
    std::vector<std::vector<Zp>> A(n, std::vector<Zp>(n, K.zero()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Zp q = rows[i].coeff(j);
            if (i == j) q = q - K.one();
            A[j][i] = q;
        }
    const auto kernel = null_space_fp(std::move(A), K);
    const std::size_t k = kernel.size();
    if (k == 1) return {f};

    std::vector<FpPoly> basis;
    for (const auto& v : kernel) {
        FpPoly b(K, v);
        if (b.degree() > 0) basis.push_back(std::move(b));
    }
    std::vector<FpPoly> factors{f};
    auto refine = [&](const FpPoly& splitter) {
        std::vector<FpPoly> next;
        for (const auto& h : factors) {
            if (h.degree() <= 1) {
                next.push_back(h);
                continue;
            }
            const FpPoly g = gcd(h, splitter % h);
            if (g.degree() > 0 && g.degree() < h.degree()) {
                next.push_back(g);
                next.push_back(exact_div(h, g).monic());
            } else {
                next.push_back(h);
            }
        }
        factors = std::move(next);
    };
    if (K.p <= 1000) {
        for (const auto& b : basis) {
            for (std::uint64_t s = 0; s < K.p && factors.size() < k; ++s)
                refine(b - FpPoly::constant(K, Zp{s, K.p}));
            if (factors.size() == k) break;
        }
    } else {
        // random combinations of the kernel basis, split by v^((p-1)/2) - 1
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        const Int e = (p - 1) / 2;
        for (int attempt = 0; factors.size() < k; ++attempt) {
            if (attempt > 2000) throw InternalError("berlekamp: random splitting did not converge");
            FpPoly v(K);
            for (const auto& b : basis) v = v + b.scaled(Zp{rng() % K.p, K.p});
            if (v.degree() <= 0) continue;
            refine(powmod(v, e, f) - FpPoly::constant(K, K.one()));
        }
    }
    if (factors.size() != k) throw InternalError("berlekamp: factor count mismatch");
    return factors;
}

// ---------- integer polynomials (coefficient vectors, constant first) ----------

using ZPoly = std::vector<Int>;

inline void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int zdeg(const ZPoly& a) { return a.empty() ? kZeroPolyDegree : static_cast<int>(a.size()) - 1; }

inline ZPoly zmod(ZPoly a, const Int& m) {
    for (auto& c : a) c = mod(c, m);
    ztrim(a);
    return a;
}

/// Symmetric residues in (-m/2, m/2].
inline ZPoly zsymmod(ZPoly a, const Int& m) {
    const Int half = m / 2;
    for (auto& c : a) {
        c = mod(c, m);
        if (c > half) c -= m;
    }
    ztrim(a);
    return a;
}

inline ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly c(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    ztrim(c);
    return c;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly c(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    ztrim(c);
    return c;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    ztrim(c);
    return c;
}

inline ZPoly zmulmod(const ZPoly& a, const ZPoly& b, const Int& m) { return zmod(zmul(a, b), m); }

/// a = q b + r mod m, b monic mod m.
inline std::pair<ZPoly, ZPoly> zdivrem_monic(ZPoly a, const ZPoly& b, const Int& m) {
    a = zmod(std::move(a), m);
    const int db = zdeg(b);
    if (zdeg(a) < db) return {{}, a};
    ZPoly q(a.size() - b.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        const Int c = mod(a[k + db], m);
        if (c == 0) continue;
        q[k] = c;
        for (int j = 0; j <= db; ++j) a[k + j] = mod(a[k + j] - c * b[j], m);
    }
    a.resize(db);
    ztrim(a);
    ztrim(q);
    return {q, a};
}

/// Exact quotient a / b over Z, or nullopt.
inline std::optional<ZPoly> zdivexact(ZPoly a, const ZPoly& b) {
    const int db = zdeg(b);
    if (zdeg(a) < db) return a.empty() ? std::optional<ZPoly>(ZPoly{}) : std::nullopt;
    ZPoly q(a.size() - b.size() + 1, Int(0));
    const Int& lb = b.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        const Int& top = a[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        const Int c = top / lb;
        q[k] = c;
        for (int j = 0; j <= db; ++j) a[k + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < static_cast<std::size_t>(db) && i < a.size(); ++i)
        if (a[i] != 0) return std::nullopt;
    ztrim(q);
    return q;
}

inline Int zcontent(const ZPoly& a) {
    Int g = 0;
    for (const auto& c : a) g = gcd(g, c);
    return g;
}

/// Primitive with positive leading coefficient.
inline ZPoly zprimitive(ZPoly a) {
    if (a.empty()) return a;
    Int g = zcontent(a);
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

inline FpPoly to_fp(const ZPoly& a, const PrimeField& K) {
    std::vector<Zp> cs;
    cs.reserve(a.size());
    for (const auto& c : a) cs.push_back(K.from_int(c));
    return FpPoly(K, std::move(cs));
}

inline ZPoly from_fp(const FpPoly& a) {
    ZPoly z;
    z.reserve(a.size());
    for (const auto& c : a.coeffs()) z.emplace_back(static_cast<unsigned long>(c.v));
    return z;
}

/// f = content * primitive integer polynomial (positive leading coefficient).
inline std::pair<Rat, ZPoly> to_primitive(const QPoly& f) {
    Int L = 1;
    for (const auto& c : f.coeffs()) L = lcm(L, c.get_den());
    ZPoly z;
    for (const auto& c : f.coeffs()) z.push_back(c.get_num() * (L / c.get_den()));
    ZPoly prim = zprimitive(z);
    const Rat content = prim.empty() ? Rat(0) : make_rat(z.back(), L * prim.back());
    return {content, prim};
}

inline QPoly from_zpoly(const ZPoly& z) {
    std::vector<Rat> cs;
    cs.reserve(z.size());
    for (const auto& c : z) cs.emplace_back(c);
    return QPoly(RationalField{}, std::move(cs));
}

/// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic,
/// lifted to modulus m^2 (von zur Gathen and Gerhard, Alg. 15.10).
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
    const Int m2 = m * m;
    const ZPoly e = zmod(zsub(f, zmul(g, h)), m2);
    auto [q, r] = zdivrem_monic(zmul(s, e), h, m2);
    const ZPoly g2 = zmod(zadd(g, zadd(zmul(t, e), zmul(q, g))), m2);
    const ZPoly h2 = zmod(zadd(h, r), m2);
    const ZPoly b = zmod(zsub(zadd(zmul(s, g2), zmul(t, h2)), ZPoly{Int(1)}), m2);
    auto [c, d] = zdivrem_monic(zmul(s, b), h2, m2);
    s = zmod(zsub(s, d), m2);
    t = zmod(zsub(t, zadd(zmul(t, b), zmul(c, g2))), m2);
    g = g2;
    h = h2;
}

/// Lifts the monic modular factors of f (lc(f) a unit mod p) to monic
/// factors modulo M = p^(2^k).
inline std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<FpPoly>& facs, const PrimeField& K,
                                           const Int& M) {
    if (facs.size() == 1) {
        Int inv;
        const Int lcm_ = mod(f.back(), M);
        if (!mpz_invert(inv.get_mpz_t(), lcm_.get_mpz_t(), M.get_mpz_t()))
            throw InternalError("hensel: leading coefficient not invertible");
        ZPoly r = f;
        for (auto& c : r) c *= inv;
        return {zmod(r, M)};
    }
    const std::size_t half = facs.size() / 2;
    std::vector<FpPoly> left(facs.begin(), facs.begin() + static_cast<long>(half));
    std::vector<FpPoly> right(facs.begin() + static_cast<long>(half), facs.end());
    FpPoly g0 = FpPoly::constant(K, K.from_int(f.back()));
    for (const auto& a : left) g0 = g0 * a;
    FpPoly h0 = FpPoly::constant(K, K.one());
    for (const auto& a : right) h0 = h0 * a;
    const auto xg = xgcd(g0, h0);
    if (xg.d.degree() != 0) throw InternalError("hensel: modular factors not coprime");
    ZPoly g = from_fp(g0), h = from_fp(h0), s = from_fp(xg.a), t = from_fp(xg.b);
    const Int p = K.characteristic();
    Int m = p;
    while (m < M) {
        hensel_step(zmod(f, m * m), g, h, s, t, m);
        m *= m;
    }
    if (m != M) throw InternalError("hensel: modulus overshoot");
    auto a = multifactor_lift(g, left, K, M);
    auto b = multifactor_lift(h, right, K, M);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Subset-sum degrees of a modular factorization.
inline std::vector<bool> degree_set(const std::vector<FpPoly>& facs, int n) {
    std::vector<bool> reach(n + 1, false);
    reach[0] = true;
    for (const auto& f : facs) {
        const int d = f.degree();
        for (int s = n; s >= d; --s)
            if (reach[s - d]) reach[s] = true;
    }
    return reach;
}

/// Irreducible factors over Z of a primitive squarefree f with lc > 0.
inline std::vector<ZPoly> zassenhaus(const ZPoly& f, std::size_t budget) {
    const int n = zdeg(f);
    if (n <= 1) return {f};
    if (f[0] == 0) {
        // squarefree, so x divides exactly once
        ZPoly rest(f.begin() + 1, f.end());
        auto out = zassenhaus(rest, budget);
        out.insert(out.begin(), ZPoly{Int(0), Int(1)});
        return out;
    }

    constexpr int kPrimeTrials = 5;
    std::vector<bool> allowed(n + 1, true);
    std::optional<PrimeField> best_field;
    std::vector<FpPoly> best;
    int good = 0;
    for (unsigned long q = 3; good < kPrimeTrials; q = next_prime(Int(q)).get_ui()) {
        if (q > 100000) break;
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), q)) continue;
        const PrimeField K(q);
        const FpPoly fp = to_fp(f, K);
        if (gcd(fp, derivative(fp)).degree() > 0) continue;
        ++good;
        auto facs = berlekamp(fp.monic());
        if (facs.size() == 1) return {f};
        const auto ds = degree_set(facs, n);
        for (int k = 0; k <= n; ++k) allowed[k] = allowed[k] && ds[k];
        if (!best_field || facs.size() < best.size()) {
            best_field = K;
            best = std::move(facs);
        }
    }
    if (!best_field) throw InternalError("zassenhaus: no good prime below 100000");
    {
        bool only_trivial = true;
        for (int k = 1; k < n; ++k)
            if (allowed[k]) only_trivial = false;
        if (only_trivial) return {f};
    }
    std::sort(best.begin(), best.end(), [](const FpPoly& a, const FpPoly& b) { return canonical_less(a, b); });

    // coefficient bound for any factor of lc(f) * f
    Int A = 0;
    for (const auto& c : f) A = std::max(A, Int(abs(c)));
    Int root = sqrt(Int(n + 1)) + 1;
    const Int bound = root * pow(Int(2), static_cast<unsigned long>(n)) * A * abs(f.back());
    const Int p = best_field->characteristic();
    Int M = p;
    while (M <= 2 * bound) M *= M;

    std::vector<ZPoly> T = multifactor_lift(f, best, *best_field, M);
    std::vector<ZPoly> result;
    ZPoly rest = f;
    std::size_t trials = 0;
    std::size_t s = 1;
    while (2 * s <= T.size()) {
        bool found = false;
        const std::size_t r = T.size();
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        const Int b = rest.back();
        const Int rest0 = rest[0];
        const int nrest = zdeg(rest);
        for (;;) {
            int deg = 0;
            for (auto i : idx) deg += zdeg(T[i]);
            if (deg < static_cast<int>(allowed.size()) && allowed[deg] && deg < nrest) {
                if (++trials > budget)
                    throw CapExceeded("factor recombination budget exhausted", result.size());
                // cheap constant-term test before forming the product
                Int c0 = b;
                for (auto i : idx) c0 = mod(c0 * T[i][0], M);
                if (c0 > M / 2) c0 -= M;
                if (c0 != 0 && mpz_divisible_p(Int(b * rest0).get_mpz_t(), c0.get_mpz_t())) {
                    ZPoly g{b};
                    for (auto i : idx) g = zmulmod(g, T[i], M);
                    g = zprimitive(zsymmod(g, M));
                    if (auto q = zdivexact(rest, g)) {
                        result.push_back(g);
                        rest = *q;
                        std::vector<ZPoly> remaining;
                        std::size_t j = 0;
                        for (std::size_t i = 0; i < r; ++i) {
                            if (j < s && idx[j] == i) {
                                ++j;
                                continue;
                            }
                            remaining.push_back(std::move(T[i]));
                        }
                        T = std::move(remaining);
                        found = true;
                        break;
                    }
                }
            }
            // next combination
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == r - s + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t i = k; i < s; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++s;
    }
    result.push_back(zprimitive(rest));
    return result;
}

} // namespace detail

/// Irreducible factors over Z of a primitive integer polynomial, with the
/// content split off as a separate constant. Used for the Gauss cross-check.
struct ZFactorization {
    Int content;
    std::vector<std::pair<std::vector<Int>, unsigned>> factors;
};

inline FpFactorization factor_mod_p(const FpPoly& f) {
    if (f.is_zero()) throw DomainError("factor_mod_p: zero polynomial");
    const PrimeField& K = f.field();
    FpFactorization out{K, f.lc(), {}};
    if (f.degree() == 0) return out;
    for (const auto& [g, m] : detail::squarefree_fp(f.monic()))
        for (auto& h : detail::berlekamp(g)) out.factors.emplace_back(std::move(h), m);
    out.sort();
    return out;
}

inline QFactorization factor_over_Q(const QPoly& f, const FactorOptions& opt = {}) {
    if (f.is_zero()) throw DomainError("factor_over_Q: zero polynomial");
    if (f.degree() > opt.max_degree)
        throw CapExceeded("factor_over_Q: degree " + std::to_string(f.degree()) + " exceeds cap " +
                              std::to_string(opt.max_degree),
                          static_cast<std::size_t>(f.degree()));
    const RationalField Q;
    QFactorization out{Q, f.lc(), {}};
    if (f.degree() == 0) return out;
    const QPoly g = f.monic();
    std::vector<std::pair<QPoly, unsigned>> parts;
    if (opt.assume_squarefree)
        parts.emplace_back(g, 1);
    else
        parts = detail::yun_squarefree(g);
    for (const auto& [a, m] : parts) {
        const auto [content, z] = detail::to_primitive(a);
        for (const auto& h : detail::zassenhaus(z, opt.recombination_budget))
            out.factors.emplace_back(detail::from_zpoly(h).monic(), m);
    }
    out.sort();
    return out;
}

/// Factorization over Z of an integer polynomial given with rational type.
inline ZFactorization factor_over_Z(const QPoly& f, const FactorOptions& opt = {}) {
    for (const auto& c : f.coeffs())
        if (c.get_den() != 1) throw DomainError("factor_over_Z: coefficients must be integers");
    const auto qf = factor_over_Q(f, opt);
    ZFactorization out;
    out.content = 1;
    Rat rest = f.lc();
    for (const auto& [h, m] : qf.factors) {
        auto [c, z] = detail::to_primitive(h);
        rest /= pow(Rat(z.back()), m);
        out.factors.emplace_back(std::move(z), m);
    }
    if (rest.get_den() != 1) throw InternalError("factor_over_Z: Gauss lemma violated");
    out.content = rest.get_num();
    return out;
}

/// Eisenstein's criterion at p for an integer polynomial.
inline bool eisenstein(const QPoly& f, const Int& p) {
    if (!is_prime(p)) throw DomainError("eisenstein: " + p.get_str() + " is not prime");
    if (f.degree() < 1) throw DomainError("eisenstein: degree must be >= 1");
    for (const auto& c : f.coeffs())
        if (c.get_den() != 1) throw DomainError("eisenstein: coefficients must be integers");
    const std::size_t n = f.size() - 1;
    auto divides = [](const Int& d, const Int& a) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0; };
    if (divides(p, f[n].get_num())) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (!divides(p, f[i].get_num())) return false;
    return !divides(p * p, f[0].get_num());
}

/// Degree <= 3: irreducible iff no root, by the rational root test.
inline LowDegreeVerdict low_degree_test(const QPoly& f) {
    if (f.degree() < 1) throw DomainError("low_degree_test: degree must be >= 1");
    if (f.degree() == 1) return LowDegreeVerdict::Irreducible;
    if (f.degree() > 3) return LowDegreeVerdict::Inconclusive;
    const auto [content, z] = detail::to_primitive(f);
    if (z[0] == 0) return LowDegreeVerdict::Reducible;
    const auto num = divisors(Int(abs(z[0])));
    const auto den = divisors(Int(abs(z.back())));
    const QPoly zq = detail::from_zpoly(z);
    for (const auto& a : num)
        for (const auto& b : den)
            for (int sign : {1, -1})
                if (zq.eval(make_rat(sign * a, b)) == 0) return LowDegreeVerdict::Reducible;
    return LowDegreeVerdict::Irreducible;
}

/// Degree <= 3 over F_p: root scan (or gcd with x^p - x for large p).
inline LowDegreeVerdict low_degree_test(const FpPoly& f) {
    if (f.degree() < 1) throw DomainError("low_degree_test: degree must be >= 1");
    if (f.degree() == 1) return LowDegreeVerdict::Irreducible;
    if (f.degree() > 3) return LowDegreeVerdict::Inconclusive;
    const PrimeField& K = f.field();
    if (K.p <= 65536) {
        for (std::uint64_t a = 0; a < K.p; ++a)
            if (f.eval(Zp{a, K.p}).v == 0) return LowDegreeVerdict::Reducible;
        return LowDegreeVerdict::Irreducible;
    }
    const FpPoly m = f.monic();
    const FpPoly xp = detail::powmod(FpPoly::x(K), K.characteristic(), m);
    return gcd(m, xp - FpPoly::x(K)).degree() > 0 ? LowDegreeVerdict::Reducible : LowDegreeVerdict::Irreducible;
}

inline bool is_irreducible(const QPoly& f, const FactorOptions& opt = {}) {
    if (f.degree() < 1) throw DomainError("is_irreducible: degree must be >= 1");
    switch (low_degree_test(f)) {
    case LowDegreeVerdict::Irreducible: return true;
    case LowDegreeVerdict::Reducible: return false;
    case LowDegreeVerdict::Inconclusive: break;
    }
    const auto [content, z] = detail::to_primitive(f);
    const QPoly zq = detail::from_zpoly(z);
    if (z[0] != 0 && Int(abs(z[0])) < Int("1000000000000"))
        for (const auto& [p, e] : factor_int(Int(abs(z[0]))))
            if (eisenstein(zq, p)) return true;
    return factor_over_Q(f, opt).is_irreducible();
}

inline bool is_irreducible(const FpPoly& f) {
    if (f.degree() < 1) throw DomainError("is_irreducible: degree must be >= 1");
    switch (low_degree_test(f)) {
    case LowDegreeVerdict::Irreducible: return true;
    case LowDegreeVerdict::Reducible: return false;
    case LowDegreeVerdict::Inconclusive: break;
    }
    return factor_mod_p(f).is_irreducible();
}

// ---------- number fields ----------

namespace detail {

/// N(x) = Norm_{K/Q}(g(x)) by evaluation at integer points and Newton
/// interpolation; each value is a determinant of a multiplication matrix.
inline QPoly norm_poly(const KPoly& g) {
    const NumberField& K = g.field().K;
    const std::size_t D = K.degree() * static_cast<std::size_t>(g.degree());
    std::vector<Rat> xs, ys;
    for (std::size_t i = 0; i <= D; ++i) {
        const long x0 = (i % 2 == 0) ? static_cast<long>(i / 2) : -static_cast<long>((i + 1) / 2);
        const NFElement v = g.eval(K.from_rat(Rat(x0)));
        xs.emplace_back(x0);
        ys.push_back(element_norm(v));
    }
    // divided differences
    std::vector<Rat> c = ys;
    for (std::size_t j = 1; j <= D; ++j)
        for (std::size_t i = D; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
    const RationalField Q;
    QPoly acc = QPoly::constant(Q, c[D]);
    for (std::size_t i = D; i-- > 0;) acc = acc * QPoly(Q, {Rat(-xs[i]), Rat(1)}) + QPoly::constant(Q, c[i]);
    return acc;
}

/// Certifies squarefreeness of N over Q by finding a prime at which N
/// keeps its degree and stays squarefree. False means "not certified".
inline bool certified_squarefree(const QPoly& N) {
    const auto [content, z] = to_primitive(N);
    // primes well above the degree: over a small residue field the
    // distinct roots of a large norm can be forced to collide
    int tried = 0;
    for (unsigned long q = 1000003; tried < 6; q = next_prime(Int(q)).get_ui()) {
        if (mpz_divisible_ui_p(z.back().get_mpz_t(), q)) continue;
        ++tried;
        const FpPoly fp = to_fp(z, PrimeField(q));
        if (gcd(fp, derivative(fp)).degree() == 0) return true;
    }
    return false;
}

/// Trager on a monic squarefree f over K, deg f >= 2.
inline std::vector<KPoly> trager(const KPoly& f, const NumberFieldFactorOptions& opt) {
    const NumberFieldDomain& KD = f.field();
    const NumberField& K = KD.K;
    const NFElement theta = K.generator();
    const long D = static_cast<long>(K.degree()) * f.degree();
    if (K.degree() == 1) {
        // K = Q: factor directly
        QFactorization qf = factor_over_Q(to_rational_poly(f), {.max_degree = static_cast<int>(D) + 1,
                                                                 .assume_squarefree = true,
                                                                 .recombination_budget = opt.recombination_budget});
        std::vector<KPoly> out;
        for (const auto& [h, m] : qf.factors) out.push_back(lift_poly(h, K));
        return out;
    }
    const long max_shift = 2 * D * D;
    for (long s = 0; s <= max_shift; ++s) {
        const NFElement shift = theta.scaled(Rat(s));
        const KPoly g = s == 0 ? f : taylor_shift(f, -shift);
        const QPoly N = norm_poly(g);
        if (!certified_squarefree(N)) continue;
        const QFactorization nf = factor_over_Q(N, {.max_degree = static_cast<int>(D) + 1,
                                                    .assume_squarefree = true,
                                                    .recombination_budget = opt.recombination_budget});
        if (nf.factors.size() == 1) return {f};
        std::vector<KPoly> out;
        for (const auto& [Ni, m] : nf.factors) {
            const KPoly h = gcd(g, lift_poly(Ni, K));
            out.push_back(s == 0 ? h : taylor_shift(h, shift).monic());
        }
        return out;
    }
    throw CapExceeded("trager: no squarefree norm for shifts up to " + std::to_string(max_shift),
                      static_cast<std::size_t>(max_shift));
}

} // namespace detail

inline KFactorization factor_over_numberfield(const KPoly& f, const NumberFieldFactorOptions& opt = {}) {
    if (f.is_zero()) throw DomainError("factor_over_numberfield: zero polynomial");
    const NumberFieldDomain& KD = f.field();
    const long D = static_cast<long>(KD.K.degree()) * f.degree();
    if (D > opt.max_norm_degree)
        throw CapExceeded("factor_over_numberfield: [K:Q]*deg f = " + std::to_string(D) + " exceeds cap " +
                              std::to_string(opt.max_norm_degree),
                          static_cast<std::size_t>(D));
    KFactorization out{KD, f.lc(), {}};
    if (f.degree() == 0) return out;
    const KPoly g = f.monic();
    if (g.degree() == 1) {
        out.factors.emplace_back(g, 1);
        return out;
    }
    for (const auto& [a, m] : detail::yun_squarefree(g)) {
        if (a.degree() == 1) {
            out.factors.emplace_back(a, m);
            continue;
        }
        for (auto& h : detail::trager(a, opt)) out.factors.emplace_back(std::move(h), m);
    }
    out.sort();
    if (!(out.expand() == f)) throw InternalError("factor_over_numberfield: reassembly failed");
    return out;
}

inline bool is_irreducible(const KPoly& f, const NumberFieldFactorOptions& opt = {}) {
    if (f.degree() < 1) throw DomainError("is_irreducible: degree must be >= 1");
    if (f.degree() == 1) return true;
    return factor_over_numberfield(f, opt).is_irreducible();
}

/// Roots of f lying in K, from the linear factors (sorted, distinct).
inline std::vector<NFElement> roots_in_field(const KPoly& f, const NumberFieldFactorOptions& opt = {}) {
    std::vector<NFElement> roots;
    for (const auto& [h, m] : factor_over_numberfield(f, opt).factors)
        if (h.degree() == 1) roots.push_back(-h[0]);
    return roots;
}

} // namespace galoiskit
