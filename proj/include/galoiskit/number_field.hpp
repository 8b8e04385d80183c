#pragma once

// Number fields K = Q[a]/(m(a)) with m monic irreducible over Q, stored in
// the power basis 1, a, ..., a^(d-1). The degree-1 field with m = x is Q.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "exactnum.hpp"
#include "fields.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace galoiskit {

namespace detail {

struct NumberFieldData {
    QPoly minpoly;
    std::size_t degree = 0;
    // a^(d+k) in the power basis, k = 0 .. d-2
    std::vector<RatVector> reduce;
    std::string var = "a";
};

} // namespace detail

class NFElement;

class NumberField {
public:
    NumberField() : NumberField(qpoly({0, 1})) {}

    /// Trusts the caller that m is irreducible; see make_number_field for
    /// the checked factory.
    explicit NumberField(const QPoly& m, std::string var = "a") {
        if (m.degree() < 1) throw DomainError("number field minimal polynomial must have degree >= 1");
        auto data = std::make_shared<detail::NumberFieldData>();
        data->minpoly = m.monic();
        data->degree = static_cast<std::size_t>(m.degree());
        data->var = std::move(var);
        const std::size_t d = data->degree;
        RatVector cur(d, Rat(0));
        for (std::size_t i = 0; i < d; ++i) cur[i] = -data->minpoly[i];
        for (std::size_t k = 0; k + 1 < d; ++k) {
            data->reduce.push_back(cur);
            RatVector next(d, Rat(0));
            const Rat top = cur[d - 1];
            for (std::size_t i = d - 1; i > 0; --i) next[i] = cur[i - 1];
            if (top != 0)
                for (std::size_t i = 0; i < d; ++i) next[i] -= top * data->minpoly[i];
            cur = std::move(next);
        }
        data_ = std::move(data);
    }

    static NumberField rationals() { return NumberField(); }

    std::size_t degree() const { return data_->degree; }
    const QPoly& minpoly() const { return data_->minpoly; }
    const std::string& var() const { return data_->var; }
    bool is_rationals() const { return data_->degree == 1; }
    const detail::NumberFieldData& data() const { return *data_; }
    const std::shared_ptr<const detail::NumberFieldData>& handle() const { return data_; }

    NFElement zero() const;
    NFElement one() const;
    NFElement from_rat(const Rat& q) const;
    NFElement generator() const;
    NFElement element(RatVector coords) const;
    /// Image of a polynomial in the generator, reduced mod the minimal polynomial.
    NFElement element(const QPoly& p) const;

    /// "Q(a)/(a^4 - 10*a^2 + 1)"; plain "Q" in degree 1.
    std::string describe() const {
        if (is_rationals()) return "Q";
        return "Q(" + var() + ")/(" + to_string(minpoly(), var()) + ")";
    }

    friend bool operator==(const NumberField& a, const NumberField& b) {
        return a.data_ == b.data_ || a.data_->minpoly.coeffs() == b.data_->minpoly.coeffs();
    }

private:
    std::shared_ptr<const detail::NumberFieldData> data_;
};

class NFElement {
public:
    NFElement() = default;
    NFElement(NumberField K, RatVector c) : K_(std::move(K)), c_(std::move(c)) {
        if (c_.size() != K_.degree()) throw DomainError("element coordinate count does not match field degree");
    }

    const NumberField& field() const { return K_; }
    const RatVector& coords() const { return c_; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Rat rational_value() const {
        if (!is_rational()) throw DomainError("element is not rational");
        return c_.empty() ? Rat(0) : c_[0];
    }

    /// The element as a polynomial in the generator.
    QPoly as_poly() const { return QPoly(RationalField{}, c_); }

    friend NFElement operator+(const NFElement& a, const NFElement& b) {
        check(a, b);
        RatVector c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
        return NFElement(a.K_, std::move(c));
    }

    friend NFElement operator-(const NFElement& a, const NFElement& b) {
        check(a, b);
        RatVector c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
        return NFElement(a.K_, std::move(c));
    }

    friend NFElement operator-(const NFElement& a) {
        RatVector c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
        return NFElement(a.K_, std::move(c));
    }

    friend NFElement operator*(const NFElement& a, const NFElement& b) {
        check(a, b);
        const std::size_t d = a.c_.size();
        if (a.is_rational()) return b.scaled(a.c_[0]);
        if (b.is_rational()) return a.scaled(b.c_[0]);
        std::vector<Rat> prod(2 * d - 1, Rat(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j)
                if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
        }
        RatVector c(prod.begin(), prod.begin() + static_cast<long>(d));
        const auto& red = a.K_.data().reduce;
        for (std::size_t k = d; k < prod.size(); ++k) {
            if (prod[k] == 0) continue;
            const RatVector& r = red[k - d];
            for (std::size_t i = 0; i < d; ++i)
                if (r[i] != 0) c[i] += prod[k] * r[i];
        }
        return NFElement(a.K_, std::move(c));
    }

    NFElement scaled(const Rat& s) const {
        RatVector c(c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] * s;
        return NFElement(K_, std::move(c));
    }

    NFElement& operator+=(const NFElement& o) { return *this = *this + o; }
    NFElement& operator-=(const NFElement& o) { return *this = *this - o; }
    NFElement& operator*=(const NFElement& o) { return *this = *this * o; }

    friend bool operator==(const NFElement& a, const NFElement& b) { return a.c_ == b.c_; }

    /// Lexicographic on coordinates (1, a, a^2, ...); a total order used for
    /// canonical sorting, not a field order.
    friend bool coords_less(const NFElement& a, const NFElement& b) {
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

private:
    static void check(const NFElement& a, const NFElement& b) {
        if (a.c_.size() != b.c_.size() || (a.K_.handle() != b.K_.handle() && !(a.K_ == b.K_)))
            throw DomainError("elements of different number fields");
    }

    NumberField K_;
    RatVector c_;
};

inline NFElement NumberField::zero() const { return NFElement(*this, RatVector(degree(), Rat(0))); }

inline NFElement NumberField::one() const { return from_rat(Rat(1)); }

inline NFElement NumberField::from_rat(const Rat& q) const {
    RatVector c(degree(), Rat(0));
    c[0] = q;
    return NFElement(*this, std::move(c));
}

inline NFElement NumberField::generator() const {
    if (degree() == 1) return from_rat(-minpoly()[0]);
    RatVector c(degree(), Rat(0));
    c[1] = 1;
    return NFElement(*this, std::move(c));
}

inline NFElement NumberField::element(RatVector coords) const { return NFElement(*this, std::move(coords)); }

inline NFElement NumberField::element(const QPoly& p) const {
    const QPoly r = p % minpoly();
    RatVector c(degree(), Rat(0));
    for (std::size_t i = 0; i < r.size(); ++i) c[i] = r[i];
    return NFElement(*this, std::move(c));
}

/// Matrix of y -> a*y in the power basis (column j holds a * gen^j).
inline RatMatrix multiplication_matrix(const NFElement& a) {
    const NumberField& K = a.field();
    const std::size_t d = K.degree();
    RatMatrix M(d, d);
    NFElement col = a;
    const NFElement g = K.generator();
    for (std::size_t j = 0; j < d; ++j) {
        M.set_column(j, col.coords());
        if (j + 1 < d) col = col * g;
    }
    return M;
}

inline Rat element_norm(const NFElement& a) { return determinant(multiplication_matrix(a)); }

inline Rat element_trace(const NFElement& a) {
    const RatMatrix M = multiplication_matrix(a);
    Rat t = 0;
    for (std::size_t i = 0; i < M.rows(); ++i) t += M(i, i);
    return t;
}

inline NFElement nf_inverse(const NFElement& a) {
    if (a.is_zero()) throw DomainError("division by zero in a number field");
    const NumberField& K = a.field();
    if (a.is_rational()) return K.from_rat(1 / a[0]);
    const auto g = xgcd(a.as_poly(), K.minpoly());
    if (g.d.degree() != 0) throw DomainError("element is not invertible: minimal polynomial is reducible");
    return K.element(g.a);
}

/// Field domain wrapper so Poly<NumberFieldDomain> is K[x].
struct NumberFieldDomain {
    using value_type = NFElement;

    NumberField K;

    NumberFieldDomain() = default;
    explicit NumberFieldDomain(NumberField field) : K(std::move(field)) {}

    NFElement zero() const { return K.zero(); }
    NFElement one() const { return K.one(); }
    NFElement from_rat(const Rat& q) const { return K.from_rat(q); }
    NFElement inv(const NFElement& a) const { return nf_inverse(a); }
    bool is_zero(const NFElement& a) const { return a.is_zero(); }
    Int characteristic() const { return 0; }
    std::string format(const NFElement& a) const { return to_string(a.as_poly(), K.var()); }
    /// Sign of the highest nonzero coordinate, so printers write "x - a".
    bool is_negative(const NFElement& a) const {
        for (std::size_t i = a.coords().size(); i-- > 0;)
            if (a[i] != 0) return sgn(a[i]) < 0;
        return false;
    }
    std::string name() const { return K.describe(); }

    friend bool operator==(const NumberFieldDomain& a, const NumberFieldDomain& b) { return a.K == b.K; }
};

using KPoly = Poly<NumberFieldDomain>;

/// Q[x] -> K[x].
inline KPoly lift_poly(const QPoly& f, const NumberField& K) {
    std::vector<NFElement> cs;
    cs.reserve(f.size());
    for (const auto& c : f.coeffs()) cs.push_back(K.from_rat(c));
    return KPoly(NumberFieldDomain(K), std::move(cs));
}

/// K[x] -> Q[x] when every coefficient is rational.
inline QPoly to_rational_poly(const KPoly& f) {
    std::vector<Rat> cs;
    for (const auto& c : f.coeffs()) cs.push_back(c.rational_value());
    return QPoly(RationalField{}, std::move(cs));
}

namespace detail {

/// n/d congruent to u mod M with |n|, d <= sqrt(M/2), if one exists.
inline std::optional<Rat> rational_reconstruction(const Int& u, const Int& M) {
    const Int bound = sqrt(Int(M / 2));
    Int r0 = M, r1 = mod(u, M), t0 = 0, t1 = 1;
    while (r1 > bound) {
        const Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        Int t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0 || abs(t1) > bound || gcd(r1, t1) != 1) return std::nullopt;
    return make_rat(r1, t1);
}

// K[x] reduced modulo a prime q: coefficients live in F_q[y]/(m mod q),
// which is a product of fields when m mod q is squarefree.
using ModPoly = std::vector<FpPoly>;

inline std::optional<Zp> rat_mod(const Rat& c, const PrimeField& F) {
    const Zp den = F.from_int(Int(c.get_den()));
    if (den.v == 0) return std::nullopt;
    return F.from_int(Int(c.get_num())) * F.inv(den);
}

inline std::optional<FpPoly> element_mod(const NFElement& a, const PrimeField& F) {
    std::vector<Zp> cs;
    for (const auto& c : a.coords()) {
        auto v = rat_mod(c, F);
        if (!v) return std::nullopt;
        cs.push_back(*v);
    }
    return FpPoly(F, std::move(cs));
}

inline std::optional<ModPoly> reduce_mod(const KPoly& f, const PrimeField& F) {
    ModPoly out;
    for (const auto& c : f.coeffs()) {
        auto v = element_mod(c, F);
        if (!v) return std::nullopt;
        out.push_back(std::move(*v));
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

/// Monic gcd over F_q[y]/(m); nullopt when a leading coefficient is a zero divisor.
inline std::optional<ModPoly> modular_gcd(ModPoly a, ModPoly b, const FpPoly& m) {
    auto make_monic = [&](ModPoly& p) -> bool {
        const auto xg = xgcd(p.back(), m);
        if (xg.d.degree() != 0) return false;
        const FpPoly inv = xg.a % m;
        for (auto& c : p) c = (c * inv) % m;
        return true;
    };
    if (b.empty()) std::swap(a, b);
    while (!b.empty()) {
        if (!make_monic(b)) return std::nullopt;
        const std::size_t db = b.size() - 1;
        while (a.size() > db && !a.empty()) {
            const FpPoly c = a.back();
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] - c * b[j]) % m;
            while (!a.empty() && a.back().is_zero()) a.pop_back();
        }
        std::swap(a, b);
    }
    if (a.empty() || !make_monic(a)) return std::nullopt;
    return a;
}

inline bool divides_monic(const KPoly& g, const KPoly& f) { return (f % g).is_zero(); }

} // namespace detail

/// Monic gcd over a number field: modular images over large primes,
/// Chinese remaindering with rational reconstruction, and an exact
/// divisibility check before accepting. Avoids the coefficient growth of
/// the Euclidean algorithm over K.
inline KPoly gcd(const KPoly& f, const KPoly& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    const NumberFieldDomain& KD = f.field();
    const NumberField& K = KD.K;
    if (f.degree() == 0 || g.degree() == 0) return KPoly::constant(KD, K.one());
    const std::size_t d = K.degree();

    std::vector<Int> acc;  // CRT images, coefficient-major, d per coefficient
    Int M = 1;
    int deg = -1;
    Int q = Int(1) << 62;
    for (int attempt = 0; attempt < 400; ++attempt) {
        do {
            --q;
        } while (!is_prime(q));
        const PrimeField F(q.get_ui());
        std::vector<Zp> mc;
        bool ok = true;
        for (const auto& c : K.minpoly().coeffs()) {
            auto v = detail::rat_mod(c, F);
            if (!v) {
                ok = false;
                break;
            }
            mc.push_back(*v);
        }
        if (!ok) continue;
        const FpPoly mq(F, std::move(mc));
        auto fq = detail::reduce_mod(f, F);
        auto gq = detail::reduce_mod(g, F);
        if (!fq || !gq || fq->size() != f.size() || gq->size() != g.size()) continue;
        const auto h = detail::modular_gcd(*fq, *gq, mq);
        if (!h) continue;
        const int dh = static_cast<int>(h->size()) - 1;
        if (dh == 0) return KPoly::constant(KD, K.one());
        if (deg >= 0 && dh > deg) continue;  // unlucky prime
        if (deg < 0 || dh < deg) {
            deg = dh;
            acc.assign(static_cast<std::size_t>(dh + 1) * d, Int(0));
            M = 1;
        }
        // combine
        const Int Mq = M * q;
        const Int Minv = inverse_mod(mod(M, q), q);
        for (int j = 0; j <= dh; ++j)
            for (std::size_t i = 0; i < d; ++i) {
                const Int r(static_cast<unsigned long>((*h)[j].coeff(i).v));
                Int& a = acc[j * d + i];
                const Int t = mod((r - a) * Minv, q);
                a = mod(a + M * t, Mq);
            }
        M = Mq;
        // reconstruct
        std::vector<NFElement> cs;
        bool rec = true;
        for (int j = 0; j <= dh && rec; ++j) {
            RatVector v(d);
            for (std::size_t i = 0; i < d && rec; ++i) {
                auto r = detail::rational_reconstruction(acc[j * d + i], M);
                if (!r) rec = false;
                else v[i] = *r;
            }
            if (rec) cs.push_back(K.element(std::move(v)));
        }
        if (!rec) continue;
        const KPoly cand(KD, std::move(cs));
        if (detail::divides_monic(cand, f) && detail::divides_monic(cand, g)) return cand;
    }
    throw InternalError("number field gcd: modular reconstruction did not converge");
}

/// Minimal polynomial over Q: first linear dependency among 1, a, a^2, ...
/// found by incremental exact elimination.
inline QPoly minpoly_of(const NFElement& a) {
    const NumberField& K = a.field();
    const std::size_t d = K.degree();
    // each stored row: reduced vector, pivot, and its expression in powers
    struct Row {
        RatVector v;
        std::size_t pivot;
        RatVector combo;
    };
    std::vector<Row> rows;
    NFElement power = K.one();
    for (std::size_t k = 0; k <= d; ++k) {
        RatVector v = power.coords();
        RatVector combo(k + 1, Rat(0));
        combo[k] = 1;
        for (const Row& r : rows) {
            if (v[r.pivot] == 0) continue;
            const Rat f = v[r.pivot];
            for (std::size_t i = 0; i < d; ++i)
                if (r.v[i] != 0) v[i] -= f * r.v[i];
            for (std::size_t i = 0; i < r.combo.size(); ++i)
                if (r.combo[i] != 0) combo[i] -= f * r.combo[i];
        }
        std::size_t piv = 0;
        while (piv < d && v[piv] == 0) ++piv;
        if (piv == d) {
            // combo . (1, a, ..., a^k) = 0 with combo[k] = 1
            return QPoly(RationalField{}, std::move(combo));
        }
        const Rat inv = 1 / v[piv];
        for (auto& x : v) x *= inv;
        for (auto& x : combo) x *= inv;
        rows.push_back({std::move(v), piv, std::move(combo)});
        power = power * a;
    }
    throw InternalError("minpoly_of: no dependency within the field degree");
}

} // namespace galoiskit
