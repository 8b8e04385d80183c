#pragma once

// Complex root approximations, used only to order and display roots.
// Aberth iteration in GMP floating point; exact code never branches on
// these values except to choose a presentation order.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "error.hpp"
#include "exactnum.hpp"
#include "poly.hpp"

namespace galoiskit {

inline constexpr unsigned kRootPrecisionBits = 512;

struct BigComplex {
    mpf_class re{0, kRootPrecisionBits};
    mpf_class im{0, kRootPrecisionBits};

    BigComplex() = default;
    // templated so gmpxx expressions are evaluated at full precision
    template <class A, class B>
    BigComplex(const A& r, const B& i) : re(r, kRootPrecisionBits), im(i, kRootPrecisionBits) {}

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        const mpf_class den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }

    mpf_class abs2() const { return re * re + im * im; }
    std::complex<double> to_double() const { return {re.get_d(), im.get_d()}; }
};

inline BigComplex to_big(const Rat& q) {
    mpf_class v(0, kRootPrecisionBits);
    v = q;
    return {v, mpf_class(0, kRootPrecisionBits)};
}

/// p(z) for a rational polynomial.
inline BigComplex eval_big(const QPoly& p, const BigComplex& z) {
    BigComplex acc;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + to_big(p[k]);
    return acc;
}

namespace detail {

inline bool root_order_less(const BigComplex& a, bool a_real, const BigComplex& b, bool b_real) {
    if (a_real != b_real) return a_real;
    const double tol = 1e-40;
    if (abs(a.re - b.re) > tol * (1 + abs(a.re))) return a.re < b.re;
    return a.im > b.im;
}

} // namespace detail

/// All complex roots of a squarefree rational polynomial, ordered: real
/// roots ascending, then non-real roots by real part, upper half first.
/// The number of real roots comes from the exact Sturm count.
inline std::vector<BigComplex> complex_roots(const QPoly& f) {
    if (f.degree() < 1) return {};
    const QPoly g = f.monic();
    const int n = g.degree();
    const QPoly dg = derivative(g);
    // Cauchy bound for the starting circle
    double R = 0;
    for (int i = 0; i < n; ++i) R = std::max(R, std::fabs(g[i].get_d()));
    R = 1 + R;
    std::vector<BigComplex> z(n);
    for (int k = 0; k < n; ++k) {
        const double ang = 2 * M_PI * k / n + 0.4;
        const double rad = std::min(R, std::pow(R, 1.0 / n) + 0.5);
        z[k] = BigComplex(mpf_class(rad * std::cos(ang)), mpf_class(rad * std::sin(ang)));
    }
    const mpf_class eps("1e-120", kRootPrecisionBits);
    for (int iter = 0; iter < 5000; ++iter) {
        mpf_class worst(0, kRootPrecisionBits);
        for (int k = 0; k < n; ++k) {
            const BigComplex pv = eval_big(g, z[k]);
            const BigComplex dv = eval_big(dg, z[k]);
            if (pv.abs2() == 0) continue;
            const BigComplex w = pv / dv;
            BigComplex s;
            for (int j = 0; j < n; ++j)
                if (j != k) s = s + BigComplex(mpf_class(1), mpf_class(0)) / (z[k] - z[j]);
            const BigComplex one(mpf_class(1), mpf_class(0));
            const BigComplex step = w / (one - w * s);
            z[k] = z[k] - step;
            const mpf_class rel = step.abs2() / (1 + z[k].abs2());
            if (rel > worst) worst = rel;
        }
        if (worst < eps * eps) break;
    }
    // exactly `real` roots are real: the ones closest to the axis
    const long real = is_separable(g) ? sturm_real_roots(g) : -1;
    std::vector<std::size_t> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::vector<bool> is_real(n, false);
    if (real >= 0) {
        std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return abs(z[a].im) < abs(z[b].im); });
        for (long i = 0; i < real; ++i) {
            is_real[idx[i]] = true;
            z[idx[i]].im = 0;
        }
    }
    std::vector<std::pair<BigComplex, bool>> tagged;
    for (int i = 0; i < n; ++i) tagged.emplace_back(z[i], is_real[i]);
    std::stable_sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
        return detail::root_order_less(a.first, a.second, b.first, b.second);
    });
    std::vector<BigComplex> out;
    for (auto& t : tagged) out.push_back(t.first);
    return out;
}

/// "1.259921", "-0.629961 + 1.091124i".
inline std::string format_approx(std::complex<double> z) {
    char buf[96];
    const double re = std::fabs(z.real()) < 5e-7 ? 0.0 : z.real();
    const double im = z.imag();
    if (std::fabs(im) < 5e-7) {
        std::snprintf(buf, sizeof buf, "%.6f", re);
    } else {
        std::snprintf(buf, sizeof buf, "%.6f %c %.6fi", re, im < 0 ? '-' : '+', std::fabs(im));
    }
    return buf;
}

} // namespace galoiskit
