#pragma once

// Permutations of {1..n}: composition, cycle notation, sign, order.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "exactnum.hpp"

namespace galoiskit {

/// Maximum degree accepted for permutations.
inline constexpr int kMaxPermDegree = 16;

/// A bijection of {1..n}; images()[i-1] = sigma(i).
class Perm {
public:
    Perm() = default;

    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        const int n = degree();
        if (n > kMaxPermDegree) throw DomainError("permutation degree above " + std::to_string(kMaxPermDegree));
        std::vector<bool> seen(n + 1, false);
        for (int v : img_) {
            if (v < 1 || v > n || seen[v]) throw DomainError("images do not form a bijection of {1..n}");
            seen[v] = true;
        }
    }

    static Perm identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        return Perm(std::move(img));
    }

    /// Product of the given cycles (any order; the cycles need not be disjoint,
    /// they are applied right to left).
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i + 1) return false;
        return true;
    }

    Perm inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 0; i < degree(); ++i) inv[img_[i] - 1] = i + 1;
        Perm r;
        r.img_ = std::move(inv);
        return r;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<int> img_;
};

/// p after q: result(i) = p(q(i)).
inline Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw DomainError("compose: degree mismatch");
    std::vector<int> img(p.degree());
    for (int i = 1; i <= p.degree(); ++i) img[i - 1] = p(q(i));
    return Perm(std::move(img));
}

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

inline Perm power(const Perm& p, long long k) {
    Perm base = k < 0 ? p.inverse() : p;
    if (k < 0) k = -k;
    Perm result = Perm::identity(p.degree());
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

inline Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Perm result = identity(n);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        const auto& c = *it;
        std::vector<int> img = identity(n).images();
        std::vector<bool> seen(n + 1, false);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] < 1 || c[k] > n) throw DomainError("cycle point " + std::to_string(c[k]) + " out of range");
            if (seen[c[k]]) throw DomainError("repeated point in cycle");
            seen[c[k]] = true;
            img[c[k] - 1] = c[(k + 1) % c.size()];
        }
        result = Perm(std::move(img)) * result;
    }
    return result;
}

/// Disjoint cycles, fixed points omitted; each cycle starts at its least
/// point and cycles are sorted by that point.
using CycleList = std::vector<std::vector<int>>;

inline CycleList cycle_decompose(const Perm& p) {
    CycleList out;
    std::vector<bool> seen(p.degree() + 1, false);
    for (int start = 1; start <= p.degree(); ++start) {
        if (seen[start] || p(start) == start) continue;
        std::vector<int> cyc;
        for (int x = start; !seen[x]; x = p(x)) {
            seen[x] = true;
            cyc.push_back(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

/// Sorted cycle lengths including fixed points as 1-cycles.
inline std::vector<int> cycle_type(const Perm& p) {
    std::vector<int> lens;
    int moved = 0;
    for (const auto& c : cycle_decompose(p)) {
        lens.push_back(static_cast<int>(c.size()));
        moved += static_cast<int>(c.size());
    }
    lens.insert(lens.end(), p.degree() - moved, 1);
    std::sort(lens.begin(), lens.end());
    return lens;
}

inline int sign(const Perm& p) {
    int s = 1;
    for (const auto& c : cycle_decompose(p))
        if (c.size() % 2 == 0) s = -s;
    return s;
}

/// Least k >= 1 with p^k = identity (lcm of cycle lengths).
inline Int order_of(const Perm& p) {
    Int ord = 1;
    for (const auto& c : cycle_decompose(p)) ord = lcm(ord, Int(static_cast<unsigned long>(c.size())));
    return ord;
}

/// "(1 2 3)(4 5)"; the identity prints as "()".
inline std::string to_cycle_string(const Perm& p) {
    const auto cycles = cycle_decompose(p);
    if (cycles.empty()) return "()";
    std::string s;
    for (const auto& c : cycles) {
        s += '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) s += ' ';
            s += std::to_string(c[k]);
        }
        s += ')';
    }
    return s;
}

/// Parses cycle notation. Points are whitespace separated inside
/// parentheses; "()" is the identity. `degree` of 0 means the largest
/// point mentioned (at least 1).
inline Perm parse_cycles(std::string_view src, int degree = 0) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    };
    int max_point = 0;
    skip_ws();
    if (i == src.size()) throw ParseError("empty permutation", i);
    while (i < src.size()) {
        if (src[i] != '(') throw ParseError("expected '('", i);
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (i == src.size()) throw ParseError("unterminated cycle", i);
            if (src[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(src[i]))) throw ParseError("expected a point", i);
            const std::size_t start = i;
            long v = 0;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                v = v * 10 + (src[i] - '0');
                if (v > kMaxPermDegree) throw ParseError("point out of range", start);
                ++i;
            }
            if (v < 1) throw ParseError("points are 1-based", start);
            cyc.push_back(static_cast<int>(v));
            max_point = std::max(max_point, static_cast<int>(v));
        }
        if (cyc.size() == 1) cyc.clear();  // a 1-cycle is the identity
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    const int n = degree > 0 ? degree : std::max(max_point, 1);
    if (max_point > n) throw DomainError("cycle point exceeds degree " + std::to_string(n));
    return Perm::from_cycles(n, cycles);
}

} // namespace galoiskit
