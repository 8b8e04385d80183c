#pragma once

// Exact dense linear algebra over Q: row reduction, null spaces, solving,
// and integer determinants by fraction-free (Bareiss) elimination.

#include <optional>
#include <vector>

#include "error.hpp"
#include "exactnum.hpp"

namespace galoiskit {

using RatVector = std::vector<Rat>;

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void set_column(std::size_t c, const RatVector& v) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }

    RatVector column(std::size_t c) const {
        RatVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    RatVector operator*(const RatVector& v) const {
        RatVector out(rows_, Rat(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            Rat acc = 0;
            for (std::size_t c = 0; c < cols_; ++c)
                if (v[c] != 0 && (*this)(r, c) != 0) acc += (*this)(r, c) * v[c];
            out[r] = acc;
        }
        return out;
    }

    RatMatrix operator*(const RatMatrix& o) const {
        RatMatrix out(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = (*this)(r, k);
                if (a == 0) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += a * o(k, c);
            }
        return out;
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& M) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < M.cols() && row < M.rows(); ++c) {
        std::size_t piv = row;
        while (piv < M.rows() && M(piv, c) == 0) ++piv;
        if (piv == M.rows()) continue;
        if (piv != row)
            for (std::size_t k = 0; k < M.cols(); ++k) std::swap(M(piv, k), M(row, k));
        const Rat inv = 1 / M(row, c);
        for (std::size_t k = c; k < M.cols(); ++k) M(row, k) *= inv;
        for (std::size_t r = 0; r < M.rows(); ++r) {
            if (r == row || M(r, c) == 0) continue;
            const Rat f = M(r, c);
            for (std::size_t k = c; k < M.cols(); ++k)
                if (M(row, k) != 0) M(r, k) -= f * M(row, k);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

/// Basis of {v : M v = 0}, one vector per free column, in RREF-normalized
/// form (free variable set to 1).
inline std::vector<RatVector> null_space(RatMatrix M) {
    const auto pivots = rref(M);
    std::vector<bool> is_pivot(M.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < M.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v(M.cols(), Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -M(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves A X = B for square invertible A; nullopt when A is singular.
inline std::optional<RatMatrix> solve(const RatMatrix& A, const RatMatrix& B) {
    const std::size_t n = A.rows();
    if (A.cols() != n || B.rows() != n) throw DomainError("solve: shape mismatch");
    RatMatrix aug(n, n + B.cols());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = A(r, c);
        for (std::size_t c = 0; c < B.cols(); ++c) aug(r, n + c) = B(r, c);
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    RatMatrix X(n, B.cols());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < B.cols(); ++c) X(r, c) = aug(r, n + c);
    return X;
}

/// Determinant of an integer matrix (row-major, n x n) by Bareiss.
inline Int bareiss_determinant(std::vector<Int> a, std::size_t n) {
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r * n + k] == 0) ++r;
            if (r == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[r * n + c]);
            sign = -sign;
        }
        const Int& pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i * n + j] = std::move(v);
            }
        }
        prev = pivot;
    }
    Int d = a[n * n - 1];
    return sign < 0 ? Int(-d) : d;
}

/// Determinant over Q: clear denominators, then Bareiss.
inline Rat determinant(const RatMatrix& M) {
    const std::size_t n = M.rows();
    if (M.cols() != n) throw DomainError("determinant of a non-square matrix");
    Int L = 1;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) L = lcm(L, M(r, c).get_den());
    std::vector<Int> a(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r * n + c] = M(r, c).get_num() * (L / M(r, c).get_den());
    return make_rat(bareiss_determinant(std::move(a), n), pow(L, n));
}

} // namespace galoiskit
