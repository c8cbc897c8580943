#ifndef HDC_LINALG_HPP
#define HDC_LINALG_HPP

#include <vector>

#include "hdc/rational.hpp"
#include "hdc/extfield.hpp"

namespace hdc {

template <class K>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<K>> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(r, std::vector<K>(c, K(0))) {}

    K& operator()(int i, int j) { return a[i][j]; }
    const K& operator()(int i, int j) const { return a[i][j]; }

    void add_row(std::vector<K> row) {
        if (rows == 0 && cols == 0) cols = static_cast<int>(row.size());
        a.push_back(std::move(row));
        ++rows;
    }
};

namespace detail {

// Keep rational rows small: rescale to primitive integers.
template <class K>
void normalize_row(std::vector<K>& row) {
    if constexpr (std::is_same_v<K, Rational>) {
        Integer num_gcd = 0, den_lcm = 1;
        for (const K& c : row) {
            if (c.is_zero()) continue;
            num_gcd = int_gcd(num_gcd, c.num());
            den_lcm = int_lcm(den_lcm, c.den());
        }
        if (num_gcd == 0) return;
        Rational s(den_lcm, num_gcd);
        for (K& c : row) c *= s;
    } else {
        (void)row;
    }
}

} // namespace detail

template <class K>
struct Rref {
    Matrix<K> m;                 // reduced row echelon form
    std::vector<int> pivot_cols; // ascending
    int rank = 0;
};

// Gauss-Jordan over the field K, exact.
template <class K>
Rref<K> rref(Matrix<K> M) {
    Rref<K> out;
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int piv = -1;
        for (int i = r; i < M.rows; ++i)
            if (!M(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(M.a[r], M.a[piv]);
        K inv = M(r, c).inverse();
        for (int j = c; j < M.cols; ++j) M(r, j) = M(r, j) * inv;
        for (int i = 0; i < M.rows; ++i) {
            if (i == r || M(i, c).is_zero()) continue;
            K f = M(i, c);
            for (int j = c; j < M.cols; ++j) M(i, j) = M(i, j) - f * M(r, j);
            detail::normalize_row(M.a[i]);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    // re-normalize pivot rows to leading 1 (normalize_row may have rescaled)
    for (int i = 0; i < r; ++i) {
        int c = out.pivot_cols[i];
        if (!M(i, c).is_one()) {
            K inv = M(i, c).inverse();
            for (int j = 0; j < M.cols; ++j) M(i, j) = M(i, j) * inv;
        }
    }
    out.rank = r;
    out.m = std::move(M);
    return out;
}

template <class K>
int rank(const Matrix<K>& M) {
    return rref(M).rank;
}

// Nullspace basis in reduced-echelon structure: one vector per free column f,
// with coordinate 1 at f and 0 at the other free columns; vectors are then
// canonically rescaled (primitive integers over Q, monic leading otherwise)
// and ordered by ascending free column.
template <class K>
std::vector<std::vector<K>> nullspace_basis(const Matrix<K>& M) {
    Rref<K> R = rref(M);
    std::vector<bool> is_pivot(M.cols, false);
    for (int c : R.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (int f = 0; f < M.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(M.cols, K(0));
        v[f] = K(1);
        for (size_t i = 0; i < R.pivot_cols.size(); ++i) v[R.pivot_cols[i]] = -R.m(static_cast<int>(i), f);
        // canonical scaling: primitive integers, positive leading entry
        if constexpr (std::is_same_v<K, Rational>) {
            Integer num_gcd = 0, den_lcm = 1;
            for (const K& c : v) {
                if (c.is_zero()) continue;
                num_gcd = int_gcd(num_gcd, c.num());
                den_lcm = int_lcm(den_lcm, c.den());
            }
            Rational s(den_lcm, num_gcd);
            int lead_sign = 0;
            for (const K& c : v)
                if (!c.is_zero()) { lead_sign = (c * s).sign(); break; }
            if (lead_sign < 0) s = -s;
            for (K& c : v) c *= s;
        } else {
            K lead(0);
            for (const K& c : v)
                if (!c.is_zero()) { lead = c; break; }
            K inv = lead.inverse();
            for (K& c : v) c = c * inv;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace hdc

#endif
