#pragma once

// Exact Gaussian elimination over a field, shared by the linear algebra
// over K and over the residue field Q.  Pivots are chosen by smallest
// representation size to keep coefficient growth in check.

#include <cstddef>
#include <optional>
#include <vector>

#include "troph/valfield.hpp"

namespace troph {

template <class F>
struct FieldOps {
    static bool is_zero(const F& x) { return x == F(0); }
    static F zero() { return F(0); }
    static F one() { return F(1); }
    static std::size_t size(const F& x);
};

template <>
struct FieldOps<Rat> {
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static std::size_t size(const Rat& x) {
        return mpz_sizeinbase(x.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
    }
};

template <>
struct FieldOps<PuiseuxRat> {
    static bool is_zero(const PuiseuxRat& x) { return x.is_zero(); }
    static PuiseuxRat zero() { return PuiseuxRat(); }
    static PuiseuxRat one() { return PuiseuxRat(1); }
    static std::size_t size(const PuiseuxRat& x) { return x.repr_size(); }
};

template <class F>
struct Echelon {
    std::vector<std::vector<F>> rows;      // reduced row echelon form
    std::vector<std::size_t> pivot_cols;   // one per row, increasing
    std::size_t ncols = 0;

    std::size_t rank() const { return rows.size(); }

    // remainder of v after reduction by the echelon rows
    std::vector<F> reduce(std::vector<F> v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const F& c = v[pivot_cols[r]];
            if (FieldOps<F>::is_zero(c)) continue;
            F factor = c;  // pivot entries are 1
            for (std::size_t j = 0; j < ncols; ++j)
                if (!FieldOps<F>::is_zero(rows[r][j])) v[j] = v[j] - factor * rows[r][j];
        }
        return v;
    }

    bool contains(const std::vector<F>& v) const {
        auto rem = reduce(v);
        for (const auto& x : rem)
            if (!FieldOps<F>::is_zero(x)) return false;
        return true;
    }
};

// Reduced row echelon form; column order is the given one (left to right);
// within a column the pivot row is the one with the smallest entry size.
template <class F>
Echelon<F> rref(std::vector<std::vector<F>> m) {
    Echelon<F> e;
    if (m.empty()) return e;
    e.ncols = m[0].size();
    std::size_t top = 0;
    for (std::size_t col = 0; col < e.ncols && top < m.size(); ++col) {
        std::size_t best = m.size();
        std::size_t best_size = 0;
        for (std::size_t r = top; r < m.size(); ++r) {
            if (FieldOps<F>::is_zero(m[r][col])) continue;
            std::size_t s = FieldOps<F>::size(m[r][col]);
            if (best == m.size() || s < best_size) { best = r; best_size = s; }
        }
        if (best == m.size()) continue;
        std::swap(m[top], m[best]);
        F inv = FieldOps<F>::one() / m[top][col];
        for (auto& x : m[top]) if (!FieldOps<F>::is_zero(x)) x = x * inv;
        m[top][col] = FieldOps<F>::one();
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == top || FieldOps<F>::is_zero(m[r][col])) continue;
            F f = m[r][col];
            for (std::size_t j = 0; j < e.ncols; ++j)
                if (!FieldOps<F>::is_zero(m[top][j])) m[r][j] = m[r][j] - f * m[top][j];
            m[r][col] = FieldOps<F>::zero();
        }
        e.pivot_cols.push_back(col);
        ++top;
    }
    m.resize(top);
    e.rows = std::move(m);
    return e;
}

// Basis of { x : for every equation row e, <e, x> = 0 }.
template <class F>
std::vector<std::vector<F>> kernel(const std::vector<std::vector<F>>& equations,
                                   std::size_t nunknowns) {
    Echelon<F> e = rref(equations);
    std::vector<bool> is_pivot(nunknowns, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < nunknowns; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(nunknowns, FieldOps<F>::zero());
        v[f] = FieldOps<F>::one();
        for (std::size_t r = 0; r < e.rows.size(); ++r)
            v[e.pivot_cols[r]] = -e.rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Unique solution of a square, invertible system; nullopt when singular.
template <class F>
std::optional<std::vector<F>> solve_square(std::vector<std::vector<F>> a,
                                           std::vector<F> b) {
    std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r) a[r].push_back(b[r]);
    Echelon<F> e = rref(std::move(a));
    if (e.rank() != n) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r)
        if (e.pivot_cols[r] != r) return std::nullopt;  // pivot in the rhs column
    std::vector<F> x(n, FieldOps<F>::zero());
    for (std::size_t r = 0; r < n; ++r) x[r] = e.rows[r][n];
    return x;
}

template <class F>
F det(std::vector<std::vector<F>> m) {
    std::size_t n = m.size();
    F d = FieldOps<F>::one();
    bool neg = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = n;
        std::size_t best_size = 0;
        for (std::size_t r = col; r < n; ++r) {
            if (FieldOps<F>::is_zero(m[r][col])) continue;
            std::size_t s = FieldOps<F>::size(m[r][col]);
            if (best == n || s < best_size) { best = r; best_size = s; }
        }
        if (best == n) return FieldOps<F>::zero();
        if (best != col) { std::swap(m[col], m[best]); neg = !neg; }
        d = d * m[col][col];
        F inv = FieldOps<F>::one() / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (FieldOps<F>::is_zero(m[r][col])) continue;
            F f = m[r][col] * inv;
            for (std::size_t j = col; j < n; ++j)
                if (!FieldOps<F>::is_zero(m[col][j])) m[r][j] = m[r][j] - f * m[col][j];
        }
    }
    return neg ? -d : d;
}

}  // namespace troph
