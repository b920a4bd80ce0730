#pragma once

// Hilbert-polynomial combinatorics: the canonical form
//   g(m_0,...,m_s; x) = sum_i binom(x+i, i+1) - binom(x+i-m_i, i+1)
// of a numerical polynomial, its evaluation, expansion, and inversion.

#include <functional>
#include <vector>

#include "troph/valfield.hpp"

namespace troph {

// Data (m_0, ..., m_s); empty means the zero polynomial (no g-form exists).
using MVector = std::vector<long>;

// Univariate polynomial over Q, coefficient list c[0] + c[1] x + ...
class NumPoly {
public:
    NumPoly() = default;
    explicit NumPoly(std::vector<Rat> coeffs);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat eval(const Rat& x) const;
    Rat eval(long x) const { return eval(Rat(x)); }

    NumPoly operator+(const NumPoly& o) const;
    NumPoly operator-(const NumPoly& o) const;
    NumPoly operator*(const NumPoly& o) const;
    bool operator==(const NumPoly& o) const { return c_ == o.c_; }

    // integer values at deg+2 consecutive integer points starting at x0
    bool is_numerical(long x0 = 0) const;

private:
    std::vector<Rat> c_;
    void trim();
};

// binomial with the polynomial extension a(a-1)...(a-k+1)/k!, valid for
// negative a
Int binom(const Int& a, unsigned k);
Int binom(long a, unsigned k);

// binom(x + shift, k) as a polynomial in x
NumPoly binom_poly(long shift, unsigned k);

Int g_eval(const MVector& m, long x);
NumPoly g_to_polynomial(const MVector& m);  // pre: m nonempty, m_s != 0

// Inverse of g_to_polynomial.  Throws invalid_input if p is not numerical.
// The zero polynomial decomposes to the empty MVector.
MVector decompose(const NumPoly& p);

bool is_admissible(const MVector& m, int n);

struct DimDeg {
    long dim;
    long deg;
};
DimDeg hilbert_dim_deg(const MVector& m);  // (s, m_s)

// Fits the eventually-polynomial integer sequence h on sliding windows of
// n + 2 consecutive points until two consecutive windows agree on a
// polynomial of degree <= n, then returns its g-decomposition.  Throws
// no_stabilization past d_max.
MVector fit_hilbert_sequence(const std::function<Int(long)>& h, int n, long d_max);

}  // namespace troph
