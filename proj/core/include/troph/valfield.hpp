#pragma once

// Exact arithmetic in K = union of the fields Q(t^(1/N)), carrying the
// t-adic valuation v, the residue map onto Q, and the monomial section
// w -> t^w.  Elements are rational functions in u = t^(1/N) with rational
// coefficients, kept in a canonical form so that rendering is bit-exact.

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "troph/errors.hpp"

namespace troph {

using Int = mpz_class;
using Rat = mpq_class;

Rat parse_rat(std::string_view s);
std::string rat_str(const Rat& q);

// Dense univariate polynomial over Q in the formal variable u.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rat& c);
    static QPoly monomial(const Rat& c, std::size_t e);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    // order = lowest exponent with nonzero coefficient; 0 for the zero polynomial
    std::size_t ord() const;
    Rat coeff(std::size_t e) const;
    const Rat& trailing() const;  // coefficient at ord(); pre: nonzero
    const Rat& leading() const;   // pre: nonzero

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    QPoly scaled(const Rat& c) const;
    QPoly shifted_down(std::size_t k) const;  // divide by u^k; pre: ord() >= k
    QPoly stretched(unsigned long k) const;   // substitute u -> u^k
    QPoly compressed(unsigned long k) const;  // inverse of stretched; pre: exponents divisible by k
    // gcd of k with all exponents carrying nonzero coefficients
    unsigned long exponent_gcd(unsigned long k) const;

    static QPoly divrem(const QPoly& a, const QPoly& b, QPoly* rem);
    static QPoly gcd(QPoly a, QPoly b);  // monic gcd; gcd(0,0) = 0

    // terms in increasing exponent order, for rendering
    const std::vector<Rat>& coeffs() const { return c_; }

private:
    std::vector<Rat> c_;  // c_[i] is the coefficient of u^i; no trailing zeros
    void trim();
};

// Element of K = Q(t^(1/N)).  Canonical form: den != 0, gcd(num, den) = 1
// in Q[u], trailing coefficient of den equal to 1, minimal scale N, and the
// zero element stored as (0, 1, 1).
class PuiseuxRat {
public:
    PuiseuxRat();  // zero
    PuiseuxRat(long n);
    PuiseuxRat(const Rat& c);
    PuiseuxRat(QPoly num, QPoly den, unsigned long scale);

    // the monomial t^w; group homomorphism section of the valuation
    static PuiseuxRat section(const Rat& w);
    static PuiseuxRat t();  // t^1

    bool is_zero() const { return num_.is_zero(); }

    PuiseuxRat operator+(const PuiseuxRat& o) const;
    PuiseuxRat operator-(const PuiseuxRat& o) const;
    PuiseuxRat operator*(const PuiseuxRat& o) const;
    PuiseuxRat operator/(const PuiseuxRat& o) const;
    PuiseuxRat operator-() const;
    PuiseuxRat inv() const;
    PuiseuxRat pow(long e) const;
    bool operator==(const PuiseuxRat& o) const;
    bool operator!=(const PuiseuxRat& o) const { return !(*this == o); }

    Rat valuation() const;     // throws undefined_valuation on 0
    Rat tropicalize() const;   // -valuation
    Rat residue() const;       // image in the residue field; pre: valuation 0
    Rat residue_of_unit_part() const;  // residue after dividing out t^valuation

    // Same element, represented at scale*k without re-minimalizing.  Used to
    // exercise arithmetic across subfield extensions Q(t) < Q(t^(1/k)).
    PuiseuxRat inflate_scale(unsigned long k) const;

    unsigned long scale() const { return scale_; }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    std::string str() const;
    static PuiseuxRat parse(std::string_view text);

    // rough size of the representation; used for pivot selection
    std::size_t repr_size() const;

private:
    QPoly num_, den_;
    unsigned long scale_ = 1;
    void normalize();
    struct raw_tag {};
    PuiseuxRat(QPoly num, QPoly den, unsigned long scale, raw_tag);
};

std::ostream& operator<<(std::ostream& os, const PuiseuxRat& x);

}  // namespace troph
