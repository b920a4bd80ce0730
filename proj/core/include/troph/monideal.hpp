#pragma once

// Monomial ideals at desk scale: colon ideals, saturation indices,
// primary decomposition, multiplicities, arithmetic degree, and the
// bounded-degree monomial witness.

#include <optional>
#include <string>
#include <vector>

#include "troph/numpoly.hpp"
#include "troph/tropical.hpp"

namespace troph {

// Monomial ideal given by its minimal generators; no generator divides
// another.  Monomials are exponent vectors in n+1 variables.
class MonIdeal {
public:
    MonIdeal(int n, std::vector<ExpVec> gens);
    static MonIdeal zero(int n) { return MonIdeal(n, {}); }
    static MonIdeal unit(int n);

    int n() const { return n_; }
    int nvars() const { return n_ + 1; }
    const std::vector<ExpVec>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;

    bool contains(const ExpVec& mono) const;
    bool contains(const MonIdeal& other) const;  // other subset of this
    bool operator==(const MonIdeal& o) const;

    MonIdeal plus(const ExpVec& mono) const;           // I + (m)
    MonIdeal intersect(const MonIdeal& o) const;       // lcm construction
    MonIdeal colon(const ExpVec& f) const;             // (I : f)

    // number of degree-d monomials outside the ideal
    Int std_monomial_count(long d) const;

    std::string str() const;

private:
    int n_;
    std::vector<ExpVec> gens_;
    void minimalize();
};

// (I : f^infty) together with the stabilization index l_f(I)
struct Saturation {
    MonIdeal ideal;
    long ell;
};
Saturation saturate(const MonIdeal& I, const ExpVec& f);

// saturation with respect to the product of all variables
MonIdeal saturate_irrelevant(const MonIdeal& I);

// A monomial prime, encoded as the set of its variables.
using MonPrime = std::vector<int>;  // sorted variable indices

struct PrimaryPiece {
    MonIdeal Q;
    MonPrime P;       // radical of Q
    long multiplicity = 0;
};

// Irredundant primary decomposition with one piece per associated prime.
// Multiplicities are filled in via localization counts.
std::vector<PrimaryPiece> primary_decomposition(const MonIdeal& I);

// Multiplicity of the associated prime P in I: the length of the largest
// finite-length part of the localization at P, computed as the number of
// standard monomials of I|_P that become trivial after saturating by P.
long multiplicity(const MonIdeal& I, const MonPrime& P);

// Test oracle: maximal strictly increasing chain of ideals R cap I_P with
// R a P-primary monomial ideal between Q and P; counts strict steps.
// Throws budget_exceeded when the search space is too large.
long multiplicity_chain_steps(const MonIdeal& I, const MonPrime& P,
                              std::size_t budget = 200000);
bool prime_is_isolated(const MonIdeal& I, const MonPrime& P);

struct ArithDegree {
    std::vector<long> by_dim;  // index r+1 holds adeg_r, r = -1 .. n-1
    long total = 0;            // sum over r >= 0
    long at(long r) const { return by_dim.at(static_cast<std::size_t>(r + 1)); }
};
ArithDegree adeg(const MonIdeal& I);

// Hilbert polynomial data of S/I fitted from standard monomial counts.
MVector fit_hilbert_polynomial(const MonIdeal& I, long d_max = 40);

struct BoundedMonomial {
    ExpVec alpha;
    bool contains_monomial;  // x^alpha in I, equivalently (I : x^alpha) = (1)
    long degree_bound;       // B = sum of multiplicities
};
// Constructs alpha with (I : x^alpha) = (I : (x_0...x_n)^infty) and
// deg alpha <= B; verifies the identity before returning.
BoundedMonomial bounded_monomial(const MonIdeal& I);

// parser for generator lists like "x0^2*x1, x2^3"
ExpVec parse_monomial(std::string_view text, int nvars);
MonIdeal parse_mon_ideal(std::string_view gens, int nvars);
std::string monomial_str(const ExpVec& e);

}  // namespace troph
