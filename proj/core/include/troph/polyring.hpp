#pragma once

// Multivariate homogeneous polynomials over K, graded components of ideals,
// Hilbert functions, and Pluecker coordinates of component bases.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "troph/linalg.hpp"
#include "troph/numpoly.hpp"
#include "troph/tropical.hpp"
#include "troph/valfield.hpp"

namespace troph {

// Polynomial in n+1 variables x_0..x_n over K.
class KPoly {
public:
    explicit KPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, PuiseuxRat>& terms() const { return terms_; }

    void set_term(const ExpVec& e, const PuiseuxRat& c);
    PuiseuxRat coeff(const ExpVec& e) const;

    long total_degree() const;  // -1 for zero
    bool is_homogeneous() const;

    KPoly operator+(const KPoly& o) const;
    KPoly operator-(const KPoly& o) const;
    KPoly operator*(const KPoly& o) const;
    KPoly operator-() const;
    KPoly scaled(const PuiseuxRat& c) const;
    KPoly shifted(const ExpVec& beta) const;  // multiply by x^beta
    bool operator==(const KPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    std::string str() const;  // human-readable, variables x0..xn

private:
    int nvars_;
    std::map<ExpVec, PuiseuxRat> terms_;
};

// coefficientwise tau; zero coefficients drop out as -inf
TropPoly tropicalize(const KPoly& f);

struct GradedIdeal {
    int n = 0;  // ambient projective dimension; n+1 variables
    std::vector<KPoly> generators;

    GradedIdeal() = default;
    GradedIdeal(int n_, std::vector<KPoly> gens);
    int nvars() const { return n + 1; }
};

// All exponent vectors of total degree d.  For three variables in degree 2
// the order is the one the Pluecker fixtures depend on
// (x0^2, x1^2, x2^2, x1x2, x0x2, x0x1); everywhere else it is graded lex
// with x0 > x1 > ... .
std::vector<ExpVec> monomials_of_degree(int nvars, long d);

long dim_degree_part(int nvars, long d);  // binom(n + d, n)

// Basis of I_d in the coordinates of monomials_of_degree(nvars, d),
// stored in reduced row echelon form.
struct ComponentBasis {
    int nvars = 0;
    long d = 0;
    std::vector<ExpVec> monomials;
    Echelon<PuiseuxRat> basis;

    std::size_t dim() const { return basis.rank(); }
    // row as a polynomial
    KPoly row_poly(std::size_t r) const;
};

ComponentBasis component_basis(const GradedIdeal& I, long d);

long hilbert_function(const GradedIdeal& I, long d);

// Fits h_I on sliding windows of n+2 consecutive degrees until two
// consecutive windows agree, then returns the g-decomposition.
MVector fit_hilbert_polynomial(const GradedIdeal& I, long d_max = 24);

// (I : f)_d as a component basis; exact linear solve against I_{d + deg f}.
ComponentBasis colon_component(const GradedIdeal& I, const KPoly& f, long d);

// All binom(N, k) maximal minors of the k x N matrix whose rows are given,
// column subsets in lexicographic order.
std::vector<PuiseuxRat> wedge_coordinates(const std::vector<std::vector<PuiseuxRat>>& rows);

// index sets {0 <= i_1 < ... < i_k < n} in lexicographic order
std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t k);

}  // namespace troph
