#pragma once

// Initial forms and initial spaces with respect to a rational weight, the
// degree-m0 tropical membership oracle, and certificate polynomials whose
// initial form is a monomial.

#include <optional>
#include <vector>

#include "troph/polyring.hpp"

namespace troph {

// Polynomial over the residue field Q.
class ResiduePoly {
public:
    explicit ResiduePoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, Rat>& terms() const { return terms_; }
    void set_term(const ExpVec& e, const Rat& c);
    Rat coeff(const ExpVec& e) const;
    bool is_monomial() const { return terms_.size() == 1; }

    ResiduePoly operator*(const ResiduePoly& o) const;
    bool operator==(const ResiduePoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    std::string str() const;

private:
    int nvars_;
    std::map<ExpVec, Rat> terms_;
};

// Subspace of the degree-d part of Q[x_0..x_n], rows independent.
struct ResidueSpace {
    int nvars = 0;
    long d = 0;
    std::vector<ExpVec> monomials;
    std::vector<std::vector<Rat>> rows;

    std::size_t dim() const { return rows.size(); }
};

// in_omega(f): residue of t^H f(t^{-omega} x) where H = tau(f)(omega).
// The zero polynomial maps to zero.
ResiduePoly initial_form(const KPoly& f, const std::vector<Rat>& omega);

// Image of the row space in the residue field after rescaling coordinates
// by t^{-<omega, a>}; dimension equals the input row count.
ResidueSpace reduce_space(const ComponentBasis& B, const std::vector<Rat>& omega);

ResidueSpace initial_space(const GradedIdeal& I, const std::vector<Rat>& omega, long d);

// Some exponent a with the unit vector e_a in the row span, smallest in the
// canonical monomial order; nothing if the span contains no monomial.
std::optional<ExpVec> find_monomial(const ResidueSpace& V);

// omega lies in Trop(Z(I)) iff the degree-m0 initial space contains no
// monomial.  I must be saturated (asserted by the caller); m is its Hilbert
// polynomial data.
bool member(const GradedIdeal& I, const MVector& m, const std::vector<Rat>& omega);

// For omega outside Trop(Z(I)): f in I_{m0} with monomial initial form at
// omega, certifying non-membership.  Verified before returning.
KPoly witness_polynomial(const GradedIdeal& I, const MVector& m,
                         const std::vector<Rat>& omega);

// Membership verdicts agree between the scale-1 representation of I and a
// representation inflated into Q(t^(1/2)), at every grid point.
bool extension_invariance_check(const GradedIdeal& I, const MVector& m,
                                const std::vector<std::vector<Rat>>& grid);

}  // namespace troph
