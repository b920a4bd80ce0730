#pragma once

// Max-plus semiring T = (R u {-inf}, max, +), tropical polynomials with
// exact rational coefficients, their zero loci, and points of tropical
// projective space.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "troph/valfield.hpp"

namespace troph {

// Element of T: a rational number or -inf (the oplus identity).
class TropVal {
public:
    TropVal() : finite_(false) {}  // -inf
    TropVal(const Rat& v) : finite_(true), v_(v) {}
    TropVal(long v) : finite_(true), v_(v) {}
    static TropVal ninf() { return TropVal(); }

    bool is_ninf() const { return !finite_; }
    const Rat& value() const;  // pre: finite

    friend TropVal oplus(const TropVal& a, const TropVal& b) {
        if (a.is_ninf()) return b;
        if (b.is_ninf()) return a;
        return a.v_ >= b.v_ ? a : b;
    }
    friend TropVal odot(const TropVal& a, const TropVal& b) {
        if (a.is_ninf() || b.is_ninf()) return ninf();
        return TropVal(a.v_ + b.v_);
    }

    bool operator==(const TropVal& o) const {
        if (finite_ != o.finite_) return false;
        return !finite_ || v_ == o.v_;
    }
    bool operator!=(const TropVal& o) const { return !(*this == o); }
    bool operator<(const TropVal& o) const {
        if (!finite_) return o.finite_;
        return o.finite_ && v_ < o.v_;
    }

    std::string str() const;

private:
    bool finite_;
    Rat v_;
};

// Exponent vector of a monomial; one entry per variable.
using ExpVec = std::vector<int>;

int degree(const ExpVec& e);

// Tropical polynomial max_a (phi_a + <x, a>).  Terms with coefficient -inf
// are never stored; the null polynomial is the empty map.
class TropPoly {
public:
    explicit TropPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    bool is_null() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Rat>& terms() const { return terms_; }

    void set_term(const ExpVec& e, const TropVal& c);
    TropVal coeff(const ExpVec& e) const;

    TropVal eval(const std::vector<Rat>& omega) const;
    std::set<ExpVec> argmax_terms(const std::vector<Rat>& omega) const;
    // the maximum is attained at least twice, or the polynomial is null
    bool in_zero_locus(const std::vector<Rat>& omega) const;

    bool operator==(const TropPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

private:
    int nvars_;
    std::map<ExpVec, Rat> terms_;
};

// Point of TP^n, kept in the chart form: the first finite coordinate is 0.
class TropProjPoint {
public:
    explicit TropProjPoint(std::vector<TropVal> coords);  // normalizes

    const std::vector<TropVal>& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }

    bool operator==(const TropProjPoint& o) const { return coords_ == o.coords_; }
    bool operator!=(const TropProjPoint& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::vector<TropVal> coords_;
};

TropProjPoint proj_normalize(std::vector<TropVal> coords);

}  // namespace troph
