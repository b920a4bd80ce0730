#include "troph/tropical.hpp"

#include <numeric>
#include <sstream>

namespace troph {

const Rat& TropVal::value() const {
    if (!finite_) throw invalid_input("value() of -inf");
    return v_;
}

std::string TropVal::str() const {
    if (!finite_) return "-inf";
    return rat_str(v_);
}

int degree(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

void TropPoly::set_term(const ExpVec& e, const TropVal& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw dimension_mismatch("term has wrong variable count");
    if (c.is_ninf())
        terms_.erase(e);
    else
        terms_[e] = c.value();
}

TropVal TropPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? TropVal::ninf() : TropVal(it->second);
}

TropVal TropPoly::eval(const std::vector<Rat>& omega) const {
    if (static_cast<int>(omega.size()) != nvars_)
        throw dimension_mismatch("eval: point has wrong dimension");
    TropVal best = TropVal::ninf();
    for (const auto& [e, c] : terms_) {
        Rat v = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) v += omega[i] * e[i];
        best = oplus(best, TropVal(v));
    }
    return best;
}

std::set<ExpVec> TropPoly::argmax_terms(const std::vector<Rat>& omega) const {
    if (is_null()) throw invalid_input("argmax_terms of the null polynomial");
    TropVal m = eval(omega);
    std::set<ExpVec> out;
    for (const auto& [e, c] : terms_) {
        Rat v = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) v += omega[i] * e[i];
        if (TropVal(v) == m) out.insert(e);
    }
    return out;
}

bool TropPoly::in_zero_locus(const std::vector<Rat>& omega) const {
    if (is_null()) return true;  // T(null) is the whole space
    return argmax_terms(omega).size() >= 2;
}

TropProjPoint::TropProjPoint(std::vector<TropVal> coords) : coords_(std::move(coords)) {
    const TropVal* first = nullptr;
    for (const auto& c : coords_)
        if (!c.is_ninf()) { first = &c; break; }
    if (!first) throw invalid_input("projective point with all coordinates -inf");
    Rat shift = first->value();
    if (shift != 0)
        for (auto& c : coords_)
            if (!c.is_ninf()) c = TropVal(c.value() - shift);
}

std::string TropProjPoint::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << " : ";
        os << coords_[i].str();
    }
    os << "]";
    return os.str();
}

TropProjPoint proj_normalize(std::vector<TropVal> coords) {
    return TropProjPoint(std::move(coords));
}

}  // namespace troph
