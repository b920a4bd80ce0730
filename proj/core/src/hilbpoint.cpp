#include "troph/hilbpoint.hpp"

#include <array>

namespace troph {

HilbertPoint hilbert_point(const GradedIdeal& I, const MVector& m) {
    if (m.empty()) throw invalid_input("hilbert_point: empty Hilbert data");
    long m0 = m.front();
    ComponentBasis B = component_basis(I, m0);
    Int expected = Int(dim_degree_part(I.nvars(), m0)) - g_eval(m, m0);
    if (Int(static_cast<long>(B.dim())) != expected)
        throw invalid_input("hilbert_point: dim I_{m0} does not match the Hilbert polynomial");
    if (B.dim() == 0) throw invalid_input("hilbert_point: I_{m0} is zero");
    return {m, wedge_coordinates(B.basis.rows)};
}

TropHilbertPoint trop_hilbert_point(const HilbertPoint& H) {
    std::vector<TropVal> coords;
    coords.reserve(H.pluecker.size());
    for (const auto& c : H.pluecker)
        coords.push_back(c.is_zero() ? TropVal::ninf() : TropVal(c.tropicalize()));
    return proj_normalize(std::move(coords));
}

TropAgreementReport same_trop_point_implies_same_variety(
    const GradedIdeal& I, const GradedIdeal& J, const MVector& m,
    const std::vector<std::vector<Rat>>& grid) {
    TropAgreementReport rep;
    TropHilbertPoint ti = trop_hilbert_point(hilbert_point(I, m));
    TropHilbertPoint tj = trop_hilbert_point(hilbert_point(J, m));
    rep.hypothesis_holds = (ti == tj);
    if (!rep.hypothesis_holds) return rep;  // vacuous pass
    for (const auto& omega : grid) {
        if (member(I, m, omega) != member(J, m, omega)) {
            rep.oracles_agree = false;
            rep.counterexample = omega;
            return rep;
        }
    }
    return rep;
}

std::string to_string(PairsTag tag) {
    switch (tag) {
        case PairsTag::P: return "P";
        case PairsTag::Ray1: return "ray1";
        case PairsTag::Ray2: return "ray2";
        case PairsTag::Ray3: return "ray3";
        case PairsTag::Ray4: return "ray4";
        case PairsTag::Ray5: return "ray5";
        case PairsTag::Ray6: return "ray6";
    }
    return "?";
}

const std::vector<std::array<int, 3>>& pairs_center_forms() {
    // coefficients of (A, B, C) in the 15 center coordinates
    static const std::vector<std::array<int, 3>> forms = {
        {1, 1, 1},   // A + B + C
        {0, 2, 1},   // 2B + C
        {0, 1, 2},   // B + 2C
        {0, 1, 2},   // B + 2C
        {0, 0, 3},   // 3C
        {-1, 1, 3},  // -A + B + 3C
        {0, 3, 0},   // 3B
        {0, 2, 1},   // 2B + C
        {-1, 3, 1},  // -A + 3B + C
        {-1, 2, 2},  // -A + 2B + 2C
        {2, 1, 0},   // 2A + B
        {2, 0, 1},   // 2A + C
        {1, 1, 1},   // A + B + C
        {1, 0, 2},   // A + 2C
        {1, 2, 0},   // A + 2B
    };
    return forms;
}

const std::vector<std::vector<int>>& pairs_ray_directions() {
    static const std::vector<std::vector<int>> dirs = {
        {1, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1},
        {-1, 0, 0, 0, 0, -1, 0, 0, -1, -1, 0, 0, 0, 0, 0},
        {0, 0, -1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, -1},
        {0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
    };
    return dirs;
}

TropHilbertPoint expected_pairs_point(const Rat& A, const Rat& B, const Rat& C,
                                      PairsTag tag, const Rat& mu) {
    if (mu < 0) throw invalid_input("expected_pairs_point: mu must be >= 0");
    if (tag == PairsTag::P && mu != 0)
        throw invalid_input("expected_pairs_point: mu must be 0 at the center");
    std::vector<TropVal> coords;
    coords.reserve(15);
    const auto& forms = pairs_center_forms();
    for (std::size_t i = 0; i < 15; ++i) {
        Rat v = A * forms[i][0] + B * forms[i][1] + C * forms[i][2];
        if (tag != PairsTag::P) {
            int d = pairs_ray_directions()[static_cast<std::size_t>(tag) - 1][i];
            if (d) v += mu * d;
        }
        coords.push_back(TropVal(v));
    }
    return proj_normalize(std::move(coords));
}

PairsResult pairs_of_points(const PuiseuxRat& a, const PuiseuxRat& b,
                            const PuiseuxRat& c, const PuiseuxRat& l) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw non_generic_input("pairs: the supporting point has a zero coordinate");
    if (l.is_zero()) throw non_generic_input("pairs: l must be nonzero");
    PuiseuxRat al_b = a * l + b;
    if (al_b.is_zero())
        throw non_generic_input("pairs: a l + b = 0, tangent line hits a coordinate point");
    PuiseuxRat n = -al_b / c;

    // f = l x0 + x1 + n x2; basis of I_2 is x0 f, x1 f, x2 f, (c x0 - a x2)^2
    KPoly f(3);
    f.set_term({1, 0, 0}, l);
    f.set_term({0, 1, 0}, PuiseuxRat(1));
    f.set_term({0, 0, 1}, n);
    KPoly g(3);
    g.set_term({1, 0, 0}, c);
    g.set_term({0, 0, 1}, -a);
    KPoly g2 = g * g;

    PairsResult out{GradedIdeal(2, {f, g2}), {}, TropHilbertPoint({TropVal(0)}), {}};

    auto mons = monomials_of_degree(3, 2);
    std::map<ExpVec, std::size_t> index;
    for (std::size_t j = 0; j < mons.size(); ++j) index[mons[j]] = j;
    std::vector<std::vector<PuiseuxRat>> rows;
    for (const KPoly& p : {f.shifted({1, 0, 0}), f.shifted({0, 1, 0}),
                           f.shifted({0, 0, 1}), g2}) {
        std::vector<PuiseuxRat> row(6);
        for (const auto& [e, coef] : p.terms()) row[index.at(e)] = coef;
        rows.push_back(std::move(row));
    }
    out.point.m = {2};
    out.point.pluecker = wedge_coordinates(rows);
    std::vector<TropVal> coords;
    for (const auto& x : out.point.pluecker)
        coords.push_back(x.is_zero() ? TropVal::ninf() : TropVal(x.tropicalize()));
    out.trop = proj_normalize(std::move(coords));

    // stratum classification
    PairsCase& cs = out.stratum;
    cs.A = a.tropicalize();
    cs.B = b.tropicalize();
    cs.C = c.tropicalize();
    Rat L = l.tropicalize();
    Rat tal = cs.A + L;  // tau(a l)
    if (tal > cs.B) {
        cs.tag = PairsTag::Ray1;
        cs.mu = tal - cs.B;
    } else if (tal < cs.B) {
        cs.tag = PairsTag::Ray2;
        cs.mu = cs.B - tal;
    } else {
        // tau(a l) = tau(b): at most one of the four binomials can cancel
        struct Probe { PuiseuxRat v; PairsTag tag; };
        const Probe probes[] = {
            {al_b, PairsTag::Ray3},
            {a * l - b, PairsTag::Ray4},
            {a * l * 2 + b, PairsTag::Ray5},
            {a * l + b * 2, PairsTag::Ray6},
        };
        cs.tag = PairsTag::P;
        cs.mu = 0;
        for (const auto& p : probes) {
            if (p.v.is_zero())
                throw non_generic_input("pairs: exact cancellation, the tropical point "
                                        "leaves the ray fan (coordinate -inf)");
            Rat tv = p.v.tropicalize();
            if (tv < cs.B) {
                if (cs.tag != PairsTag::P)
                    throw internal_inconsistency("pairs: two binomials cancel at once");
                cs.tag = p.tag;
                cs.mu = cs.B - tv;
            }
        }
    }
    return out;
}

}  // namespace troph
