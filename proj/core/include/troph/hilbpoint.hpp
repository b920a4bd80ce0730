#pragma once

// Hilbert points of saturated ideals in Pluecker coordinates, their
// tropicalizations, and the pairs-of-points family in the projective plane:
// schemes with one point and a one-dimensional tangent space, whose
// tropical Hilbert points sweep a fan of six rays from a center.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "troph/initial.hpp"
#include "troph/polyring.hpp"
#include "troph/tropical.hpp"

namespace troph {

struct HilbertPoint {
    MVector m;
    std::vector<PuiseuxRat> pluecker;  // defined up to a global scalar
};

using TropHilbertPoint = TropProjPoint;

// Pluecker vector of a basis of I_{m0}.  Checks that dim I_{m0} matches the
// codimension prescribed by the Hilbert polynomial.
HilbertPoint hilbert_point(const GradedIdeal& I, const MVector& m);

TropHilbertPoint trop_hilbert_point(const HilbertPoint& H);

struct TropAgreementReport {
    bool hypothesis_holds = false;  // tropical Hilbert points are equal
    bool oracles_agree = true;
    std::optional<std::vector<Rat>> counterexample;
    bool pass() const { return !hypothesis_holds || oracles_agree; }
};

// Theorem harness: equal tropical Hilbert points force equal membership
// verdicts on the grid.
TropAgreementReport same_trop_point_implies_same_variety(
    const GradedIdeal& I, const GradedIdeal& J, const MVector& m,
    const std::vector<std::vector<Rat>>& grid);

enum class PairsTag { P, Ray1, Ray2, Ray3, Ray4, Ray5, Ray6 };
std::string to_string(PairsTag tag);

struct PairsCase {
    PairsTag tag = PairsTag::P;
    Rat A, B, C;  // tropicalizations of a, b, c
    Rat mu;       // distance along the ray; 0 at the center
};

struct PairsResult {
    GradedIdeal ideal;        // (f, (c x0 - a x2)^2)
    HilbertPoint point;
    TropHilbertPoint trop;
    PairsCase stratum;
};

// The scheme supported at [a:b:c] with tangent line f = l x0 + x1 + n x2,
// n = -(a l + b)/c.  Builds the four-row basis of I_2 in the pinned
// monomial order, its 15 Pluecker coordinates, and classifies the stratum
// from the valuations of a l + b, a l - b, a l + 2b, 2 a l + b.
PairsResult pairs_of_points(const PuiseuxRat& a, const PuiseuxRat& b,
                            const PuiseuxRat& c, const PuiseuxRat& l);

// Fixture: the 15 coordinates of the center evaluated at (A, B, C), plus
// mu times the direction vector of the given ray.
TropHilbertPoint expected_pairs_point(const Rat& A, const Rat& B, const Rat& C,
                                      PairsTag tag, const Rat& mu);

// table access for tests: 15 rows of coefficients (cA, cB, cC)
const std::vector<std::array<int, 3>>& pairs_center_forms();
const std::vector<std::vector<int>>& pairs_ray_directions();  // 6 x 15

}  // namespace troph
