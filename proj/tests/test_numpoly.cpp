#include <doctest.h>

#include "troph/numpoly.hpp"

using namespace troph;

TEST_SUITE("numpoly") {

TEST_CASE("extended binomial") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(-1, 2) == 1);   // (-1)(-2)/2
    CHECK(binom(-2, 3) == -4);  // (-2)(-3)(-4)/6
    CHECK(binom(0, 0) == 1);
    CHECK(binom(3, 5) == 0);
}

TEST_CASE("g evaluation") {
    for (long x = -2; x <= 6; ++x) CHECK(g_eval({2}, x) == 2);
    for (long d = 1; d <= 5; ++d) CHECK(g_eval({d}, 3) == d);
    for (long x = 0; x <= 6; ++x) CHECK(g_eval({1, 1}, x) == x + 1);
}

TEST_CASE("g as a polynomial") {
    CHECK(g_to_polynomial({2}) == NumPoly({Rat(2)}));
    CHECK(g_to_polynomial({1, 1}) == NumPoly({Rat(1), Rat(1)}));
    NumPoly p = g_to_polynomial({3, 2});
    CHECK(p.degree() == 1);
    CHECK(p.coeff(1) == 2);  // leading m_s / s!
    for (long x = 0; x <= 3; ++x) CHECK(p.eval(x) == Rat(g_eval({3, 2}, x)));
}

TEST_CASE("decomposition") {
    CHECK(decompose(NumPoly({Rat(2)})) == MVector{2});
    CHECK(decompose(g_to_polynomial({3, 2, 1})) == MVector{3, 2, 1});
    // degree-3 genus-0 curve: p(x) = 3x + 1 = g(binom(3,2)+1, 3; x)
    CHECK(decompose(NumPoly({Rat(1), Rat(3)})) == MVector{4, 3});
    CHECK(decompose(NumPoly()) == MVector{});
    CHECK_THROWS_AS(decompose(NumPoly({Rat(1, 2)})), invalid_input);
}

TEST_CASE("admissibility") {
    CHECK(is_admissible({2, 2}, 2));
    CHECK_FALSE(is_admissible({1, 2}, 3));
    CHECK_FALSE(is_admissible({1, 1, 1}, 2));
    CHECK_FALSE(is_admissible({2, -1}, 3));
    CHECK_FALSE(is_admissible({}, 2));
}

TEST_CASE("dimension and degree") {
    CHECK(hilbert_dim_deg({2}).dim == 0);
    CHECK(hilbert_dim_deg({2}).deg == 2);
    CHECK(hilbert_dim_deg({3, 3}).dim == 1);
    CHECK(hilbert_dim_deg({3, 3}).deg == 3);
    CHECK(hilbert_dim_deg({4, 3}).deg == 3);
}

TEST_CASE("g is integer-valued on a window including negatives") {
    std::vector<MVector> ms = {{2}, {1, 1}, {3, 2}, {4, 3}, {3, 2, 1}, {6, 4, 4, 2}};
    for (const auto& m : ms) {
        NumPoly p = g_to_polynomial(m);
        for (long x = -10; x <= 10; ++x) {
            CHECK(p.eval(x).get_den() == 1);
            CHECK(p.eval(x) == Rat(g_eval(m, x)));
        }
    }
}

TEST_CASE("numericality detection") {
    CHECK(NumPoly({Rat(0), Rat(1, 2), Rat(1, 2)}).is_numerical());  // x(x+1)/2
    CHECK_FALSE(NumPoly({Rat(1, 3)}).is_numerical());
}

}  // TEST_SUITE
