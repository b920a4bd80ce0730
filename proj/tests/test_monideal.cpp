#include <doctest.h>

#include <random>

#include "troph/monideal.hpp"

using namespace troph;

namespace {

MonIdeal mi(int n, std::initializer_list<const char*> gens) {
    std::vector<ExpVec> out;
    for (const char* g : gens) out.push_back(parse_monomial(g, n + 1));
    return MonIdeal(n, std::move(out));
}

}  // namespace

TEST_SUITE("monideal") {

TEST_CASE("colon") {
    CHECK(mi(1, {"x0^2"}).colon(parse_monomial("x0", 2)) == mi(1, {"x0"}));
    CHECK(mi(1, {"x0^2", "x0*x1"}).colon(parse_monomial("x1", 2)) == mi(1, {"x0"}));
    CHECK(mi(2, {"x0*x1"}).colon(parse_monomial("x2", 3)) == mi(2, {"x0*x1"}));
}

TEST_CASE("saturation and the stabilization index") {
    auto s1 = saturate(mi(1, {"x0^2"}), parse_monomial("x0", 2));
    CHECK(s1.ideal.is_unit());
    CHECK(s1.ell == 2);
    auto s2 = saturate(mi(1, {"x0^2", "x0*x1"}), parse_monomial("x1", 2));
    CHECK(s2.ideal == mi(1, {"x0"}));
    CHECK(s2.ell == 1);
    auto s3 = saturate(mi(2, {"x0*x1"}), parse_monomial("x2", 3));
    CHECK(s3.ideal == mi(2, {"x0*x1"}));
    CHECK(s3.ell == 0);
}

TEST_CASE("primary decomposition") {
    {
        auto p = primary_decomposition(mi(1, {"x0^2", "x0*x1"}));
        REQUIRE(p.size() == 2);
        MonIdeal inter = p[0].Q.intersect(p[1].Q);
        CHECK(inter == mi(1, {"x0^2", "x0*x1"}));
        CHECK(p[0].P == MonPrime{0});
        CHECK(p[1].P == MonPrime{0, 1});
    }
    {
        auto p = primary_decomposition(mi(1, {"x0*x1"}));
        REQUIRE(p.size() == 2);
        CHECK(p[0].Q == mi(1, {"x0"}));
        CHECK(p[1].Q == mi(1, {"x1"}));
    }
    {
        auto p = primary_decomposition(mi(1, {"x0^2"}));
        REQUIRE(p.size() == 1);
        CHECK(p[0].Q == mi(1, {"x0^2"}));
        CHECK(p[0].P == MonPrime{0});
    }
}

TEST_CASE("multiplicity") {
    CHECK(multiplicity(mi(1, {"x0^2"}), {0}) == 2);
    CHECK(multiplicity(mi(1, {"x0"}), {0}) == 1);
    CHECK(multiplicity(mi(1, {"x0^2", "x0*x1"}), {0, 1}) == 1);
    // fat point in the plane: colength 3
    CHECK(multiplicity(mi(2, {"x0^2", "x0*x1", "x1^2"}), {0, 1}) == 3);
}

TEST_CASE("chain-search oracle agrees on the worked cases") {
    // isolated primes: number of strict steps + 1
    CHECK(multiplicity_chain_steps(mi(1, {"x0^2"}), {0}) + 1 == 2);
    CHECK(multiplicity_chain_steps(mi(1, {"x0"}), {0}) + 1 == 1);
    // embedded prime: strict steps only
    CHECK(multiplicity_chain_steps(mi(1, {"x0^2", "x0*x1"}), {0, 1}) == 1);
    CHECK(prime_is_isolated(mi(1, {"x0^2"}), {0}));
    CHECK_FALSE(prime_is_isolated(mi(1, {"x0^2", "x0*x1"}), {0, 1}));
}

TEST_CASE("arithmetic degree") {
    {
        ArithDegree ad = adeg(mi(1, {"x0"}));
        CHECK(ad.at(0) == 1);
        CHECK(ad.total == 1);
    }
    {
        ArithDegree ad = adeg(mi(1, {"x0^2"}));
        CHECK(ad.at(0) == 2);
        CHECK(ad.total == 2);
    }
    {
        ArithDegree ad = adeg(mi(1, {"x0^2", "x0*x1"}));
        CHECK(ad.at(0) == 1);
        CHECK(ad.at(-1) == 1);
        CHECK(ad.total == 1);
    }
}

TEST_CASE("hilbert fit of monomial ideals") {
    CHECK(fit_hilbert_polynomial(mi(1, {"x0"})) == MVector{1});
    CHECK(fit_hilbert_polynomial(mi(1, {"x0^2"})) == MVector{2});
    CHECK(fit_hilbert_polynomial(mi(2, {"x0"})) == MVector{1, 1});
    // empty subscheme: the Hilbert polynomial is zero
    CHECK(fit_hilbert_polynomial(mi(1, {"x0", "x1^2"})) == MVector{});
}

TEST_CASE("bounded monomial witness") {
    {
        auto bm = bounded_monomial(mi(1, {"x0^2*x1", "x1^3"}));
        CHECK(degree(bm.alpha) <= bm.degree_bound);
        CHECK(bm.contains_monomial);  // x0^2 x1 is a monomial of I
    }
    {
        auto bm = bounded_monomial(mi(1, {"x0*x1"}));
        CHECK(bm.contains_monomial);
        CHECK(degree(bm.alpha) <= 2);
    }
    {
        auto bm = bounded_monomial(mi(1, {"x0"}));
        CHECK(bm.alpha == ExpVec{1, 0});
        CHECK(bm.contains_monomial);
    }
}

TEST_CASE("saturation with respect to the irrelevant ideal") {
    // (x0^2 x1, x1^2): the product saturation differs from the
    // irrelevant-ideal saturation; the latter keeps the line component
    MonIdeal I = mi(1, {"x0^2*x1", "x1^2"});
    ExpVec prod = parse_monomial("x0*x1", 2);
    CHECK(saturate(I, prod).ideal.is_unit());
    CHECK(saturate_irrelevant(I) == mi(1, {"x1"}));
}

TEST_CASE("strict chain lemma on random primary ideals") {
    std::mt19937_64 rng(31);
    auto ri = [&](long a, long b) { return std::uniform_int_distribution<long>(a, b)(rng); };
    for (int trial = 0; trial < 40; ++trial) {
        // Q primary to (x0, x1) inside 3 variables
        std::vector<ExpVec> qg = {{static_cast<int>(ri(1, 3)), 0, 0},
                                  {0, static_cast<int>(ri(1, 3)), 0}};
        if (ri(0, 1)) qg.push_back({1, static_cast<int>(ri(1, 2)), 0});
        MonIdeal Q(2, qg);
        ExpVec f(3, 0);
        f[static_cast<std::size_t>(ri(0, 1))] = 1;
        std::vector<ExpVec> jg = {{static_cast<int>(ri(0, 2)),
                                   static_cast<int>(ri(0, 2)),
                                   static_cast<int>(ri(0, 2))}};
        MonIdeal J(2, jg);
        for (long l = 1; l <= 3; ++l) {
            ExpVec fl(3, 0), flm1(3, 0);
            for (int i = 0; i < 3; ++i) {
                fl[i] = f[i] * static_cast<int>(l);
                flm1[i] = f[i] * static_cast<int>(l - 1);
            }
            MonIdeal lhs = Q.colon(flm1).intersect(J);
            MonIdeal rhs = Q.colon(fl).intersect(J);
            CHECK(rhs.contains(lhs));  // the colon chain ascends
            bool strict = !(lhs == rhs);
            // witness: a in J with a f^l in Q, a f^(l-1) not in Q
            bool witness = false;
            for (const auto& a : rhs.gens()) {
                ExpVec afl(3, 0), aflm1(3, 0);
                bool inJ = J.contains(a);
                for (int i = 0; i < 3; ++i) {
                    afl[i] = a[i] + fl[i];
                    aflm1[i] = a[i] + flm1[i];
                }
                if (inJ && Q.contains(afl) && !Q.contains(aflm1)) witness = true;
            }
            CHECK(strict == witness);
        }
    }
}

TEST_CASE("chain search signals past desk scale") {
    CHECK_THROWS_AS(multiplicity_chain_steps(mi(2, {"x0^5", "x1^5", "x2^5"}), {0, 1, 2}),
                    budget_exceeded);
}

TEST_CASE("parsing") {
    CHECK(parse_monomial("x0^2*x1", 3) == ExpVec{2, 1, 0});
    CHECK(parse_monomial("1", 3) == ExpVec{0, 0, 0});
    CHECK(parse_monomial(" x2 ", 3) == ExpVec{0, 0, 1});
    CHECK_THROWS_AS(parse_monomial("x5", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("y0", 3), parse_error);
    MonIdeal I = parse_mon_ideal("x0^2, x0*x1", 2);
    CHECK(I == mi(1, {"x0^2", "x0*x1"}));
    CHECK(I.str() == "(x0^2, x0*x1)");
}

}  // TEST_SUITE
