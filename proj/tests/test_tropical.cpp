#include <doctest.h>

#include <random>

#include "troph/tropical.hpp"

using namespace troph;

namespace {

TropPoly mk(int nvars, std::initializer_list<std::pair<ExpVec, Rat>> terms) {
    TropPoly p(nvars);
    for (const auto& [e, c] : terms) p.set_term(e, TropVal(c));
    return p;
}

TropVal rv(std::mt19937_64& rng) {
    if (std::uniform_int_distribution<int>(0, 5)(rng) == 0) return TropVal::ninf();
    Rat q(std::uniform_int_distribution<long>(-8, 8)(rng),
          std::uniform_int_distribution<long>(1, 3)(rng));
    q.canonicalize();
    return TropVal(q);
}

}  // namespace

TEST_SUITE("tropical") {

TEST_CASE("eval") {
    TropPoly p = mk(2, {{{1, 0}, Rat(0)}, {{0, 1}, Rat(0)}});
    CHECK(p.eval({Rat(3), Rat(5)}) == TropVal(Rat(5)));
    TropPoly q = mk(2, {{{1, 0}, Rat(0)}, {{0, 1}, Rat(-1)}});
    CHECK(q.eval({Rat(0), Rat(1)}) == TropVal(Rat(0)));
    TropPoly null(2);
    CHECK(null.eval({Rat(1), Rat(2)}).is_ninf());
    CHECK_THROWS_AS(p.eval({Rat(1)}), dimension_mismatch);
}

TEST_CASE("argmax terms") {
    TropPoly q = mk(2, {{{1, 0}, Rat(0)}, {{0, 1}, Rat(-1)}});
    CHECK(q.argmax_terms({Rat(0), Rat(1)}).size() == 2);
    auto s = q.argmax_terms({Rat(0), Rat(0)});
    CHECK(s.size() == 1);
    CHECK(s.count({1, 0}) == 1);
    TropPoly tri = mk(3, {{{1, 0, 0}, Rat(0)}, {{0, 1, 0}, Rat(0)}, {{0, 0, 1}, Rat(0)}});
    CHECK(tri.argmax_terms({Rat(0), Rat(0), Rat(0)}).size() == 3);
    TropPoly null(2);
    CHECK_THROWS_AS(null.argmax_terms({Rat(0), Rat(0)}), invalid_input);
}

TEST_CASE("zero locus") {
    TropPoly tri = mk(3, {{{1, 0, 0}, Rat(0)}, {{0, 1, 0}, Rat(0)}, {{0, 0, 1}, Rat(0)}});
    CHECK(tri.in_zero_locus({Rat(0), Rat(0), Rat(0)}));
    TropPoly q = mk(2, {{{1, 0}, Rat(0)}, {{0, 1}, Rat(-1)}});
    CHECK_FALSE(q.in_zero_locus({Rat(0), Rat(0)}));
    TropPoly null(2);
    CHECK(null.in_zero_locus({Rat(7), Rat(9)}));
}

TEST_CASE("projective normalization") {
    TropProjPoint p({TropVal(3), TropVal(5), TropVal(4)});
    CHECK(p.coords() == std::vector<TropVal>{TropVal(0), TropVal(2), TropVal(1)});
    TropProjPoint q({TropVal::ninf(), TropVal(2), TropVal(2)});
    CHECK(q.coords() == std::vector<TropVal>{TropVal::ninf(), TropVal(0), TropVal(0)});
    std::vector<TropVal> zeros(15, TropVal(0));
    CHECK(TropProjPoint(zeros).coords() == zeros);
    CHECK_THROWS_AS(TropProjPoint({TropVal::ninf(), TropVal::ninf()}), invalid_input);
}

TEST_CASE("projective normalization is idempotent") {
    std::mt19937_64 rng(131);
    for (int i = 0; i < 40; ++i) {
        std::vector<TropVal> coords;
        bool any_finite = false;
        for (int j = 0; j < 6; ++j) {
            TropVal v = rv(rng);
            any_finite = any_finite || !v.is_ninf();
            coords.push_back(v);
        }
        if (!any_finite) continue;
        TropProjPoint p(coords);
        CHECK(TropProjPoint(p.coords()) == p);
        // tropical scaling lands in the same class
        std::vector<TropVal> scaled;
        for (const auto& c : coords) scaled.push_back(odot(c, TropVal(Rat(7, 3))));
        CHECK(TropProjPoint(scaled) == p);
    }
}

TEST_CASE("semiring laws on random triples") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        TropVal a = rv(rng), b = rv(rng), c = rv(rng);
        CHECK(oplus(a, b) == oplus(b, a));
        CHECK(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)));
        CHECK(odot(a, b) == odot(b, a));
        CHECK(odot(odot(a, b), c) == odot(a, odot(b, c)));
        CHECK(odot(a, oplus(b, c)) == oplus(odot(a, b), odot(a, c)));
        CHECK(oplus(a, TropVal::ninf()) == a);
        CHECK(odot(a, TropVal(Rat(0))) == a);
        CHECK(odot(a, TropVal::ninf()).is_ninf());
    }
}

TEST_CASE("zero locus is invariant under tropical projective scaling") {
    std::mt19937_64 rng(43);
    TropPoly homog =
        mk(3, {{{2, 0, 0}, Rat(1)}, {{1, 1, 0}, Rat(0)}, {{0, 0, 2}, Rat(-2)},
               {{0, 2, 0}, Rat(1, 2)}});
    for (int i = 0; i < 50; ++i) {
        Rat x(std::uniform_int_distribution<long>(-4, 4)(rng), 2);
        Rat y(std::uniform_int_distribution<long>(-4, 4)(rng), 2);
        Rat z(std::uniform_int_distribution<long>(-4, 4)(rng), 2);
        Rat lam(std::uniform_int_distribution<long>(-4, 4)(rng), 3);
        x.canonicalize(); y.canonicalize(); z.canonicalize(); lam.canonicalize();
        CHECK(homog.in_zero_locus({x, y, z}) ==
              homog.in_zero_locus({x + lam, y + lam, z + lam}));
    }
}

}  // TEST_SUITE
