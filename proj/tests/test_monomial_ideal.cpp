#include <mixmul/monomial_ideal.hpp>
#include <mixmul/newton.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <random>

using namespace mixmul;

namespace {

MonomialIdeal from_points(const std::vector<oracle::Point> &pts, std::size_t d)
{
    std::vector<Exponent> gens;
    for (const auto &p : pts) {
        Exponent e(d);
        for (std::size_t i = 0; i < d; ++i)
            e[i] = p[i];
        gens.push_back(e);
    }
    return minimalize(std::move(gens), d);
}

std::vector<oracle::Point> to_points(const MonomialIdeal &I)
{
    std::vector<oracle::Point> out;
    for (const auto &g : I.generators())
        out.push_back(oracle::Point(g.coords().begin(), g.coords().end()));
    return out;
}

} // namespace

TEST(Minimalize, DropsDivisibleGenerators)
{
    auto I = make_ideal(2, {{1, 0}, {2, 0}, {0, 1}});
    EXPECT_EQ(I.generators(), (std::vector<Exponent>{{0, 1}, {1, 0}}));
}

TEST(Minimalize, UnitAbsorbsEverything)
{
    auto I = make_ideal(2, {{0, 0}, {3, 1}});
    EXPECT_TRUE(I.is_unit());
    EXPECT_EQ(I.size(), 1u);
}

TEST(Minimalize, PairwiseScan)
{
    auto I = make_ideal(2, {{2, 0}, {1, 1}, {0, 3}, {2, 1}});
    EXPECT_EQ(I.generators(), (std::vector<Exponent>{{0, 3}, {1, 1}, {2, 0}}));
}

TEST(Minimalize, RejectsZeroIdealAndBadDims)
{
    EXPECT_THROW(minimalize({}, 2), Error);
    try {
        minimalize({}, 2);
    } catch (const Error &e) {
        EXPECT_STREQ(e.what(), "zero ideal unsupported");
    }
    EXPECT_THROW(minimalize({Exponent{1, 0, 0}}, 2), Error);
    EXPECT_THROW(Exponent(5), Error);
}

TEST(Minimalize, PairwiseFallbackAgreesWithStaircase)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 2 + trial % 3;
        auto pts = oracle::random_primary(rng, d, 6, 8);
        std::vector<Exponent> gens;
        for (const auto &p : pts) {
            Exponent e(d);
            for (std::size_t i = 0; i < d; ++i)
                e[i] = p[i];
            gens.push_back(e);
        }
        EXPECT_EQ(minimalize(gens, d).generators(), detail::minimal_pairwise(gens));
    }
}

TEST(Contains, Basics)
{
    const auto m = MonomialIdeal::maximal(2);
    EXPECT_FALSE(contains(m, {0, 0}));
    const auto I = make_ideal(2, {{2, 0}, {0, 1}});
    EXPECT_FALSE(contains(I, {1, 0}));
    EXPECT_TRUE(contains(I, {2, 5}));
    const auto J = make_ideal(2, {{2, 0}, {1, 1}, {0, 3}});
    EXPECT_TRUE(contains(J, {1, 2}));
    EXPECT_THROW(contains(J, Exponent{1, 1, 1}), Error);
}

TEST(Arithmetic, ProductsSumsPowers)
{
    const auto x = make_ideal(2, {{1, 0}});
    const auto y = make_ideal(2, {{0, 1}});
    EXPECT_EQ(product(x, y), make_ideal(2, {{1, 1}}));
    EXPECT_EQ(power(MonomialIdeal::maximal(2), 2), make_ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
    const auto I = make_ideal(2, {{2, 0}, {0, 1}});
    EXPECT_EQ(product(I, MonomialIdeal::maximal(2)), make_ideal(2, {{3, 0}, {1, 1}, {0, 2}}));
    EXPECT_EQ(sum(x, y), MonomialIdeal::maximal(2));
    EXPECT_EQ(power(I, 0), MonomialIdeal::unit(2));
    EXPECT_THROW(product(x, MonomialIdeal::maximal(3)), Error);
}

TEST(Arithmetic, ProductCommutativeAssociativeAndCompatibleWithMembership)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 2 + trial % 2;
        const auto A = from_points(oracle::random_primary(rng, d, 4, 3), d);
        const auto B = from_points(oracle::random_primary(rng, d, 4, 3), d);
        const auto C = from_points(oracle::random_primary(rng, d, 4, 3), d);
        EXPECT_EQ(product(A, B), product(B, A));
        EXPECT_EQ(product(product(A, B), C), product(A, product(B, C)));
        // Minimal generators of AB agree with the oracle's unminimalized sums.
        EXPECT_EQ(product(A, B), from_points(oracle::product_gens(to_points(A), to_points(B)), d));
        const auto AB = product(A, B);
        for (const auto &a : A.generators())
            for (const auto &b : B.generators())
                EXPECT_TRUE(contains(AB, a + b));
    }
}

TEST(Primary, Detection)
{
    EXPECT_TRUE(is_primary(MonomialIdeal::maximal(2)));
    EXPECT_FALSE(is_primary(make_ideal(2, {{1, 1}})));
    EXPECT_TRUE(is_primary(make_ideal(2, {{2, 0}, {1, 1}, {0, 3}})));
}

TEST(Colength, SmallExamples)
{
    EXPECT_EQ(colength(MonomialIdeal::maximal(2)), 1);
    EXPECT_EQ(colength(make_ideal(2, {{2, 0}, {0, 1}})), 2);
    EXPECT_EQ(colength(make_ideal(2, {{2, 0}, {1, 1}, {0, 3}})), 4);
    EXPECT_EQ(colength(MonomialIdeal::unit(3)), 0);
    EXPECT_EQ(colength(power(MonomialIdeal::maximal(2), 4)), 10);
    EXPECT_EQ(colength(power(MonomialIdeal::maximal(3), 3)), 10);
}

TEST(Colength, RejectsNonPrimary)
{
    try {
        colength(make_ideal(2, {{1, 1}}));
        FAIL() << "expected an error";
    } catch (const Error &e) {
        EXPECT_STREQ(e.what(), "infinite colength");
    }
}

TEST(Colength, MatchesBoxEnumeration)
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + trial % 4;
        const auto pts = oracle::random_primary(rng, d, 6, 5);
        const auto I = from_points(pts, d);
        EXPECT_EQ(colength(I), oracle::box_colength(pts, d, 7)) << I;
    }
}

TEST(Newton, VerticesOfSmallIdeals)
{
    EXPECT_EQ(newton_polyhedron(MonomialIdeal::maximal(2)).vertices, (std::vector<Exponent>{{0, 1}, {1, 0}}));
    EXPECT_EQ(newton_polyhedron(make_ideal(2, {{2, 0}, {0, 1}})).vertices, (std::vector<Exponent>{{0, 1}, {2, 0}}));
    EXPECT_EQ(newton_polyhedron(make_ideal(2, {{3, 0}, {1, 1}, {0, 2}})).vertices,
              (std::vector<Exponent>{{0, 2}, {1, 1}, {3, 0}}));
    // (2,2) lies above the segment from (4,0) to (0,4).
    EXPECT_EQ(newton_polyhedron(make_ideal(2, {{4, 0}, {2, 2}, {0, 4}})).vertices,
              (std::vector<Exponent>{{0, 4}, {4, 0}}));
}

TEST(Newton, ProductMatchesMinkowskiSum)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 2 + trial % 2;
        const auto A = from_points(oracle::random_primary(rng, d, 5, 3), d);
        const auto B = from_points(oracle::random_primary(rng, d, 5, 3), d);
        EXPECT_EQ(newton_polyhedron(product(A, B)), minkowski_sum(newton_polyhedron(A), newton_polyhedron(B)));
    }
}

TEST(Covolume, SmallExamples)
{
    EXPECT_EQ(covolume(MonomialIdeal::maximal(2)), Rational(1, 2));
    EXPECT_EQ(covolume(make_ideal(2, {{2, 0}, {0, 1}})), 1);
    EXPECT_EQ(covolume(make_ideal(1, {{5}})), 5);
    EXPECT_EQ(covolume(MonomialIdeal::maximal(3)), Rational(1, 6));
    EXPECT_EQ(covolume(make_ideal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 1}})), 1);
    EXPECT_EQ(covolume(MonomialIdeal::maximal(4)), Rational(1, 24));
    EXPECT_THROW(covolume(make_ideal(2, {{1, 1}})), Error);
}

TEST(Covolume, ThreeDimensionalAgreesWithPowers)
{
    // covolume(I^k) = k^d covolume(I).
    const auto I = make_ideal(3, {{3, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 4}});
    const Rational c = covolume(I);
    EXPECT_EQ(covolume(power(I, 2)), 8 * c);
    EXPECT_EQ(covolume(power(I, 3)), 27 * c);
}

TEST(Covolume, NormalizedPowerColengthsApproachCovolume)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t d = 2 + trial % 2;
        const auto I = from_points(oracle::random_primary(rng, d, 4, 2), d);
        const Rational cov = covolume(I);
        std::vector<Rational> terms;
        for (long n : {8L, 16L, 32L}) {
            const Rational t(colength(power(I, n)), pow_of(Rational(n), static_cast<unsigned>(d)).get_num());
            terms.push_back(t);
        }
        // Richardson on the last two terms removes the 1/n term.
        const Rational extrapolated = 2 * terms[2] - terms[1];
        const double rel = std::abs(to_double(extrapolated - cov)) / to_double(cov);
        EXPECT_LT(rel, 0.02) << I;
        // Terms approach from above and decrease.
        EXPECT_GE(terms[0] + Rational(1, 100), terms[1]);
        EXPECT_GE(terms[1] + Rational(1, 100), terms[2]);
    }
}
