#include "hilbwalls/mukai.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hilbwalls;

namespace {

MukaiVector mv(long r, long c, long s) { return MukaiVector{r, c, s}; }

}  // namespace

TEST(Pairing, Examples) {
    EXPECT_EQ(pairing(mv(1, 0, -9), mv(1, 0, -9), 4), 18);
    EXPECT_EQ(pairing(mv(1, -1, 4), mv(1, 0, -9), 4), 5);
    EXPECT_EQ(pairing(mv(0, 0, 1), mv(1, 0, 0), 7), -1);
}

TEST(Square, Examples) {
    EXPECT_EQ(square(mv(-1, 1, -2), 1), -2);
    // u = (k, -h, Delta k h^2) at (1, 2, 3) is isotropic.
    EXPECT_EQ(square(mv(3, -2, 12), 9), 0);
    for (long d = 1; d < 20; ++d) EXPECT_EQ(square(mv(0, 0, 5), d), 0);
}

TEST(PrimitivePart, Examples) {
    auto [p1, g1] = primitive_part(mv(2, -2, 10));
    EXPECT_EQ(p1, mv(1, -1, 5));
    EXPECT_EQ(g1, 2);
    auto [p2, g2] = primitive_part(mv(1, -1, 4));
    EXPECT_EQ(p2, mv(1, -1, 4));
    EXPECT_EQ(g2, 1);
    auto [p3, g3] = primitive_part(mv(-3, 0, -9));
    EXPECT_EQ(p3, mv(-1, 0, -3));
    EXPECT_EQ(g3, 3);
}

TEST(PrimitivePart, ZeroVectorIsDegenerate) { EXPECT_THROW(primitive_part(mv(0, 0, 0)), degenerate_input); }

TEST(PositiveClass, Examples) {
    const MukaiVector v = mv(1, 0, -9);
    EXPECT_TRUE(is_positive_class(v, v, 4));
    EXPECT_FALSE(is_positive_class(mv(-1, 1, -2), mv(1, 0, -1), 1));
    EXPECT_TRUE(is_positive_class(mv(0, 1, -13), v, 4));
    // Negative rank does not matter; (w, v) > 0 does.
    EXPECT_TRUE(is_positive_class(mv(-1, 1, -16), mv(1, 0, -9), 16));
    EXPECT_FALSE(is_positive_class(mv(1, -1, 16), mv(1, 0, -9), 16));
}

TEST(GramDeterminant, Examples) {
    EXPECT_EQ(gram_determinant(mv(1, 0, -9), mv(1, -1, 4), 4), -25);
    EXPECT_EQ(gram_determinant(mv(1, 0, -9), mv(2, 0, -18), 4), 0);
    EXPECT_EQ(gram_determinant(mv(1, 0, -9), mv(1, -1, 5), 4), -52);
}

TEST(SolveInRank2, Examples) {
    const MukaiVector v = mv(1, 0, -9), w = mv(1, -1, 4);
    EXPECT_EQ(solve_in_rank2(v, w, -2, 8, 4), std::vector<MukaiVector>{mv(-1, 2, -17)});
    EXPECT_EQ(solve_in_rank2(v, w, -2, -8, 4), std::vector<MukaiVector>{mv(1, -2, 17)});
    EXPECT_TRUE(solve_in_rank2(v, w, -2, 3, 4).empty());
}

TEST(SolveInRank2, RejectsNonHyperbolicPairs) {
    EXPECT_THROW(solve_in_rank2(mv(1, 0, -9), mv(2, 0, -18), -2, 1, 4), non_hyperbolic);
    // Positive definite plane.
    EXPECT_THROW(solve_in_rank2(mv(0, 1, 0), mv(1, 0, -1), -2, 0, 3), non_hyperbolic);
}

TEST(SolveInRank2, IsotropicFirstVector) {
    // v = (0, 0, 1) is isotropic; w = (1, 0, 0) has (v, w) = -1.
    const MukaiVector v = mv(0, 0, 1), w = mv(1, 0, 0);
    auto sols = solve_in_rank2(v, w, -2, 1, 5);  // y = -1, then -2 = 2 B x y gives x = -1
    ASSERT_EQ(sols.size(), 1u);
    EXPECT_EQ(square(sols[0], 5), -2);
    EXPECT_EQ(pairing(sols[0], v, 5), 1);
    EXPECT_THROW(solve_in_rank2(v, w, 0, 0, 5), degenerate_input);
}

TEST(Membership, Examples) {
    auto xy = membership_in_lattice(mv(-1, 2, -17), mv(1, 0, -9), mv(1, -1, 4));
    ASSERT_TRUE(xy);
    EXPECT_EQ(xy->first, 1);
    EXPECT_EQ(xy->second, -2);
    EXPECT_FALSE(membership_in_lattice(mv(-1, 2, -16), mv(1, 0, -9), mv(1, -1, 5)));
    auto id = membership_in_lattice(mv(1, 0, -9), mv(1, 0, -9), mv(1, -1, 4));
    ASSERT_TRUE(id);
    EXPECT_EQ(id->first, 1);
    EXPECT_EQ(id->second, 0);
    // Rational but not integral combination.
    EXPECT_FALSE(membership_in_lattice(mv(1, 0, 0), mv(2, 0, 0), mv(0, 1, 0)));
}

TEST(Membership, DependentBasis) {
    EXPECT_THROW(membership_in_lattice(mv(1, 0, 0), mv(1, 2, 3), mv(-2, -4, -6)), dependent_basis);
}

TEST(MukaiProperties, PairingMatchesGramMatrixSymmetricBilinear) {
    std::mt19937_64 rng(20241016);
    std::uniform_int_distribution<long> ddist(1, 100);
    for (int trial = 0; trial < 2000; ++trial) {
        const Integer d = ddist(rng);
        const MukaiVector v1 = oracle::random_vector(rng, 100), v2 = oracle::random_vector(rng, 100),
                          w = oracle::random_vector(rng, 100);
        ASSERT_EQ(pairing(v1, w, d), oracle::gram_pairing(v1, w, d));
        ASSERT_EQ(pairing(v1, w, d), pairing(w, v1, d));
        ASSERT_EQ(pairing(v1 + v2, w, d), pairing(v1, w, d) + pairing(v2, w, d));
        ASSERT_EQ(square(v1, d) % 2, 0);
    }
}

TEST(MukaiProperties, PrimitivePartIdempotent) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        MukaiVector v = oracle::random_vector(rng, 50);
        if (v.is_zero()) continue;
        v = Integer(1 + trial % 6) * v;
        auto [p, g] = primitive_part(v);
        ASSERT_EQ(g * p, v);
        ASSERT_GE(g, 1);
        auto [pp, gg] = primitive_part(p);
        ASSERT_EQ(pp, p);
        ASSERT_EQ(gg, 1);
    }
}

TEST(MukaiProperties, GramDeterminantSign) {
    // Independent 2x2 determinant of the Gram matrix; hyperbolic iff negative.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const Integer d = 1 + trial % 9;
        const MukaiVector v = oracle::random_vector(rng, 6), w = oracle::random_vector(rng, 6);
        Integer det = oracle::gram_pairing(v, v, d) * oracle::gram_pairing(w, w, d) -
                      oracle::gram_pairing(v, w, d) * oracle::gram_pairing(w, v, d);
        ASSERT_EQ(gram_determinant(v, w, d), det);
        // Proportional pairs are never hyperbolic.
        ASSERT_EQ(gram_determinant(v, Integer(3) * v, d), 0);
    }
}

TEST(MukaiProperties, SolveMatchesExhaustiveSearch) {
    // For small hyperbolic pairs, compare with a scan over |x|, |y| <= 40.
    std::mt19937_64 rng(3);
    int checked = 0;
    while (checked < 150) {
        const Integer d = 1 + checked % 5;
        const MukaiVector v = oracle::random_vector(rng, 3), w = oracle::random_vector(rng, 3);
        if (gram_determinant(v, w, d) >= 0 || square(v, d) == 0) continue;
        for (long T : {-2L, 0L, 2L}) {
            for (long p = -6; p <= 6; ++p) {
                std::vector<MukaiVector> expect;
                for (long x = -40; x <= 40; ++x)
                    for (long y = -40; y <= 40; ++y) {
                        MukaiVector s = Integer(x) * v + Integer(y) * w;
                        if (square(s, d) == T && pairing(s, v, d) == p) expect.push_back(s);
                    }
                std::sort(expect.begin(), expect.end());
                expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
                auto got = solve_in_rank2(v, w, T, p, d);
                ASSERT_LE(got.size(), 2u);
                for (const auto& s : got) {
                    ASSERT_EQ(square(s, d), T);
                    ASSERT_EQ(pairing(s, v, d), p);
                }
                // Every solution inside the box must be found (the solver is not box-limited).
                for (const auto& s : expect) ASSERT_NE(std::find(got.begin(), got.end(), s), got.end());
            }
        }
        ++checked;
    }
}

TEST(MukaiProperties, MembershipReproducesTarget) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        const MukaiVector v = oracle::random_vector(rng, 20), w = oracle::random_vector(rng, 20);
        if (v.r * w.c == v.c * w.r && v.r * w.s == v.s * w.r && v.c * w.s == v.s * w.c) continue;
        std::uniform_int_distribution<long> dist(-30, 30);
        const Integer x = dist(rng), y = dist(rng);
        const MukaiVector t = x * v + y * w;
        auto got = membership_in_lattice(t, v, w);
        ASSERT_TRUE(got);
        ASSERT_EQ(got->first, x);
        ASSERT_EQ(got->second, y);
        const MukaiVector off = t + MukaiVector{0, 0, 1};
        if (auto o = membership_in_lattice(off, v, w)) {
            ASSERT_EQ(o->first * v + o->second * w, off);
        }
    }
}
