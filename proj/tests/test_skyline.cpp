#include <gtest/gtest.h>

#include <random>

#include "fncalc/cohomology.hpp"
#include "fncalc/io.hpp"
#include "fncalc/skyline.hpp"
#include "fncalc/suites.hpp"

using namespace fncalc;

namespace {
SkylineClass S(const char* s) { return parse_skyline(s); }
}  // namespace

TEST(Skyline, GammaShape) {
    SkylineMonomial g = gamma(2, 3);
    EXPECT_EQ(g.component(), 12);
    EXPECT_EQ(g.degree(), 9);
    EXPECT_EQ(format(g), "g(2,3)");
}

TEST(Skyline, TransferRelation) {
    EXPECT_EQ(transfer_skyline(S("g(1,1)"), S("g(1,1)")), SkylineClass(Ring::F2));  // binomial(2,1) even
    EXPECT_EQ(transfer_skyline(S("g(1,1)"), S("g(1,2)")), S("g(1,3)"));
    EXPECT_EQ(transfer_skyline(S("1_0"), S("g(1,1)")), S("g(1,1)"));
    EXPECT_EQ(transfer_skyline(S("1_2"), S("1_1")), S("1_3"));
    EXPECT_TRUE(transfer_skyline(S("1_2"), S("1_3")).is_zero());  // binomial(5,2) even
}

TEST(Skyline, Products) {
    for (const auto& g : suites::product_goldens()) EXPECT_EQ(cup_skyline(S(g.lhs_a), S(g.lhs_b)), S(g.expected)) << g.lhs_a;
    // the second computation with the left factor padded to component 6
    EXPECT_EQ(cup_skyline(S("g(1,1)^3 o 1_4"), S("g(1,2) o 1_2")), S("g(1,1)^4 o g(1,1) o 1_2 + g(1,2) o g(1,1)^3"));
}

TEST(Skyline, CupUnitAndCommutativity) {
    for (int k = 0; k <= 4; ++k)
        for (const auto& a : enumerate_skyline_basis(6, k)) {
            EXPECT_EQ(cup_skyline(SkylineClass(Ring::F2, a), S("1_6")), SkylineClass(Ring::F2, a));
            for (const auto& b : enumerate_skyline_basis(6, 2)) EXPECT_EQ(cup_skyline(a, b), cup_skyline(b, a));
        }
}

TEST(Skyline, CupAssociative) {
    const auto b1 = enumerate_skyline_basis(6, 1), b2 = enumerate_skyline_basis(6, 2);
    for (const auto& x : b1)
        for (const auto& y : b1)
            for (const auto& z : b2) {
                SkylineClass X(Ring::F2, x), Y(Ring::F2, y), Z(Ring::F2, z);
                EXPECT_EQ(cup_skyline(cup_skyline(X, Y), Z), cup_skyline(X, cup_skyline(Y, Z)));
            }
}

TEST(Skyline, Coassociative) {
    for (int k = 0; k <= 5; ++k)
        for (const auto& m : enumerate_skyline_basis(6, k)) {
            SkylineTensor t = coproduct_skyline(m);
            Chain<std::tuple<SkylineMonomial, SkylineMonomial, SkylineMonomial>> l(Ring::F2), r(Ring::F2);
            for (const auto& [pq, v] : t) {
                for (const auto& [ab, w] : coproduct_skyline(pq.first)) l.add({ab.first, ab.second, pq.second}, 1);
                for (const auto& [ab, w] : coproduct_skyline(pq.second)) r.add({pq.first, ab.first, ab.second}, 1);
            }
            EXPECT_EQ(l, r) << format(m);
        }
}

TEST(Skyline, BasisCountMatchesCohomology) { EXPECT_TRUE(suites::basis_agreement(6, 6).passed); }

TEST(Skyline, TruncatedBasisMatchesTruncatedCohomology) { EXPECT_TRUE(suites::basis_agreement(6, 4, 3).passed); }

TEST(Skyline, ToCochainGivesIndependentClasses) {
    for (int k = 0; k <= 5; ++k) {
        CohomologyGroup H(6, k, Ring::F2);
        F2Echelon e(H.dimension(), 0);
        for (const auto& m : enumerate_skyline_basis(6, k)) {
            Cochain c = to_cochain(m);
            ASSERT_TRUE(is_cocycle(c)) << format(m);
            auto v = H.reduce_cocycle(c);
            BitVector b(H.dimension());
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0) b.set(i);
            EXPECT_TRUE(e.insert(b)) << format(m);
        }
    }
}

TEST(Skyline, MonomialCorrespondence) {
    SkylineClass m = S("g(3,1)*g(2,2)^2*g(1,4) o g(2,1)^3 o g(1,2) o g(1,1) o 1_2");
    EXPECT_EQ(to_cochain(m), symm(Composition{4, 3, 4, 1, 4, 3, 4, 0, 3, 3, 3, 0, 1, 0, 1, 0, 1, 0, 0}));
}

TEST(Skyline, TwoRoot) {
    GatheredBlock b(4, Profile{{1, 4}, {2, 2}});
    auto [r, p] = two_root(b);
    EXPECT_EQ(p, 1);
    EXPECT_EQ(r, GatheredBlock(4, Profile({{1, 2}, {2, 1}})));
    EXPECT_TRUE(is_odd_column(r));
}

TEST(Skyline, Nakaoka) {
    auto r = suites::nakaoka(6, 6);
    EXPECT_TRUE(r.passed) << (r.counterexamples.empty() ? "" : r.counterexamples.front());
}

TEST(Skyline, Vassiliev) {
    auto r = suites::vassiliev(6, 3);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(cup_power(S("g(1,1) o 1_4"), 3), S("g(1,1)^2 o g(1,1) o 1_2 + g(1,1)^3 o 1_4"));
}
