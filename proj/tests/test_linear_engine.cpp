#include <gtest/gtest.h>

#include <random>

#include "fncalc/cohomology.hpp"
#include "fncalc/smith.hpp"
#include "fncalc/suites.hpp"

using namespace fncalc;

TEST(BitVector, EchelonRank) {
    F2Echelon e(4, 0);
    BitVector a(4), b(4), c(4);
    a.set(0);
    a.set(1);
    b.set(1);
    b.set(2);
    c.set(0);
    c.set(2);  // a + b
    EXPECT_TRUE(e.insert(a));
    EXPECT_TRUE(e.insert(b));
    EXPECT_FALSE(e.insert(c));
    EXPECT_EQ(e.rank(), 2u);
}

TEST(Smith, KnownInvariants) {
    SparseMatrix m(2, 2);
    m.set(0, 0, 2);
    m.set(0, 1, 4);
    m.set(1, 0, 6);
    m.set(1, 1, 8);
    SmithForm f = smith_normal_form(m);
    ASSERT_EQ(f.rank(), 2u);
    EXPECT_EQ(f.diag[0], 2);
    EXPECT_EQ(f.diag[1], 4);
    EXPECT_TRUE(certify(m, f));
}

TEST(Smith, RandomCertified) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-3, 3), dim(1, 7);
    for (int trial = 0; trial < 40; ++trial) {
        SparseMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (rng() % 3 == 0) m.set(i, j, val(rng));
        SmithForm f = smith_normal_form(m);
        EXPECT_TRUE(certify(m, f)) << trial;
        for (std::size_t i = 1; i < f.diag.size(); ++i) EXPECT_EQ(f.diag[i] % f.diag[i - 1], 0);
    }
}

TEST(Cohomology, Bs2Integral) {
    auto r = suites::bs2_integral(10);
    EXPECT_TRUE(r.passed) << r.lines.front();
}

TEST(Cohomology, Bs4ModTwo) {
    const std::vector<std::size_t> want{1, 1, 2, 3, 3};
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(CohomologyGroup(4, k, Ring::F2).dimension(), want[static_cast<std::size_t>(k)]);
}

TEST(Cohomology, Bs4BasisFamilies) { EXPECT_TRUE(suites::bs4_basis(10).passed); }

TEST(Cohomology, SeriesCoefficients) {
    EXPECT_EQ(suites::bs4_series(8), (std::vector<long>{1, 1, 2, 3, 3, 4, 5, 5, 6}));
}

TEST(Cohomology, ComponentOneIsAPoint) {
    EXPECT_EQ(CohomologyGroup(1, 0, Ring::Z).free_rank(), 1u);
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(CohomologyGroup(1, k, Ring::Z).dimension(), 0u);
}

TEST(Cohomology, Bs3MatchesBs2ModTwo) {
    // the transfer-split inclusion S_2 < S_3 is an F2 isomorphism
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(CohomologyGroup(3, k, Ring::F2).dimension(), CohomologyGroup(2, k, Ring::F2).dimension());
}

TEST(Cohomology, RepresentativesAreIndependentCocycles) {
    for (int k = 0; k <= 5; ++k) {
        CohomologyGroup H(5, k, Ring::F2);
        for (std::size_t i = 0; i < H.representatives().size(); ++i) {
            const Cochain& c = H.representatives()[i];
            EXPECT_TRUE(is_cocycle(c));
            auto v = H.reduce_cocycle(c);
            for (std::size_t j = 0; j < v.size(); ++j) EXPECT_EQ(v[j], i == j ? 1 : 0);
        }
    }
}

TEST(Cohomology, CoboundaryDetection) {
    Cochain d = delta(Cochain(Ring::F2, Composition{1, 0, 1}));
    d = d.in_ring(Ring::F2);
    if (!d.is_zero()) {
        EXPECT_TRUE(is_coboundary(d));
    }
    // the degree-1 generator on 2 points is not a coboundary
    EXPECT_FALSE(is_coboundary(Cochain(Ring::F2, Composition{1})));
}

TEST(Cohomology, ThreadCountDoesNotChangeResults) {
    setenv("FNCALC_THREADS", "1", 1);
    const auto a = CohomologyGroup(5, 6, Ring::Z).torsion();
    setenv("FNCALC_THREADS", "3", 1);
    const auto b = CohomologyGroup(5, 6, Ring::Z).torsion();
    unsetenv("FNCALC_THREADS");
    EXPECT_EQ(a, b);
}

TEST(Cohomology, BasisAgreementSmall) {
    auto r = suites::basis_agreement(5, 6);
    EXPECT_TRUE(r.passed);
}
