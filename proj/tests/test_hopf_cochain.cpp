#include <gtest/gtest.h>

#include "fncalc/hopf.hpp"
#include "fncalc/io.hpp"
#include "fncalc/suites.hpp"
#include "fncalc/symm.hpp"

using namespace fncalc;

TEST(Intersection, Entrywise) {
    EXPECT_EQ(intersection_product(Composition{1, 0, 2}, Composition{0, 0, 1}), (Composition{1, 0, 3}));
    EXPECT_THROW(intersection_product(Composition{1}, Composition{1, 0}), std::invalid_argument);
}

TEST(Intersection, Transversality) {
    EXPECT_TRUE(transversal(Composition{1, 0, 2}, Composition{3, 0, 1}));
    EXPECT_FALSE(transversal(Composition{1, 0, 2}, Composition{1, 1, 2}));
}

TEST(Coproduct, SplitsAtZeros) {
    TensorSum t = coproduct(Composition{2, 0, 1});
    EXPECT_TRUE(t.contains({Composition{2}, Composition{1}}));
    EXPECT_TRUE(t.contains({Composition::empty_configuration(), Composition{2, 0, 1}}));
    EXPECT_TRUE(t.contains({Composition{2, 0, 1}, Composition::empty_configuration()}));
    EXPECT_EQ(t.size(), 3u);
}

TEST(Transfer, UnitAndCommutativity) {
    Cochain e(Ring::F2, Composition::empty_configuration());
    Cochain a(Ring::F2, Composition{2, 0, 1});
    EXPECT_EQ(transfer_product(e, a), a);
    Cochain x = symm(Composition{1}), y = symm(Composition{2, 0, 2});
    EXPECT_EQ(transfer_product(x, y), transfer_product(y, x));
}

TEST(Transfer, ShufflesZeroBlocks) {
    // [1] o [1]: both zero-block orders of the two blocks
    Cochain t = transfer_product(Cochain(Ring::F2, Composition{1}), Cochain(Ring::F2, Composition{1}));
    EXPECT_EQ(t, Cochain(Ring::F2));  // two equal shuffles cancel mod 2
    Cochain u = transfer_product(Cochain(Ring::F2, Composition{1}), Cochain(Ring::F2, Composition{2}));
    EXPECT_EQ(u.size(), 2u);
    EXPECT_TRUE(u.contains(Composition{1, 0, 2}) && u.contains(Composition{2, 0, 1}));
}

TEST(Generators, GammaCochain) {
    EXPECT_EQ(gamma_cochain(1, 1), (Composition{1}));
    EXPECT_EQ(gamma_cochain(2, 1), (Composition{1, 1, 1}));
    EXPECT_EQ(gamma_cochain(1, 2), (Composition{1, 0, 1}));
    for (int l = 1; l <= 2; ++l)
        for (int n = 1; n << l <= 8; ++n) EXPECT_TRUE(is_cocycle(symm(gamma_cochain(l, n)))) << l << "," << n;
}

TEST(HopfRing, WorkedProduct) {
    Cochain x = symm(Composition{3, 0, 2, 2, 2}), y = symm(Composition{4, 0, 2, 0, 2});
    Cochain d = intersection_product(x, y);
    d += symm(Composition{7, 0, 4, 2, 4});
    EXPECT_TRUE(is_coboundary(d));
}

TEST(HopfRing, Goldens) {
    auto r = suites::hopf_goldens();
    EXPECT_TRUE(r.passed) << (r.counterexamples.empty() ? "" : r.counterexamples.front());
}

TEST(HopfRing, AxiomsSmall) {
    auto r = suites::hopf_axioms(5, 4);
    EXPECT_TRUE(r.passed) << (r.counterexamples.empty() ? "" : r.counterexamples.front());
}

TEST(HopfRing, TransferIsCoalgebraMap) {
    const std::vector<Cochain> gens{symm(Composition{1}), symm(Composition{1, 0, 1}), Cochain(Ring::F2, Composition{1, 1, 1}), Cochain(Ring::F2, Composition{0})};
    for (const auto& a : gens)
        for (const auto& b : gens)
            for (const auto& c : verify_chain_level("transfer", {a, b})) EXPECT_TRUE(c.passed) << format(a) << " o " << format(b) << ": " << c.name;
}

TEST(Intersection, NotAChainMapOffTransversalPairs) {
    Cochain p = intersection_product(symm(Composition{1, 0, 0}), symm(Composition{2, 0, 1}));
    Cochain want(Ring::F2);
    want.add(Composition{2, 2, 1}, 1);
    want.add(Composition{1, 2, 2}, 1);
    EXPECT_EQ(delta(p).in_ring(Ring::F2), want);
}
