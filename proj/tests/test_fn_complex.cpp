#include <gtest/gtest.h>

#include "fncalc/bs4.hpp"
#include "fncalc/differential.hpp"
#include "fncalc/io.hpp"
#include "fncalc/level_tree.hpp"
#include "fncalc/suites.hpp"
#include "fncalc/symm.hpp"

using namespace fncalc;

TEST(Composition, DegreeAndFit) {
    Composition a{2, 0, 1, 2};
    EXPECT_EQ(a.n(), 5);
    EXPECT_EQ(a.degree(), 5);
    EXPECT_EQ(a.max_entry(), 2);
    EXPECT_TRUE(a.fits(AmbientDim(3)));
    EXPECT_FALSE(a.fits(AmbientDim(2)));
    EXPECT_THROW(Composition({1, -1}), std::invalid_argument);
    EXPECT_THROW(AmbientDim(0), std::invalid_argument);
}

TEST(Composition, EnumerateCounts) {
    // compositions of k into n-1 nonnegative parts
    EXPECT_EQ(enumerate_cells(4, 3).size(), 10u);
    EXPECT_EQ(enumerate_cells(1, 0).size(), 1u);
    EXPECT_EQ(enumerate_cells(1, 2).size(), 0u);
    EXPECT_EQ(enumerate_cells(3, 4, AmbientDim(3)).size(), 1u);  // only [2,2]
}

TEST(Composition, Blocks) {
    Composition a{2, 0, 1, 2};
    auto b = blocks(a, 0);
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b[0], std::vector<int>({2}));
    EXPECT_EQ(b[1], std::vector<int>({1, 2}));
    EXPECT_EQ(join_blocks(b, 0), a.entries());
}

TEST(LevelTree, RoundTrip) {
    for (int k = 0; k <= 4; ++k)
        for (const auto& g : suites::enumerate_labeled(4, k, kInfinity)) {
            LevelTree t = LevelTree::of(g);
            EXPECT_EQ(t.leaves().size(), 4u);
            EXPECT_EQ(t.cell(), g) << format(g);
        }
    LevelTree t = LevelTree::of(Composition{2, 0, 1});
    EXPECT_EQ(t.meet_height(0, 1), 2);
    EXPECT_EQ(t.meet_height(0, 3), 0);
    EXPECT_EQ(t.meet_height(2, 3), 1);
}

TEST(Differential, GoldenDifferentials) {
    for (const auto& g : suites::golden_differentials())
        EXPECT_EQ(format(delta_unlabeled(parse_cell(g.cell), Ring::Z)), g.expected) << g.cell;
}

TEST(Differential, TrivialCases) {
    EXPECT_TRUE(delta_unlabeled(Composition::empty_configuration()).is_zero());
    EXPECT_TRUE(delta_unlabeled(Composition(std::vector<int>{})).is_zero());
    // BS_2: d[k] = (1 + (-1)^{k+1}) [k+1]
    for (int k = 0; k < 8; ++k) {
        Cochain want(Ring::Z);
        want.add(Composition{k + 1}, k % 2 == 0 ? 0 : 2);
        EXPECT_EQ(delta_unlabeled(Composition{k}), want) << k;
    }
}

TEST(Differential, TruncationDropsLargeEntries) {
    Cochain full = delta_unlabeled(Composition{1, 1}, Ring::Z);
    Cochain cut = delta_unlabeled(Composition{1, 1}, Ring::Z, AmbientDim(2));
    for (const auto& [a, c] : cut) EXPECT_TRUE(a.fits(AmbientDim(2)));
    EXPECT_LE(cut.size(), full.size());
}

TEST(Differential, SquareZeroSmall) {
    EXPECT_TRUE(suites::d2_unlabeled(5, 7, Ring::Z).passed);
    EXPECT_TRUE(suites::d2_unlabeled(5, 5, Ring::Z, AmbientDim(3)).passed);
    EXPECT_TRUE(suites::d2_labeled(4, 5, Ring::Z).passed);
}

TEST(Differential, UnlabelCommutes) {
    for (const auto& g : suites::enumerate_labeled(4, 2, kInfinity)) {
        LabeledCochain x(Ring::Z, g);
        EXPECT_EQ(unlabel(delta(x)), delta(unlabel(x))) << format(g);
    }
}

TEST(Differential, Shuffles) {
    EXPECT_EQ(shuffles(2, 4).size(), 6u);
    EXPECT_EQ(shuffles(0, 3).size(), 1u);
}

TEST(Symm, FixesSymmetricCells) {
    EXPECT_EQ(symm(Composition{1, 0, 1}), Cochain(Ring::F2, Composition{1, 0, 1}));
    Cochain s = symm(Composition{3, 0, 2, 2, 2});
    EXPECT_TRUE(s.contains(Composition{3, 0, 2, 2, 2}));
    EXPECT_TRUE(s.contains(Composition{2, 2, 2, 0, 3}));
}

TEST(Bs4, PAndChiTable) {
    EXPECT_EQ(bs4::homotopy_P(Composition{2, 4, 6}), Cochain(Ring::F2, Composition{1, 4, 6}));
    EXPECT_EQ(bs4::chi(Composition{2, 4, 6}), (Composition{4, 6, 2}));
    EXPECT_THROW(bs4::homotopy_P(Composition{2, 2, 3}), std::invalid_argument);
    EXPECT_TRUE(bs4::homotopy_P(Composition{4, 6, 2}).is_zero());
}

TEST(Bs4, HomotopyOnGenericCells) { EXPECT_TRUE(suites::bs4_homotopy(7, true).passed); }

TEST(Bs4, LiteralHomotopyDefectIsConfinedToAdjacentMinima) {
    // every failing cell has its two smallest entries adjacent
    for (int x = 1; x <= 6; ++x)
        for (int y = 1; y <= 6; ++y)
            for (int z = 1; z <= 6; ++z) {
                Composition c{x, y, z};
                if (!bs4::in_S(c)) continue;
                if (bs4::homotopy_defect(c) == Cochain(Ring::F2, bs4::chi(c))) continue;
                std::vector<int> e{x, y, z};
                std::sort(e.begin(), e.end());
                EXPECT_EQ(e[1], e[0] + 1) << format(c);
            }
}
