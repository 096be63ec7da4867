#include <gtest/gtest.h>

#include <random>

#include "fncalc/io.hpp"
#include "fncalc/svg.hpp"

using namespace fncalc;

TEST(Io, CellRoundTrip) {
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= 4; ++k)
            for (const auto& a : n == 0 ? std::vector<Composition>{Composition::empty_configuration()} : enumerate_cells(n, k)) {
                if (n == 0 && k > 0) continue;
                EXPECT_EQ(parse_cell(format(a)), a) << format(a);
            }
    EXPECT_EQ(parse_cell(" [ 2 , 0,1 ,2 ] "), (Composition{2, 0, 1, 2}));
}

TEST(Io, LabeledRoundTrip) {
    DepthOrdering g({1, 2, 3}, {1, 0});
    EXPECT_EQ(format(g), "1<1 2<0 3");
    EXPECT_EQ(parse_labeled("1 <1 2 <0 3"), g);
}

TEST(Io, CochainRoundTrip) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Cochain c(Ring::Z);
        const auto cells = enumerate_cells(4, 3);
        for (int t = 0; t < 4; ++t) c.add(cells[rng() % cells.size()], static_cast<long>(rng() % 7) - 3);
        EXPECT_EQ(parse_cochain(format(c), Ring::Z), c) << format(c);
        LabeledCochain l(Ring::Z);
        l.add(DepthOrdering({2, 1, 3}, {1, 0}), -2);
        l.add(DepthOrdering({1, 2, 3}, {0, 1}), 1);
        EXPECT_EQ(parse_labeled_cochain(format(l), Ring::Z), l);
    }
    EXPECT_EQ(format(Cochain(Ring::Z)), "0");
    EXPECT_EQ(parse_cochain("0", Ring::Z), Cochain(Ring::Z));
    EXPECT_EQ(format(Cochain(Ring::Z, Composition::empty_configuration())), "1*1_0");
}

TEST(Io, SkylineRoundTrip) {
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= 6; ++k)
            for (const auto& m : enumerate_skyline_basis(n, k)) {
                SkylineClass x(Ring::F2, m);
                EXPECT_EQ(parse_skyline(format(x)), x) << format(x);
                SkylineClass s = stabilize(x);
                EXPECT_EQ(parse_skyline(format(s)), s) << format(s);
            }
    EXPECT_EQ(parse_skyline("(g(1,1) o 1_2) * (g(1,1) o 1_2)"), cup_skyline(parse_skyline("g(1,1) o 1_2"), parse_skyline("g(1,1) o 1_2")));
}

TEST(Io, PolynomialRoundTrip) {
    for (int d = 0; d <= 4; ++d)
        for (const auto& e : monomials(3, d)) {
            Polynomial p(3);
            p.add(e);
            p += dickson_generator(3, 1, 2);
            EXPECT_EQ(parse_polynomial(format(p), 3), p) << format(p);
        }
}

TEST(Io, ParseErrorsCarryPosition) {
    try {
        parse_cell("[2,0,x]");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 5u);
    }
    EXPECT_THROW(parse_skyline("g(1,1) o"), ParseError);
    EXPECT_THROW(parse_skyline("h(1,1)"), ParseError);
    EXPECT_THROW(parse_cochain("3*[1] +", Ring::Z), ParseError);
}

TEST(Svg, BoxSizes) {
    RenderSpec s;
    const std::string a = render_svg(parse_skyline("g(2,1)"), s);
    EXPECT_NE(a.find("width=\"160.00\" height=\"30.00\""), std::string::npos);  // 4 x 0.75
    EXPECT_EQ(a.find("stroke-dasharray"), std::string::npos);
    const std::string b = render_svg(parse_skyline("g(1,2)"), s);
    EXPECT_NE(b.find("width=\"160.00\" height=\"20.00\""), std::string::npos);  // 4 x 0.5
    std::size_t dashes = 0;
    for (std::size_t p = b.find("stroke-dasharray"); p != std::string::npos; p = b.find("stroke-dasharray", p + 1)) ++dashes;
    EXPECT_EQ(dashes, 1u);
}

TEST(Svg, Deterministic) {
    const char* e = "g(3,1)*g(2,2)^2*g(1,4) o g(2,1)^3 o g(1,2) o g(1,1) o 1_2";
    EXPECT_EQ(render_svg(parse_skyline(e)), render_svg(parse_skyline(e)));
    const std::string s = render_svg(parse_skyline(e));
    std::size_t rects = 0;
    for (std::size_t p = s.find("<rect"); p != std::string::npos; p = s.find("<rect", p + 1)) ++rects;
    EXPECT_EQ(rects, 1u + 2u + 1u + 3u + 1u);  // g(1,2) o g(1,1) merges into g(1,3)
}
