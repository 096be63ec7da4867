#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "bs4.hpp"
#include "cohomology.hpp"
#include "hopf.hpp"
#include "io.hpp"
#include "skyline.hpp"
#include "steenrod.hpp"

// Property suites shared by `fncalc verify` and the acceptance runner.

namespace fncalc {

struct Report {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::vector<std::string> lines;           // tables and notes
    std::vector<std::string> counterexamples;  // at most `keep` kept

    void check(bool ok, const std::string& what, std::size_t keep = 20) {
        ++checked;
        if (ok) return;
        passed = false;
        if (counterexamples.size() < keep) counterexamples.push_back(what);
    }
    void note(std::string s) { lines.push_back(std::move(s)); }
};

namespace suites {

// --- differential ------------------------------------------------------------

struct GoldenDifferential {
    const char* cell;
    const char* expected;
};

inline const std::vector<GoldenDifferential>& golden_differentials() {
    static const std::vector<GoldenDifferential> g = {
        {"[2,0,1,2]", "-3*[2,0,2,2] + -1*[2,1,1,2]"},
        {"[1,0,2,2]", "-1*[1,1,2,2] + 1*[1,2,2,1] + 2*[2,0,2,2] + -1*[2,2,1,1]"},
        {"[0,2,1,2]", "-6*[0,2,2,2] + -1*[1,2,1,2] + 1*[2,1,1,2] + -1*[2,1,2,1]"},
        {"[0,1,2,2]", "-4*[0,2,2,2] + -1*[1,2,2,1]"},
    };
    return g;
}

inline Report differential_goldens() {
    Report r{"golden-differentials"};
    for (const auto& g : golden_differentials()) {
        Cochain got = delta_unlabeled(parse_cell(g.cell), Ring::Z);
        Cochain want = parse_cochain(g.expected, Ring::Z);
        r.check(got == want, std::string("delta ") + g.cell + " = " + format(got));
        r.note(std::string("delta ") + g.cell + " = " + format(got));
    }
    return r;
}

inline Report d2_unlabeled(int n_max, int max_degree, Ring ring, AmbientDim m = kInfinity) {
    Report r{"d2"};
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k + 2 <= max_degree; ++k)
            for (const auto& a : enumerate_cells(n, k, m)) {
                Cochain dd = delta(delta_unlabeled(a, ring, m), m);
                r.check(dd.is_zero(), "d^2 " + format(a) + " = " + format(dd));
            }
    r.note("cells checked: " + std::to_string(r.checked));
    return r;
}

inline std::vector<DepthOrdering> enumerate_labeled(int n, int degree, AmbientDim m) {
    std::vector<DepthOrdering> out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (const auto& a : enumerate_cells(n, degree, m)) {
        std::iota(perm.begin(), perm.end(), 1);
        do out.emplace_back(perm, a.entries());
        while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

inline Report d2_labeled(int n_max, int max_degree, Ring ring, AmbientDim m = kInfinity) {
    Report r{"d2-labeled"};
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k + 2 <= max_degree; ++k)
            for (const auto& g : enumerate_labeled(n, k, m)) {
                LabeledCochain dd = delta(delta_labeled(g, ring, m), m);
                r.check(dd.is_zero(), "d^2 (" + format(g) + ") = " + format(dd));
            }
    r.note("labeled cells checked: " + std::to_string(r.checked));
    return r;
}

// --- cohomology --------------------------------------------------------------

inline std::string describe_group(const CohomologyGroup& H) {
    std::vector<std::string> parts;
    if (H.free_rank() == 1)
        parts.push_back("Z");
    else if (H.free_rank() > 1)
        parts.push_back("Z^" + std::to_string(H.free_rank()));
    for (const auto& t : H.torsion()) parts.push_back("Z/" + t.get_str());
    return parts.empty() ? "0" : detail::join(parts, "+");
}

inline Report bs2_integral(int max_degree) {
    Report r{"bs2-integral"};
    std::vector<std::string> row;
    for (int k = 0; k <= max_degree; ++k) {
        CohomologyGroup H(2, k, Ring::Z);
        const std::string want = k == 0 ? "Z" : (k % 2 == 0 ? "Z/2" : "0");
        const std::string got = describe_group(H);
        r.check(got == want, "H^" + std::to_string(k) + " = " + got + ", expected " + want);
        row.push_back(got);
    }
    r.note("H^*(BS_2;Z): " + detail::join(row, ", "));
    return r;
}

/// Coefficients of (1 - t^4) / ((1 - t)(1 - t^2)(1 - t^3)).
inline std::vector<long> bs4_series(int max_degree) {
    std::vector<long> c(static_cast<std::size_t>(max_degree) + 1, 0);
    c[0] = 1;
    for (int w : {1, 2, 3})
        for (int k = w; k <= max_degree; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - w)];
    for (int k = max_degree; k >= 4; --k) c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - 4)];
    return c;
}

/// The three families of BS_4 basis cocycles in one degree.
inline std::vector<Cochain> bs4_family_representatives(int degree) {
    std::vector<Cochain> out;
    if (degree == 0) out.push_back(Cochain(Ring::F2, Composition{0, 0, 0}));
    if (degree > 0) out.push_back(symm(Composition{degree, 0, 0}));
    for (int a = 1; 2 * a < degree; ++a) {
        Cochain c(Ring::F2);
        c.add(Composition{a, 0, degree - a}, 1);
        c.add(Composition{degree - a, 0, a}, 1);
        out.push_back(c);
    }
    for (int b = 1; 2 * b <= degree; ++b) {
        const int a = degree - 2 * b;
        if (a <= b) out.push_back(Cochain(Ring::F2, Composition{b, a, b}));
    }
    return out;
}

inline Report bs4_basis(int max_degree) {
    Report r{"bs4-basis"};
    const auto series = bs4_series(max_degree);
    for (int k = 0; k <= max_degree; ++k) {
        CohomologyGroup H(4, k, Ring::F2);
        const auto reps = bs4_family_representatives(k);
        // the family cocycles must be independent in cohomology
        std::size_t rank = 0;
        F2Echelon ech(H.dimension(), 0);
        bool cocycles = true;
        for (const auto& c : reps) {
            if (!is_cocycle(c)) {
                cocycles = false;
                continue;
            }
            auto v = H.reduce_cocycle(c);
            BitVector b(H.dimension());
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0) b.set(i);
            if (ech.insert(b)) ++rank;
        }
        const long dim = static_cast<long>(H.dimension());
        const bool ok = dim == series[static_cast<std::size_t>(k)] && dim == static_cast<long>(reps.size()) && rank == reps.size() && cocycles;
        r.check(ok, "degree " + std::to_string(k) + ": dim " + std::to_string(dim) + ", series " + std::to_string(series[static_cast<std::size_t>(k)]) +
                        ", families " + std::to_string(reps.size()) + ", independent " + std::to_string(rank));
        r.note("degree " + std::to_string(k) + ": dim " + std::to_string(dim) + " series " + std::to_string(series[static_cast<std::size_t>(k)]) +
               " families " + std::to_string(reps.size()));
    }
    return r;
}

/// P delta + delta P = chi on S, exhaustively for entries <= max_entry.
/// With generic_only, cells whose second-smallest entry is min+1 are skipped.
inline Report bs4_homotopy(int max_entry, bool generic_only) {
    Report r{generic_only ? "bs4-homotopy-generic" : "bs4-homotopy"};
    std::size_t in_s = 0, failures = 0;
    for (int x = 1; x <= max_entry; ++x)
        for (int y = 1; y <= max_entry; ++y)
            for (int z = 1; z <= max_entry; ++z) {
                Composition c{x, y, z};
                if (!bs4::in_S(c)) continue;
                std::vector<int> e{x, y, z};
                std::sort(e.begin(), e.end());
                if (generic_only && e[1] == e[0] + 1) continue;
                ++in_s;
                Cochain got = bs4::homotopy_defect(c);
                Cochain want(Ring::F2, bs4::chi(c));
                const bool ok = got == want;
                if (!ok) ++failures;
                r.check(ok, "(P d + d P)" + format(c) + " = " + format(got) + ", chi = " + format(want));
            }
    r.note("cells of S checked: " + std::to_string(in_s) + ", failures: " + std::to_string(failures));
    return r;
}

inline Report basis_agreement(int n_max, int k_max, std::optional<int> m = std::nullopt) {
    Report r{"basis-agreement"};
    const AmbientDim amb = m ? AmbientDim(*m) : kInfinity;
    for (int n = 1; n <= n_max; ++n) {
        std::ostringstream row;
        row << "n=" << n << ":";
        for (int k = 0; k <= k_max; ++k) {
            const std::size_t sky = enumerate_skyline_basis(n, k, m).size();
            const std::size_t dim = CohomologyGroup(n, k, Ring::F2, amb).dimension();
            r.check(sky == dim, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": skyline " + std::to_string(sky) + " vs dim " + std::to_string(dim));
            row << " " << dim;
        }
        r.note(row.str());
    }
    return r;
}

// --- Hopf ring -------------------------------------------------------------

inline Cochain coboundary_difference(const Cochain& a, const Cochain& b) {
    Cochain d = a;
    d += b;  // mod 2
    return d.in_ring(Ring::F2);
}

struct SkylineGolden {
    const char* lhs_a;
    const char* lhs_b;
    const char* expected;
};

inline const std::vector<SkylineGolden>& product_goldens() {
    // the second left factor reads g(1,1)^3 o g(1,1) o 1_2 (see README)
    static const std::vector<SkylineGolden> g = {
        {"g(1,1) o 1_4", "g(1,2) o 1_2", "g(1,3) + g(1,1)^2 o g(1,1) o 1_2"},
        {"g(1,1)^3 o g(1,1) o 1_2", "g(1,2) o 1_2", "g(1,1)^4 o g(1,1)^2 o 1_2 + g(1,1)^3 o g(1,1)^2 o g(1,1)"},
        {"g(1,1) o 1_4", "g(2,1) o 1_2", "g(2,1) o g(1,1)"},
    };
    return g;
}

inline SkylineClass bs4_two_columns(int a1, int a2) {
    std::vector<GatheredBlock> b;
    int u = 0;
    for (int a : {a1, a2}) {
        if (a)
            b.emplace_back(2, Profile{{1, a}});
        else
            u += 2;
    }
    return normalize(b, u);
}

inline SkylineClass bs4_one_column(int b1, int b2) {
    Profile p;
    if (b1) p[1] = b1;
    if (b2) p[2] = b2;
    if (p.empty()) return SkylineClass(Ring::F2, SkylineMonomial::unit(4));
    return SkylineClass(Ring::F2, SkylineMonomial::column(GatheredBlock(4, p)));
}

inline Report hopf_goldens() {
    Report r{"hopf-goldens"};
    // worked product in FN_6
    {
        Cochain x = symm(Composition{3, 0, 2, 2, 2}), y = symm(Composition{4, 0, 2, 0, 2});
        Cochain want = symm(Composition{7, 0, 4, 2, 4});
        Cochain prod = intersection_product(x, y);
        r.check(is_coboundary(coboundary_difference(prod, want)), "Symm[3,0,2,2,2].Symm[4,0,2,0,2] - Symm[7,0,4,2,4] is not a coboundary");
        Cochain route = transfer_product(intersection_product(Cochain(Ring::F2, Composition{3}), Cochain(Ring::F2, Composition{4})),
                                         intersection_product(Cochain(Ring::F2, Composition{2, 2, 2}), Cochain(Ring::F2, Composition{2, 0, 2})));
        r.check(route == want, "([3].[4]) o ([2,2,2].[2,0,2]) = " + format(route));
        TensorSum cop = coproduct(x);
        r.check(cop.contains({Composition{3}, Composition{2, 2, 2}}), "Delta Symm[3,0,2,2,2] lacks [3] (x) [2,2,2]");
        r.note("chain-level product: " + format(prod));
    }
    // skyline products
    for (const auto& g : product_goldens()) {
        SkylineClass got = cup_skyline(parse_skyline(g.lhs_a), parse_skyline(g.lhs_b));
        r.check(got == parse_skyline(g.expected), std::string("(") + g.lhs_a + ") * (" + g.lhs_b + ") = " + format(got));
        r.note(std::string("(") + g.lhs_a + ") * (" + g.lhs_b + ") = " + format(got));
    }
    // monomial <-> cochain
    {
        SkylineClass m = parse_skyline("g(3,1)*g(2,2)^2*g(1,4) o g(2,1)^3 o g(1,2) o g(1,1) o 1_2");
        Cochain want = symm(Composition{4, 3, 4, 1, 4, 3, 4, 0, 3, 3, 3, 0, 1, 0, 1, 0, 1, 0, 0});
        r.check(m.size() == 1 && to_cochain(m) == want, "monomial/cochain correspondence");
    }
    // BS_4 cup product table
    int cases = 0;
    for (int a1 = 0; a1 <= 3; ++a1)
        for (int a2 = 0; a2 <= 3; ++a2) {
            if (a1 + a2 == 0) continue;
            for (int a3 = 0; a3 <= 3; ++a3)
                for (int a4 = 0; a4 <= 3; ++a4) {
                    if (a3 + a4 == 0) continue;
                    SkylineClass want(Ring::F2);
                    if (a1 + a3 != a2 + a4) want += bs4_two_columns(a1 + a3, a2 + a4);
                    if (a1 + a4 != a2 + a3) want += bs4_two_columns(a1 + a4, a2 + a3);
                    r.check(cup_skyline(bs4_two_columns(a1, a2), bs4_two_columns(a3, a4)) == want, "cupprod line 1");
                    ++cases;
                    if (a1 && a2 && a3 && a4 && a1 != a2 && a3 != a4) {
                        Cochain c = intersection_product(symm(Composition{a1, 0, a2}), symm(Composition{a3, 0, a4}));
                        r.check(is_cocycle(c) && is_coboundary(coboundary_difference(c, to_cochain(want))), "cupprod line 1 at cochain level");
                    }
                }
            for (int b1 = 0; b1 <= 3; ++b1)
                for (int b2 = 0; b2 <= 3; ++b2) {
                    if (b1 + b2 == 0) continue;
                    SkylineClass want = b2 == 0 ? bs4_two_columns(a1 + b1, a2 + b1) : SkylineClass(Ring::F2);
                    r.check(cup_skyline(bs4_two_columns(a1, a2), bs4_one_column(b1, b2)) == want, "cupprod line 2");
                    ++cases;
                }
        }
    for (int b1 = 0; b1 <= 3; ++b1)
        for (int b2 = 0; b2 <= 3; ++b2)
            for (int b3 = 0; b3 <= 3; ++b3)
                for (int b4 = 0; b4 <= 3; ++b4) {
                    if (b1 + b2 == 0 || b3 + b4 == 0) continue;
                    r.check(cup_skyline(bs4_one_column(b1, b2), bs4_one_column(b3, b4)) == bs4_one_column(b1 + b3, b2 + b4), "cupprod line 3");
                    ++cases;
                }
    r.note("cupprod table cases (heights <= 3): " + std::to_string(cases));
    return r;
}

inline Report hopf_axioms(int n_max, int d_max) {
    Report r{"hopf-axioms"};
    std::size_t sky = 0, chain = 0;
    // distributivity x.(b o c) = sum (x'.b) o (x''.c)
    for (int nx = 2; nx <= n_max; ++nx)
        for (int dx = 0; dx <= d_max; ++dx)
            for (const auto& X : enumerate_skyline_basis(nx, dx))
                for (int nb = 1; nb < nx; ++nb)
                    for (int db = 0; dx + db <= d_max; ++db)
                        for (int dc = 0; dx + db + dc <= d_max; ++dc)
                            for (const auto& B : enumerate_skyline_basis(nb, db))
                                for (const auto& C : enumerate_skyline_basis(nx - nb, dc)) {
                                    SkylineClass lhs = cup_skyline(SkylineClass(Ring::F2, X), transfer_skyline(B, C));
                                    SkylineClass rhs(Ring::F2);
                                    for (const auto& [pq, v] : coproduct_skyline(X))
                                        if (pq.first.component() == nb) rhs += transfer_skyline(cup_skyline(pq.first, B), cup_skyline(pq.second, C));
                                    ++sky;
                                    r.check(lhs == rhs, "distributivity " + format(X) + " . (" + format(B) + " o " + format(C) + ")");
                                    // cochain level where every product is transversal
                                    Cochain xc = to_cochain(X), bc = to_cochain(B), cc = to_cochain(C);
                                    Cochain bt = transfer_product(bc, cc);
                                    if (!transversal(xc, bt)) continue;
                                    bool ok = true;
                                    Cochain sum(Ring::F2);
                                    for (const auto& [pq, v] : coproduct(xc)) {
                                        if (pq.first.n() != nb) continue;
                                        Cochain p1(Ring::F2, pq.first), p2(Ring::F2, pq.second);
                                        if (!transversal(p1, bc) || !transversal(p2, cc)) {
                                            ok = false;
                                            break;
                                        }
                                        sum += transfer_product(intersection_product(p1, bc), intersection_product(p2, cc));
                                    }
                                    if (!ok) continue;
                                    ++chain;
                                    r.check(is_coboundary(coboundary_difference(intersection_product(xc, bt), sum)), "cochain distributivity " + format(X));
                                }
    r.note("distributivity: " + std::to_string(sky) + " skyline triples, " + std::to_string(chain) + " transversal cochain triples");
    // generator transfer relation
    for (int l = 1; l <= 2; ++l)
        for (int n = 1; n <= 3; ++n)
            for (int m = 1; n + m <= 3; ++m) {
                if ((n + m) << l > n_max) continue;
                Cochain lhs = transfer_product(symm(gamma_cochain(l, n)), symm(gamma_cochain(l, m)));
                Cochain rhs(Ring::F2);
                if (binomial_odd(n + m, n)) rhs = symm(gamma_cochain(l, n + m));
                r.check(is_coboundary(coboundary_difference(lhs, rhs)), "g(" + std::to_string(l) + "," + std::to_string(n) + ") o g(" + std::to_string(l) + "," + std::to_string(m) + ")");
                SkylineClass s = transfer_skyline(gamma(l, n), gamma(l, m));
                r.check(s == (binomial_odd(n + m, n) ? SkylineClass(Ring::F2, gamma(l, n + m)) : SkylineClass(Ring::F2)), "skyline generator relation");
            }
    // generator coproduct
    for (int l = 1; l <= 2; ++l)
        for (int n = 1; n << l <= n_max; ++n) {
            TensorSum want(Ring::F2);
            for (int i = 0; i <= n; ++i) {
                Cochain a = i ? symm(gamma_cochain(l, i)) : Cochain(Ring::F2, Composition::empty_configuration());
                Cochain b = n - i ? symm(gamma_cochain(l, n - i)) : Cochain(Ring::F2, Composition::empty_configuration());
                for (const auto& [p, u] : a)
                    for (const auto& [q, v] : b) want.add({p, q}, 1);
            }
            TensorSum got = coproduct(symm(gamma_cochain(l, n)));
            r.check(got == want, "Delta g(" + std::to_string(l) + "," + std::to_string(n) + ") = " + format(got));
        }
    // transfer and cup homomorphisms from skyline to cochains
    std::size_t cup_pairs = 0;
    for (int n1 = 0; n1 <= n_max; ++n1)
        for (int n2 = 0; n1 + n2 <= n_max; ++n2)
            for (int a = 0; a <= d_max; ++a)
                for (int b = 0; a + b <= d_max; ++b)
                    for (const auto& x : enumerate_skyline_basis(n1, a))
                        for (const auto& y : enumerate_skyline_basis(n2, b)) {
                            Cochain l = to_cochain(transfer_skyline(x, y)), t = transfer_product(to_cochain(x), to_cochain(y));
                            r.check(is_coboundary(coboundary_difference(l, t)), "transfer " + format(x) + " o " + format(y));
                            if (n1 != n2 || n1 == 0) continue;
                            Cochain xc = to_cochain(x), yc = to_cochain(y);
                            if (!transversal(xc, yc)) continue;
                            ++cup_pairs;
                            Cochain p = intersection_product(xc, yc);
                            r.check(is_cocycle(p) && is_coboundary(coboundary_difference(to_cochain(cup_skyline(x, y)), p)), "cup " + format(x) + " * " + format(y));
                        }
    r.note("transversal cup pairs checked at cochain level: " + std::to_string(cup_pairs));
    return r;
}

// --- Steenrod ----------------------------------------------------------------

inline Report steenrod_oracle() {
    Report r{"steenrod-oracle"};
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k < n; ++k) {
            const int l = n - k;
            const Polynomial d = dickson_generator(n, k, l);
            r.check(is_invariant(d), "d(" + std::to_string(k) + "," + std::to_string(l) + ") not invariant");
            // invariant-theory oracle: Dickson monomials span the invariants
            for (int deg = 0; deg <= dickson_degree(k, l) * 2; ++deg)
                r.check(invariants_basis(n, deg).size() == dickson_monomials(n, deg).size(),
                        "n=" + std::to_string(n) + " degree " + std::to_string(deg) + ": invariants vs Dickson monomials");
            for (int i = 0; i <= dickson_degree(k, l); ++i) {
                DicksonExpression got = dickson_reexpress(sq_poly(i, d));
                DicksonExpression want = hung_square(i, k, l, n);
                r.check(got == want, "Sq^" + std::to_string(i) + " d(" + std::to_string(k) + "," + std::to_string(l) + "): " + format(got) + " vs " + format(want));
                // single-column term of the skyline square
                SkylineClass sq = sq_skyline(i, SkylineClass(Ring::F2, gamma(l, 1 << k)));
                SkylineClass single(Ring::F2);
                for (const auto& [m, v] : sq)
                    if (m.is_single_column()) single.add(m, v);
                r.check(single == dickson_to_skyline(want), "single-column term of Sq^" + std::to_string(i) + " g(" + std::to_string(l) + "," + std::to_string(1 << k) + ")");
                r.check(restrict_to_V(sq, n) == sq_poly(i, d), "restriction of Sq^" + std::to_string(i) + " g(" + std::to_string(l) + "," + std::to_string(1 << k) + ")");
            }
        }
    // generator squares by enumeration against the constraint solver
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k < n; ++k) {
            const int l = n - k;
            r.check(generator_square(l, k) == solve_generator_square(l, k), "enumeration vs solver for g(" + std::to_string(l) + "," + std::to_string(1 << k) + ")");
        }
    r.check(sq_poly(1, parse_polynomial("x1^2 + x2^2 + x1*x2")) == parse_polynomial("x1^2*x2 + x1*x2^2"), "Sq^1(x1^2 + x2^2 + x1 x2)");
    {
        DicksonExpression want{2};
        want.terms.add(DicksonMonomial{{0, 1}}, 1);
        r.check(dickson_reexpress(sq_poly(1, dickson_generator(2, 1, 1))) == want && hung_square(1, 1, 1, 2) == want, "Sq^1 d(1,1) = d(0,2)");
    }
    {
        const SkylineClass g21 = parse_skyline("g(2,1)");
        r.check(sq_skyline(1, sq_skyline(2, g21)) == sq_skyline(3, g21) && sq_skyline(3, g21) == parse_skyline("g(2,1)^2"), "Sq^1 Sq^2 g(2,1) = Sq^3 g(2,1) = g(2,1)^2");
        r.check(sq_skyline(1, parse_skyline("g(1,2)")) == parse_skyline("g(1,1)^2 o g(1,1) + g(2,1)"), "Sq^1 g(1,2)");
    }
    return r;
}

inline Report steenrod_axioms(int n_max, int k_max) {
    Report r{"steenrod-axioms"};
    std::vector<std::pair<SkylineMonomial, int>> all;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k <= k_max; ++k)
            for (const auto& m : enumerate_skyline_basis(n, k)) all.emplace_back(m, k);
    for (const auto& [m, k] : all) {
        SkylineClass x(Ring::F2, m);
        const std::string s = format(m);
        r.check(sq_skyline(0, x) == x, "Sq^0 " + s);
        r.check(sq_skyline(k + 1, x).is_zero() && sq_skyline(k + 2, x).is_zero(), "vanishing above degree " + s);
        r.check(sq_skyline(k, x) == cup_skyline(x, x), "top square " + s);
        r.check(sq_skyline(1, sq_skyline(2, x)) == sq_skyline(3, x), "Sq^1 Sq^2 = Sq^3 on " + s);
        for (int i = 0; i <= k; ++i) {
            SkylineTensor lhs = coproduct_skyline(sq_skyline(i, x)), rhs(Ring::F2);
            for (const auto& [pq, v] : coproduct_skyline(m))
                for (int a = 0; a <= i; ++a)
                    for (const auto& [p, u] : sq_skyline(a, pq.first))
                        for (const auto& [q, w] : sq_skyline(i - a, pq.second)) rhs.add({p, q}, 1);
            r.check(lhs == rhs, "coproduct naturality Sq^" + std::to_string(i) + " " + s);
        }
    }
    // Cartan formulas on pairs
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a; b < all.size(); ++b) {
            const auto& [x, kx] = all[a];
            const auto& [y, ky] = all[b];
            const int deg = kx + ky;
            if (deg > k_max) continue;
            const bool same = x.component() == y.component();
            const bool fits = x.component() + y.component() <= n_max;
            if (!same && !fits) continue;
            ++pairs;
            for (int i = 0; i <= deg; ++i) {
                if (same) {
                    SkylineClass lhs = sq_skyline(i, cup_skyline(x, y)), rhs(Ring::F2);
                    for (int j = 0; j <= i; ++j) rhs += cup_skyline(sq_skyline(j, x), sq_skyline(i - j, y));
                    r.check(lhs == rhs, "Cartan (cup) Sq^" + std::to_string(i) + " " + format(x) + " * " + format(y));
                }
                if (fits) {
                    SkylineClass lhs = sq_skyline(i, transfer_skyline(x, y)), rhs(Ring::F2);
                    for (int j = 0; j <= i; ++j) rhs += transfer_skyline(sq_skyline(j, x), sq_skyline(i - j, y));
                    r.check(lhs == rhs, "Cartan (transfer) Sq^" + std::to_string(i) + " " + format(x) + " o " + format(y));
                }
            }
        }
    r.note("basis monomials: " + std::to_string(all.size()) + ", Cartan pairs: " + std::to_string(pairs));
    return r;
}

// --- Nakaoka and truncation --------------------------------------------------

inline Report nakaoka(int max_degree, int max_width) {
    Report r{"nakaoka"};
    std::size_t count = 0;
    for (int k = 0; k <= max_degree; ++k)
        for (const auto& m : enumerate_stable(max_width, k)) {
            SkylineClass x(Ring::F2, m);
            try {
                r.check(nakaoka_expand(nakaoka_decompose(x)) == x, "decompose/expand " + format(m));
            } catch (const std::exception& e) {
                r.check(false, format(m) + ": " + e.what());
            }
            ++count;
        }
    r.note("stable classes: " + std::to_string(count));
    return r;
}

inline Report vassiliev(int n, int d) {
    Report r{"vassiliev"};
    if (n < 2) throw std::invalid_argument("vassiliev: need n >= 2");
    SkylineClass x = transfer_skyline(SkylineClass(Ring::F2, gamma(1, 1)), SkylineClass(Ring::F2, SkylineMonomial::unit(n - 2)));
    SkylineClass power = cup_power(x, d), truncated(Ring::F2);
    for (const auto& [m, v] : power) {
        bool keep = true;
        for (const auto& b : m.blocks())
            if (b.height() >= d) keep = false;
        if (keep) truncated.add(m, v);
    }
    r.note("x = " + format(x));
    r.note("x^" + std::to_string(d) + " = " + format(power));
    r.note("in the m=" + std::to_string(d) + " truncation: " + format(truncated));
    r.check(!truncated.is_zero(), "power vanishes in the skyline truncation");
    const AmbientDim amb(d);
    Cochain c(Ring::F2);
    for (const auto& [a, v] : to_cochain(truncated))
        if (a.fits(amb)) c.add(a, v);
    const bool cocycle = is_cocycle(c, amb), cob = cocycle && is_coboundary(c, amb);
    r.check(cocycle && !cob, "cochain representative is not a non-trivial cocycle in the truncated complex");
    r.note(std::string("cochain level: cocycle ") + (cocycle ? "yes" : "no") + ", coboundary " + (cob ? "yes" : "no"));
    return r;
}

}  // namespace suites
}  // namespace fncalc
