// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "fncalc/suites.hpp"

using namespace fncalc;

namespace {

struct Outcome {
    bool passed;
    std::string summary;
};

Outcome merge(std::initializer_list<Report> rs) {
    Outcome o{true, ""};
    for (const auto& r : rs) {
        o.passed = o.passed && r.passed;
        if (!o.summary.empty()) o.summary += "; ";
        o.summary += r.name + " " + (r.passed ? "ok" : "FAILED") + " (" + std::to_string(r.checked) + " checks";
        if (!r.passed) o.summary += ", first: " + r.counterexamples.front();
        o.summary += ")";
    }
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"golden differentials", [] { return merge({suites::differential_goldens()}); }},
        {"d^2 = 0 (FN_n n<=6 deg<=10 over Z; labeled n<=4 deg<=6)",
         [] { return merge({suites::d2_unlabeled(6, 10, Ring::Z), suites::d2_labeled(4, 6, Ring::Z)}); }},
        {"BS_4 basis vs families vs series deg<=12; P d + d P = chi on S entries<=8",
         [] {
             Outcome o = merge({suites::bs4_basis(12), suites::bs4_homotopy(8, false)});
             const Report g = suites::bs4_homotopy(8, true);
             o.summary += "; generic cells only: " + std::string(g.passed ? "ok" : "FAILED") + " (" + g.lines.front() + ")";
             return o;
         }},
        {"skyline basis count = dim H^k(BS_n;F2), n<=6 k<=8", [] { return merge({suites::basis_agreement(6, 8)}); }},
        {"Hopf ring golden values", [] { return merge({suites::hopf_goldens()}); }},
        {"Hopf ring axioms, components<=6 degree<=6", [] { return merge({suites::hopf_axioms(6, 6)}); }},
        {"Steenrod squares: Dickson oracle and axioms, component<=8 degree<=8",
         [] { return merge({suites::steenrod_oracle(), suites::steenrod_axioms(8, 8)}); }},
        {"Nakaoka decomposition deg<=6 width<=6; single-column squares", [] { return merge({suites::nakaoka(6, 6), suites::steenrod_oracle()}); }},
        {"cube of g(1,1) o 1_4 in the m=3 truncation for n=6",
         [] { return merge({suites::vassiliev(6, 3), suites::basis_agreement(6, 3, 3)}); }},
        {"H^*(BS_2;Z) through degree 10", [] { return merge({suites::bs2_integral(10)}); }},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.passed;
        std::printf("criterion %2zu: %s  %s  [%s] (%.2fs)\n", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first.c_str(), o.summary.c_str(), s);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
