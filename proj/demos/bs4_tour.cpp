// Mod-2 cohomology of BS_4 from the cochain complex, with the family
// representatives printed next to the dimension.

#include <iostream>

#include "fncalc/suites.hpp"

using namespace fncalc;

int main(int argc, char** argv) {
    const int top = argc > 1 ? std::stoi(argv[1]) : 8;
    const auto series = suites::bs4_series(top);
    for (int k = 0; k <= top; ++k) {
        CohomologyGroup H(4, k, Ring::F2);
        std::cout << "H^" << k << "  dim " << H.dimension() << "  (series " << series[static_cast<std::size_t>(k)] << ")\n";
        for (const auto& c : suites::bs4_family_representatives(k)) std::cout << "    " << format(c) << "\n";
    }
}
