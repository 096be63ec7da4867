// Powers of g(1,1) o 1_{n-2} in the height-truncated skyline basis.

#include <iostream>

#include "fncalc/suites.hpp"
#include "fncalc/svg.hpp"

using namespace fncalc;

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::stoi(argv[1]) : 6;
    const int d = argc > 2 ? std::stoi(argv[2]) : 3;
    Report r = suites::vassiliev(n, d);
    for (const auto& l : r.lines) std::cout << l << "\n";
    std::cout << (r.passed ? "nonzero in the truncation\n" : "vanishes\n");
    if (argc > 3) {
        SkylineClass x = transfer_skyline(SkylineClass(Ring::F2, gamma(1, 1)), SkylineClass(Ring::F2, SkylineMonomial::unit(n - 2)));
        std::cout << render_svg(cup_power(x, d));
    }
    return r.passed ? 0 : 1;
}
