// Total squares of the generators g(l,2^k) with k + l <= n, next to the
// Dickson-side formula for their single-column part.

#include <iostream>

#include "fncalc/io.hpp"
#include "fncalc/steenrod.hpp"

using namespace fncalc;

int main(int argc, char** argv) {
    const int n_max = argc > 1 ? std::stoi(argv[1]) : 3;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k < n; ++k) {
            const int l = n - k;
            const SkylineClass g(Ring::F2, gamma(l, 1 << k));
            std::cout << format(g) << "  (degree " << dickson_degree(k, l) << ")\n";
            for (int i = 1; i <= dickson_degree(k, l); ++i)
                std::cout << "  Sq^" << i << " = " << format(sq_skyline(i, g)) << "\n      Dickson: " << format(hung_square(i, k, l, n)) << "\n";
        }
}
