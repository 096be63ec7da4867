// Reads pairs of skyline expressions from stdin, one pair per two lines, and
// prints cup product, transfer product and coproduct of the first.

#include <iostream>
#include <string>

#include "fncalc/io.hpp"

using namespace fncalc;

int main() {
    std::string a, b;
    while (std::getline(std::cin, a) && std::getline(std::cin, b)) {
        try {
            SkylineClass x = parse_skyline(a), y = parse_skyline(b);
            std::cout << "x   = " << format(x) << "\ny   = " << format(y) << "\n";
            std::cout << "x*y = " << format(cup_skyline(x, y)) << "\n";
            std::cout << "xoy = " << format(transfer_skyline(x, y)) << "\n";
            std::cout << "D x = " << format(coproduct_skyline(x)) << "\n\n";
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }
}
