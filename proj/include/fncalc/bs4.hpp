#pragma once

#include <algorithm>
#include <stdexcept>

#include "differential.hpp"

// Chain null-homotopy on the BS_4 submodule S spanned by cells [x,y,z] with
// positive entries, a unique minimum, and not of the form [b,a,b].

namespace fncalc::bs4 {

inline bool in_S(const Composition& c) {
    if (c.n() != 4) return false;
    const int x = c[0], y = c[1], z = c[2];
    const int mn = std::min({x, y, z});
    if (mn <= 0) return false;
    if ((x == mn) + (y == mn) + (z == mn) != 1) return false;
    if (x == z && y < x) return false;
    return true;
}

/// The case table of P. Cells outside S are rejected.
inline Cochain homotopy_P(const Composition& c) {
    if (!in_S(c)) throw std::invalid_argument("homotopy_P: cell not in S");
    Cochain out(Ring::F2);
    const int x = c[0], y = c[1], z = c[2];
    const int mn = std::min({x, y, z});
    if (x == mn)
        out.add(Composition{x - 1, y, z}, 1);
    else if (y == mn && x < z)
        out.add(Composition{x, y - 1, z}, 1);
    return out;
}

/// Exchange of the blocks around the minimum.
inline Composition chi(const Composition& c) {
    if (!in_S(c)) throw std::invalid_argument("chi: cell not in S");
    const int x = c[0], y = c[1], z = c[2];
    const int mn = std::min({x, y, z});
    if (x == mn) return {y, z, x};
    if (z == mn) return {z, x, y};
    return {z, y, x};
}

/// P extended by zero off S, applied to a mod-2 cochain.
inline Cochain P_extended(const Cochain& c) {
    Cochain out(Ring::F2);
    for (const auto& [t, v] : c)
        if (in_S(t)) {
            Cochain p = homotopy_P(t);
            p *= v;
            out += p;
        }
    return out;
}

/// (P delta + delta P)(c) over F2.
inline Cochain homotopy_defect(const Composition& c) {
    Cochain out = P_extended(delta_unlabeled(c, Ring::F2));
    out += delta(homotopy_P(c));
    return out;
}

}  // namespace fncalc::bs4
