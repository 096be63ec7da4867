#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "differential.hpp"

namespace fncalc {

namespace detail {

// Every distinct re-ordering of children below the given level. Entries of
// `seq` are all >= level.
inline std::vector<std::vector<int>> block_variants(const std::vector<int>& seq, int level) {
    if (seq.empty()) return {{}};
    std::vector<std::vector<int>> parts(1);
    for (int x : seq) {
        if (x == level)
            parts.emplace_back();
        else
            parts.back().push_back(x);
    }
    if (parts.size() == 1) return block_variants(parts[0], level + 1);

    // orbit of each block, identified by its sorted variant list
    std::vector<std::vector<std::vector<int>>> orbits;
    std::vector<int> ids;
    for (const auto& p : parts) {
        auto v = block_variants(p, level + 1);
        std::sort(v.begin(), v.end());
        auto it = std::find(orbits.begin(), orbits.end(), v);
        if (it == orbits.end()) {
            ids.push_back(static_cast<int>(orbits.size()));
            orbits.push_back(std::move(v));
        } else {
            ids.push_back(static_cast<int>(it - orbits.begin()));
        }
    }
    std::sort(ids.begin(), ids.end());
    std::set<std::vector<int>> out;
    do {
        // choose one variant per slot
        std::vector<std::size_t> pick(ids.size(), 0);
        while (true) {
            std::vector<int> e;
            for (std::size_t s = 0; s < ids.size(); ++s) {
                if (s) e.push_back(level);
                const auto& v = orbits[static_cast<std::size_t>(ids[s])][pick[s]];
                e.insert(e.end(), v.begin(), v.end());
            }
            out.insert(std::move(e));
            std::size_t s = 0;
            for (; s < ids.size(); ++s) {
                if (++pick[s] < orbits[static_cast<std::size_t>(ids[s])].size()) break;
                pick[s] = 0;
            }
            if (s == ids.size()) break;
        }
    } while (std::next_permutation(ids.begin(), ids.end()));
    return {out.begin(), out.end()};
}

}  // namespace detail

/// Sum of all distinct block permutations of a cell (mod 2).
inline Cochain symm(const Composition& a) {
    Cochain out(Ring::F2);
    if (a.n() == 0) {
        out.add(a, 1);
        return out;
    }
    for (auto& e : detail::block_variants(a.entries(), 0)) out.add(Composition(std::move(e)), 1);
    return out;
}

/// Symm applied termwise.
inline Cochain symm(const Cochain& c) {
    return c.in_ring(Ring::F2).apply([](const Composition& a) { return symm(a); });
}

}  // namespace fncalc
