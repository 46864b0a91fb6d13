#pragma once

#include <vector>

#include "trv/catalog.hpp"
#include "trv/group.hpp"
#include "trv/quasigroup.hpp"

namespace fixtures {

// The 3-element right quasigroup with identity e = 0 and elements a = 1,
// b = 2 given by a o a = b, b o a = e, a o b = a, b o b = e. Non-associative:
// (a o a) o a = e but a o (a o a) = a.
inline trv::RightQuasigroup q3() {
    return trv::RightQuasigroup::validated({{0, 1, 2}, {1, 2, 1}, {2, 0, 0}}, 0,
                                           {"e", "a", "b"});
}

inline trv::RightQuasigroup z3() {
    return trv::RightQuasigroup::validated({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

inline trv::RightQuasigroup z4() {
    return trv::RightQuasigroup::validated(
        {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
}

// Relabel q by an identity-preserving permutation: table'[p(x)][p(y)] = p(x o y).
inline trv::RightQuasigroup relabel(const trv::RightQuasigroup& q, const std::vector<int>& p) {
    const int n = q.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            table[p[x]][p[y]] = p[q.op(x, y)];
        }
    }
    return trv::RightQuasigroup::validated(std::move(table));
}

} // namespace fixtures
