#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trv/error.hpp"
#include "trv/perm.hpp"
#include "trv/random.hpp"

namespace trv {

/// A finite right quasigroup with two-sided identity.
///
/// Table orientation: table[z][x] = z o x, i.e. the row picks the LEFT operand.
/// Right translations z -> z o x are the COLUMNS and must be bijections; left
/// division ldiv(x, y) inverts the column of x. The identity is normalized to
/// index 0 on construction.
class RightQuasigroup {
public:
    /// Checks both axioms and reports the first violated cell.
    static RightQuasigroup validated(std::vector<std::vector<int>> table, int identity = 0,
                                     std::vector<std::string> labels = {}) {
        const int n = static_cast<int>(table.size());
        if (n == 0) throw ValidationError("empty table");
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(table[i].size()) != n) {
                throw ValidationError("table row " + std::to_string(i) + " is not length " +
                                      std::to_string(n));
            }
            for (int j = 0; j < n; ++j) {
                if (table[i][j] < 0 || table[i][j] >= n) {
                    throw ValidationError("table[" + std::to_string(i) + "][" +
                                          std::to_string(j) + "] out of range");
                }
            }
        }
        if (identity < 0 || identity >= n) throw ValidationError("identity index out of range");
        if (labels.empty()) {
            for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        }
        if (static_cast<int>(labels.size()) != n) {
            throw ValidationError("label count does not match table size");
        }

        if (identity != 0) {
            relabel_swap(table, labels, identity, 0);
            identity = 0;
        }

        for (int x = 0; x < n; ++x) {
            if (table[identity][x] != x) {
                throw ValidationError("identity row violated: e o " + std::to_string(x) +
                                      " = " + std::to_string(table[identity][x]));
            }
            if (table[x][identity] != x) {
                throw ValidationError("identity column violated: " + std::to_string(x) +
                                      " o e = " + std::to_string(table[x][identity]));
            }
        }
        for (int x = 0; x < n; ++x) {
            std::vector<bool> hit(n, false);
            for (int z = 0; z < n; ++z) {
                const int v = table[z][x];
                if (hit[v]) {
                    throw ValidationError("right translation by " + std::to_string(x) +
                                          " is not a bijection: value " + std::to_string(v) +
                                          " repeats at row " + std::to_string(z));
                }
                hit[v] = true;
            }
        }

        RightQuasigroup q;
        q.table_ = std::move(table);
        q.labels_ = std::move(labels);
        q.build_ldiv();
        return q;
    }

    int size() const { return static_cast<int>(table_.size()); }
    int identity() const { return 0; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }

    /// x o y.
    int op(int x, int y) const { return table_[x][y]; }

    /// Left division: the unique z with z o x = y.
    int ldiv(int x, int y) const { return ldiv_[x][y]; }

    /// The unique x' with x' o x = e.
    int left_inverse(int x) const { return ldiv_[x][0]; }

    /// The column permutation z -> z o x.
    Perm right_translation(int x) const {
        std::vector<int> images(size());
        for (int z = 0; z < size(); ++z) images[z] = table_[z][x];
        return Perm::from_images(std::move(images));
    }

    /// First triple with (x o y) o z != x o (y o z), if any.
    std::optional<std::array<int, 3>> associativity_witness() const {
        const int n = size();
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                const int xy = table_[x][y];
                for (int z = 0; z < n; ++z) {
                    if (table_[xy][z] != table_[x][table_[y][z]]) {
                        return std::array<int, 3>{x, y, z};
                    }
                }
            }
        }
        return std::nullopt;
    }

    /// Associativity plus the quasigroup axioms force a group.
    bool is_group() const { return !associativity_witness().has_value(); }

    friend bool operator==(const RightQuasigroup& a, const RightQuasigroup& b) {
        return a.table_ == b.table_;
    }

private:
    RightQuasigroup() = default;

    static void relabel_swap(std::vector<std::vector<int>>& table,
                             std::vector<std::string>& labels, int a, int b) {
        const int n = static_cast<int>(table.size());
        auto swap_idx = [&](int v) { return v == a ? b : v == b ? a : v; };
        std::vector<std::vector<int>> out(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                out[swap_idx(i)][swap_idx(j)] = swap_idx(table[i][j]);
            }
        }
        table = std::move(out);
        std::swap(labels[a], labels[b]);
    }

    void build_ldiv() {
        const int n = size();
        ldiv_.assign(n, std::vector<int>(n));
        for (int x = 0; x < n; ++x) {
            for (int z = 0; z < n; ++z) {
                ldiv_[x][table_[z][x]] = z;
            }
        }
    }

    std::vector<std::vector<int>> table_;
    std::vector<std::vector<int>> ldiv_;  // ldiv_[x][y] = z with z o x = y
    std::vector<std::string> labels_;
};

/// Uniformly random right quasigroup with identity 0: each column x != 0 is a
/// random permutation conditioned on sending 0 to x. Deterministic in `seed`.
inline RightQuasigroup random_quasigroup(int n, std::uint64_t seed) {
    if (n < 1) throw ValidationError("quasigroup size must be positive");
    Rng rng(seed);
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int z = 0; z < n; ++z) table[z][0] = z;
    for (int x = 1; x < n; ++x) {
        std::vector<int> column;
        for (int v = 0; v < n; ++v) {
            if (v != x) column.push_back(v);
        }
        rng.shuffle(column);
        table[0][x] = x;
        for (int z = 1; z < n; ++z) table[z][x] = column[z - 1];
    }
    return RightQuasigroup::validated(std::move(table));
}

/// Identity-preserving isomorphism q1 -> q2 found by backtracking, pruned by
/// right-translation cycle types. Returns the image array, or nullopt.
inline std::optional<std::vector<int>> isomorphism(const RightQuasigroup& q1,
                                                   const RightQuasigroup& q2) {
    const int n = q1.size();
    if (n != q2.size()) return std::nullopt;

    std::vector<std::vector<int>> type1(n), type2(n);
    for (int x = 0; x < n; ++x) {
        type1[x] = q1.right_translation(x).cycle_type();
        type2[x] = q2.right_translation(x).cycle_type();
    }
    {
        auto sorted1 = type1;
        auto sorted2 = type2;
        std::sort(sorted1.begin(), sorted1.end());
        std::sort(sorted2.begin(), sorted2.end());
        if (sorted1 != sorted2) return std::nullopt;
    }

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    map[0] = 0;
    used[0] = true;

    // check every product whose three participants are all mapped
    auto consistent = [&](int just_assigned) {
        for (int x = 0; x < n; ++x) {
            if (map[x] < 0) continue;
            for (int y = 0; y < n; ++y) {
                if (map[y] < 0) continue;
                if (x != just_assigned && y != just_assigned) continue;
                const int xy = q1.op(x, y);
                if (map[xy] < 0) continue;
                if (q2.op(map[x], map[y]) != map[xy]) return false;
            }
        }
        // products that land on the fresh element
        for (int x = 0; x < n; ++x) {
            if (map[x] < 0) continue;
            for (int y = 0; y < n; ++y) {
                if (map[y] < 0) continue;
                if (q1.op(x, y) == just_assigned &&
                    q2.op(map[x], map[y]) != map[just_assigned]) {
                    return false;
                }
            }
        }
        return true;
    };

    auto search = [&](auto&& self, int next) -> bool {
        if (next == n) return true;
        for (int img = 0; img < n; ++img) {
            if (used[img] || type1[next] != type2[img]) continue;
            map[next] = img;
            used[img] = true;
            if (consistent(next) && self(self, next + 1)) return true;
            map[next] = -1;
            used[img] = false;
        }
        return false;
    };

    if (!search(search, 1)) return std::nullopt;
    return map;
}

} // namespace trv
