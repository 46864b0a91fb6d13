#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trv/group.hpp"
#include "trv/perm.hpp"

namespace trv {

/// Cyclic group of order n, written additively.
inline FiniteGroup cyclic_group(int n) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = std::to_string(i);
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    return FiniteGroup::from_table(std::move(table), 0, std::move(labels));
}

/// Dihedral group of order 2n: elements s^f r^k with r^k s = s r^{-k}.
inline FiniteGroup dihedral_group(int n) {
    const int order = 2 * n;
    auto idx = [n](int f, int k) { return f * n + ((k % n) + n) % n; };
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    std::vector<std::string> labels(order);
    for (int f1 = 0; f1 < 2; ++f1) {
        for (int k1 = 0; k1 < n; ++k1) {
            for (int f2 = 0; f2 < 2; ++f2) {
                for (int k2 = 0; k2 < n; ++k2) {
                    const int k = (f2 == 0) ? k1 + k2 : -k1 + k2;
                    table[idx(f1, k1)][idx(f2, k2)] = idx(f1 ^ f2, k);
                }
            }
        }
    }
    for (int f = 0; f < 2; ++f) {
        for (int k = 0; k < n; ++k) {
            std::string s = f ? "s" : "";
            if (k > 0) s += "r" + (k > 1 ? std::to_string(k) : "");
            labels[idx(f, k)] = s.empty() ? "e" : s;
        }
    }
    return FiniteGroup::from_table(std::move(table), 0, std::move(labels));
}

/// Quaternion group {±1, ±i, ±j, ±k}.
inline FiniteGroup quaternion_group() {
    // axis products: value[a][b] = (sign, axis) over axes 1,i,j,k
    static constexpr int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign[4][4] = {{+1, +1, +1, +1},
                                       {+1, -1, +1, -1},
                                       {+1, -1, -1, +1},
                                       {+1, +1, -1, -1}};
    auto idx = [](int a, int s) { return a * 2 + (s < 0 ? 1 : 0); };
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int a = 0; a < 4; ++a) {
        for (int sa : {+1, -1}) {
            for (int b = 0; b < 4; ++b) {
                for (int sb : {+1, -1}) {
                    table[idx(a, sa)][idx(b, sb)] = idx(axis[a][b], sa * sb * sign[a][b]);
                }
            }
        }
    }
    std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return FiniteGroup::from_table(std::move(table), 0, std::move(labels));
}

namespace detail {

inline std::string cycle_label(const Perm& p) {
    std::string out;
    std::vector<bool> seen(p.degree(), false);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i] || p(i) == i) continue;
        out += '(';
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            out += std::to_string(j + 1);  // points printed 1-based
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

inline FiniteGroup group_from_perms(std::vector<Perm> elements) {
    std::sort(elements.begin(), elements.end());
    const int n = static_cast<int>(elements.size());
    auto index_of = [&](const Perm& p) {
        return static_cast<int>(std::lower_bound(elements.begin(), elements.end(), p) -
                                elements.begin());
    };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = cycle_label(elements[i]);
        for (int j = 0; j < n; ++j) {
            table[i][j] = index_of(compose(elements[i], elements[j]));
        }
    }
    const int identity = index_of(Perm(elements[0].degree()));
    return FiniteGroup::from_table(std::move(table), identity, std::move(labels));
}

inline bool is_even(const Perm& p) {
    int transpositions = 0;
    for (int len : p.cycle_type()) transpositions += len - 1;
    return transpositions % 2 == 0;
}

} // namespace detail

/// Symmetric group on m points; the table uses the library's left-to-right
/// composition, so the identity lands at index 0 (lexicographic order).
inline FiniteGroup symmetric_group(int m) {
    std::vector<int> images(m);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Perm> elements;
    do {
        elements.push_back(Perm::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return detail::group_from_perms(std::move(elements));
}

/// Alternating group on m points.
inline FiniteGroup alternating_group(int m) {
    std::vector<int> images(m);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Perm> elements;
    do {
        Perm p = Perm::from_images(images);
        if (detail::is_even(p)) elements.push_back(std::move(p));
    } while (std::next_permutation(images.begin(), images.end()));
    return detail::group_from_perms(std::move(elements));
}

/// Direct product with index (a, b) -> a*|B| + b and labels "a|b".
inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    const int na = A.order(), nb = B.order(), n = na * nb;
    auto idx = [nb](int a, int b) { return a * nb + b; };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a1 = 0; a1 < na; ++a1) {
        for (int b1 = 0; b1 < nb; ++b1) {
            labels[idx(a1, b1)] = A.label(a1) + "|" + B.label(b1);
            for (int a2 = 0; a2 < na; ++a2) {
                for (int b2 = 0; b2 < nb; ++b2) {
                    table[idx(a1, b1)][idx(a2, b2)] = idx(A.mul(a1, a2), B.mul(b1, b2));
                }
            }
        }
    }
    return FiniteGroup::from_table(std::move(table), idx(A.identity(), B.identity()),
                                   std::move(labels));
}

/// Built-in groups up to order 24, keyed by name.
inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "Z2",    "Z3",    "Z4",    "Z5",    "Z6",    "Z7",   "Z8",    "Z9",
        "Z10",   "Z11",   "Z12",   "D3",    "D4",    "D5",   "D6",    "Q8",
        "S3",    "S4",    "A4",    "Z2xZ2", "Z2xZ4", "Z2xZ6", "Z3xZ3", "Z2xS3",
        "Z2xD4", "Z2xQ8", "Z3xS3", "Z2xA4"};
    return names;
}

inline std::optional<FiniteGroup> find_catalog_group(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'Z' && name.find('x') == std::string::npos) {
        const int n = std::atoi(name.c_str() + 1);
        if (n >= 2 && n <= 12) return cyclic_group(n);
        return std::nullopt;
    }
    if (name.size() == 2 && name[0] == 'D') {
        const int n = name[1] - '0';
        if (n >= 3 && n <= 6) return dihedral_group(n);
        return std::nullopt;
    }
    if (name == "Q8") return quaternion_group();
    if (name == "S3") return symmetric_group(3);
    if (name == "S4") return symmetric_group(4);
    if (name == "A4") return alternating_group(4);
    if (name == "Z2xZ2") return direct_product(cyclic_group(2), cyclic_group(2));
    if (name == "Z2xZ4") return direct_product(cyclic_group(2), cyclic_group(4));
    if (name == "Z2xZ6") return direct_product(cyclic_group(2), cyclic_group(6));
    if (name == "Z3xZ3") return direct_product(cyclic_group(3), cyclic_group(3));
    if (name == "Z2xS3") return direct_product(cyclic_group(2), symmetric_group(3));
    if (name == "Z2xD4") return direct_product(cyclic_group(2), dihedral_group(4));
    if (name == "Z2xQ8") return direct_product(cyclic_group(2), quaternion_group());
    if (name == "Z3xS3") return direct_product(cyclic_group(3), symmetric_group(3));
    if (name == "Z2xA4") return direct_product(cyclic_group(2), alternating_group(4));
    return std::nullopt;
}

} // namespace trv
