#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "trv/error.hpp"

namespace trv {

/// A permutation of {0, ..., n-1} stored as its image array.
///
/// Composition throughout this library is left-to-right: (p * q)(x) = q(p(x)).
/// Every module builds on compose() below; nothing composes by hand.
class Perm {
public:
    /// Identity of the given degree.
    explicit Perm(int degree) : images_(degree) {
        std::iota(images_.begin(), images_.end(), 0);
    }

    /// Validates that `images` is a bijection of {0,...,n-1}.
    static Perm from_images(std::vector<int> images) {
        const int n = static_cast<int>(images.size());
        std::vector<bool> seen(n, false);
        for (int i = 0; i < n; ++i) {
            const int v = images[i];
            if (v < 0 || v >= n || seen[v]) {
                throw ValidationError("perm image array is not a bijection at index " +
                                      std::to_string(i));
            }
            seen[v] = true;
        }
        Perm p;
        p.images_ = std::move(images);
        return p;
    }

    static Perm transposition(int degree, int a, int b) {
        Perm p(degree);
        std::swap(p.images_[a], p.images_[b]);
        return p;
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i) {
            if (images_[i] != i) return false;
        }
        return true;
    }

    bool fixes(int point) const { return images_[point] == point; }

    /// Cycle lengths in decreasing order; conjugation-invariant.
    std::vector<int> cycle_type() const {
        std::vector<int> type;
        std::vector<bool> seen(images_.size(), false);
        for (int i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = images_[j]) {
                seen[j] = true;
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.rbegin(), type.rend());
        return type;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < degree(); ++i) {
            if (i) s += ' ';
            s += std::to_string(images_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

private:
    Perm() = default;
    std::vector<int> images_;
};

/// Left-to-right product: result(x) = q(p(x)).
inline Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) {
        throw ValidationError("compose: degree mismatch (" + std::to_string(p.degree()) +
                              " vs " + std::to_string(q.degree()) + ")");
    }
    std::vector<int> images(p.degree());
    for (int i = 0; i < p.degree(); ++i) {
        images[i] = q(p(i));
    }
    return Perm::from_images(std::move(images));
}

inline Perm inverse(const Perm& p) {
    std::vector<int> images(p.degree());
    for (int i = 0; i < p.degree(); ++i) {
        images[p(i)] = i;
    }
    return Perm::from_images(std::move(images));
}

inline constexpr std::size_t kDefaultClosureCap = 3628800;  // 10!
inline constexpr int kDefaultStabilizerDegreeCap = 8;       // enumerated order (n-1)!

/// A finitely generated subgroup of Sym({0,...,n-1}) with all elements
/// enumerated, in lexicographic image order.
class PermGroup {
public:
    static PermGroup trivial(int degree) { return generated_by(degree, {}); }

    /// Breadth-first closure of the generating set. Throws CapError when the
    /// element count would exceed `cap`.
    static PermGroup generated_by(int degree, std::vector<Perm> gens,
                                  std::size_t cap = kDefaultClosureCap) {
        for (const Perm& g : gens) {
            if (g.degree() != degree) {
                throw ValidationError("generator degree mismatch");
            }
        }
        std::set<Perm> closed;
        std::vector<Perm> frontier;
        closed.insert(Perm(degree));
        frontier.push_back(Perm(degree));
        for (const Perm& g : gens) {
            if (closed.insert(g).second) frontier.push_back(g);
        }
        while (!frontier.empty()) {
            if (closed.size() > cap) {
                throw CapError("group too large: closure exceeds cap of " + std::to_string(cap));
            }
            std::vector<Perm> next;
            for (const Perm& p : frontier) {
                for (const Perm& g : gens) {
                    for (Perm q : {compose(p, g), compose(g, p)}) {
                        if (closed.insert(q).second) next.push_back(std::move(q));
                    }
                }
            }
            frontier = std::move(next);
        }
        if (closed.size() > cap) {
            throw CapError("group too large: closure exceeds cap of " + std::to_string(cap));
        }
        PermGroup G;
        G.degree_ = degree;
        G.generators_ = std::move(gens);
        G.elements_.assign(closed.begin(), closed.end());
        return G;
    }

    /// All permutations of {0,...,degree-1} that fix `point`; order (degree-1)!.
    static PermGroup point_stabilizer(int degree, int point,
                                      int degree_cap = kDefaultStabilizerDegreeCap) {
        if (degree > degree_cap) {
            throw CapError("point stabilizer of degree " + std::to_string(degree) +
                           " exceeds cap " + std::to_string(degree_cap));
        }
        std::vector<int> moved;
        for (int i = 0; i < degree; ++i) {
            if (i != point) moved.push_back(i);
        }
        std::vector<Perm> elements;
        std::vector<int> arrangement = moved;
        do {
            std::vector<int> images(degree);
            images[point] = point;
            for (std::size_t k = 0; k < moved.size(); ++k) {
                images[moved[k]] = arrangement[k];
            }
            elements.push_back(Perm::from_images(std::move(images)));
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        std::sort(elements.begin(), elements.end());

        std::vector<Perm> gens;
        if (moved.size() >= 2) {
            gens.push_back(Perm::transposition(degree, moved[0], moved[1]));
        }
        if (moved.size() >= 3) {
            std::vector<int> images(degree);
            images[point] = point;
            for (std::size_t k = 0; k < moved.size(); ++k) {
                images[moved[k]] = moved[(k + 1) % moved.size()];
            }
            gens.push_back(Perm::from_images(std::move(images)));
        }
        PermGroup G;
        G.degree_ = degree;
        G.generators_ = std::move(gens);
        G.elements_ = std::move(elements);
        return G;
    }

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    bool is_trivial() const { return elements_.size() == 1; }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }

    bool contains(const Perm& p) const {
        return std::binary_search(elements_.begin(), elements_.end(), p);
    }

    /// Position of `p` in the canonical element order.
    std::size_t index_of(const Perm& p) const {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
        if (it == elements_.end() || *it != p) {
            throw ValidationError("permutation not in group");
        }
        return static_cast<std::size_t>(it - elements_.begin());
    }

private:
    PermGroup() = default;
    int degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
};

/// Exact element-set equality (both sides are canonically sorted).
inline bool equal_groups(const PermGroup& a, const PermGroup& b) {
    return a.degree() == b.degree() && a.elements() == b.elements();
}

} // namespace trv
