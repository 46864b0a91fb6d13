#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "trv/error.hpp"
#include "trv/perm.hpp"
#include "trv/quasigroup.hpp"
#include "trv/random.hpp"

namespace trv {

inline constexpr std::uint64_t kDefaultEnumCap = 1000000;

/// A finite group given by its Cayley table. table[a][b] = a*b.
class FiniteGroup {
public:
    enum class Check {
        Full,  // associativity on all triples
        Basic  // identity, latin-square rows/cols, inverses only
    };

    static FiniteGroup from_table(std::vector<std::vector<int>> table, int identity = 0,
                                  std::vector<std::string> labels = {},
                                  Check check = Check::Full) {
        const int n = static_cast<int>(table.size());
        if (n == 0) throw ValidationError("empty group table");
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(table[i].size()) != n) {
                throw ValidationError("group table row " + std::to_string(i) +
                                      " is not length " + std::to_string(n));
            }
            for (int j = 0; j < n; ++j) {
                if (table[i][j] < 0 || table[i][j] >= n) {
                    throw ValidationError("group table entry out of range at [" +
                                          std::to_string(i) + "][" + std::to_string(j) + "]");
                }
            }
        }
        if (identity < 0 || identity >= n) throw ValidationError("identity index out of range");
        for (int x = 0; x < n; ++x) {
            if (table[identity][x] != x || table[x][identity] != x) {
                throw ValidationError("identity law fails at " + std::to_string(x));
            }
        }
        if (check == Check::Full) {
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    const int ab = table[a][b];
                    for (int c = 0; c < n; ++c) {
                        if (table[ab][c] != table[a][table[b][c]]) {
                            throw ValidationError("associativity fails at (" + std::to_string(a) +
                                                  "," + std::to_string(b) + "," +
                                                  std::to_string(c) + ")");
                        }
                    }
                }
            }
        }
        std::vector<int> inv(n, -1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (table[a][b] == identity && table[b][a] == identity) {
                    inv[a] = b;
                    break;
                }
            }
            if (inv[a] < 0) throw ValidationError("no inverse for element " + std::to_string(a));
        }
        if (labels.empty()) {
            for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        }
        if (static_cast<int>(labels.size()) != n) {
            throw ValidationError("label count does not match group order");
        }
        FiniteGroup G;
        G.table_ = std::move(table);
        G.labels_ = std::move(labels);
        G.identity_ = identity;
        G.inv_ = std::move(inv);
        return G;
    }

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }

    std::optional<int> element_by_label(const std::string& name) const {
        for (int i = 0; i < order(); ++i) {
            if (labels_[i] == name) return i;
        }
        return std::nullopt;
    }

private:
    FiniteGroup() = default;
    std::vector<std::vector<int>> table_;
    std::vector<std::string> labels_;
    std::vector<int> inv_;
    int identity_ = 0;
};

/// Sorted member indices of a subgroup; always paired with its parent group.
struct Subgroup {
    std::vector<int> members;

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int g) const {
        return std::binary_search(members.begin(), members.end(), g);
    }
};

inline Subgroup generated_subgroup(const FiniteGroup& G, std::span<const int> gens) {
    std::set<int> closed{G.identity()};
    std::vector<int> frontier{G.identity()};
    for (int g : gens) {
        if (closed.insert(g).second) frontier.push_back(g);
    }
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier) {
            for (int g : gens) {
                for (int p : {G.mul(a, g), G.mul(g, a), G.inv(a)}) {
                    if (closed.insert(p).second) next.push_back(p);
                }
            }
        }
        frontier = std::move(next);
    }
    return Subgroup{std::vector<int>(closed.begin(), closed.end())};
}

/// Validates closure, identity and inverses.
inline Subgroup subgroup_from_members(const FiniteGroup& G, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup H{members};
    if (!H.contains(G.identity())) throw ValidationError("subgroup does not contain identity");
    for (int a : members) {
        if (a < 0 || a >= G.order()) throw ValidationError("subgroup member out of range");
        if (!H.contains(G.inv(a))) {
            throw ValidationError("subgroup not closed under inverse at " + G.label(a));
        }
        for (int b : members) {
            if (!H.contains(G.mul(a, b))) {
                throw ValidationError("subgroup not closed under product at " + G.label(a) +
                                      " * " + G.label(b));
            }
        }
    }
    return H;
}

/// Every subgroup of G, found by closing extensions of known subgroups.
/// Ordered by (order, members).
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
    std::set<std::vector<int>> known;
    known.insert({G.identity()});
    std::vector<std::vector<int>> frontier(known.begin(), known.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& members : frontier) {
            for (int g = 0; g < G.order(); ++g) {
                if (std::binary_search(members.begin(), members.end(), g)) continue;
                std::vector<int> gens = members;
                gens.push_back(g);
                Subgroup bigger = generated_subgroup(G, gens);
                if (known.insert(bigger.members).second) next.push_back(bigger.members);
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    for (const auto& m : known) out.push_back(Subgroup{m});
    std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.order() < b.order();
    });
    return out;
}

/// Right cosets Hg as index sets. The coset of the identity (= H) comes
/// first; the rest are ordered by minimal element.
inline std::vector<std::vector<int>> right_cosets(const FiniteGroup& G, const Subgroup& H) {
    std::vector<int> coset_of(G.order(), -1);
    std::vector<std::vector<int>> cosets;
    auto emit = [&](int g) {
        if (coset_of[g] >= 0) return;
        std::vector<int> members;
        for (int h : H.members) members.push_back(G.mul(h, g));
        std::sort(members.begin(), members.end());
        for (int m : members) coset_of[m] = static_cast<int>(cosets.size());
        cosets.push_back(std::move(members));
    };
    emit(G.identity());
    for (int g = 0; g < G.order(); ++g) emit(g);
    return cosets;
}

/// A right transversal: one representative per right coset, containing the
/// identity, listed in coset order.
struct Transversal {
    std::vector<int> reps;
    int size() const { return static_cast<int>(reps.size()); }
};

namespace detail {
inline std::vector<int> coset_index_map(const FiniteGroup& G,
                                        const std::vector<std::vector<int>>& cosets) {
    std::vector<int> coset_of(G.order(), -1);
    for (std::size_t c = 0; c < cosets.size(); ++c) {
        for (int g : cosets[c]) coset_of[g] = static_cast<int>(c);
    }
    return coset_of;
}
} // namespace detail

/// Checks that reps hit each right coset exactly once and include e.
inline Transversal transversal_from_reps(const FiniteGroup& G, const Subgroup& H,
                                         std::vector<int> reps) {
    const auto cosets = right_cosets(G, H);
    const auto coset_of = detail::coset_index_map(G, cosets);
    if (reps.size() != cosets.size()) {
        throw ValidationError("transversal has " + std::to_string(reps.size()) +
                              " reps for " + std::to_string(cosets.size()) + " cosets");
    }
    std::vector<int> ordered(cosets.size(), -1);
    for (int r : reps) {
        if (r < 0 || r >= G.order()) throw ValidationError("transversal rep out of range");
        const int c = coset_of[r];
        if (ordered[c] >= 0) {
            throw ValidationError("two reps in the same coset: " + G.label(ordered[c]) +
                                  " and " + G.label(r));
        }
        ordered[c] = r;
    }
    if (ordered[0] != G.identity()) {
        throw ValidationError("transversal must contain the identity");
    }
    return Transversal{std::move(ordered)};
}

/// Streams all right transversals containing e in a fixed order: the coset-0
/// rep is pinned to e and the remaining choices run like an odometer with the
/// last coset varying fastest (candidates ascending within each coset).
class TransversalEnumerator {
public:
    TransversalEnumerator(const FiniteGroup& G, const Subgroup& H, bool generating_only = false,
                          std::uint64_t cap = kDefaultEnumCap)
        : G_(G), cosets_(right_cosets(G, H)), generating_only_(generating_only) {
        total_ = 1;
        for (std::size_t c = 1; c < cosets_.size(); ++c) {
            total_ *= cosets_[c].size();
            if (total_ > cap) {
                throw CapError("transversal enumeration of size >= " + std::to_string(total_) +
                               " exceeds cap " + std::to_string(cap));
            }
        }
        choice_.assign(cosets_.size(), 0);
    }

    /// Product of the non-trivial coset sizes.
    std::uint64_t total_count() const { return total_; }

    std::optional<Transversal> next() {
        while (!done_) {
            std::vector<int> reps(cosets_.size());
            reps[0] = G_.identity();
            for (std::size_t c = 1; c < cosets_.size(); ++c) {
                reps[c] = cosets_[c][choice_[c]];
            }
            advance();
            if (generating_only_ && !generates(reps)) continue;
            return Transversal{std::move(reps)};
        }
        return std::nullopt;
    }

private:
    void advance() {
        for (std::size_t c = cosets_.size(); c-- > 1;) {
            if (++choice_[c] < cosets_[c].size()) return;
            choice_[c] = 0;
        }
        done_ = true;
    }

    bool generates(const std::vector<int>& reps) const {
        return generated_subgroup(G_, reps).order() == G_.order();
    }

    const FiniteGroup& G_;
    std::vector<std::vector<int>> cosets_;
    bool generating_only_;
    std::uint64_t total_ = 1;
    std::vector<std::size_t> choice_;
    bool done_ = false;
};

/// One uniformly random transversal containing e.
inline Transversal random_transversal(const FiniteGroup& G, const Subgroup& H, Rng& rng) {
    const auto cosets = right_cosets(G, H);
    std::vector<int> reps(cosets.size());
    reps[0] = G.identity();
    for (std::size_t c = 1; c < cosets.size(); ++c) {
        reps[c] = cosets[c][rng.below(cosets[c].size())];
    }
    return Transversal{std::move(reps)};
}

/// The quasigroup on the reps: x o y is the unique rep in the coset H(xy).
inline RightQuasigroup induced_quasigroup(const FiniteGroup& G, const Subgroup& H,
                                          const Transversal& t) {
    const auto cosets = right_cosets(G, H);
    const auto coset_of = detail::coset_index_map(G, cosets);
    std::vector<int> rep_index(G.order(), -1);
    for (int i = 0; i < t.size(); ++i) rep_index[t.reps[i]] = i;

    const int k = t.size();
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) labels[i] = G.label(t.reps[i]);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const int product = G.mul(t.reps[i], t.reps[j]);
            const int rep = t.reps[coset_of[product]];
            table[i][j] = rep_index[rep];
        }
    }
    return RightQuasigroup::validated(std::move(table), 0, std::move(labels));
}

/// The permutation of rep indices sending x to the rep of H(x*g).
inline Perm coset_action(const FiniteGroup& G, const Transversal& t,
                         const std::vector<int>& coset_of, int g) {
    std::vector<int> images(t.size());
    for (int i = 0; i < t.size(); ++i) {
        images[i] = coset_of[G.mul(t.reps[i], g)];
    }
    return Perm::from_images(std::move(images));
}

/// Convenience overload recomputing the coset map.
inline Perm coset_action(const FiniteGroup& G, const Subgroup& H, const Transversal& t, int g) {
    const auto cosets = right_cosets(G, H);
    return coset_action(G, t, detail::coset_index_map(G, cosets), g);
}

/// The subgroup generated by all x*y*(x o y)^{-1} for reps x, y; contained in H.
inline Subgroup transversal_obstruction(const FiniteGroup& G, const Subgroup& H,
                                        const Transversal& t) {
    const auto cosets = right_cosets(G, H);
    const auto coset_of = detail::coset_index_map(G, cosets);
    std::set<int> gens;
    for (int x : t.reps) {
        for (int y : t.reps) {
            const int xy = G.mul(x, y);
            const int rep = t.reps[coset_of[xy]];
            gens.insert(G.mul(xy, G.inv(rep)));
        }
    }
    std::vector<int> gen_list(gens.begin(), gens.end());
    return generated_subgroup(G, gen_list);
}

/// The coset action restricted to the obstruction subgroup; a permutation
/// group on the reps fixing index 0.
inline PermGroup torsion_via_action(const FiniteGroup& G, const Subgroup& H,
                                    const Transversal& t) {
    const auto cosets = right_cosets(G, H);
    const auto coset_of = detail::coset_index_map(G, cosets);
    const Subgroup obstruction = transversal_obstruction(G, H, t);
    std::set<Perm> gens;
    for (int h : obstruction.members) {
        Perm p = coset_action(G, t, coset_of, h);
        if (!p.is_identity()) gens.insert(std::move(p));
    }
    return PermGroup::generated_by(t.size(), {gens.begin(), gens.end()});
}

/// True when the intersection of all conjugates g^{-1} H g is trivial.
inline bool core_is_trivial(const FiniteGroup& G, const Subgroup& H) {
    std::vector<bool> core(G.order(), false);
    for (int h : H.members) core[h] = true;
    for (int g = 0; g < G.order(); ++g) {
        std::vector<bool> conj(G.order(), false);
        for (int h : H.members) conj[G.mul(G.mul(G.inv(g), h), g)] = true;
        for (int i = 0; i < G.order(); ++i) core[i] = core[i] && conj[i];
    }
    for (int i = 0; i < G.order(); ++i) {
        if (core[i] && i != G.identity()) return false;
    }
    return true;
}

} // namespace trv
