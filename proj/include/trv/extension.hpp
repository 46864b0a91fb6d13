#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "trv/error.hpp"
#include "trv/group.hpp"
#include "trv/perm.hpp"
#include "trv/quasigroup.hpp"

namespace trv {

inline constexpr std::size_t kDefaultTableCap = 5040;

/// Factor-set permutation of the pair (x, y): z -> ldiv(x o y, (z o x) o y).
/// Measures the failure of right translations to compose; identity for all
/// pairs exactly when the quasigroup is associative. Always fixes e.
inline Perm factor_perm(const RightQuasigroup& q, int x, int y) {
    std::vector<int> images(q.size());
    const int xy = q.op(x, y);
    for (int z = 0; z < q.size(); ++z) {
        images[z] = q.ldiv(xy, q.op(q.op(z, x), y));
    }
    return Perm::from_images(std::move(images));
}

/// Twisting action of x on a permutation h fixing e:
/// y -> ldiv(h(x), h(y o x)). Always fixes e.
inline Perm twist_perm(const RightQuasigroup& q, int x, const Perm& h) {
    if (h.degree() != q.size()) throw ValidationError("twist: degree mismatch");
    if (!h.fixes(q.identity())) throw ValidationError("twist: permutation does not fix identity");
    std::vector<int> images(q.size());
    const int hx = h(x);
    for (int y = 0; y < q.size(); ++y) {
        images[y] = q.ldiv(hx, h(q.op(y, x)));
    }
    return Perm::from_images(std::move(images));
}

/// The group torsion: the permutation group generated by all factor-set
/// permutations. Intrinsic to the table; a subgroup of the stabilizer of e.
inline PermGroup torsion_group(const RightQuasigroup& q,
                               std::size_t cap = kDefaultClosureCap) {
    std::set<Perm> gens;
    for (int x = 0; x < q.size(); ++x) {
        for (int y = 0; y < q.size(); ++y) {
            Perm f = factor_perm(q, x, y);
            if (!f.is_identity()) gens.insert(std::move(f));
        }
    }
    return PermGroup::generated_by(q.size(), {gens.begin(), gens.end()}, cap);
}

/// A pair h*x with h a permutation of S fixing e and x in S.
struct ExtensionElement {
    Perm h;
    int x;

    friend bool operator==(const ExtensionElement&, const ExtensionElement&) = default;
    friend auto operator<=>(const ExtensionElement&, const ExtensionElement&) = default;
};

/// Product (h, x) * (k, y) = (h * twist_x(k) * factor(k(x), y), k(x) o y),
/// with * the left-to-right permutation product.
inline ExtensionElement ext_mul(const RightQuasigroup& q, const ExtensionElement& a,
                                const ExtensionElement& b) {
    const int xk = b.h(a.x);
    Perm h = compose(compose(a.h, twist_perm(q, a.x, b.h)), factor_perm(q, xk, b.x));
    return ExtensionElement{std::move(h), q.op(xk, b.x)};
}

/// Inverse of (h, x): ((factor(x', x))^{-1} * twist_{x'}(h^{-1}), h^{-1}(x'))
/// where x' is the left inverse of x.
inline ExtensionElement ext_inv(const RightQuasigroup& q, const ExtensionElement& a) {
    const int xp = q.left_inverse(a.x);
    const Perm hinv = inverse(a.h);
    Perm h = compose(inverse(factor_perm(q, xp, a.x)), twist_perm(q, xp, hinv));
    return ExtensionElement{std::move(h), hinv(xp)};
}

inline ExtensionElement ext_identity(const RightQuasigroup& q) {
    return ExtensionElement{Perm(q.size()), q.identity()};
}

/// The extension group of a right quasigroup over an enumerated permutation
/// part: all pairs (h, x) with h in hpart, ordered h-major. Built either over
/// the group torsion or over the full stabilizer of e.
class ExtensionGroup {
public:
    static ExtensionGroup over_torsion(const RightQuasigroup& q,
                                       std::size_t closure_cap = kDefaultClosureCap) {
        return ExtensionGroup(q, torsion_group(q, closure_cap));
    }

    static ExtensionGroup over_full_stabilizer(const RightQuasigroup& q,
                                               int degree_cap = kDefaultStabilizerDegreeCap) {
        return ExtensionGroup(q, PermGroup::point_stabilizer(q.size(), q.identity(), degree_cap));
    }

    const RightQuasigroup& base() const { return base_; }
    const PermGroup& hpart() const { return hpart_; }
    std::size_t order() const { return hpart_.order() * base_.size(); }

    bool contains(const ExtensionElement& a) const {
        return a.x >= 0 && a.x < base_.size() && hpart_.contains(a.h);
    }

    ExtensionElement element(std::size_t index) const {
        return ExtensionElement{hpart_.elements()[index / base_.size()],
                                static_cast<int>(index % base_.size())};
    }

    std::size_t index_of(const ExtensionElement& a) const {
        return hpart_.index_of(a.h) * base_.size() + static_cast<std::size_t>(a.x);
    }

    ExtensionElement identity() const { return ext_identity(base_); }

    /// Product with membership validation; the result's permutation part must
    /// land back in hpart or the h-part was not closed (invariant violation).
    ExtensionElement mul(const ExtensionElement& a, const ExtensionElement& b) const {
        if (!contains(a) || !contains(b)) {
            throw ValidationError("extension element not in group");
        }
        ExtensionElement r = ext_mul(base_, a, b);
        if (!hpart_.contains(r.h)) {
            throw ValidationError("extension product left the permutation part");
        }
        return r;
    }

    ExtensionElement inv(const ExtensionElement& a) const {
        if (!contains(a)) throw ValidationError("extension element not in group");
        return ext_inv(base_, a);
    }

    /// Materialized Cayley table with labels "h|x". The twist and factor
    /// permutations are tabulated by h-part index first, which also proves
    /// the h-part is closed under both (index lookups throw otherwise).
    FiniteGroup to_group(std::size_t table_cap = kDefaultTableCap) const {
        if (order() > table_cap) {
            throw CapError("extension group of order " + std::to_string(order()) +
                           " exceeds table cap " + std::to_string(table_cap));
        }
        const std::vector<Perm>& hs = hpart_.elements();
        const int n = base_.size();
        const std::size_t nh = hs.size();
        auto h_index = [this](const Perm& p) {
            if (!hpart_.contains(p)) {
                throw ValidationError("extension product left the permutation part");
            }
            return hpart_.index_of(p);
        };

        std::vector<std::vector<std::size_t>> hmul(nh, std::vector<std::size_t>(nh));
        for (std::size_t i = 0; i < nh; ++i) {
            for (std::size_t j = 0; j < nh; ++j) {
                hmul[i][j] = h_index(compose(hs[i], hs[j]));
            }
        }
        std::vector<std::vector<std::size_t>> twist_idx(n, std::vector<std::size_t>(nh));
        for (int x = 0; x < n; ++x) {
            for (std::size_t k = 0; k < nh; ++k) {
                twist_idx[x][k] = h_index(twist_perm(base_, x, hs[k]));
            }
        }
        std::vector<std::vector<std::size_t>> factor_idx(n, std::vector<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                factor_idx[x][y] = h_index(factor_perm(base_, x, y));
            }
        }

        const std::size_t total = order();
        std::vector<std::vector<int>> table(total, std::vector<int>(total));
        std::vector<std::string> labels(total);
        for (std::size_t i = 0; i < nh; ++i) {
            for (int x = 0; x < n; ++x) {
                labels[i * n + x] = hs[i].to_string() + "|" + base_.label(x);
                for (std::size_t k = 0; k < nh; ++k) {
                    const int xk = hs[k](x);
                    const std::size_t row = i * n + x;
                    for (int y = 0; y < n; ++y) {
                        const std::size_t h = hmul[hmul[i][twist_idx[x][k]]][factor_idx[xk][y]];
                        table[row][k * n + y] = static_cast<int>(h) * n + base_.op(xk, y);
                    }
                }
            }
        }
        // identity is (id, e) = index 0; associativity is checked separately
        return FiniteGroup::from_table(std::move(table), 0, std::move(labels),
                                       FiniteGroup::Check::Basic);
    }

private:
    ExtensionGroup(const RightQuasigroup& q, PermGroup hpart)
        : base_(q), hpart_(std::move(hpart)) {
        for (const Perm& h : hpart_.elements()) {
            if (!h.fixes(base_.identity())) {
                throw ValidationError("permutation part must fix the identity");
            }
        }
    }

    RightQuasigroup base_;
    PermGroup hpart_;
};

/// Re-extracts the base quasigroup from the materialized extension: the pairs
/// (id, x) form a transversal of the h-part copy {(h, e)}, and the induced
/// table must reproduce the input exactly.
inline RightQuasigroup transversal_roundtrip(const ExtensionGroup& E, const FiniteGroup& G) {
    const int n = E.base().size();
    std::vector<int> hcopy;
    for (std::size_t i = 0; i < E.hpart().order(); ++i) {
        hcopy.push_back(static_cast<int>(i * n));  // (h, e)
    }
    const Subgroup H = subgroup_from_members(G, std::move(hcopy));
    std::vector<int> reps(n);
    for (int x = 0; x < n; ++x) reps[x] = x;  // (id, x)
    const Transversal t = transversal_from_reps(G, H, std::move(reps));
    return induced_quasigroup(G, H, t);
}

inline RightQuasigroup transversal_roundtrip(const ExtensionGroup& E,
                                             std::size_t table_cap = kDefaultTableCap) {
    return transversal_roundtrip(E, E.to_group(table_cap));
}

/// The canonical map from G into the universal extension of the induced
/// quasigroup: g = a*x with a in H and x the rep of Hg maps to
/// (coset_action(a), x). A homomorphism that is the identity on the reps.
/// Works for any index; the permutation parts always fix e, so membership in
/// the full stabilizer needs no enumeration.
inline std::vector<ExtensionElement> universal_hom(const FiniteGroup& G, const Subgroup& H,
                                                   const Transversal& t) {
    const auto cosets = right_cosets(G, H);
    const auto coset_of = detail::coset_index_map(G, cosets);
    std::vector<ExtensionElement> hom;
    hom.reserve(G.order());
    for (int g = 0; g < G.order(); ++g) {
        const int x = coset_of[g];
        const int rep = t.reps[x];
        const int a = G.mul(g, G.inv(rep));
        if (!H.contains(a)) {
            throw ValidationError("factorization g = a*x left the subgroup");
        }
        hom.push_back(ExtensionElement{coset_action(G, t, coset_of, a), x});
    }
    return hom;
}

} // namespace trv
