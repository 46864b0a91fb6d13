#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trv/error.hpp"
#include "trv/random.hpp"

namespace trv {

/// An element of R, C, H or O as a coordinate vector of length 1, 2, 4 or 8.
/// The product is built by Cayley-Dickson doubling from the reals with the
/// convention (a, b)(c, d) = (ac - conj(d) b, da + b conj(c)); dimension 2
/// gives the complex numbers, 4 the standard quaternions (ij = k, ji = -k)
/// and 8 the octonions.
class HyperNumber {
public:
    explicit HyperNumber(std::vector<double> coords) : c_(std::move(coords)) {
        const std::size_t d = c_.size();
        if (d != 1 && d != 2 && d != 4 && d != 8) {
            throw ValidationError("hypercomplex dimension must be 1, 2, 4 or 8");
        }
    }

    static HyperNumber one(int dim) {
        std::vector<double> c(dim, 0.0);
        c[0] = 1.0;
        return HyperNumber(std::move(c));
    }

    static HyperNumber basis(int dim, int axis) {
        std::vector<double> c(dim, 0.0);
        c[axis] = 1.0;
        return HyperNumber(std::move(c));
    }

    int dim() const { return static_cast<int>(c_.size()); }
    double operator[](int i) const { return c_[i]; }
    const std::vector<double>& coords() const { return c_; }

    double norm() const {
        double s = 0.0;
        for (double v : c_) s += v * v;
        return std::sqrt(s);
    }

    friend bool operator==(const HyperNumber&, const HyperNumber&) = default;

private:
    std::vector<double> c_;
};

namespace detail {

inline void cd_conj(std::span<double> a) {
    for (std::size_t i = 1; i < a.size(); ++i) a[i] = -a[i];
}

// out = x * y by Cayley-Dickson recursion; all spans have equal power-of-two length
inline void cd_mul(std::span<const double> x, std::span<const double> y, std::span<double> out) {
    const std::size_t n = x.size();
    if (n == 1) {
        out[0] = x[0] * y[0];
        return;
    }
    const std::size_t h = n / 2;
    auto a = x.subspan(0, h), b = x.subspan(h);
    auto c = y.subspan(0, h), d = y.subspan(h);
    std::vector<double> t1(h), t2(h), dbar(d.begin(), d.end()), cbar(c.begin(), c.end());
    cd_conj(dbar);
    cd_conj(cbar);
    // first half: ac - conj(d) b
    cd_mul(a, c, std::span<double>(t1));
    cd_mul(dbar, b, std::span<double>(t2));
    for (std::size_t i = 0; i < h; ++i) out[i] = t1[i] - t2[i];
    // second half: da + b conj(c)
    cd_mul(d, a, std::span<double>(t1));
    cd_mul(b, cbar, std::span<double>(t2));
    for (std::size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

} // namespace detail

inline HyperNumber mul(const HyperNumber& a, const HyperNumber& b) {
    if (a.dim() != b.dim()) throw ValidationError("hypercomplex dimension mismatch");
    std::vector<double> out(a.dim());
    detail::cd_mul(a.coords(), b.coords(), out);
    return HyperNumber(std::move(out));
}

inline HyperNumber conjugate(const HyperNumber& a) {
    std::vector<double> c = a.coords();
    detail::cd_conj(c);
    return HyperNumber(std::move(c));
}

inline HyperNumber inv(const HyperNumber& a) {
    double n2 = 0.0;
    for (double v : a.coords()) n2 += v * v;
    if (n2 <= 1e-24) throw ValidationError("cannot invert a near-zero element");
    std::vector<double> c = a.coords();
    detail::cd_conj(c);
    for (double& v : c) v /= n2;
    return HyperNumber(std::move(c));
}

/// Left division for the multiplicative quasigroup on the unit sphere:
/// the z with z o x = y is y x^{-1} (no associativity needed; the algebra
/// is alternative, so (y x^{-1}) x = y).
inline HyperNumber left_div(const HyperNumber& x, const HyperNumber& y) {
    return mul(y, inv(x));
}

inline HyperNumber sample_unit_hyper(int dim, Rng& rng) {
    if (dim == 1) {
        // exact on S^0
        return HyperNumber({rng.below(2) == 0 ? 1.0 : -1.0});
    }
    std::vector<double> c(dim);
    double n = 0.0;
    while (n <= 1e-12) {
        double s = 0.0;
        for (int i = 0; i < dim; ++i) {
            c[i] = rng.gaussian();
            s += c[i] * c[i];
        }
        n = std::sqrt(s);
    }
    for (double& v : c) v /= n;
    return HyperNumber(std::move(c));
}

struct AssociatorWitness {
    int i, j, k;      // basis indices
    double residual;  // |(ei ej) ek - ei (ej ek)|
};

/// Exhaustive scan of basis triples for an associator witness.
inline std::optional<AssociatorWitness> basis_associator_witness(int dim,
                                                                 double threshold = 0.5) {
    for (int i = 0; i < dim; ++i) {
        const HyperNumber ei = HyperNumber::basis(dim, i);
        for (int j = 0; j < dim; ++j) {
            const HyperNumber ej = HyperNumber::basis(dim, j);
            const HyperNumber eij = mul(ei, ej);
            for (int k = 0; k < dim; ++k) {
                const HyperNumber ek = HyperNumber::basis(dim, k);
                const HyperNumber lhs = mul(eij, ek);
                const HyperNumber rhs = mul(ei, mul(ej, ek));
                double r = 0.0;
                for (int t = 0; t < dim; ++t) {
                    const double d = lhs[t] - rhs[t];
                    r += d * d;
                }
                r = std::sqrt(r);
                if (r > threshold) return AssociatorWitness{i, j, k, r};
            }
        }
    }
    return std::nullopt;
}

struct DivisionLawsReport {
    int dim = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    double identity_residual = 0.0;        // 1 o x = x and x o 1 = x
    double norm_residual = 0.0;            // | |ab| - |a||b| |
    double unit_closure_residual = 0.0;    // | |ab| - 1 | on unit inputs
    double inverse_residual = 0.0;         // a a^{-1} = 1 = a^{-1} a
    double cancellation_residual = 0.0;    // (x o y^{-1}) o y = x
    double antihom_residual = 0.0;         // (y o z)^{-1} = z^{-1} o y^{-1}
    double left_div_residual = 0.0;        // left_div(x,y) o x = y
    double alternative_residual = 0.0;     // a(ab) = (aa)b
    double max_associator = 0.0;           // sampled |(ab)c - a(bc)|
    bool associative = false;              // no basis witness and tiny sampled associator
    std::optional<AssociatorWitness> witness;
};

/// Residuals of every law the unit-sphere quasigroup relies on, sampled with
/// a fixed seed, plus the associativity status of the ambient algebra.
inline DivisionLawsReport division_laws_report(int dim, int samples, std::uint64_t seed) {
    Rng rng(seed);
    DivisionLawsReport rep;
    rep.dim = dim;
    rep.samples = samples;
    rep.seed = seed;
    const HyperNumber unit = HyperNumber::one(dim);
    auto dist = [dim](const HyperNumber& a, const HyperNumber& b) {
        double s = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double d = a[i] - b[i];
            s += d * d;
        }
        return std::sqrt(s);
    };
    for (int s = 0; s < samples; ++s) {
        const HyperNumber x = sample_unit_hyper(dim, rng);
        const HyperNumber y = sample_unit_hyper(dim, rng);
        const HyperNumber z = sample_unit_hyper(dim, rng);

        rep.identity_residual = std::max(rep.identity_residual, dist(mul(unit, x), x));
        rep.identity_residual = std::max(rep.identity_residual, dist(mul(x, unit), x));
        rep.norm_residual =
            std::max(rep.norm_residual, std::abs(mul(x, y).norm() - x.norm() * y.norm()));
        rep.unit_closure_residual =
            std::max(rep.unit_closure_residual, std::abs(mul(x, y).norm() - 1.0));
        rep.inverse_residual = std::max(rep.inverse_residual, dist(mul(x, inv(x)), unit));
        rep.inverse_residual = std::max(rep.inverse_residual, dist(mul(inv(x), x), unit));
        rep.cancellation_residual =
            std::max(rep.cancellation_residual, dist(mul(mul(x, inv(y)), y), x));
        rep.antihom_residual =
            std::max(rep.antihom_residual, dist(inv(mul(y, z)), mul(inv(z), inv(y))));
        rep.left_div_residual =
            std::max(rep.left_div_residual, dist(mul(left_div(x, y), x), y));
        rep.alternative_residual =
            std::max(rep.alternative_residual, dist(mul(x, mul(x, y)), mul(mul(x, x), y)));
        rep.max_associator =
            std::max(rep.max_associator, dist(mul(mul(x, y), z), mul(x, mul(y, z))));
    }
    rep.witness = basis_associator_witness(dim);
    rep.associative = !rep.witness.has_value() && rep.max_associator <= 1e-12;
    return rep;
}

} // namespace trv
