#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "trv/error.hpp"
#include "trv/random.hpp"

namespace trv {

inline constexpr double kUnitTol = 1e-9;
inline constexpr double kOrthoTol = 1e-10;
inline constexpr double kBranchTol = 1e-9;          // treat x as the antipode below this
inline constexpr double kIllConditionedRadius = 1e-6;  // flag inputs this close to it

/// A point on the unit sphere. Construction renormalizes to exact floating
/// unit norm and rejects vectors that are not already unit within kUnitTol;
/// use normalized() for arbitrary nonzero input.
class UnitVector {
public:
    explicit UnitVector(Eigen::VectorXd v) {
        const double n = v.norm();
        if (std::abs(n - 1.0) > kUnitTol) {
            throw ValidationError("vector norm deviates from 1 by more than 1e-9");
        }
        v_ = v / n;
    }

    static UnitVector normalized(const Eigen::VectorXd& v) {
        const double n = v.norm();
        if (n <= 1e-12) throw ValidationError("cannot normalize a near-zero vector");
        return UnitVector(Eigen::VectorXd(v / n), unchecked_tag{});
    }

    static UnitVector basis(int dim, int axis) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
        v[axis] = 1.0;
        return UnitVector(std::move(v), unchecked_tag{});
    }

    int dim() const { return static_cast<int>(v_.size()); }
    const Eigen::VectorXd& vec() const { return v_; }
    double operator[](int i) const { return v_[i]; }
    UnitVector operator-() const { return UnitVector(Eigen::VectorXd(-v_), unchecked_tag{}); }

private:
    struct unchecked_tag {};
    UnitVector(Eigen::VectorXd v, unchecked_tag) : v_(std::move(v)) {}
    Eigen::VectorXd v_;
};

/// Orthogonal projection of x onto the line through a.
inline Eigen::VectorXd line_projection(const Eigen::VectorXd& a, const Eigen::VectorXd& x) {
    const double n = a.norm();
    if (n <= 1e-12) throw ValidationError("projection axis is near zero");
    const Eigen::VectorXd u = a / n;
    return x.dot(u) * u;
}

/// Reflection through the line spanned by the unit vector u: 2<z,u>u - z.
inline Eigen::VectorXd line_reflection(const Eigen::VectorXd& u, const Eigen::VectorXd& z) {
    return 2.0 * z.dot(u) * u - z;
}

/// The involution fixing the e0 axis and negating its complement.
inline Eigen::VectorXd axis_reflection(const Eigen::VectorXd& x, const UnitVector& e0) {
    return line_reflection(e0.vec(), x);
}

/// An orthogonal map, stored as a matrix acting on column vectors.
class Isometry {
public:
    static Isometry from_matrix(Eigen::MatrixXd m) {
        const double dev =
            (m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols()))
                .cwiseAbs()
                .maxCoeff();
        if (dev > kOrthoTol) {
            throw ValidationError("matrix is not orthogonal within 1e-10");
        }
        Isometry iso;
        iso.m_ = std::move(m);
        return iso;
    }

    const Eigen::MatrixXd& matrix() const { return m_; }
    Eigen::VectorXd apply(const Eigen::VectorXd& v) const { return m_ * v; }

private:
    Isometry() = default;
    Eigen::MatrixXd m_;
};

/// The reflection-built right quasigroup on the unit sphere of R^dim with
/// base point e0 = (1, 0, ..., 0).
///
/// All operator products follow the library's left-to-right convention, so
/// the section at x applied to z means: first the axis reflection through e0,
/// then the reflection through the line (e0 + x)/|e0 + x|. At the antipode
/// -e0 the section is -I and x o (-e0) = -x; the section map is a bijection
/// onto a transversal of the stabilizer of e0 but is NOT continuous at -e0.
class SphereQuasigroup {
public:
    explicit SphereQuasigroup(int dim) : e0_(base_point_of(dim)) {}

    int dim() const { return e0_.dim(); }
    const UnitVector& base_point() const { return e0_; }

    bool at_branch(const UnitVector& x) const {
        return (e0_.vec() + x.vec()).norm() <= kBranchTol;
    }

    /// Within kIllConditionedRadius of the antipode but not on the branch:
    /// accepted, yet the mirror axis is numerically unstable. Reports flag it.
    bool ill_conditioned(const UnitVector& x) const {
        const double d = (e0_.vec() + x.vec()).norm();
        return d > kBranchTol && d <= kIllConditionedRadius;
    }

    /// The unit axis (e0 + x)/|e0 + x| of the mirror attached to x.
    ///
    /// Evaluated in extended precision with 1 + x0 rewritten as
    /// |x_tail|^2 / (1 - x0) when x0 <= 0: the straight sum cancels near the
    /// antipode and would tilt the axis by (input norm error)/|e0 + x|, which
    /// is what the section property pays for. Not valid on the branch itself.
    Eigen::VectorXd mirror_axis(const UnitVector& x) const {
        const int n = dim();
        std::vector<long double> xs(n);
        long double norm2 = 0.0L;
        for (int i = 0; i < n; ++i) {
            xs[i] = static_cast<long double>(x[i]);
            norm2 += xs[i] * xs[i];
        }
        const long double norm = std::sqrt(norm2);
        for (int i = 0; i < n; ++i) xs[i] /= norm;
        long double tail2 = 0.0L;
        for (int i = 1; i < n; ++i) tail2 += xs[i] * xs[i];
        const long double w0 = xs[0] > 0.0L ? 1.0L + xs[0] : tail2 / (1.0L - xs[0]);
        const long double wnorm = std::sqrt(w0 * w0 + tail2);
        Eigen::VectorXd u(n);
        u[0] = static_cast<double>(w0 / wnorm);
        for (int i = 1; i < n; ++i) u[i] = static_cast<double>(xs[i] / wnorm);
        return u;
    }

    /// x o y before the defensive renormalization.
    Eigen::VectorXd op_raw(const UnitVector& x, const UnitVector& y) const {
        if (at_branch(y)) return -x.vec();
        const Eigen::VectorXd u = mirror_axis(y);
        return line_reflection(u, axis_reflection(x.vec(), e0_));
    }

    UnitVector op(const UnitVector& x, const UnitVector& y) const {
        return UnitVector::normalized(op_raw(x, y));
    }

    /// Left division: the unique z with z o x = y, inverted in closed form
    /// (both reflections are involutions).
    UnitVector left_div(const UnitVector& x, const UnitVector& y) const {
        if (at_branch(x)) return -y;
        const Eigen::VectorXd u = mirror_axis(x);
        return UnitVector::normalized(axis_reflection(line_reflection(u, y.vec()), e0_));
    }

    /// The section isometry at x; sends e0 to x. Exactly -I on the branch.
    Isometry section(const UnitVector& x) const {
        const int n = dim();
        if (at_branch(x)) {
            return Isometry::from_matrix(-Eigen::MatrixXd::Identity(n, n));
        }
        const Eigen::VectorXd u = mirror_axis(x);
        const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
        const Eigen::MatrixXd mirror = 2.0 * u * u.transpose() - I;
        const Eigen::MatrixXd axis = 2.0 * e0_.vec() * e0_.vec().transpose() - I;
        return Isometry::from_matrix(mirror * axis);
    }

    /// |section(y)(section(x)(e0)) - x o y|: both routes must land on the
    /// same point, i.e. the section products stay in the right coset.
    double coset_residual(const UnitVector& x, const UnitVector& y) const {
        const Eigen::VectorXd via_sections = section(y).apply(section(x).apply(e0_.vec()));
        return (via_sections - op_raw(x, y)).norm();
    }

private:
    static UnitVector base_point_of(int dim) {
        if (dim < 1) throw ValidationError("sphere dimension must be >= 1");
        return UnitVector::basis(dim, 0);
    }

    UnitVector e0_;
};

/// Uniform point on the sphere: gaussian components, normalized.
inline UnitVector sample_unit_vector(int dim, Rng& rng) {
    Eigen::VectorXd v(dim);
    double n = 0.0;
    do {
        for (int i = 0; i < dim; ++i) v[i] = rng.gaussian();
        n = v.norm();
    } while (n <= 1e-12);
    return UnitVector::normalized(v);
}

struct DiscontinuityRow {
    double eps;
    double probe_distance;       // |R_x(e2) - R_{-e0}(e2)|, tends to 2
    double base_point_distance;  // |R_x(e0) - R_{-e0}(e0)| = |x + e0|, tends to 0
};

/// Approach the antipode along x = -cos(eps) e0 + sin(eps) e1 and record how
/// far the section stays from its value at -e0 on the probe direction e2.
/// The probe gap tending to 2 while the base-point gap tends to 0 certifies
/// that the section jumps at -e0.
inline std::vector<DiscontinuityRow> discontinuity_scan(int dim,
                                                        const std::vector<double>& eps_values) {
    if (dim < 3) throw ValidationError("discontinuity scan needs dimension >= 3");
    SphereQuasigroup sq(dim);
    const UnitVector e0 = sq.base_point();
    const UnitVector probe = UnitVector::basis(dim, 2);
    const Isometry at_antipode = sq.section(-e0);
    std::vector<DiscontinuityRow> rows;
    for (double eps : eps_values) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
        x[0] = -std::cos(eps);
        x[1] = std::sin(eps);
        const UnitVector ux = UnitVector::normalized(x);
        const Isometry sec = sq.section(ux);
        rows.push_back(DiscontinuityRow{
            eps,
            (sec.apply(probe.vec()) - at_antipode.apply(probe.vec())).norm(),
            (sec.apply(e0.vec()) - at_antipode.apply(e0.vec())).norm(),
        });
    }
    return rows;
}

struct ContinuityReport {
    int dim = 0;
    int samples = 0;
    int used = 0;
    int excluded_near_antipode = 0;
    double delta = 0.0;
    double margin = 0.0;
    double max_modulus = 0.0;              // on pairs with y away from -e0
    double max_modulus_near_antipode = 0.0;  // flagged separately; may be huge
};

/// Empirical local modulus of the operation under delta-sized perturbations.
/// Pairs whose right operand is within `margin` of -e0 are tracked separately:
/// the antipode is an isolated point of the section topology and the modulus
/// is unbounded across it.
inline ContinuityReport continuity_probe(int dim, int samples, double delta, double margin,
                                         std::uint64_t seed) {
    if (delta <= 0.0) throw ValidationError("perturbation must be positive");
    SphereQuasigroup sq(dim);
    const Eigen::VectorXd antipode = -sq.base_point().vec();
    Rng rng(seed);
    ContinuityReport rep;
    rep.dim = dim;
    rep.samples = samples;
    rep.delta = delta;
    rep.margin = margin;
    for (int s = 0; s < samples; ++s) {
        const UnitVector x = sample_unit_vector(dim, rng);
        const UnitVector y = sample_unit_vector(dim, rng);
        const UnitVector dx = sample_unit_vector(dim, rng);
        const UnitVector dy = sample_unit_vector(dim, rng);
        const UnitVector x2 = UnitVector::normalized(x.vec() + delta * dx.vec());
        const UnitVector y2 = UnitVector::normalized(y.vec() + delta * dy.vec());
        const double din = std::hypot((x2.vec() - x.vec()).norm(), (y2.vec() - y.vec()).norm());
        if (din <= 0.0) continue;
        const double dout = (sq.op_raw(x2, y2) - sq.op_raw(x, y)).norm();
        const double ratio = dout / din;
        const bool near = (y.vec() - antipode).norm() < margin || (y2.vec() - antipode).norm() < margin;
        if (near) {
            ++rep.excluded_near_antipode;
            rep.max_modulus_near_antipode = std::max(rep.max_modulus_near_antipode, ratio);
        } else {
            ++rep.used;
            rep.max_modulus = std::max(rep.max_modulus, ratio);
        }
    }
    return rep;
}

struct NonassociativityWitness {
    UnitVector x, y, z;
    double residual;
};

/// Random search for |(x o y) o z - x o (y o z)| > 0.1. Exhaustive over the
/// two-point sphere when dim == 1 (where the operation is the sign group and
/// no witness exists).
inline std::optional<NonassociativityWitness> nonassociativity_witness(int dim,
                                                                       std::uint64_t seed,
                                                                       int budget = 100) {
    SphereQuasigroup sq(dim);
    const double threshold = 0.1;
    auto defect = [&](const UnitVector& x, const UnitVector& y, const UnitVector& z) {
        return (sq.op_raw(sq.op(x, y), z) - sq.op_raw(x, sq.op(y, z))).norm();
    };
    if (dim == 1) {
        const UnitVector plus = sq.base_point();
        const UnitVector minus = -plus;
        for (const UnitVector* x : {&plus, &minus}) {
            for (const UnitVector* y : {&plus, &minus}) {
                for (const UnitVector* z : {&plus, &minus}) {
                    const double r = defect(*x, *y, *z);
                    if (r > threshold) return NonassociativityWitness{*x, *y, *z, r};
                }
            }
        }
        return std::nullopt;
    }
    Rng rng(seed);
    for (int i = 0; i < budget; ++i) {
        const UnitVector x = sample_unit_vector(dim, rng);
        const UnitVector y = sample_unit_vector(dim, rng);
        const UnitVector z = sample_unit_vector(dim, rng);
        const double r = defect(x, y, z);
        if (r > threshold) return NonassociativityWitness{x, y, z, r};
    }
    return std::nullopt;
}

} // namespace trv
