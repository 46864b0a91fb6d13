#include <gtest/gtest.h>

#include "trv/sphere.hpp"

using namespace trv;
using Eigen::VectorXd;

namespace {

UnitVector sample(SphereQuasigroup& sq, Rng& rng) {
    return sample_unit_vector(sq.dim(), rng);
}

} // namespace

TEST(UnitVectorType, ConstructionRules) {
    VectorXd v(3);
    v << 3.0, 4.0, 0.0;
    EXPECT_THROW(UnitVector{v}, ValidationError);
    const UnitVector u = UnitVector::normalized(v);
    EXPECT_NEAR(u.vec().norm(), 1.0, 1e-15);
    EXPECT_THROW(UnitVector::normalized(VectorXd::Zero(3)), ValidationError);
    EXPECT_EQ(UnitVector::basis(3, 1).vec()[1], 1.0);
}

TEST(LineProjection, AxisAndOrthogonalCases) {
    VectorXd a(3), perp(3);
    a << 2.0, 0.0, 0.0;
    perp << 0.0, 1.5, -0.5;
    EXPECT_NEAR((line_projection(a, a) - a).norm(), 0.0, 1e-15);
    EXPECT_NEAR(line_projection(a, perp).norm(), 0.0, 1e-15);
    EXPECT_THROW(line_projection(VectorXd::Zero(3), a), ValidationError);
}

TEST(LineProjection, Idempotent) {
    Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        VectorXd a(4), x(4);
        for (int i = 0; i < 4; ++i) {
            a[i] = rng.gaussian();
            x[i] = rng.gaussian();
        }
        if (a.norm() < 1e-6) continue;
        const VectorXd once = line_projection(a, x);
        EXPECT_NEAR((line_projection(a, once) - once).norm(), 0.0, 1e-12);
    }
}

TEST(AxisReflection, FixedAxisAndInvolution) {
    const UnitVector e0 = UnitVector::basis(3, 0);
    EXPECT_NEAR((axis_reflection(e0.vec(), e0) - e0.vec()).norm(), 0.0, 1e-15);
    VectorXd perp(3);
    perp << 0.0, 2.0, -1.0;
    EXPECT_NEAR((axis_reflection(perp, e0) + perp).norm(), 0.0, 1e-15);
    Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        VectorXd x(3);
        for (int i = 0; i < 3; ++i) x[i] = rng.gaussian();
        EXPECT_NEAR((axis_reflection(axis_reflection(x, e0), e0) - x).norm(), 0.0, 1e-12);
    }
}

TEST(Section, IdentityAtBasePoint) {
    SphereQuasigroup sq(4);
    const Isometry iso = sq.section(sq.base_point());
    EXPECT_NEAR((iso.matrix() - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff(), 0.0,
                1e-12);
}

TEST(Section, ExactNegativeIdentityOnTheBranch) {
    SphereQuasigroup sq(3);
    const Isometry iso = sq.section(-sq.base_point());
    EXPECT_EQ((iso.matrix() + Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Section, SendsBasePointToX) {
    for (int dim : {2, 3, 5}) {
        SphereQuasigroup sq(dim);
        Rng rng(10 + dim);
        for (int trial = 0; trial < 300; ++trial) {
            const UnitVector x = sample(sq, rng);
            const VectorXd image = sq.section(x).apply(sq.base_point().vec());
            EXPECT_NEAR((image - x.vec()).norm(), 0.0, 1e-12);
        }
        const UnitVector antipode = -sq.base_point();
        EXPECT_EQ((sq.section(antipode).apply(sq.base_point().vec()) - antipode.vec()).norm(),
                  0.0);
    }
}

TEST(Section, MatricesAreOrthogonal) {
    SphereQuasigroup sq(5);
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Isometry iso = sq.section(sample(sq, rng));  // from_matrix validates to 1e-10
        const double dev = (iso.matrix().transpose() * iso.matrix() -
                            Eigen::MatrixXd::Identity(5, 5))
                               .cwiseAbs()
                               .maxCoeff();
        EXPECT_LE(dev, 1e-10);
    }
}

TEST(IsometryType, RejectsNonOrthogonal) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
    m(0, 1) = 1e-6;
    EXPECT_THROW(Isometry::from_matrix(m), ValidationError);
}

TEST(Op, IdentityLaws) {
    for (int dim : {1, 2, 3, 5}) {
        SphereQuasigroup sq(dim);
        const UnitVector e0 = sq.base_point();
        Rng rng(20 + dim);
        for (int trial = 0; trial < 200; ++trial) {
            const UnitVector x = sample(sq, rng);
            EXPECT_NEAR((sq.op_raw(x, e0) - x.vec()).norm(), 0.0, 1e-12);
            EXPECT_NEAR((sq.op_raw(e0, x) - x.vec()).norm(), 0.0, 1e-12);
        }
    }
}

TEST(Op, AntipodeBranch) {
    SphereQuasigroup sq(3);
    Rng rng(5);
    const UnitVector antipode = -sq.base_point();
    for (int trial = 0; trial < 20; ++trial) {
        const UnitVector x = sample(sq, rng);
        EXPECT_EQ((sq.op_raw(x, antipode) + x.vec()).norm(), 0.0);
    }
}

TEST(Op, OutputIsUnitBeforeRenormalization) {
    SphereQuasigroup sq(5);
    Rng rng(6);
    for (int trial = 0; trial < 500; ++trial) {
        const UnitVector x = sample(sq, rng);
        const UnitVector y = sample(sq, rng);
        EXPECT_NEAR(sq.op_raw(x, y).norm(), 1.0, 1e-12);
    }
}

TEST(Op, MatchesTheSectionRoute) {
    SphereQuasigroup sq(4);
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const UnitVector x = sample(sq, rng);
        const UnitVector y = sample(sq, rng);
        const VectorXd via_matrix = sq.section(y).apply(x.vec());
        EXPECT_NEAR((via_matrix - sq.op_raw(x, y)).norm(), 0.0, 1e-12);
    }
}

TEST(LeftDiv, DefiningEquationBothWays) {
    for (int dim : {2, 3, 5}) {
        SphereQuasigroup sq(dim);
        Rng rng(30 + dim);
        for (int trial = 0; trial < 300; ++trial) {
            const UnitVector x = sample(sq, rng);
            const UnitVector y = sample(sq, rng);
            const UnitVector z = sample(sq, rng);
            EXPECT_NEAR((sq.op_raw(sq.left_div(x, y), x) - y.vec()).norm(), 0.0, 1e-10);
            EXPECT_NEAR((sq.left_div(x, sq.op(z, x)).vec() - z.vec()).norm(), 0.0, 1e-10);
        }
    }
}

TEST(LeftDiv, SpecialValues) {
    SphereQuasigroup sq(3);
    const UnitVector e0 = sq.base_point();
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const UnitVector x = sample(sq, rng);
        EXPECT_NEAR((sq.left_div(x, x).vec() - e0.vec()).norm(), 0.0, 1e-12);
        EXPECT_NEAR((sq.left_div(e0, x).vec() - x.vec()).norm(), 0.0, 1e-12);
        // dividing at the antipode: z o (-e0) = -z
        EXPECT_EQ((sq.left_div(-e0, x).vec() + x.vec()).norm(), 0.0);
    }
}

TEST(CosetResidual, SmallEverywhere) {
    SphereQuasigroup sq(5);
    Rng rng(9);
    const UnitVector e0 = sq.base_point();
    const UnitVector antipode = -e0;
    for (int trial = 0; trial < 500; ++trial) {
        const UnitVector x = sample(sq, rng);
        const UnitVector y = sample(sq, rng);
        EXPECT_LE(sq.coset_residual(x, y), 1e-10);
        EXPECT_LE(sq.coset_residual(e0, y), 1e-10);
        EXPECT_LE(sq.coset_residual(x, antipode), 1e-10);
    }
}

TEST(Discontinuity, ProbeGapApproachesTwo) {
    const auto rows = discontinuity_scan(3, {1e-2, 1e-3, 1e-4, 1e-5});
    ASSERT_EQ(rows.size(), 4u);
    for (const auto& row : rows) {
        EXPECT_NEAR(row.probe_distance, 2.0, 1e-5) << "eps " << row.eps;
        // while the point itself converges: |x_eps + e0| -> 0
        EXPECT_LE(row.base_point_distance, 2.1 * row.eps);
    }
    // monotone approach within a small per-step slack
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_LE(std::abs(rows[i].probe_distance - 2.0),
                  std::abs(rows[i - 1].probe_distance - 2.0) + 1e-4);
    }
}

TEST(Discontinuity, WideAngleIsRecordedAndDimChecked) {
    const auto rows = discontinuity_scan(3, {1.5707963267948966});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_GT(rows[0].probe_distance, 0.0);
    EXPECT_LE(rows[0].probe_distance, 2.0 + 1e-12);
    EXPECT_THROW(discontinuity_scan(2, {1e-3}), ValidationError);
}

TEST(ContinuityProbe, DeterministicAndBookkeeps) {
    const ContinuityReport a = continuity_probe(3, 500, 1e-6, 0.1, 77);
    const ContinuityReport b = continuity_probe(3, 500, 1e-6, 0.1, 77);
    EXPECT_EQ(a.max_modulus, b.max_modulus);
    EXPECT_EQ(a.used, b.used);
    EXPECT_EQ(a.excluded_near_antipode, b.excluded_near_antipode);
    EXPECT_EQ(a.used + a.excluded_near_antipode, 500);
    EXPECT_GT(a.max_modulus, 0.0);

    const ContinuityReport empty = continuity_probe(3, 0, 1e-6, 0.1, 1);
    EXPECT_EQ(empty.used, 0);
    EXPECT_EQ(empty.max_modulus, 0.0);

    // a huge margin excludes everything
    const ContinuityReport excluded = continuity_probe(3, 50, 1e-6, 3.0, 1);
    EXPECT_EQ(excluded.used, 0);
    EXPECT_EQ(excluded.excluded_near_antipode, 50);

    EXPECT_THROW(continuity_probe(3, 10, 0.0, 0.1, 1), ValidationError);
}

TEST(Nonassociativity, FoundForDimThreeAbsentBelow) {
    const auto witness = nonassociativity_witness(3, 1, 100);
    ASSERT_TRUE(witness.has_value());
    EXPECT_GT(witness->residual, 0.1);

    EXPECT_FALSE(nonassociativity_witness(1, 1).has_value());
    // the circle operation is a rotation group; no witness either
    EXPECT_FALSE(nonassociativity_witness(2, 1, 200).has_value());
}

TEST(Nonassociativity, TriplesThroughTheIdentitySlotVanish) {
    SphereQuasigroup sq(3);
    const UnitVector e0 = sq.base_point();
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const UnitVector x = sample(sq, rng);
        const UnitVector y = sample(sq, rng);
        // (x o y) o e0 = x o (y o e0)
        EXPECT_NEAR((sq.op_raw(sq.op(x, y), e0) - sq.op_raw(x, sq.op(y, e0))).norm(), 0.0,
                    1e-12);
        // (x o e0) o y = x o (e0 o y)
        EXPECT_NEAR((sq.op_raw(sq.op(x, e0), y) - sq.op_raw(x, sq.op(e0, y))).norm(), 0.0,
                    1e-12);
    }
}

TEST(BranchHandling, AnnulusIsFlaggedNotRejected) {
    SphereQuasigroup sq(3);
    VectorXd close(3);
    close << -1.0, 1e-8, 0.0;
    const UnitVector x = UnitVector::normalized(close);
    EXPECT_FALSE(sq.at_branch(x));
    EXPECT_TRUE(sq.ill_conditioned(x));
    EXPECT_NO_THROW(sq.op(x, x));

    VectorXd farther(3);
    farther << -1.0, 1e-3, 0.0;
    EXPECT_FALSE(sq.ill_conditioned(UnitVector::normalized(farther)));
    EXPECT_TRUE(sq.at_branch(-sq.base_point()));
}
