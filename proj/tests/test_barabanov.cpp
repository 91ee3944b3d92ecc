#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <jsrkit/barabanov.hpp>
#include <jsrkit/constructions.hpp>

#include "oracles.hpp"

using namespace jsrkit;

namespace {

RealTuple ex(int id, real l1 = 0, real l2 = 0, real l = 0.5) {
    return example_tuple<real>({.id = id, .lambda1 = l1, .lambda2 = l2, .lambda = l}).tuple;
}

const auto kMesh = circle_mesh(720);

} // namespace

TEST(EvalNorm, Variants) {
    const Vector<real> v{3, -4};
    EXPECT_EQ(eval_norm<real>(max_norm(2), v), 4.0);
    EXPECT_EQ(eval_norm<real>(WeightedMaxNorm{{2, 0.5}}, v), 6.0);
    EXPECT_DOUBLE_EQ(eval_norm<real>(euclidean_norm(), v), 5.0);
    EXPECT_DOUBLE_EQ(eval_norm<real>(EllPNorm{1, {}}, v), 7.0);
    EXPECT_NEAR(eval_norm<real>(EllPNorm{3, {}}, v), std::cbrt(27.0 + 64.0), 1e-14);
    const Vector<complex> c{complex(3, 4), 0};
    EXPECT_DOUBLE_EQ(eval_norm<complex>(max_norm(2), c), 5.0);
}

TEST(EvalNorm, MeshInterpolatesAndIsEven) {
    // mesh of the max norm at four angles: exact at nodes, linear in between
    const MeshNorm m{{0, std::numbers::pi / 4, std::numbers::pi / 2, 3 * std::numbers::pi / 4},
                     {1, std::sqrt(0.5), 1, std::sqrt(0.5)}};
    EXPECT_DOUBLE_EQ(eval_norm<real>(m, Vector<real>{2, 0}), 2.0);
    EXPECT_NEAR(eval_norm<real>(m, Vector<real>{1, 1}), 1.0, 1e-15);
    EXPECT_NEAR(eval_norm<real>(m, Vector<real>{-1, -1}), 1.0, 1e-15);
    EXPECT_NEAR(eval_norm<real>(m, Vector<real>{0, -3}), 3.0, 1e-14);
    const real a = std::numbers::pi / 8;
    EXPECT_NEAR(eval_norm<real>(m, Vector<real>{std::cos(a), std::sin(a)}), (1 + std::sqrt(0.5)) / 2, 1e-15);
    // wrap-around between the last angle and pi
    const real b = 7 * std::numbers::pi / 8;
    EXPECT_NEAR(eval_norm<real>(m, Vector<real>{std::cos(b), std::sin(b)}), (1 + std::sqrt(0.5)) / 2, 1e-15);
}

TEST(Validate, RejectsBadNorms) {
    EXPECT_THROW(validate(WeightedMaxNorm{{1, 0}}), ArgumentError);
    EXPECT_THROW(validate(EllPNorm{0.5, {}}), ArgumentError);
    EXPECT_THROW(validate(MeshNorm{{0, 1}, {1}}), ArgumentError);
    EXPECT_THROW(validate(MeshNorm{{1, 0.5}, {1, 1}}), ArgumentError);
    EXPECT_THROW(validate(MeshNorm{{0, 4}, {1, 1}}), ArgumentError);
    EXPECT_NO_THROW(validate(euclidean_norm()));
}

TEST(Verify, ExampleNormsAreBarabanov) {
    EXPECT_LT(verify_barabanov(ex(1), max_norm(2), 1.0, kMesh).max_residual, 1e-12);
    EXPECT_LT(verify_barabanov(ex(2), WeightedMaxNorm{{1, 0.5}}, 1.0, kMesh).max_residual, 1e-12);
    for (const NormRep& n : {NormRep(EllPNorm{1, {}}), NormRep(euclidean_norm()), NormRep(max_norm(2))}) {
        EXPECT_LT(verify_barabanov(ex(3), n, 1.0, kMesh).max_residual, 1e-12);
    }
    for (real xi : {0.5, 1.0, 2.0}) {
        EXPECT_LT(verify_barabanov(ex(4), WeightedMaxNorm{{1, xi}}, 1.0, kMesh).max_residual, 1e-12);
    }
}

TEST(Verify, DetectsWrongNormAndWrongRadius) {
    // Euclidean is not Barabanov for the alternating pair: e.g. (1,1)/sqrt2 maps to norm 1/sqrt2
    const auto rep = verify_barabanov(ex(1), euclidean_norm(), 1.0, kMesh);
    EXPECT_NEAR(rep.max_residual, 1 - std::sqrt(0.5), 1e-12);
    EXPECT_FALSE(rep.passes(1e-3));
    EXPECT_NEAR(verify_barabanov(ex(1), max_norm(2), 2.0, kMesh).max_residual, 1.0, 1e-12);
}

TEST(Verify, ExtremalIgnoresDeficit) {
    const auto t = ex(1);
    EXPECT_EQ(verify_extremal(t, euclidean_norm(), 1.0, kMesh).max_residual, 0.0);
    EXPECT_EQ(verify_extremal(t, max_norm(2), 2.0, kMesh).max_residual, 0.0);
    EXPECT_NEAR(verify_extremal(t, max_norm(2), 0.5, kMesh).max_residual, 0.5, 1e-12);
}

TEST(Verify, ComplexSamples) {
    const auto t = example_tuple<complex>({.id = 1, .lambda1 = complex(0, 0.5), .lambda2 = 0}).tuple;
    const auto pts = sphere_samples<complex>(2, 500);
    EXPECT_EQ(pts.size(), 500u);
    EXPECT_EQ(verify_extremal(t, max_norm(2), 1.0, pts).max_residual, 0.0);
}

TEST(NormDistance, Cases) {
    EXPECT_NEAR(norm_distance<real>(max_norm(2), WeightedMaxNorm{{2, 2}}, kMesh), std::log(2.0), 1e-15);
    EXPECT_NEAR(norm_distance<real>(max_norm(2), euclidean_norm(), kMesh), std::log(std::sqrt(2.0)), 1e-12);
    EXPECT_EQ(norm_distance<real>(euclidean_norm(), euclidean_norm(), kMesh), 0.0);
    EXPECT_NEAR(norm_distance<real>(WeightedMaxNorm{{1, 1}}, WeightedMaxNorm{{1, 2}}, kMesh), std::log(2.0), 1e-12);
}

TEST(InducedNorm, ClosedForms) {
    const Matrix<real> p{{1, -2}, {3, 0.5}};
    EXPECT_DOUBLE_EQ(induced_norm<real>(max_norm(2), p, {}), 3.5);
    EXPECT_DOUBLE_EQ(induced_norm<real>(EllPNorm{1, {}}, p, {}), 4.0);
    EXPECT_NEAR(induced_norm<real>(euclidean_norm(), p, {}), oracle::op_norm_2x2(p), 1e-13);
}

TEST(InducedNorm, VerticesRowSumsAndSamplesAgree) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<real> u(0.5, 2.0);
    const auto pts = sphere_samples<real>(3, 10000);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = oracle::random_matrix<real>(3, rng);
        const WeightedMaxNorm n{{u(rng), u(rng), u(rng)}};
        real rows = 0;
        for (std::size_t r = 0; r < 3; ++r) {
            real s = 0;
            for (std::size_t k = 0; k < 3; ++k) s += std::abs(p(r, k)) / n.weights[k];
            rows = std::max(rows, n.weights[r] * s);
        }
        const real vertices = induced_norm<real>(n, p, {});
        EXPECT_NEAR(vertices, rows, 1e-12 * rows);
        real sampled = 0;
        for (const auto& v : pts) sampled = std::max(sampled, eval_norm<real>(n, apply<real>(p, v)) / eval_norm<real>(n, v));
        EXPECT_LE(sampled, rows * (1 + 1e-12));
        EXPECT_GT(sampled, 0.8 * rows);
    }
}

TEST(Theta, Examples) {
    EXPECT_NEAR(theta(ex(1), Word(2, {1, 2}), max_norm(2), kMesh), 1.0, 1e-15);
    EXPECT_NEAR(theta(ex(1), Word(2, {1, 1}), max_norm(2), kMesh), 0.0, 1e-15);
    EXPECT_NEAR(theta(ex(2), Word(2, {2}), WeightedMaxNorm{{1, 0.5}}, kMesh), 1.0, 1e-15);
    EXPECT_NEAR(theta(ex(2), Word(2, {2, 2}), WeightedMaxNorm{{1, 0.5}}, kMesh), 0.5, 1e-15);
}

TEST(Approx, AlternatingPairConvergesToMaxNorm) {
    const auto a = approx_barabanov(ex(1), 1.0, euclidean_norm());
    EXPECT_TRUE(a.converged);
    EXPECT_LT(norm_distance<real>(a.norm, max_norm(2), kMesh), 1e-3);
    EXPECT_LT(verify_barabanov(ex(1), a.norm, 1.0, kMesh).max_residual, 1e-9);
}

TEST(Approx, GeneralAlternatingPairConverges) {
    const auto t = ex(1, 0.3, 0.5);
    const auto a = approx_barabanov(t, 1.0, euclidean_norm(), {.tol = 1e-6});
    EXPECT_TRUE(a.converged);
    EXPECT_LT(a.last_step, 1e-6);
    EXPECT_LE(a.iterations, 500u);
    EXPECT_TRUE(verify_barabanov(t, a.norm, 1.0, kMesh).passes(1e-3));
    EXPECT_DOUBLE_EQ(eval_norm<real>(a.norm, Vector<real>{1, 0}), 1.0);
}

TEST(Approx, DifferentStartsKeepDifferentLimitsForProjectionTriple) {
    const auto t = ex(4);
    const auto lo = approx_barabanov(t, 1.0, WeightedMaxNorm{{1, 0.5}});
    const auto hi = approx_barabanov(t, 1.0, WeightedMaxNorm{{1, 2}});
    EXPECT_TRUE(lo.converged);
    EXPECT_TRUE(hi.converged);
    EXPECT_GT(norm_distance<real>(lo.norm, hi.norm, kMesh), 0.1);
}

TEST(Approx, RotationKeepsEuclideanFixed) {
    const real c = std::cos(0.3), s = std::sin(0.3);
    const RealTuple rot({Matrix<real>{{c, -s}, {s, c}}});
    const auto a = approx_barabanov(rot, 1.0, euclidean_norm(), {.mesh = 360});
    EXPECT_TRUE(a.converged);
    EXPECT_EQ(a.iterations, 1u);
    EXPECT_LT(a.last_step, 1e-12);
}

TEST(Approx, RejectsBadInputs) {
    EXPECT_THROW(approx_barabanov(RealTuple({Matrix<real>::identity(3)}), 1.0, euclidean_norm()), DimensionError);
    EXPECT_THROW(approx_barabanov(ex(1), 0.0, euclidean_norm()), ArgumentError);
}
