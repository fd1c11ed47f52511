// Copyright 2026 The fqemag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "fqemag/filtration.h"
#include "fqemag/initial_state.h"
#include "oracles.h"

using namespace fqemag;

namespace {

// Two-level system on a two-point register with eigenvalues 1 and 3 meV.
struct TwoLevel {
    Grid grid = build_grid(1, 1, 2.0);
    Eigen::MatrixXcd vectors;
    DensePropagator u;
    TwoLevel()
        : vectors((Eigen::MatrixXcd(2, 2) << Complex(0.6, 0), Complex(0, 0.8), Complex(0.8, 0), Complex(0, -0.6))
                      .finished()),
          u(Eigen::Vector2d(1.0, 3.0), vectors) {}
    BranchState state(Complex c0, Complex c1) const {
        return oracle::from_vector(grid, c0 * vectors.col(0) + c1 * vectors.col(1));
    }
    // |<phi_k|success branch>| before normalization.
    double success_overlap(const FiltrationReport &r, FiltrationOrder order, int k) const {
        Eigen::VectorXcd b = oracle::to_vector(r.joint.branch(success_branch(order)));
        return std::abs(vectors.col(k).dot(b));
    }
};

HamiltonianSpec n3_spec() {
    return {build_grid(3, 2, 60.0), 0.067, make_gauge(3.0, 30.0), harmonic_potential(4.0)};
}

}  // namespace

TEST(Filtration, OptimalDt) {
    EXPECT_DOUBLE_EQ(optimal_dt(3.0, 1.0), oracle::kPi / 2);
    EXPECT_NEAR(optimal_dt(oracle::kPi + 1.0, 1.0), 1.0, 1e-15);
    EXPECT_THROW(optimal_dt(1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(optimal_dt(0.5, 1.0), std::invalid_argument);
    EXPECT_EQ(success_branch(FiltrationOrder::first), 0);
    EXPECT_EQ(success_branch(FiltrationOrder::second), 2);
}

TEST(Filtration, ExactEigenstateVanishes) {
    TwoLevel t;
    for (auto order : {FiltrationOrder::first, FiltrationOrder::second}) {
        FiltrationReport r = filtrate(t.state(1, 0), t.u, {1.0, 0.7, order});
        EXPECT_LT(r.p_success, 1e-28);
        EXPECT_FALSE(r.success_state.has_value());
    }
}

TEST(Filtration, EqualSuperpositionKeepsExcitedState) {
    TwoLevel t;
    double dt = optimal_dt(3.0, 1.0);
    for (auto order : {FiltrationOrder::first, FiltrationOrder::second}) {
        FiltrationReport r = filtrate(t.state(M_SQRT1_2, M_SQRT1_2), t.u, {1.0, dt, order});
        EXPECT_NEAR(r.p_success, 0.5, 1e-12);
        ASSERT_TRUE(r.success_state.has_value());
        Eigen::VectorXcd s = oracle::to_vector(r.success_state->amplitudes());
        EXPECT_NEAR(std::abs(t.vectors.col(1).dot(s)), 1.0, 1e-12);
    }
}

TEST(Filtration, FirstOrderMatchesDenseOperator) {
    auto spec = n3_spec();
    Eigen::MatrixXcd h = dense_hamiltonian(spec);
    DensePropagator u = DensePropagator::from_hermitian(h);
    BranchState psi = oracle::random_state(spec.grid, 8);
    FiltrationParams p{4.7, 0.37, FiltrationOrder::first};
    FiltrationReport r = filt1(psi, u, p);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(h.rows(), h.cols());
    Eigen::MatrixXcd back = std::polar(1.0, p.lambda * p.dt_f / 2) * oracle::expm_hermitian(h, Complex(0, -p.dt_f));
    Eigen::VectorXcd v = oracle::to_vector(psi.amplitudes());
    Eigen::VectorXcd b0 = 0.5 * (std::polar(1.0, -p.lambda * p.dt_f / 2) * id - back) * v;
    Eigen::VectorXcd b1 = 0.5 * (std::polar(1.0, -p.lambda * p.dt_f / 2) * id + back) * v;
    EXPECT_LT((oracle::to_vector(r.joint.branch(0)) - b0).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((oracle::to_vector(r.joint.branch(1)) - b1).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_NEAR(r.p_success, b0.squaredNorm(), 1e-12);
}

TEST(Filtration, SecondOrderBranches) {
    auto spec = n3_spec();
    Eigen::MatrixXcd h = dense_hamiltonian(spec);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    DensePropagator u(es.eigenvalues(), es.eigenvectors());
    BranchState psi = oracle::random_state(spec.grid, 9);
    FiltrationParams p{6.1, 0.29, FiltrationOrder::second};
    FiltrationReport r = filt2(psi, u, p);
    ASSERT_EQ(r.joint.n_branches(), 4);
    Eigen::ArrayXd phi = (es.eigenvalues().array() - p.lambda) * p.dt_f;
    Eigen::VectorXcd c = es.eigenvectors().adjoint() * oracle::to_vector(psi.amplitudes());
    auto apply = [&](const Eigen::ArrayXcd &f) -> Eigen::VectorXcd {
        return es.eigenvectors() * (f * c.array()).matrix();
    };
    Eigen::ArrayXcd cos2 = (phi / 2).cos().square().cast<Complex>();
    Eigen::ArrayXcd sin2 = (phi / 2).sin().square().cast<Complex>();
    Eigen::ArrayXcd half_sin = Complex(0, 0.5) * phi.sin().cast<Complex>();
    EXPECT_LT((oracle::to_vector(r.joint.branch(0)) - apply(cos2)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((oracle::to_vector(r.joint.branch(1)) - apply(half_sin)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((oracle::to_vector(r.joint.branch(2)) - apply(sin2)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((oracle::to_vector(r.joint.branch(3)) + apply(half_sin)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_NEAR(r.joint.norm_squared(), 1.0, 1e-12);
}

TEST(Filtration, BranchNormsCloseForRandomInputs) {
    auto spec = n3_spec();
    TrotterBackend u(spec, Splitting::TVT, 0.01);
    for (std::uint64_t seed : {1, 2, 3}) {
        BranchState psi = oracle::random_state(spec.grid, seed);
        EXPECT_NEAR(filt1(psi, u, {3.0, 0.4}).joint.norm_squared(), 1.0, 1e-12);
        EXPECT_NEAR(filt2(psi, u, {3.0, 0.4, FiltrationOrder::second}).joint.norm_squared(), 1.0, 1e-12);
    }
}

TEST(Filtration, ExactLambdaAnnihilatesEigenstate) {
    auto spec = n3_spec();
    Eigen::MatrixXcd h = dense_hamiltonian(spec);
    EigenSet eig = eigenset_from_dense(h, spec.grid, 8);
    DensePropagator u = DensePropagator::from_hermitian(h);
    BranchState psi = oracle::random_state(spec.grid, 10);
    for (int k : {0, 3}) {
        for (double dt : {0.1, 0.77}) {
            for (auto order : {FiltrationOrder::first, FiltrationOrder::second}) {
                FiltrationReport r = filtrate(psi, u, {eig.eigenvalues[std::size_t(k)], dt, order}, &eig);
                ASSERT_TRUE(r.success_state.has_value());
                EXPECT_LT(r.weights_after[std::size_t(k)], 1e-10);
                EXPECT_GT(r.weights_before[std::size_t(k)], 1e-4);
            }
        }
    }
}

TEST(Filtration, AmplitudeScalingWithEnergyError) {
    TwoLevel t;
    double dt = optimal_dt(3.0, 1.0);
    for (auto [order, slope] : {std::pair{FiltrationOrder::first, 1.0}, std::pair{FiltrationOrder::second, 2.0}}) {
        std::vector<double> xs, ys;
        for (double de : {1e-4, 3e-4, 1e-3, 3e-3, 1e-2}) {
            FiltrationReport r = filtrate(t.state(M_SQRT1_2, M_SQRT1_2), t.u, {1.0 + de, dt, order});
            xs.push_back(std::log(de));
            ys.push_back(std::log(t.success_overlap(r, order, 0)));
        }
        double fit = (ys.back() - ys.front()) / (xs.back() - xs.front());
        EXPECT_NEAR(fit, slope, 0.05);
    }
}

TEST(ResidualWeightRatio, Values) {
    EXPECT_EQ(residual_weight_ratio(1.0, 1.0, 0.0, 0.1), 0.0);
    double e = 1e-3;
    EXPECT_NEAR(residual_weight_ratio(1.0, 1.0, e, e), std::pow(std::tan(oracle::kPi * e / 2), 2), 1e-15);
    EXPECT_NEAR(residual_weight_ratio(1.0, 1.0, e, e) / std::pow(oracle::kPi * e / 2, 2), 1.0, 1e-5);
    EXPECT_GT(residual_weight_ratio(1.0, 1.0, 1.0, 1.0), 1e20);
    EXPECT_THROW(residual_weight_ratio(1.0, 0.0, 0.1, 0.1), std::invalid_argument);
}

TEST(ResidualWeightRatio, MatchesFirstOrderFiltration) {
    TwoLevel t;
    Complex c0(0.3, 0.4), c1(0, std::sqrt(0.75));
    for (auto [de0, de1] : {std::pair{0.05, 0.0}, std::pair{-0.08, 0.12}, std::pair{0.2, -0.1}}) {
        double l0 = 1.0 + de0, l1 = 3.0 + de1;
        FiltrationReport r = filt1(t.state(c0, c1), t.u, {l0, optimal_dt(l1, l0)});
        double ratio = std::pow(t.success_overlap(r, FiltrationOrder::first, 0), 2) /
                       std::pow(t.success_overlap(r, FiltrationOrder::first, 1), 2);
        EXPECT_NEAR(ratio, residual_weight_ratio(c0, c1, de0 / 2, de1 / 2), 1e-8);
    }
}

TEST(TauBounds, ClosedFormRelations) {
    double gap = 2.5, eps = 1e-3, d0 = 0.02;
    TauBounds a = tau_upper_bounds(0.5, 0.5, d0, 0.01, eps, gap);
    EXPECT_NEAR(a.approx_ub2 - a.approx_ub1, (std::log(4 / (oracle::kPi * oracle::kPi)) + 2 * std::log(1 / d0)) / gap,
                1e-12);
    EXPECT_GT(a.approx_ub2, a.approx_ub1);
    TauBounds b = tau_upper_bounds(0.5, 1.0, d0, 0.01, eps, gap);
    EXPECT_NEAR(b.approx_ub1 - a.approx_ub1, 2 * std::log(2.0) / gap, 1e-12);
    EXPECT_NEAR(b.approx_ub2 - a.approx_ub2, 2 * std::log(2.0) / gap, 1e-12);
    TauBounds c = tau_upper_bounds(0.5, 0.5, 1e-3, 1e-3, eps, gap);
    EXPECT_LT(std::abs(c.exact_ub1 - c.approx_ub1) / std::abs(c.approx_ub1), 0.01);
    EXPECT_THROW(tau_upper_bounds(0.5, 0.5, d0, 0.0, 0.0, gap), std::invalid_argument);
    EXPECT_THROW(tau_upper_bounds(0.5, 0.5, d0, 0.0, eps, 0.0), std::invalid_argument);
    EXPECT_THROW(tau_upper_bounds(0.5, 0.5, 0.0, 0.0, eps, gap), std::domain_error);
}

TEST(Filtration, SecondOrderSuppressesMoreOnDoubleWell) {
    HamiltonianSpec spec{build_grid(4, 2, 120.0), 0.067, make_gauge(3.0, 60.0),
                         double_well_potential(-59.3, 41.51, 20.0, 24.48, 2.94, 24.48)};
    Eigen::MatrixXcd h = dense_hamiltonian(spec);
    EigenSet eig = eigenset_from_dense(h, spec.grid, 10);
    DensePropagator u = DensePropagator::from_hermitian(h);
    InitialStateSpec is;
    is.kind = InitialKind::bonding_px;
    is.width = 11;
    is.offset = 20;
    BranchState psi = init_state(spec.grid, is);
    double e2 = eig.eigenvalues[2], e5 = eig.eigenvalues[5];
    double gap = e5 - e2;
    double dt = optimal_dt(e5, e2);
    for (double frac : {-0.2, -0.1, -0.05, 0.0, 0.05, 0.1, 0.2}) {
        double lambda = e5 + frac * gap;
        FiltrationReport r1 = filt1(psi, u, {lambda, dt}, &eig);
        FiltrationReport r2 = filt2(psi, u, {lambda, dt, FiltrationOrder::second}, &eig);
        EXPECT_LE(r2.p_success, r1.p_success);
        if (frac == 0.0) {
            EXPECT_LT(r1.weights_after[5], 1e-10);
            EXPECT_LT(r2.weights_after[5], 1e-10);
        } else {
            EXPECT_LT(r2.weights_after[5], r1.weights_after[5]);
        }
    }
}
