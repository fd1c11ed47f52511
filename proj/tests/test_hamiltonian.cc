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

#include <chrono>
#include <cmath>

#include "fqemag/eigensolver.h"
#include "fqemag/hamiltonian.h"
#include "fqemag/spectral.h"
#include "oracles.h"

using namespace fqemag;

namespace {

HamiltonianSpec harmonic(int n, double field, double xg_frac = 0.5, double box = 120.0) {
    return {build_grid(n, 2, box), 0.067, make_gauge(field, xg_frac * box), harmonic_potential(4.0)};
}

HamiltonianSpec double_well(int n, double a = 2.0) {
    return {build_grid(n, 2, 120.0), 0.067, make_gauge(3.0, 60.0),
            double_well_potential(-59.3, 41.51, a, 24.48, 2.94, 24.48)};
}

// Direct Pi summation: H(k,k') = kc / M sum_nu sum_s Pi(k,s) Pi*(k',s) + V delta.
Eigen::MatrixXcd brute_force_pi(const HamiltonianSpec &spec) {
    const Grid &g = spec.grid;
    Eigen::Index m = static_cast<Eigen::Index>(g.size());
    std::vector<double> v = evaluate_potential(spec);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(m, m);
    for (int nu = 0; nu < g.dims; ++nu) {
        Eigen::MatrixXcd pi(m, m);
        for (Eigen::Index k = 0; k < m; ++k) {
            for (Eigen::Index s = 0; s < m; ++s) {
                double dot = 0;
                for (int a = 0; a < g.dims; ++a)
                    dot += g.momentum(g.axis_index(std::size_t(s), a)) * g.coordinate(g.axis_index(std::size_t(k), a));
                double p = g.momentum(g.axis_index(std::size_t(s), nu));
                double av = 0;
                if (nu == 1) {
                    av = spec.gauge.mu * (g.coordinate(g.axis_index(std::size_t(k), 0)) - spec.gauge.gauge_center);
                }
                pi(k, s) = (p - av) * std::polar(1.0, dot);
            }
        }
        h += pi * pi.adjoint();
    }
    h *= spec.kinetic_coeff() / static_cast<double>(m);
    for (Eigen::Index k = 0; k < m; ++k) h(k, k) += v[std::size_t(k)];
    return h;
}

}  // namespace

TEST(Gauge, MuSignAndZero) {
    GaugeSpec g = make_gauge(5.0, 60.0);
    EXPECT_NEAR(g.mu, -kUnits.tesla_to_inv_len2 * 5.0, 1e-18);
    EXPECT_EQ(make_gauge(0.0, 1.0).mu, 0.0);
}

TEST(Potential, HarmonicCenterIsZero) {
    auto spec = harmonic(6, 5.0);
    auto v = evaluate_potential(spec);
    EXPECT_DOUBLE_EQ(v[spec.grid.flatten({32, 32, 0})], 0.0);
    // m omega0^2 R^2 / 2 = omega0^2 R^2 / (4 kc)
    double r = 10 * spec.grid.dx;
    EXPECT_NEAR(v[spec.grid.flatten({42, 32, 0})], 16.0 * r * r / (4.0 * spec.kinetic_coeff()), 1e-12);
}

TEST(Potential, DoubleWellCenterValue) {
    auto spec = double_well(6);
    auto v = evaluate_potential(spec);
    double expected = 2 * -59.3 * std::exp(-4.0 / (24.48 * 24.48)) + 41.51;
    EXPECT_NEAR(v[spec.grid.flatten({32, 32, 0})], expected, 1e-12);
    EXPECT_NEAR(expected, -76.30, 0.01);
}

TEST(Potential, ZeroAndTable) {
    HamiltonianSpec spec{build_grid(3, 2, 8.0), 1.0, {}, {}};
    for (double x : evaluate_potential(spec)) EXPECT_EQ(x, 0.0);
    spec.potential.kind = PotentialKind::table;
    spec.potential.table = std::vector<double>(10, 1.0);
    EXPECT_THROW(evaluate_potential(spec), std::invalid_argument);
    spec.potential.table = std::vector<double>(64, 1.5);
    EXPECT_EQ(evaluate_potential(spec)[17], 1.5);
}

TEST(Potential, DoubleWellRequiresTwoDimensions) {
    HamiltonianSpec spec = double_well(3);
    spec.grid = build_grid(3, 1, 120.0);
    EXPECT_THROW(validate(spec), std::invalid_argument);
    spec = double_well(3);
    spec.mass_ratio = 0;
    EXPECT_THROW(validate(spec), std::invalid_argument);
}

TEST(ApplyHamiltonian, MomentumEigenstateOfFreeParticle) {
    HamiltonianSpec spec{build_grid(4, 1, 10.0), 0.5, {}, {}};
    const Grid &g = spec.grid;
    for (int s = 0; s < 16; ++s) {
        BranchState p(g);
        for (int k = 0; k < 16; ++k) p.amplitudes()[k] = std::polar(0.25, g.momentum(s) * g.coordinate(k));
        BranchState hp = apply_hamiltonian(p, spec);
        double e = spec.kinetic_coeff() * g.momentum(s) * g.momentum(s);
        for (int k = 0; k < 16; ++k) EXPECT_NEAR(std::abs(hp.amplitudes()[k] - e * p.amplitudes()[k]), 0.0, 1e-10);
    }
}

TEST(ApplyHamiltonian, Hermitian) {
    auto spec = double_well(3);
    BranchState a = oracle::random_state(spec.grid, 1);
    BranchState b = oracle::random_state(spec.grid, 2);
    Complex ab = inner_product(a.amplitudes(), apply_hamiltonian(b, spec).amplitudes());
    Complex ba = inner_product(b.amplitudes(), apply_hamiltonian(a, spec).amplitudes());
    EXPECT_NEAR(std::abs(ab - std::conj(ba)), 0.0, 1e-10);
}

TEST(ApplyHamiltonian, RejectsMomentumTaggedOrMultiBranch) {
    auto spec = harmonic(3, 1.0);
    BranchState s = oracle::random_state(spec.grid, 1);
    cqft_axis(s, {0, 0}, false);
    EXPECT_THROW(apply_hamiltonian(s, spec), std::logic_error);
    BranchState two(spec.grid, 2);
    EXPECT_THROW(apply_hamiltonian(two, spec), std::invalid_argument);
}

TEST(DenseHamiltonian, MatchesMatrixFreeOnRandomVectors) {
    for (int dims : {1, 2}) {
        for (double field : {0.0, 3.0}) {
            for (int n : {2, 3}) {
                HamiltonianSpec spec{build_grid(n, dims, 50.0), 0.067, make_gauge(dims == 2 ? field : 0.0, 17.0),
                                     harmonic_potential(4.0)};
                Eigen::MatrixXcd h = dense_hamiltonian(spec);
                EXPECT_LT((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
                for (int trial = 0; trial < 20; ++trial) {
                    BranchState r = oracle::random_state(spec.grid, 100 + trial);
                    Eigen::VectorXcd ref = h * oracle::to_vector(r.amplitudes());
                    BranchState hr = apply_hamiltonian(r, spec);
                    double err = (oracle::to_vector(hr.amplitudes()) - ref).cwiseAbs().maxCoeff();
                    EXPECT_LT(err, 1e-10) << "dims=" << dims << " B=" << field << " n=" << n;
                }
            }
        }
    }
}

TEST(DenseHamiltonian, FreeParticleIsFourierDiagonal) {
    HamiltonianSpec spec{build_grid(2, 1, 3.0), 1.0, {}, {}};
    Eigen::MatrixXcd f = oracle::centered_dft_1d(4);
    Eigen::VectorXd e(4);
    for (int s = 0; s < 4; ++s) e[s] = spec.kinetic_coeff() * std::pow(spec.grid.momentum(s), 2);
    Eigen::MatrixXcd ref = f.adjoint() * e.cast<Complex>().asDiagonal() * f;
    EXPECT_LT((dense_hamiltonian(spec) - ref).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(DenseHamiltonian, DoubleWellHermitianAndBruteForce) {
    auto spec = double_well(3);
    Eigen::MatrixXcd h = dense_hamiltonian(spec);
    EXPECT_LT((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    auto small = double_well(2);
    Eigen::MatrixXcd hs = dense_hamiltonian(small);
    Eigen::MatrixXcd ref = brute_force_pi(small);
    EXPECT_LT((hs - ref).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_NEAR(std::abs(hs.trace() - ref.trace()), 0.0, 1e-9);
}

TEST(DenseHamiltonian, SizeGuard) {
    HamiltonianSpec spec{build_grid(7, 2, 10.0), 1.0, {}, {}};
    EXPECT_THROW(dense_hamiltonian(spec), std::invalid_argument);
}

TEST(FockDarwin, ZeroFieldLadder) {
    auto e = fock_darwin_levels(4.0, 0.0, 0.067, 10);
    std::vector<double> ref = {4, 8, 8, 12, 12, 12, 16, 16, 16, 16};
    for (int i = 0; i < 10; ++i) EXPECT_NEAR(e[i], ref[i], 1e-12);
}

TEST(FockDarwin, FiveTeslaLowestLevels) {
    auto e = fock_darwin_levels(4.0, 5.0, 0.067, 3);
    EXPECT_NEAR(e[0], 5.886, 2e-3);
    EXPECT_NEAR(e[1], 7.454, 2e-3);
    // Third level is 2 Omega - 0 = Omega + (Omega - omega_c/2) + omega_c/2 ... (n1=2, l=2) = 3 Omega - omega_c.
    auto ref = oracle::fock_darwin(4.0, 5.0, 0.067, 3);
    EXPECT_NEAR(e[2], ref[2], 1e-12);
    EXPECT_NEAR(e[2], 9.022, 2e-3);
}

TEST(FockDarwin, LandauLimit) {
    double wc = cyclotron_energy(2.0, 0.067);
    auto e = fock_darwin_levels(0.0, 2.0, 0.067, 6);
    for (double x : e) {
        double k = x / wc - 0.5;
        EXPECT_NEAR(k, std::round(k), 1e-9);
    }
    EXPECT_NEAR(e[0], 0.5 * wc, 1e-12);
}

TEST(FockDarwin, MatchesIndependentEnumeration) {
    for (double b : {0.0, 1.0, 2.0, 5.0, 9.0}) {
        auto e = fock_darwin_levels(4.0, b, 0.067, 20);
        auto ref = oracle::fock_darwin(4.0, b, 0.067, 20);
        for (int i = 0; i < 20; ++i) EXPECT_NEAR(e[i], ref[i], 1e-12);
    }
}

TEST(Eigensolver, DenseAndLanczosAgree) {
    auto spec = harmonic(5, 2.0);
    EigensolverOptions dense;
    dense.dense_limit = 4096;
    EigensolverOptions lanczos;
    lanczos.dense_limit = 0;
    EigenSet a = lowest_eigenpairs(spec, 8, dense);
    EigenSet b = lowest_eigenpairs(spec, 8, lanczos);
    for (int i = 0; i < 8; ++i) {
        EXPECT_NEAR(a.eigenvalues[i], b.eigenvalues[i], 1e-8);
        EXPECT_LE(b.residuals[i], 1e-8 * std::max(1.0, std::abs(b.eigenvalues[i])));
    }
    Eigen::MatrixXcd gram = b.vectors.adjoint() * b.vectors;
    EXPECT_LT((gram - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Eigensolver, ZeroFieldDegeneracies) {
    auto spec = harmonic(5, 0.0);
    EigensolverOptions opt;
    opt.dense_limit = 0;
    EigenSet e = lowest_eigenpairs(spec, 6, opt);
    EXPECT_NEAR(e.eigenvalues[0], 4.0, 0.04);
    EXPECT_NEAR(e.eigenvalues[1], 8.0, 0.08);
    EXPECT_NEAR(e.eigenvalues[1], e.eigenvalues[2], 1e-6);
    ASSERT_GE(e.degeneracy_groups.size(), 3u);
    EXPECT_EQ(e.degeneracy_groups[0], std::vector<int>{0});
    EXPECT_EQ(e.degeneracy_groups[1], (std::vector<int>{1, 2}));
}

TEST(Eigensolver, FiveTeslaGroundState) {
    auto spec = harmonic(5, 5.0);
    EigenSet e = lowest_eigenpairs(spec, 1);
    double omega = std::sqrt(16.0 + std::pow(cyclotron_energy(5.0, 0.067), 2) / 4.0);
    EXPECT_NEAR(e.eigenvalues[0], omega, 0.01 * omega);
    EXPECT_NEAR(omega, 5.89, 0.01);
}

TEST(Eigensolver, CountValidation) {
    auto spec = harmonic(3, 0.0);
    EXPECT_THROW(lowest_eigenpairs(spec, 0), std::invalid_argument);
    EXPECT_THROW(lowest_eigenpairs(spec, 33), std::invalid_argument);
}

TEST(Eigensolver, IterationCapReportsFailure) {
    auto spec = harmonic(5, 5.0);
    EigensolverOptions opt;
    opt.dense_limit = 0;
    opt.max_iterations = 12;
    opt.max_restarts = 1;
    EXPECT_THROW(lowest_eigenpairs(spec, 6, opt), EigensolverError);
}

TEST(Eigensolver, GroupDegenerate) {
    auto g = group_degenerate({1.0, 1.0 + 1e-8, 2.0, 3.0, 3.0 + 5e-7, 3.0 + 9e-7});
    ASSERT_EQ(g.size(), 3u);
    EXPECT_EQ(g[0], (std::vector<int>{0, 1}));
    EXPECT_EQ(g[1], std::vector<int>{2});
    EXPECT_EQ(g[2], (std::vector<int>{3, 4, 5}));
}

TEST(Spectrum, ConvergesWithGridRefinement) {
    double prev = 1e9;
    for (int n : {4, 5, 6}) {
        auto spec = harmonic(n, 5.0);
        EigenSet e = lowest_eigenpairs(spec, 6);
        auto ref = fock_darwin_levels(4.0, 5.0, 0.067, 6);
        double dev = 0;
        for (int i = 0; i < 6; ++i) dev = std::max(dev, std::abs(e.eigenvalues[i] / ref[i] - 1.0));
        EXPECT_LT(dev, prev) << "n=" << n;
        prev = dev;
    }
}

TEST(Spectrum, GaugeCenterInvariance) {
    // With x_g = 0 the Landau-gauge phase is not commensurate with the cell,
    // so the spectra agree only to the discretization level of this grid.
    EigenSet centered = lowest_eigenpairs(harmonic(5, 5.0, 0.5), 6);
    EigenSet origin = lowest_eigenpairs(harmonic(5, 5.0, 0.0), 6);
    auto ref = fock_darwin_levels(4.0, 5.0, 0.067, 6);
    double bound = 0;
    for (int i = 0; i < 6; ++i) bound = std::max(bound, std::abs(centered.eigenvalues[i] - ref[i]));
    for (int i = 0; i < 6; ++i) EXPECT_LT(std::abs(centered.eigenvalues[i] - origin.eigenvalues[i]), 3 * bound + 0.05);
}
