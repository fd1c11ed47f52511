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

#include "fqemag/eigensolver.h"
#include "fqemag/initial_state.h"
#include "fqemag/observables.h"
#include "oracles.h"

using namespace fqemag;

namespace {

HamiltonianSpec fd_spec(double gauge_center = 60.0) {
    return {build_grid(5, 2, 120.0), 0.067, make_gauge(5.0, gauge_center), harmonic_potential(4.0)};
}

const EigenSet &fd_ground() {
    static const EigenSet eig = lowest_eigenpairs(fd_spec(), 1);
    return eig;
}

double max_abs(const std::vector<double> &v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

BranchState plane_wave(const Grid &g, std::size_t sx, std::size_t sy) {
    BranchState s(g);
    double amp = 1.0 / std::sqrt(double(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto k = g.unflatten(i);
        s.amplitudes()[i] = std::polar(amp, g.momentum(sx) * g.coordinate(k[0]) + g.momentum(sy) * g.coordinate(k[1]));
    }
    return s;
}

}  // namespace

TEST(Density, PositionBasisAndNormalization) {
    Grid g = build_grid(3, 2, 12.0);
    InitialStateSpec is;
    is.kind = InitialKind::position_basis;
    is.index = {2, 5, 0};
    ScalarField rho = density(init_state(g, is), 1);
    std::size_t k0 = g.flatten({2, 5, 0});
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_DOUBLE_EQ(rho.values[i], i == k0 ? 1.0 / g.cell_volume : 0.0);
    ScalarField r2 = density(oracle::random_state(g, 3), 1);
    double total = 0;
    for (double v : r2.values) total += v * g.cell_volume;
    EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(Density, GroundStateMatchesOracle) {
    const EigenSet &eig = fd_ground();
    ScalarField rho = density(eig.state(0), 1);
    const Grid &g = eig.grid;
    for (std::size_t i = 0; i < g.size(); ++i)
        EXPECT_NEAR(rho.values[i], std::norm(eig.vectors(Eigen::Index(i), 0)) / g.cell_volume, 1e-10);
    std::size_t c = g.flatten({16, 16, 0});
    EXPECT_GT(rho.values[c], rho.values[g.flatten({20, 16, 0})]);
    EXPECT_GT(rho.values[g.flatten({20, 16, 0})], rho.values[g.flatten({24, 16, 0})]);
}

TEST(Density, SampledModeIsSeeded) {
    Grid g = build_grid(3, 2, 12.0);
    BranchState s = oracle::random_state(g, 4);
    MeasurementModel m{MeasurementMode::sampled, 10000, 7};
    EXPECT_EQ(density(s, 1, m).values, density(s, 1, m).values);
    double total = 0;
    for (double v : density(s, 1, m).values) total += v * g.cell_volume;
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(OneElectronDM, SingleParticle) {
    Grid g = build_grid(3, 2, 12.0);
    BranchState s = oracle::random_state(g, 5);
    OneElectronDM dm = one_electron_dm(s, 1);
    EXPECT_LT((dm.gamma - dm.gamma.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(dm.gamma.trace().real() * g.cell_volume, 1.0, 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dm.gamma);
    EXPECT_NEAR(es.eigenvalues().tail(1)[0] * g.cell_volume, 1.0, 1e-12);
    EXPECT_LT(es.eigenvalues().head(Eigen::Index(g.size()) - 1).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(OneElectronDM, TwoParticleSymmetrizedProduct) {
    Grid g = build_grid(2, 1, 4.0);
    BranchState u = oracle::random_state(g, 6), v = oracle::random_state(g, 7);
    BranchState s(g, 1, 2);
    for (std::size_t k0 = 0; k0 < 4; ++k0)
        for (std::size_t k1 = 0; k1 < 4; ++k1)
            s.amplitudes()[k0 + 4 * k1] = u.amplitudes()[k0] * v.amplitudes()[k1] + u.amplitudes()[k1] * v.amplitudes()[k0];
    double n = std::sqrt(s.norm_squared());
    for (auto &a : s.amplitudes()) a /= n;
    OneElectronDM dm = one_electron_dm(s, 2);
    for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t kp = 0; kp < 4; ++kp) {
            Complex sum = 0;
            for (std::size_t r = 0; r < 4; ++r) sum += s.amplitudes()[k + 4 * r] * std::conj(s.amplitudes()[kp + 4 * r]);
            EXPECT_NEAR(std::abs(dm.gamma(Eigen::Index(k), Eigen::Index(kp)) - 2.0 / g.cell_volume * sum), 0.0, 1e-12);
        }
    }
    EXPECT_NEAR(dm.gamma.trace().real() * g.cell_volume, 2.0, 1e-12);
    EXPECT_THROW(one_electron_dm(BranchState(build_grid(4, 2, 4.0), 1, 2), 2), std::invalid_argument);
    EXPECT_THROW(one_electron_dm(s, 1), std::invalid_argument);
}

TEST(ParamagneticCurrent, RealStateCarriesNone) {
    const Grid g = build_grid(5, 2, 120.0);
    InitialStateSpec is;
    is.width = 20;
    BranchState s = init_state(g, is);
    for (int axis : {0, 1}) {
        EXPECT_LT(max_abs(paramagnetic_current_measured(s, axis, 1, {}, 1, 0.067).values), 1e-10);
        EXPECT_LT(max_abs(paramagnetic_current_oracle(s, 0.067).components[std::size_t(axis)]), 1e-10);
    }
}

TEST(ParamagneticCurrent, PlaneWave) {
    Grid g = build_grid(5, 2, 120.0);
    std::size_t sx = 19, sy = 14;
    BranchState s = plane_wave(g, sx, sy);
    double kc = kUnits.kinetic_coeff / 0.067;
    double rho = 1.0 / (g.size() * g.cell_volume);
    VectorField ref = paramagnetic_current_oracle(s, 0.067);
    for (int axis : {0, 1}) {
        double p = g.momentum(axis == 0 ? sx : sy);
        double exact = 2 * kc * p * rho;
        for (double v : ref.components[std::size_t(axis)]) EXPECT_NEAR(v, exact, 1e-12 * std::abs(exact) + 1e-15);
        ScalarField m = paramagnetic_current_measured(s, axis, 1, {}, 1, 0.067);
        double fd = 2 * kc * std::sin(p * g.dx) / g.dx * rho;
        for (double v : m.values) EXPECT_NEAR(v, fd, 1e-10 * std::abs(fd));
        EXPECT_LT(std::abs(fd / exact - 1), std::pow(p * g.dx, 2) / 6 + 1e-12);
    }
}

TEST(ParamagneticCurrent, MeasuredMatchesOracleToSecondOrder) {
    const EigenSet &eig = fd_ground();
    BranchState s = eig.state(0);
    VectorField ref = paramagnetic_current_oracle(s, 0.067);
    for (int axis : {0, 1}) {
        const auto &r = ref.components[std::size_t(axis)];
        auto err = [&](int d) {
            auto m = paramagnetic_current_measured(s, axis, d, {}, 1, 0.067).values;
            double e = 0;
            for (std::size_t i = 0; i < m.size(); ++i) e = std::max(e, std::abs(m[i] - r[i]));
            return e;
        };
        double e1 = err(1), e2 = err(2);
        EXPECT_LT(e1, 0.1 * max_abs(r));
        EXPECT_NEAR(e2 / e1, 4.0, 1.0);
    }
}

TEST(ParamagneticCurrent, Validation) {
    Grid g = build_grid(3, 2, 12.0);
    BranchState s = oracle::random_state(g, 2);
    EXPECT_THROW(paramagnetic_current_measured(s, 0, 0, {}, 1, 0.067), std::invalid_argument);
    EXPECT_THROW(paramagnetic_current_measured(s, 0, 4, {}, 1, 0.067), std::invalid_argument);
    EXPECT_THROW(paramagnetic_current_measured(s, 2, 1, {}, 1, 0.067), std::invalid_argument);
    EXPECT_NO_THROW(paramagnetic_current_measured(s, 1, 3, {}, 1, 0.067));
    MeasurementModel m{MeasurementMode::sampled, 5000, 11};
    EXPECT_EQ(paramagnetic_current_measured(s, 0, 1, m, 1, 0.067).values,
              paramagnetic_current_measured(s, 0, 1, m, 1, 0.067).values);
}

TEST(Current, ChargeUnitsFlipSign) {
    const EigenSet &eig = fd_ground();
    BranchState s = eig.state(0);
    auto p = paramagnetic_current_oracle(s, 0.067);
    auto q = paramagnetic_current_oracle(s, 0.067, CurrentUnits::charge);
    for (std::size_t i = 0; i < p.components[1].size(); ++i)
        EXPECT_DOUBLE_EQ(q.components[1][i], kUnits.electron_charge_sign * p.components[1][i]);
}

TEST(DiamagneticCurrent, ZeroCasesAndAntisymmetry) {
    const EigenSet &eig = fd_ground();
    const Grid &g = eig.grid;
    ScalarField rho = density(eig.state(0), 1);
    HamiltonianSpec spec = fd_spec();
    VectorField j = diamagnetic_current(rho, spec);
    EXPECT_EQ(max_abs(j.components[0]), 0.0);
    for (std::size_t kx = 1; kx < g.n_points; ++kx) {
        for (std::size_t ky = 1; ky < g.n_points; ++ky) {
            double a = j.components[1][g.flatten({kx, ky, 0})];
            double b = j.components[1][g.flatten({g.n_points - kx, ky, 0})];
            EXPECT_NEAR(a, -b, 1e-5 * max_abs(j.components[1]));
        }
    }
    HamiltonianSpec zero = spec;
    zero.gauge = make_gauge(0.0, 60.0);
    EXPECT_EQ(max_abs(diamagnetic_current(rho, zero).components[1]), 0.0);
    ScalarField empty{g, std::vector<double>(g.size(), 0.0)};
    EXPECT_EQ(max_abs(diamagnetic_current(empty, spec).components[1]), 0.0);
}

TEST(TotalCurrent, GaugeInvariantUnderCenterShift) {
    const EigenSet &eig = fd_ground();
    const Grid &g = eig.grid;
    HamiltonianSpec a = fd_spec();
    // Shift chosen so that mu * delta is a multiple of the momentum spacing.
    double delta = 3 * g.dp / std::abs(a.gauge.mu);
    HamiltonianSpec b = fd_spec(60.0 + delta);
    double chi = -b.gauge.mu * delta;
    BranchState sa = eig.state(0);
    BranchState sb = sa;
    for (std::size_t i = 0; i < g.size(); ++i) sb.amplitudes()[i] *= std::polar(1.0, chi * g.coordinate(g.unflatten(i)[1]));
    ScalarField rho = density(sa, 1);
    VectorField pa = paramagnetic_current_oracle(sa, 0.067), pb = paramagnetic_current_oracle(sb, 0.067);
    VectorField da = diamagnetic_current(rho, a), db = diamagnetic_current(rho, b);
    VectorField ta = add(pa, da), tb = add(pb, db);
    double scale = max_abs(ta.components[1]);
    double term_change = 0, total_change = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        term_change = std::max(term_change, std::abs(pa.components[1][i] - pb.components[1][i]));
        for (int c : {0, 1}) total_change = std::max(total_change, std::abs(ta.components[std::size_t(c)][i] - tb.components[std::size_t(c)][i]));
    }
    EXPECT_GT(term_change, 0.1 * scale);
    EXPECT_LT(total_change, 1e-8);
    EXPECT_LT(total_change, 1e-6 * scale);
}

TEST(TotalCurrent, CounterclockwiseAndDivergenceFree) {
    const EigenSet &eig = fd_ground();
    BranchState s = eig.state(0);
    VectorField j = add(paramagnetic_current_oracle(s, 0.067), diamagnetic_current(density(s, 1), fd_spec()));
    EXPECT_GT(circulation(j), 0.0);
    ScalarField div = divergence(j);
    double scale = std::max(max_abs(j.components[0]), max_abs(j.components[1]));
    // Limited by the periodic wrap of the Landau-gauge phase, not by the solver.
    EXPECT_LT(max_abs(div.values), 1e-5 * scale);
}

TEST(VectorField, AddRejectsMismatch) {
    VectorField a{build_grid(2, 2, 4.0), {std::vector<double>(16, 1.0), std::vector<double>(16, 2.0)}};
    VectorField b{build_grid(2, 2, 4.0), {std::vector<double>(16, 1.0)}};
    EXPECT_THROW(add(a, b), std::invalid_argument);
    VectorField c = add(a, a);
    EXPECT_EQ(c.components[1][3], 4.0);
}
