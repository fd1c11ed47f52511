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

#include "fqemag/eigensolver.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace fqemag {

std::span<const Complex> EigenSet::vector(int i) const {
    return {vectors.col(i).data(), static_cast<std::size_t>(vectors.rows())};
}

BranchState EigenSet::state(int i) const {
    BranchState s(grid);
    auto v = vector(i);
    std::copy(v.begin(), v.end(), s.amplitudes().begin());
    return s;
}

std::vector<std::vector<int>> group_degenerate(const std::vector<double> &values, double tolerance) {
    std::vector<std::vector<int>> groups;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!groups.empty() && std::abs(values[i] - values[static_cast<std::size_t>(groups.back().back())]) <= tolerance) {
            groups.back().push_back(static_cast<int>(i));
        } else {
            groups.push_back({static_cast<int>(i)});
        }
    }
    return groups;
}

namespace {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

class Operator {
   public:
    explicit Operator(const HamiltonianSpec &spec) : spec_(spec), v_(evaluate_potential(spec)), buf_(spec.grid) {}

    Vec apply(const Vec &x) {
        auto a = buf_.amplitudes();
        std::copy(x.data(), x.data() + x.size(), a.begin());
        BranchState hx = apply_hamiltonian(buf_, spec_, &v_);
        auto h = hx.amplitudes();
        return Eigen::Map<const Vec>(h.data(), static_cast<Eigen::Index>(h.size()));
    }

   private:
    const HamiltonianSpec &spec_;
    std::vector<double> v_;
    BranchState buf_;
};

void check_count(int count, std::size_t m, int cap = 32) {
    if (count < 1 || count > cap) {
        throw std::invalid_argument("eigenpair count must be in [1, " + std::to_string(cap) + "]");
    }
    if (static_cast<std::size_t>(count) > m) {
        throw std::invalid_argument("eigenpair count exceeds the grid size");
    }
}

void finish(EigenSet &out, double tolerance) {
    out.degeneracy_groups = group_degenerate(out.eigenvalues);
    std::ostringstream bad;
    for (int i = 0; i < out.count(); ++i) {
        double limit = tolerance * std::max(1.0, std::abs(out.eigenvalues[i]));
        if (!(out.residuals[i] <= limit)) {
            bad << " [" << i << "] E=" << out.eigenvalues[i] << " residual=" << out.residuals[i];
        }
    }
    if (!bad.str().empty()) {
        throw EigensolverError("eigenpairs above residual tolerance:" + bad.str());
    }
}

Vec random_vector(std::size_t m, std::mt19937_64 &rng) {
    std::normal_distribution<double> nd;
    Vec v(static_cast<Eigen::Index>(m));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v[i] = {nd(rng), nd(rng)};
    }
    return v;
}

// Removes components along the columns of `basis` (two classical Gram-Schmidt passes).
void project_out(Vec &w, const Mat &basis, Eigen::Index cols) {
    if (cols == 0) {
        return;
    }
    for (int pass = 0; pass < 2; ++pass) {
        Vec c = basis.leftCols(cols).adjoint() * w;
        w.noalias() -= basis.leftCols(cols) * c;
    }
}

struct RunResult {
    std::vector<double> values;
    Mat vectors;
};

// Thick-restart Lanczos for the lowest `want` eigenpairs of H restricted to
// the orthogonal complement of `locked`.
RunResult lanczos_run(Operator &op, std::size_t m, const Mat &locked, int want, const EigensolverOptions &opt,
                      std::mt19937_64 &rng) {
    Eigen::Index nl = locked.cols();
    Eigen::Index free_dim = static_cast<Eigen::Index>(m) - nl;
    Eigen::Index basis = std::min<Eigen::Index>(opt.max_iterations, free_dim);
    if (basis < want) {
        throw EigensolverError("Lanczos basis smaller than the requested number of pairs");
    }
    Mat V(static_cast<Eigen::Index>(m), basis + 1);
    Mat S = Mat::Zero(basis + 1, basis + 1);
    auto fresh_start = [&]() {
        Vec v = random_vector(m, rng);
        project_out(v, locked, nl);
        return v;
    };
    Vec v0 = fresh_start();
    V.col(0) = v0 / v0.norm();
    Eigen::Index k = 0;
    double hnorm = 1.0;
    for (int cycle = 0; cycle <= opt.max_restarts; ++cycle) {
        Eigen::Index j = k;
        double beta = 0;
        for (; j < basis; ++j) {
            Vec w = op.apply(V.col(j));
            project_out(w, locked, nl);
            Vec h = Vec::Zero(j + 1);
            for (int pass = 0; pass < 2; ++pass) {
                Vec c = V.leftCols(j + 1).adjoint() * w;
                w.noalias() -= V.leftCols(j + 1) * c;
                h += c;
            }
            project_out(w, locked, nl);
            S.block(0, j, j + 1, 1) = h;
            S.block(j, 0, 1, j + 1) = h.adjoint();
            S(j, j) = S(j, j).real();
            hnorm = std::max(hnorm, std::abs(S(j, j).real()));
            beta = w.norm();
            if (beta <= 1e-13 * hnorm) {
                // Invariant subspace: continue from a fresh orthogonal direction.
                Vec r = fresh_start();
                project_out(r, V, j + 1);
                V.col(j + 1) = r / r.norm();
                beta = 0;
            } else {
                V.col(j + 1) = w / beta;
            }
            if (j + 1 < basis) {
                S(j + 1, j) = beta;
                S(j, j + 1) = beta;
            }
        }
        Eigen::SelfAdjointEigenSolver<Mat> es(S.topLeftCorner(basis, basis));
        const Eigen::VectorXd &theta = es.eigenvalues();
        const Mat &Y = es.eigenvectors();
        bool all = true;
        for (int i = 0; i < want; ++i) {
            double est = beta * std::abs(Y(basis - 1, i));
            if (est > 0.1 * opt.tolerance * std::max(1.0, std::abs(theta[i]))) {
                all = false;
                break;
            }
        }
        if (all || cycle == opt.max_restarts) {
            RunResult r;
            r.vectors = V.leftCols(basis) * Y.leftCols(want);
            for (int i = 0; i < want; ++i) {
                r.values.push_back(theta[i]);
            }
            return r;
        }
        Eigen::Index keep = std::min<Eigen::Index>(basis / 2, want + std::max(want, 10));
        Mat X = V.leftCols(basis) * Y.leftCols(keep);
        Vec resid = V.col(basis);
        V.leftCols(keep) = X;
        V.col(keep) = resid;
        S.setZero();
        for (Eigen::Index i = 0; i < keep; ++i) {
            S(i, i) = theta[i];
            S(keep, i) = beta * Y(basis - 1, i);
            S(i, keep) = std::conj(S(keep, i));
        }
        k = keep;
    }
    throw EigensolverError("Lanczos restart budget exhausted");
}

}  // namespace

EigenSet eigenset_from_dense(const Eigen::MatrixXcd &h, const Grid &grid, int count) {
    std::size_t m = static_cast<std::size_t>(h.rows());
    check_count(count, m, static_cast<int>(m));
    if (m != grid.size() || h.cols() != h.rows()) {
        throw std::invalid_argument("matrix size does not match the grid");
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    EigenSet out;
    out.grid = grid;
    out.vectors = es.eigenvectors().leftCols(count);
    for (int i = 0; i < count; ++i) {
        out.eigenvalues.push_back(es.eigenvalues()[i]);
        out.residuals.push_back((h * out.vectors.col(i) - es.eigenvalues()[i] * out.vectors.col(i)).norm());
    }
    finish(out, 1e-8);
    return out;
}

EigenSet lowest_eigenpairs(const HamiltonianSpec &spec, int count, const EigensolverOptions &options) {
    const Grid &g = spec.grid;
    std::size_t m = g.size();
    check_count(count, m);
    Operator op(spec);
    EigenSet out;
    out.grid = g;
    if (m <= options.dense_limit) {
        Eigen::SelfAdjointEigenSolver<Mat> es(dense_hamiltonian(spec));
        out.vectors = es.eigenvectors().leftCols(count);
        for (int i = 0; i < count; ++i) {
            out.eigenvalues.push_back(es.eigenvalues()[i]);
        }
    } else {
        std::mt19937_64 rng(options.seed);
        Mat locked(static_cast<Eigen::Index>(m), 0);
        std::vector<double> values;
        int want = count;
        for (int run = 0; run < count + 8; ++run) {
            RunResult r = lanczos_run(op, m, locked, want, options, rng);
            if (!values.empty() && r.values.front() >= values.back() - 1e-9 * std::max(1.0, std::abs(values.back()))) {
                break;
            }
            std::vector<std::pair<double, Vec>> merged;
            for (std::size_t i = 0; i < values.size(); ++i) {
                merged.emplace_back(values[i], locked.col(static_cast<Eigen::Index>(i)));
            }
            for (int i = 0; i < want; ++i) {
                merged.emplace_back(r.values[static_cast<std::size_t>(i)], r.vectors.col(i));
            }
            std::stable_sort(merged.begin(), merged.end(),
                             [](const auto &a, const auto &b) { return a.first < b.first; });
            merged.resize(static_cast<std::size_t>(count));
            values.clear();
            locked.resize(static_cast<Eigen::Index>(m), count);
            for (int i = 0; i < count; ++i) {
                values.push_back(merged[static_cast<std::size_t>(i)].first);
                locked.col(i) = merged[static_cast<std::size_t>(i)].second;
            }
            want = 1;
        }
        out.eigenvalues = values;
        out.vectors = locked;
    }
    for (int i = 0; i < count; ++i) {
        Vec v = out.vectors.col(i);
        v /= v.norm();
        out.vectors.col(i) = v;
        Vec hv = op.apply(v);
        out.eigenvalues[static_cast<std::size_t>(i)] = v.dot(hv).real();
        out.residuals.push_back((hv - out.eigenvalues[static_cast<std::size_t>(i)] * v).norm());
    }
    finish(out, options.tolerance);
    return out;
}

}  // namespace fqemag
