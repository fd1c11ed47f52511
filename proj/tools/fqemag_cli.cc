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

// Command-line driver: diagonalization, PITE trajectories, filtration sweeps,
// current densities, CNOT counts and the derivative reconstruction demo.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "config.h"
#include "fqemag/csv.h"
#include "fqemag/observables.h"
#include "fqemag/parallel.h"
#include "fqemag/propagator.h"
#include "fqemag/resources.h"

namespace fs = std::filesystem;
using namespace fqemag;
using namespace fqemag::cli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

/// Non-config runtime failure such as a vanished success branch.
class RunError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

using Metadata = std::vector<std::pair<std::string, std::string>>;

const char *potential_name(PotentialKind k) {
    switch (k) {
        case PotentialKind::zero: return "zero";
        case PotentialKind::harmonic: return "harmonic";
        case PotentialKind::double_well: return "double_well";
        case PotentialKind::table: return "table";
    }
    return "?";
}

Metadata base_metadata(const Config &c, const std::string &command) {
    const Grid &g = c.spec.grid;
    Metadata m{{"command", command}};
    if (!c.preset.empty()) m.emplace_back("preset", c.preset);
    if (!c.description.empty()) m.emplace_back("description", c.description);
    m.emplace_back("revision", git_revision());
    m.emplace_back("units", "energy meV, length nm, time meV^-1 (hbar = 1)");
    m.emplace_back("grid", "n=" + std::to_string(g.n_per_axis) + " dims=" + std::to_string(g.dims) +
                               " box_len=" + format_number(g.box_len));
    m.emplace_back("mass_ratio", format_number(c.spec.mass_ratio));
    m.emplace_back("B_tesla", format_number(c.spec.gauge.field_tesla));
    m.emplace_back("gauge_center", format_number(c.spec.gauge.gauge_center));
    m.emplace_back("potential", potential_name(c.spec.potential.kind));
    m.emplace_back("seed", std::to_string(c.seed));
    return m;
}

std::ofstream open_output(const Config &c, const std::string &name) {
    fs::create_directories(c.out_dir);
    fs::path p = fs::path(c.out_dir) / name;
    std::ofstream out(p);
    if (!out) throw RunError("cannot open " + p.string());
    return out;
}

EigenSet eigenpairs(const HamiltonianSpec &spec, int count, std::uint64_t seed) {
    EigensolverOptions opt;
    if (seed != 0) opt.seed = seed;
    return lowest_eigenpairs(spec, count, opt);
}

std::string weight_name(int k) { return "weight_phi" + std::to_string(k); }

// --- diagonalize ---

void cmd_diagonalize(const Config &c) {
    if (c.n_eigen < 1) throw ConfigError("diagonalize needs at least one eigenpair");
    std::vector<double> fields = c.field_sweep;
    if (fields.empty()) fields.push_back(c.spec.gauge.field_tesla);
    bool harmonic = c.spec.potential.kind == PotentialKind::harmonic && c.spec.grid.dims == 2;

    std::ofstream out = open_output(c, "eigenvalues.csv");
    Metadata meta = base_metadata(c, "diagonalize");
    meta.emplace_back("count", std::to_string(c.n_eigen));
    write_metadata(out, meta);
    std::vector<std::string> header{"B_tesla", "index", "energy_meV", "residual", "group"};
    if (harmonic) {
        header.push_back("fock_darwin_meV");
        header.push_back("relative_error");
    }
    write_csv_row(out, header);

    double worst = 0;
    for (double b : fields) {
        HamiltonianSpec spec = c.spec;
        spec.gauge = make_gauge(b, spec.gauge.gauge_center);
        EigenSet eig = eigenpairs(spec, c.n_eigen, c.seed);
        std::vector<int> group(std::size_t(eig.count()), 0);
        for (std::size_t gi = 0; gi < eig.degeneracy_groups.size(); ++gi)
            for (int i : eig.degeneracy_groups[gi]) group[std::size_t(i)] = int(gi);
        std::vector<double> fd;
        if (harmonic) fd = fock_darwin_levels(spec.potential.omega0, b, spec.mass_ratio, eig.count());
        for (int i = 0; i < eig.count(); ++i) {
            double e = eig.eigenvalues[std::size_t(i)];
            std::vector<std::string> row{format_number(b), std::to_string(i), format_number(e),
                                         format_number(eig.residuals[std::size_t(i)]), std::to_string(group[std::size_t(i)])};
            if (harmonic) {
                double ref = fd[std::size_t(i)];
                double rel = std::abs(e - ref) / std::abs(ref);
                worst = std::max(worst, rel);
                row.push_back(format_number(ref));
                row.push_back(format_number(rel));
            }
            write_csv_row(out, row);
        }
        if (c.write_eigenvectors) {
            std::ofstream vec = open_output(c, "eigenvectors_B" + format_number(b) + ".csv");
            write_metadata(vec, base_metadata(c, "diagonalize"));
            std::vector<std::string> h{"index"};
            for (int a = 0; a < spec.grid.dims; ++a) h.push_back(std::string("k_") + "xyz"[a]);
            h.push_back("re");
            h.push_back("im");
            write_csv_row(vec, h);
            for (int i = 0; i < eig.count(); ++i) {
                auto v = eig.vector(i);
                for (std::size_t p = 0; p < v.size(); ++p) {
                    std::vector<std::string> row{std::to_string(i)};
                    for (int a = 0; a < spec.grid.dims; ++a) row.push_back(std::to_string(spec.grid.axis_index(p, a)));
                    row.push_back(format_number(v[p].real()));
                    row.push_back(format_number(v[p].imag()));
                    write_csv_row(vec, row);
                }
            }
        }
    }
    if (harmonic) {
        std::cout << "max relative error against Fock-Darwin levels: " << format_number(worst) << "\n";
        if (c.units_check && worst > 1e-2) throw RunError("units check failed: Fock-Darwin deviation above 1e-2");
    }
}

// --- filtration helpers ---

std::shared_ptr<const Propagator> filtration_propagator(const Config &c, const EigenSet &eig) {
    auto remainder = std::make_shared<TrotterBackend>(c.spec, c.pite.splitting, c.filtration->remainder_substep);
    return std::make_shared<EigenExpansionPropagator>(eig, remainder);
}

double estimate(const EigenSet &eig, const std::map<int, double> &errors, int k) {
    auto it = errors.find(k);
    return eig.eigenvalues[std::size_t(k)] + (it == errors.end() ? 0.0 : it->second);
}

struct ChainResult {
    BranchState state;
    double p_success = 1;
    std::vector<FiltrationReport> stages;
};

/// Applies the configured targets in order; throws RunError if a success branch vanishes.
ChainResult filtration_chain(const BranchState &psi, const Propagator &u, const EigenSet &eig,
                             const FiltrationConfig &f, const std::map<int, double> &errors) {
    ChainResult r{psi, 1.0, {}};
    for (const FiltrationTarget &t : f.targets) {
        double lambda = estimate(eig, errors, t.index);
        double ref = estimate(eig, errors, t.reference);
        double dt = optimal_dt(std::max(lambda, ref), std::min(lambda, ref));
        FiltrationReport rep = filtrate(r.state, u, {lambda, dt, f.order}, &eig);
        if (!rep.success_state) throw RunError("filtration of phi" + std::to_string(t.index) + " left no success amplitude");
        r.p_success *= rep.p_success;
        r.state = *rep.success_state;
        r.stages.push_back(std::move(rep));
    }
    return r;
}

void check_targets(const Config &c) {
    int top = 0;
    for (const auto &t : c.filtration->targets) top = std::max({top, t.index, t.reference});
    for (const auto &[k, v] : c.filtration->errors) top = std::max(top, k);
    for (const auto &[k, v] : c.filtration->sweep) top = std::max(top, k);
    if (top >= c.n_eigen) throw ConfigError("filtration refers to phi" + std::to_string(top) + " but pite.n_eigen is " +
                                            std::to_string(c.n_eigen));
}

// --- pite ---

Trajectory run_trajectory(const Config &c, const std::string &command, bool write) {
    BranchState psi = init_state(c.spec.grid, c.initial);
    std::optional<EigenSet> eig;
    if (c.n_eigen > 0) eig = eigenpairs(c.spec, c.n_eigen, c.seed);

    if (c.filtration && !c.filtration->targets.empty()) {
        check_targets(c);
        auto u = filtration_propagator(c, *eig);
        ChainResult chain = filtration_chain(psi, *u, *eig, *c.filtration, c.filtration->errors);
        if (write) {
            std::ofstream out = open_output(c, "filtration.csv");
            write_metadata(out, base_metadata(c, command));
            std::vector<std::string> h{"stage", "index", "reference", "lambda_meV", "dt", "p_success"};
            for (int k = 0; k < c.n_eigen; ++k) h.push_back(weight_name(k));
            write_csv_row(out, h);
            for (std::size_t s = 0; s < chain.stages.size(); ++s) {
                const auto &t = c.filtration->targets[s];
                double lambda = estimate(*eig, c.filtration->errors, t.index);
                double ref = estimate(*eig, c.filtration->errors, t.reference);
                std::vector<std::string> row{std::to_string(s + 1), std::to_string(t.index), std::to_string(t.reference),
                                             format_number(lambda), format_number(M_PI / std::abs(ref - lambda)),
                                             format_number(chain.stages[s].p_success)};
                for (double w : chain.stages[s].weights_after) row.push_back(format_number(w));
                write_csv_row(out, row);
            }
        }
        psi = chain.state;
    }

    TrotterBackend u(c.spec, c.pite.splitting);
    Trajectory t = run_pite(psi, c.spec, u, c.pite, c.schedule, c.n_steps, eig ? &*eig : nullptr);
    if (write) {
        std::ofstream out = open_output(c, "trajectory.csv");
        Metadata meta = base_metadata(c, command);
        meta.emplace_back("m0", format_number(c.pite.m0));
        meta.emplace_back("splitting", to_string(c.pite.splitting));
        meta.emplace_back("schedule", c.schedule.kind == ScheduleKind::constant
                                          ? "constant dtau=" + format_number(c.schedule.dtau)
                                          : "ramp dtau_min=" + format_number(c.schedule.dtau_min) +
                                                " dtau_max=" + format_number(c.schedule.dtau_max) +
                                                " kappa=" + format_number(c.schedule.kappa));
        meta.emplace_back("n_steps", std::to_string(c.n_steps));
        write_metadata(out, meta);
        write_trajectory_csv(out, t, c.n_eigen);
    }
    return t;
}

void cmd_pite(const Config &c) {
    Trajectory t = run_trajectory(c, "pite", true);
    const TrajectoryRecord &last = t.rows.empty() ? t.initial : t.rows.back();
    std::cout << "steps " << t.rows.size() << ", cumulative success " << format_number(last.p_cumulative)
              << ", energy " << format_number(last.energy) << " meV\n";
}

// --- filter-sweep ---

void cmd_filter_sweep(const Config &c) {
    if (!c.filtration || c.filtration->targets.empty()) throw ConfigError("filter-sweep needs filtration.targets");
    check_targets(c);
    const FiltrationConfig &f = *c.filtration;
    EigenSet eig = eigenpairs(c.spec, c.n_eigen, c.seed);
    BranchState psi = init_state(c.spec.grid, c.initial);
    auto u = filtration_propagator(c, eig);

    std::vector<int> keys;
    std::vector<std::size_t> sizes;
    for (const auto &[k, v] : f.sweep) {
        keys.push_back(k);
        sizes.push_back(v.size());
    }
    std::size_t n_points = 1;
    for (std::size_t s : sizes) n_points *= s;

    struct Point {
        std::map<int, double> errors;
        std::vector<double> weights;
        double p_success = 0;
    };
    std::vector<Point> points(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        points[i].errors = f.errors;
        std::size_t rest = i;
        for (std::size_t j = keys.size(); j-- > 0;) {
            points[i].errors[keys[j]] = f.sweep.at(keys[j])[rest % sizes[j]];
            rest /= sizes[j];
        }
    }
    parallel_for(n_points, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                ChainResult r = filtration_chain(psi, *u, eig, f, points[i].errors);
                points[i].p_success = r.p_success;
                points[i].weights = r.stages.back().weights_after;
            } catch (const RunError &) {
                points[i].p_success = 0;
            }
        }
    });

    std::ofstream out = open_output(c, "filter_sweep.csv");
    Metadata meta = base_metadata(c, "filter-sweep");
    std::string chain;
    for (const auto &t : f.targets) chain += (chain.empty() ? "" : " then ") + std::string("phi") + std::to_string(t.index) +
                                             " (reference phi" + std::to_string(t.reference) + ")";
    meta.emplace_back("targets", chain);
    write_metadata(out, meta);
    std::vector<std::string> h;
    for (int k : keys) h.push_back("dE" + std::to_string(k));
    for (int k = 0; k < c.n_eigen; ++k) h.push_back(weight_name(k));
    h.push_back("p_success");
    h.push_back("order");
    write_csv_row(out, h);
    const char *order = f.order == FiltrationOrder::first ? "1" : "2";
    for (const Point &p : points) {
        std::vector<std::string> row;
        for (int k : keys) row.push_back(format_number(p.errors.at(k)));
        for (int k = 0; k < c.n_eigen; ++k)
            row.push_back(format_number(std::size_t(k) < p.weights.size() ? p.weights[std::size_t(k)] : NAN));
        row.push_back(format_number(p.p_success));
        row.push_back(order);
        write_csv_row(out, row);
    }
    std::cout << n_points << " sweep points written\n";
}

// --- current ---

void write_scalar(const Config &c, const std::string &name, const ScalarField &f, const Metadata &meta) {
    std::ofstream out = open_output(c, name);
    write_metadata(out, meta);
    write_csv_row(out, {"x", "y", "rho"});
    const Grid &g = f.grid;
    for (std::size_t i = 0; i < g.size(); ++i)
        write_csv_row(out, {format_number(g.coordinate(g.axis_index(i, 0))), format_number(g.coordinate(g.axis_index(i, 1))),
                            format_number(f.values[i])});
}

void write_quiver(const Config &c, const std::string &name, const VectorField &j, Metadata meta) {
    meta.emplace_back("circulation", format_number(circulation(j)));
    std::ofstream out = open_output(c, name);
    write_metadata(out, meta);
    write_csv_row(out, {"x", "y", "jx", "jy"});
    const Grid &g = j.grid;
    for (std::size_t i = 0; i < g.size(); ++i)
        write_csv_row(out, {format_number(g.coordinate(g.axis_index(i, 0))), format_number(g.coordinate(g.axis_index(i, 1))),
                            format_number(j.components[0][i]), format_number(j.components[1][i])});
}

void cmd_current(const Config &c) {
    if (c.spec.grid.dims != 2) throw ConfigError("current maps need a 2-D grid");
    const ObservablesConfig &o = c.observables;
    BranchState psi;
    std::string source;
    switch (o.source) {
        case StateSource::initial:
            psi = init_state(c.spec.grid, c.initial);
            source = "initial state";
            break;
        case StateSource::eigenstate: {
            EigenSet eig = eigenpairs(c.spec, o.eigen_index + 1, c.seed);
            psi = eig.state(o.eigen_index);
            source = "eigenstate " + std::to_string(o.eigen_index) + ", E = " +
                     format_number(eig.eigenvalues[std::size_t(o.eigen_index)]) + " meV";
            break;
        }
        case StateSource::pite:
            psi = run_trajectory(c, "current", false).final_state;
            source = "PITE final state";
            break;
    }
    MeasurementModel model = o.measurement;
    model.seed = c.seed;
    CurrentUnits units = o.charge_units ? CurrentUnits::charge : CurrentUnits::probability;

    Metadata meta = base_metadata(c, "current");
    meta.emplace_back("state", source);
    meta.emplace_back("current_units", o.charge_units ? "e nm^-2 meV" : "nm^-2 meV (probability)");
    meta.emplace_back("method", o.method == CurrentMethod::measured ? "measured d=" + std::to_string(o.d) : "oracle");
    meta.emplace_back("measurement", model.mode == MeasurementMode::exact ? "exact" : std::to_string(model.shots) + " shots");

    ScalarField rho = density(psi, 1, model);
    VectorField para;
    if (o.method == CurrentMethod::oracle) {
        para = paramagnetic_current_oracle(psi, c.spec.mass_ratio, units);
    } else {
        para.grid = c.spec.grid;
        for (int axis = 0; axis < 2; ++axis)
            para.components.push_back(
                paramagnetic_current_measured(psi, axis, o.d, model, 1, c.spec.mass_ratio, units).values);
    }
    VectorField dia = diamagnetic_current(rho, c.spec, units);
    VectorField total = add(para, dia);

    write_scalar(c, "density.csv", rho, meta);
    write_quiver(c, "quiver_para.csv", para, meta);
    write_quiver(c, "quiver_dia.csv", dia, meta);
    write_quiver(c, "quiver_total.csv", total, meta);
    std::cout << "circulation para " << format_number(circulation(para)) << ", dia " << format_number(circulation(dia))
              << ", total " << format_number(circulation(total)) << "\n";
}

// --- gatecount ---

void cmd_gatecount(const Config &c) {
    const json &g = c.gatecount;
    std::vector<int> ns;
    if (!g.contains("n")) {
        ns.push_back(c.spec.grid.n_per_axis);
    } else if (g["n"].is_number_integer()) {
        ns.push_back(g["n"].get<int>());
    } else if (g["n"].is_array()) {
        for (const auto &v : g["n"]) {
            if (!v.is_number_integer()) throw ConfigError("gatecount.n must hold integers");
            ns.push_back(v.get<int>());
        }
    } else {
        throw ConfigError("gatecount.n must be an integer or an array of integers");
    }
    for (int n : ns)
        if (n < 1 || n > 30) throw ConfigError("gatecount.n must lie in [1, 30]");

    std::string split = g.value("splitting", "both");
    std::vector<Splitting> splittings;
    if (split == "TV" || split == "both") splittings.push_back(Splitting::TV);
    if (split == "TVT" || split == "both") splittings.push_back(Splitting::TVT);
    if (splittings.empty()) throw ConfigError("gatecount.splitting must be TV, TVT or both");

    CnotScenario scenario;
    try {
        scenario = parse_scenario(g.value("scenario", "harmonic"));
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("gatecount.scenario: ") + e.what());
    }
    std::optional<GaussianBlockCosts> sub;
    if (g.contains("subcosts")) {
        const json &s = g["subcosts"];
        auto get = [&](const char *k) {
            if (!s.contains(k) || !s[k].is_number_integer()) throw ConfigError(std::string("gatecount.subcosts.") + k + " must be an integer");
            return s[k].get<long long>();
        };
        sub = GaussianBlockCosts{get("c_S"), get("c_ADD"), get("c_Ue"), get("c_CUe")};
    }

    json rows = json::array();
    for (int n : ns) {
        for (Splitting sp : splittings) {
            CnotCount cc = cnot_counts(CnotModel{n, sub}, sp, scenario);
            CallCounts calls = subroutine_calls(sp, true);
            json row = {{"n", n},
                        {"splitting", to_string(sp)},
                        {"expression", cc.expression},
                        {"calls",
                         {{"QFT", calls.qft},
                          {"U_kin", calls.u_kin},
                          {"CU_kin", calls.u_kin_controlled},
                          {"U_mag", calls.u_mag},
                          {"U_pot", calls.u_pot},
                          {"CU_pot", calls.u_pot_controlled}}},
                        {"components",
                         {{"QFT", cnot_qft(n)}, {"U_mag", cnot_u_mag(n)}, {"U_kin", cnot_u_kin(n)}, {"CU_kin", cnot_cu_kin(n)}}}};
            row["cnots"] = cc.value ? json(*cc.value) : json(nullptr);
            rows.push_back(row);
        }
    }
    json doc = {{"scenario", to_string(scenario)}, {"revision", git_revision()}, {"rows", rows}};
    std::cout << doc.dump(2) << "\n";
}

// --- derivative-demo ---

void cmd_derivative_demo(const Config &c) {
    const DerivativeDemoConfig &d = c.derivative;
    Grid g = build_grid(d.n, 2, d.box_len);
    BranchState f(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        double x = g.centered(g.axis_index(i, 0)), y = g.centered(g.axis_index(i, 1));
        f.amplitudes()[i] = std::exp(-((x - d.center) * (x - d.center) + y * y) / (d.width * d.width)) *
                            std::polar(1.0, d.wave_number * x);
    }
    f.normalize();
    MeasurementModel model = c.observables.measurement;
    model.seed = c.seed;
    Sampler sampler(model);
    DerivativeResult r = reconstruct_derivatives({2, 1, {{1, 0}, {0, 1}}}, f, sampler);

    double err = 0, scale = 0;
    std::vector<std::array<Complex, 2>> ref(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        double x = g.centered(g.axis_index(i, 0)), y = g.centered(g.axis_index(i, 1));
        double w2 = d.width * d.width;
        double rho = std::norm(f.amplitudes()[i]);
        ref[i] = {rho * Complex(-2 * (x - d.center) / w2, -d.wave_number), rho * Complex(-2 * y / w2, 0)};
        for (int a = 0; a < 2; ++a) {
            err = std::max(err, std::abs(r.g(Eigen::Index(i), a) - ref[i][std::size_t(a)]));
            scale = std::max(scale, std::abs(ref[i][std::size_t(a)]));
        }
    }
    Metadata meta = base_metadata(c, "derivative-demo");
    meta.emplace_back("function", "exp(-((X - " + format_number(d.center) + ")^2 + Y^2) / " + format_number(d.width) +
                                      "^2) exp(i " + format_number(d.wave_number) + " X), X, Y centered");
    meta.emplace_back("demo_grid", "n=" + std::to_string(d.n) + " box_len=" + format_number(d.box_len));
    meta.emplace_back("max_relative_error", format_number(err / scale));
    std::ofstream out = open_output(c, "derivative.csv");
    write_metadata(out, meta);
    write_csv_row(out, {"x", "y", "rho", "re_g10", "im_g10", "re_g01", "im_g01", "re_ref10", "im_ref10", "re_ref01", "im_ref01"});
    for (std::size_t i = 0; i < g.size(); ++i) {
        Complex g10 = r.g(Eigen::Index(i), 0), g01 = r.g(Eigen::Index(i), 1);
        write_csv_row(out, {format_number(g.coordinate(g.axis_index(i, 0))), format_number(g.coordinate(g.axis_index(i, 1))),
                            format_number(std::norm(f.amplitudes()[i])), format_number(g10.real()),
                            format_number(g10.imag()), format_number(g01.real()), format_number(g01.imag()),
                            format_number(ref[i][0].real()), format_number(ref[i][0].imag()),
                            format_number(ref[i][1].real()), format_number(ref[i][1].imag())});
    }
    std::cout << "max relative error of g(1): " << format_number(err / scale) << "\n";
}

// --- configuration loading ---

struct GlobalOptions {
    std::string config_path;
    std::string preset_name;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    int threads = 1;
    std::vector<std::string> overrides;
};

Config load(const GlobalOptions &opt) {
    json doc = json::object();
    json file = json::object();
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) throw ConfigError("cannot read " + opt.config_path);
        file = json::parse(in, nullptr, false);
        if (file.is_discarded() || !file.is_object()) throw ConfigError(opt.config_path + " is not a JSON object");
    }
    std::string name = opt.preset_name;
    if (name.empty() && file.contains("preset")) {
        if (!file["preset"].is_string()) throw ConfigError("preset must be a string");
        name = file["preset"].get<std::string>();
    }
    if (!name.empty()) doc = preset(name);
    merge(doc, file);
    if (!opt.preset_name.empty()) doc["preset"] = opt.preset_name;
    for (const auto &s : opt.overrides) apply_override(doc, s);
    Config c = parse_config(doc);
    if (!opt.out_dir.empty()) c.out_dir = opt.out_dir;
    if (opt.seed) c.seed = *opt.seed;
    return c;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Charged particle in a magnetic field on a qubit grid: FQE/PITE simulator"};
    app.require_subcommand(1);
    GlobalOptions opt;
    app.add_option("--config", opt.config_path, "JSON configuration file");
    app.add_option("--preset", opt.preset_name, "Named parameter set")->check(CLI::IsMember(preset_names()));
    app.add_option("--out", opt.out_dir, "Output directory (default: out)");
    app.add_option("--seed", opt.seed, "Seed for sampled measurements and the eigensolver start vector");
    app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--set", opt.overrides, "Override a configuration value, key.path=value")->take_all();

    struct Command {
        const char *name;
        const char *help;
        void (*run)(const Config &);
    };
    const Command commands[] = {
        {"diagonalize", "Lowest eigenpairs, optionally over a field sweep", cmd_diagonalize},
        {"pite", "Probabilistic imaginary-time evolution trajectory", cmd_pite},
        {"filter-sweep", "Filtration weights over a grid of energy-estimate errors", cmd_filter_sweep},
        {"current", "Density and current-density maps", cmd_current},
        {"gatecount", "CNOT counts per time step as JSON", cmd_gatecount},
        {"derivative-demo", "Derivative reconstruction on a phased Gaussian", cmd_derivative_demo},
    };
    void (*selected)(const Config &) = nullptr;
    for (const Command &cmd : commands) {
        CLI::App *sub = app.add_subcommand(cmd.name, cmd.help);
        sub->callback([&selected, &cmd] { selected = cmd.run; });
    }
    app.add_subcommand("presets", "List preset names")->callback([] {
        for (const auto &p : preset_names()) std::cout << p << "\n";
        std::exit(kExitOk);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        set_thread_count(opt.threads);
        Config c = load(opt);
        selected(c);
    } catch (const ConfigError &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const MissingSubcostError &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const PiteFailure &e) {
        std::cerr << "PITE failed at step " << e.step() << ": " << e.what() << "\n";
        return kExitRuntime;
    } catch (const EigensolverError &e) {
        std::cerr << "eigensolver failed: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const RunError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
