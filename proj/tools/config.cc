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

#include "config.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "fqemag/scenarios.h"

namespace fqemag::cli {

namespace {

// Object view that records the path for messages and rejects unknown keys.
class Section {
   public:
    Section(const json &j, std::string path, std::initializer_list<const char *> allowed) : j_(j), path_(std::move(path)) {
        if (!j.is_object()) {
            throw ConfigError(label() + " must be an object");
        }
        std::set<std::string> ok(allowed.begin(), allowed.end());
        for (const auto &[k, v] : j.items()) {
            if (!ok.count(k)) {
                throw ConfigError("unknown key: " + join(k));
            }
        }
    }

    bool has(const char *key) const { return j_.contains(key); }
    const json &raw(const char *key) const { return j_.at(key); }
    std::string join(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }

    double number(const char *key, double fallback) const {
        if (!has(key)) return fallback;
        const json &v = j_.at(key);
        if (!v.is_number()) throw ConfigError(join(key) + " must be a number");
        return v.get<double>();
    }
    int integer(const char *key, int fallback) const {
        if (!has(key)) return fallback;
        const json &v = j_.at(key);
        if (!v.is_number_integer()) throw ConfigError(join(key) + " must be an integer");
        return v.get<int>();
    }
    bool boolean(const char *key, bool fallback) const {
        if (!has(key)) return fallback;
        const json &v = j_.at(key);
        if (!v.is_boolean()) throw ConfigError(join(key) + " must be true or false");
        return v.get<bool>();
    }
    std::string string(const char *key, const std::string &fallback) const {
        if (!has(key)) return fallback;
        const json &v = j_.at(key);
        if (!v.is_string()) throw ConfigError(join(key) + " must be a string");
        return v.get<std::string>();
    }
    std::vector<double> numbers(const char *key) const {
        std::vector<double> out;
        if (!has(key)) return out;
        const json &v = j_.at(key);
        if (!v.is_array()) throw ConfigError(join(key) + " must be an array of numbers");
        for (const auto &x : v) {
            if (!x.is_number()) throw ConfigError(join(key) + " must be an array of numbers");
            out.push_back(x.get<double>());
        }
        return out;
    }

   private:
    std::string label() const { return path_.empty() ? "configuration" : path_; }
    const json &j_;
    std::string path_;
};

template <typename E>
E choose(const std::string &what, const std::string &value, std::initializer_list<std::pair<const char *, E>> options) {
    for (const auto &[name, e] : options) {
        if (value == name) return e;
    }
    std::string list;
    for (const auto &[name, e] : options) list += std::string(list.empty() ? "" : ", ") + name;
    throw ConfigError(what + " must be one of: " + list);
}

const json kEmpty = json::object();

const json &section(const json &doc, const char *key) { return doc.contains(key) ? doc.at(key) : kEmpty; }

PotentialSpec parse_potential(const json &j) {
    Section s(j, "hamiltonian.potential", {"kind", "omega0", "v0", "vp", "a", "delta", "delta_x", "delta_y", "table"});
    std::string kind = s.string("kind", "zero");
    if (kind == "zero") return {};
    if (kind == "harmonic") return harmonic_potential(s.number("omega0", 4.0));
    if (kind == "double_well") {
        return double_well_potential(s.number("v0", -59.3), s.number("vp", 41.51), s.number("a", kDoubleWellOffset),
                                     s.number("delta", 24.48), s.number("delta_x", 2.94), s.number("delta_y", 24.48));
    }
    if (kind == "table") {
        PotentialSpec p;
        p.kind = PotentialKind::table;
        p.table = s.numbers("table");
        return p;
    }
    throw ConfigError("hamiltonian.potential.kind must be one of: zero, harmonic, double_well, table");
}

InitialStateSpec parse_initial(const json &j, int dims) {
    Section s(j, "initial_state", {"kind", "center", "width", "decay", "offset", "index", "table"});
    InitialStateSpec out;
    out.kind = choose<InitialKind>("initial_state.kind", s.string("kind", "gaussian"),
                                   {{"gaussian", InitialKind::gaussian},
                                    {"exponential", InitialKind::exponential},
                                    {"bonding_s", InitialKind::bonding_s},
                                    {"antibonding_s", InitialKind::antibonding_s},
                                    {"bonding_px", InitialKind::bonding_px},
                                    {"position_basis", InitialKind::position_basis},
                                    {"custom_table", InitialKind::custom_table}});
    out.center = s.number("center", 0);
    out.width = s.number("width", 0);
    out.decay = s.number("decay", 0);
    out.offset = s.number("offset", 0);
    if (s.has("index")) {
        const json &idx = s.raw("index");
        if (!idx.is_array() || idx.size() > 3) throw ConfigError("initial_state.index must be an array of up to 3 integers");
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (!idx[i].is_number_unsigned()) throw ConfigError("initial_state.index must hold non-negative integers");
            out.index[i] = idx[i].get<std::size_t>();
        }
    }
    if (s.has("table")) {
        const json &t = s.raw("table");
        if (!t.is_string()) throw ConfigError("initial_state.table must be a string with table rows");
        std::istringstream in(t.get<std::string>());
        try {
            out.table = parse_state_table(in, dims);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("initial_state.table: ") + e.what());
        }
    }
    return out;
}

Schedule parse_schedule(const json &j) {
    Section s(j, "pite.schedule", {"kind", "dtau", "dtau_min", "dtau_max", "kappa"});
    std::string kind = s.string("kind", "constant");
    try {
        if (kind == "constant") return Schedule::constant(s.number("dtau", 0.02));
        if (kind == "ramp") return Schedule::ramp(s.number("dtau_min", 0.02), s.number("dtau_max", 0.05), s.number("kappa", 5));
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("pite.schedule: ") + e.what());
    }
    throw ConfigError("pite.schedule.kind must be one of: constant, ramp");
}

FiltrationConfig parse_filtration(const json &j) {
    Section s(j, "filtration", {"order", "targets", "errors", "sweep", "remainder_substep"});
    FiltrationConfig f;
    f.order = choose<FiltrationOrder>("filtration.order", s.string("order", "first"),
                                      {{"first", FiltrationOrder::first}, {"second", FiltrationOrder::second}});
    f.remainder_substep = s.number("remainder_substep", 0.005);
    if (!(f.remainder_substep > 0)) throw ConfigError("filtration.remainder_substep must be positive");
    if (s.has("targets")) {
        const json &t = s.raw("targets");
        if (!t.is_array()) throw ConfigError("filtration.targets must be an array");
        for (std::size_t i = 0; i < t.size(); ++i) {
            Section ts(t[i], "filtration.targets[" + std::to_string(i) + "]", {"index", "reference"});
            FiltrationTarget ft{ts.integer("index", 0), ts.integer("reference", 1)};
            if (ft.index < 0 || ft.reference < 0 || ft.index == ft.reference)
                throw ConfigError("filtration targets need distinct non-negative index and reference");
            f.targets.push_back(ft);
        }
    }
    auto index_key = [](const std::string &k, const char *where) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(k, &pos);
            if (pos == k.size() && v >= 0) return v;
        } catch (const std::exception &) {
        }
        throw ConfigError(std::string(where) + " keys must be eigenstate indices, got '" + k + "'");
    };
    if (s.has("errors")) {
        const json &e = s.raw("errors");
        if (!e.is_object()) throw ConfigError("filtration.errors must map indices to numbers");
        for (const auto &[k, v] : e.items()) {
            if (!v.is_number()) throw ConfigError("filtration.errors values must be numbers");
            f.errors[index_key(k, "filtration.errors")] = v.get<double>();
        }
    }
    if (s.has("sweep")) {
        const json &e = s.raw("sweep");
        if (!e.is_object()) throw ConfigError("filtration.sweep must map indices to arrays");
        for (const auto &[k, v] : e.items()) {
            if (!v.is_array() || v.empty()) throw ConfigError("filtration.sweep values must be non-empty arrays");
            std::vector<double> vals;
            for (const auto &x : v) {
                if (!x.is_number()) throw ConfigError("filtration.sweep values must be numbers");
                vals.push_back(x.get<double>());
            }
            f.sweep[index_key(k, "filtration.sweep")] = vals;
        }
    }
    return f;
}

ObservablesConfig parse_observables(const json &j) {
    Section s(j, "observables", {"source", "eigen_index", "method", "d", "measurement", "charge_units"});
    ObservablesConfig o;
    o.source = choose<StateSource>("observables.source", s.string("source", "eigenstate"),
                                   {{"initial", StateSource::initial},
                                    {"eigenstate", StateSource::eigenstate},
                                    {"pite", StateSource::pite}});
    o.eigen_index = s.integer("eigen_index", 0);
    if (o.eigen_index < 0) throw ConfigError("observables.eigen_index must be non-negative");
    o.method = choose<CurrentMethod>("observables.method", s.string("method", "measured"),
                                     {{"measured", CurrentMethod::measured}, {"oracle", CurrentMethod::oracle}});
    o.d = s.integer("d", 1);
    o.charge_units = s.boolean("charge_units", false);
    if (s.has("measurement")) {
        Section m(s.raw("measurement"), "observables.measurement", {"mode", "shots"});
        o.measurement.mode = choose<MeasurementMode>("observables.measurement.mode", m.string("mode", "exact"),
                                                     {{"exact", MeasurementMode::exact}, {"sampled", MeasurementMode::sampled}});
        int shots = m.integer("shots", 0);
        if (shots < 0) throw ConfigError("observables.measurement.shots must be non-negative");
        if (o.measurement.mode == MeasurementMode::sampled && shots == 0)
            throw ConfigError("sampled measurement needs observables.measurement.shots > 0");
        o.measurement.shots = static_cast<std::uint64_t>(shots);
    }
    return o;
}

json base_harmonic() {
    return {{"grid", {{"n", 6}, {"dims", 2}, {"box_len", 120.0}}},
            {"hamiltonian",
             {{"mass_ratio", 0.067}, {"B_tesla", 5.0}, {"gauge_center", 60.0}, {"potential", {{"kind", "harmonic"}, {"omega0", 4.0}}}}},
            {"pite", {{"m0", 0.9}, {"splitting", "TVT"}, {"n_steps", 30}, {"n_eigen", 10}}}};
}

json base_double_well() {
    return {{"grid", {{"n", 6}, {"dims", 2}, {"box_len", 120.0}}},
            {"hamiltonian",
             {{"mass_ratio", 0.067},
              {"B_tesla", 3.0},
              {"gauge_center", 60.0},
              {"potential",
               {{"kind", "double_well"},
                {"v0", -59.3},
                {"vp", 41.51},
                {"a", kDoubleWellOffset},
                {"delta", 24.48},
                {"delta_x", 2.94},
                {"delta_y", 24.48}}}}},
            {"pite", {{"m0", 0.9}, {"splitting", "TVT"}, {"n_steps", 30}, {"n_eigen", 10}}}};
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"harmonic-gaussian", "harmonic-exponential", "dw-bonding-s", "dw-antibonding-s", "dw-px-filtered"};
}

json preset(const std::string &name) {
    json doc;
    if (name == "harmonic-gaussian") {
        doc = base_harmonic();
        doc["description"] = "harmonic dot, omega0 = 4 meV, B = 5 T, Gaussian w = 20 nm, ramp 0.02 to 0.05 meV^-1, kappa 5";
        doc["initial_state"] = {{"kind", "gaussian"}, {"width", 20.0}};
        doc["pite"]["schedule"] = {{"kind", "ramp"}, {"dtau_min", 0.02}, {"dtau_max", 0.05}, {"kappa", 5.0}};
    } else if (name == "harmonic-exponential") {
        doc = base_harmonic();
        doc["description"] = "harmonic dot, omega0 = 4 meV, B = 5 T, exponential d = 15 nm, ramp 0.006 to 0.035 meV^-1, kappa 5";
        doc["initial_state"] = {{"kind", "exponential"}, {"decay", 15.0}};
        doc["pite"]["schedule"] = {{"kind", "ramp"}, {"dtau_min", 0.006}, {"dtau_max", 0.035}, {"kappa", 5.0}};
    } else if (name == "dw-bonding-s" || name == "dw-antibonding-s") {
        bool bonding = name == "dw-bonding-s";
        doc = base_double_well();
        doc["description"] = std::string("double dot, B = 3 T, ") + (bonding ? "bonding" : "antibonding") +
                             " s orbital w = 11 nm, ramp 0.004 to 0.008 meV^-1, kappa 10";
        doc["initial_state"] = {{"kind", bonding ? "bonding_s" : "antibonding_s"}, {"width", 11.0}, {"offset", kDoubleWellOffset}};
        doc["pite"]["schedule"] = {{"kind", "ramp"}, {"dtau_min", 0.004}, {"dtau_max", 0.008}, {"kappa", 10.0}};
    } else if (name == "dw-px-filtered") {
        doc = base_double_well();
        doc["description"] = "double dot, B = 3 T, p_x bonding orbital w = 11 nm, first-order filtration of phi0 and phi5, "
                             "ramp 0.003 to 0.005 meV^-1, kappa 10";
        doc["initial_state"] = {{"kind", "bonding_px"}, {"width", 11.0}, {"offset", kDoubleWellOffset}};
        doc["pite"]["schedule"] = {{"kind", "ramp"}, {"dtau_min", 0.003}, {"dtau_max", 0.005}, {"kappa", 10.0}};
        doc["pite"]["n_steps"] = 20;
        doc["filtration"] = {{"order", "first"},
                             {"targets", json::array({{{"index", 0}, {"reference", 2}}, {{"index", 5}, {"reference", 2}}})}};
    } else {
        std::string list;
        for (const auto &p : preset_names()) list += (list.empty() ? "" : ", ") + p;
        throw ConfigError("unknown preset '" + name + "' (available: " + list + ")");
    }
    doc["preset"] = name;
    return doc;
}

void merge(json &base, const json &overlay) {
    if (!base.is_object() || !overlay.is_object()) {
        base = overlay;
        return;
    }
    for (const auto &[k, v] : overlay.items()) {
        if (base.contains(k) && base[k].is_object() && v.is_object()) {
            merge(base[k], v);
        } else {
            base[k] = v;
        }
    }
}

void apply_override(json &doc, const std::string &assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("--set expects key.path=value, got '" + assignment + "'");
    }
    std::string path = assignment.substr(0, eq);
    std::string text = assignment.substr(eq + 1);
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) value = text;
    json *node = &doc;
    std::size_t start = 0;
    while (true) {
        auto dot = path.find('.', start);
        std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (key.empty()) throw ConfigError("--set has an empty key in '" + path + "'");
        if (!node->is_object()) *node = json::object();
        if (dot == std::string::npos) {
            (*node)[key] = value;
            return;
        }
        node = &(*node)[key];
        start = dot + 1;
    }
}

Config parse_config(const json &doc) {
    Section top(doc, "",
                {"preset", "description", "units_check", "grid", "hamiltonian", "initial_state", "pite", "filtration",
                 "observables", "diagonalize", "derivative_demo", "gatecount", "outputs"});
    Config c;
    c.preset = top.string("preset", "");
    c.description = top.string("description", "");
    c.units_check = top.boolean("units_check", false);

    Section grid(section(doc, "grid"), "grid", {"n", "dims", "box_len"});
    Section ham(section(doc, "hamiltonian"), "hamiltonian", {"mass_ratio", "B_tesla", "gauge_center", "potential"});
    try {
        c.spec.grid = build_grid(grid.integer("n", 6), grid.integer("dims", 2), grid.number("box_len", 120.0));
        c.spec.mass_ratio = ham.number("mass_ratio", 0.067);
        c.spec.gauge = make_gauge(ham.number("B_tesla", 0.0), ham.number("gauge_center", 0.5 * c.spec.grid.box_len));
        c.spec.potential = parse_potential(section(section(doc, "hamiltonian"), "potential"));
        validate(c.spec);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }

    c.initial = parse_initial(section(doc, "initial_state"), c.spec.grid.dims);

    Section pite(section(doc, "pite"), "pite", {"m0", "splitting", "schedule", "n_steps", "n_eigen"});
    Splitting split = choose<Splitting>("pite.splitting", pite.string("splitting", "TVT"),
                                        {{"TV", Splitting::TV}, {"TVT", Splitting::TVT}});
    try {
        c.pite = PiteParams::from_m0(pite.number("m0", 0.9), split);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("pite.m0: ") + e.what());
    }
    c.schedule = parse_schedule(section(section(doc, "pite"), "schedule"));
    c.n_steps = pite.integer("n_steps", 30);
    if (c.n_steps < 0) throw ConfigError("pite.n_steps must be non-negative");
    c.n_eigen = pite.integer("n_eigen", 10);
    if (c.n_eigen < 0 || c.n_eigen > 32) throw ConfigError("pite.n_eigen must lie in [0, 32]");

    if (doc.contains("filtration")) c.filtration = parse_filtration(doc.at("filtration"));
    c.observables = parse_observables(section(doc, "observables"));

    Section diag(section(doc, "diagonalize"), "diagonalize", {"count", "B_tesla", "eigenvectors"});
    if (diag.has("count")) {
        c.n_eigen = diag.integer("count", c.n_eigen);
        if (c.n_eigen < 1 || c.n_eigen > 32) throw ConfigError("diagonalize.count must lie in [1, 32]");
    }
    c.field_sweep = diag.numbers("B_tesla");
    c.write_eigenvectors = diag.boolean("eigenvectors", false);

    Section dd(section(doc, "derivative_demo"), "derivative_demo", {"n", "box_len", "width", "wave_number", "center"});
    c.derivative.n = dd.integer("n", 5);
    c.derivative.box_len = dd.number("box_len", 40.0);
    c.derivative.width = dd.number("width", 6.0);
    c.derivative.wave_number = dd.number("wave_number", 0.4);
    c.derivative.center = dd.number("center", 1.3);
    if (c.derivative.n < 2 || c.derivative.n > 8 || !(c.derivative.width > 0) || !(c.derivative.box_len > 0))
        throw ConfigError("derivative_demo needs 2 <= n <= 8 and positive width and box_len");

    Section gc(section(doc, "gatecount"), "gatecount", {"n", "splitting", "scenario", "subcosts"});
    c.gatecount = section(doc, "gatecount");
    if (gc.has("subcosts")) {
        Section(gc.raw("subcosts"), "gatecount.subcosts", {"c_S", "c_ADD", "c_Ue", "c_CUe"});
    }

    Section out(section(doc, "outputs"), "outputs", {"directory", "formats"});
    c.out_dir = out.string("directory", "out");
    if (out.has("formats")) {
        const json &f = out.raw("formats");
        if (!f.is_array()) throw ConfigError("outputs.formats must be an array");
        for (const auto &x : f) {
            if (x != "csv") throw ConfigError("outputs.formats supports only \"csv\"");
        }
    }
    return c;
}

}  // namespace fqemag::cli
