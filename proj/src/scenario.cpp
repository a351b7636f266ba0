#include "wqed/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "wqed/chain.hpp"
#include "wqed/correlations.hpp"
#include "wqed/regression.hpp"
#include "wqed/single_emitter.hpp"
#include "wqed/spectral_filter.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wqed {

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Section name -> allowed keys; the empty section holds top-level keys.
const std::map<std::string, std::vector<std::string>>& known_keys() {
    static const std::map<std::string, std::vector<std::string>> k = {
        {"", {"scenario", "threads"}},
        {"params", {"beta_r", "beta_l", "beta_s", "delta"}},
        {"chain", {"n", "k0dz", "phases", "beta_r", "beta_l", "beta_s", "delta"}},
        {"drive", {"amplitude", "sigma", "area", "center"}},
        {"grid", {"zeta_end", "n_steps"}},
        {"filter", {"kind", "kappa", "omega_c", "table"}},
        {"freq", {"omega_max", "n_freq"}},
        {"sweep", {"parameter", "values", "parameter2", "values2"}},
        {"output", {"dir", "grid_bin"}},
    };
    return k;
}

void check_known(const ConfigMap& cfg) {
    for (const auto& [sec, kv] : cfg) {
        const auto it = known_keys().find(sec);
        if (it == known_keys().end())
            throw InvalidParams("unknown config section [" + sec + "]");
        for (const auto& [key, value] : kv) {
            (void)value;
            if (std::find(it->second.begin(), it->second.end(), key) == it->second.end())
                throw InvalidParams("unknown key '" + key + "' in section [" + sec + "]");
        }
    }
}

// Typed accessors over the raw map; errors name section.key.
struct Cfg {
    const ConfigMap& m;

    bool has(const std::string& sec, const std::string& key) const {
        const auto s = m.find(sec);
        return s != m.end() && s->second.count(key) > 0;
    }

    std::string str(const std::string& sec, const std::string& key,
                    const std::string& def = {}) const {
        const auto s = m.find(sec);
        if (s == m.end()) return def;
        const auto k = s->second.find(key);
        return k == s->second.end() ? def : k->second;
    }

    double num(const std::string& sec, const std::string& key, double def) const {
        if (!has(sec, key)) return def;
        const std::string raw = str(sec, key);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(raw, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != raw.size() || !std::isfinite(v))
            throw InvalidParams(sec + "." + key + ": not a finite number: '" + raw + "'");
        return v;
    }

    int integer(const std::string& sec, const std::string& key, int def) const {
        const double v = num(sec, key, def);
        if (v != std::floor(v)) throw InvalidParams(sec + "." + key + ": expected an integer");
        return static_cast<int>(v);
    }

    bool flag(const std::string& sec, const std::string& key, bool def) const {
        if (!has(sec, key)) return def;
        const std::string raw = str(sec, key);
        if (raw == "true" || raw == "1") return true;
        if (raw == "false" || raw == "0") return false;
        throw InvalidParams(sec + "." + key + ": expected true/false");
    }

    std::vector<double> list(const std::string& sec, const std::string& key) const {
        std::string raw = str(sec, key);
        std::replace(raw.begin(), raw.end(), ',', ' ');
        std::istringstream in(raw);
        std::vector<double> out;
        double v = 0.0;
        while (in >> v) {
            if (!std::isfinite(v))
                throw InvalidParams(sec + "." + key + ": values must be finite");
            out.push_back(v);
        }
        std::string rest;
        if (in.clear(), in >> rest)
            throw InvalidParams(sec + "." + key + ": not a number list: '" + raw + "'");
        return out;
    }
};

std::string fmt(double v) { return format_number(v); }

std::string csv_row(const std::vector<double>& vals) {
    std::string row;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) row += ',';
        row += fmt(vals[i]);
    }
    row += '\n';
    return row;
}

SystemParams params_from(const Cfg& c, double def_beta_r, bool symmetric_default) {
    const double br = c.num("params", "beta_r", def_beta_r);
    const double bl = c.num("params", "beta_l", symmetric_default ? br : 0.0);
    const double bs = c.num("params", "beta_s", 1.0 - br - bl);
    return {br, bl, bs, c.num("params", "delta", 0.0)};
}

TimeGrid grid_from(const Cfg& c, double def_end, double def_h = 0.01) {
    const double end = c.num("grid", "zeta_end", def_end);
    const int def_steps = static_cast<int>(std::lround(end / def_h));
    return {0.0, end, c.integer("grid", "n_steps", def_steps)};
}

std::optional<std::vector<double>> sweep_values(const Cfg& c, const std::string& scenario,
                                                const std::string& expect,
                                                const std::string& param_key,
                                                const std::string& values_key) {
    if (!c.has("sweep", param_key) && !c.has("sweep", values_key)) return std::nullopt;
    const std::string p = c.str("sweep", param_key);
    if (p != expect)
        throw InvalidParams("sweep." + param_key + ": scenario '" + scenario + "' sweeps '" +
                            expect + "', got '" + p + "'");
    const auto vals = c.list("sweep", values_key);
    if (vals.empty()) throw InvalidParams("sweep." + values_key + " is empty");
    return vals;
}

void reject_sweep(const Cfg& c, const std::string& scenario) {
    if (c.m.count("sweep"))
        throw InvalidParams("scenario '" + scenario + "' does not support a sweep axis");
}

json grid_json(const TimeGrid& g) {
    return {{"zeta_end", g.zeta_end}, {"n_steps", g.n_steps}};
}

// Everything a scenario produces before persistence.
struct RunOutput {
    std::string csv;
    json summary;
    std::optional<TriangularGrid> grid_dump;  // two-photon triangle, if any
};

// ---- pulsed pipeline shared by pulsed-g2, validate, and the filter scenarios.

struct PulsedFields {
    TimeGrid grid;
    DriveEnvelope drive;
    std::vector<cxd> pg, pe;  // sqrt(beta_r)-scaled zeta_T slices
    TriangularGrid rr;        // beta_r-scaled two-photon triangle
    double g2p = 0.0, mean_n = 0.0;
};

PulsedFields pulsed_fields(const Cfg& c, double sigma) {
    PulsedFields out;
    out.drive = gaussian_side_pulse(sigma, c.num("drive", "area", kPi),
                                    c.num("drive", "center", -1.0));
    out.grid = grid_from(c, out.drive.pulse_center() + 14.0);
    const SystemParams p = params_from(c, 1.0, false);
    const SingleEmitterResult res = run_single_emitter(p, out.drive, out.grid);

    const double sb = std::sqrt(p.beta_r);
    const int n = out.grid.n_nodes();
    out.pg.resize(n);
    out.pe.resize(n);
    for (int i = 0; i < n; ++i) {
        out.pg[i] = sb * res.phi_g_base[i];
        out.pe[i] = sb * res.phi_e_base[i];
    }
    out.rr = res.two_base;
    for (cxd& v : out.rr.data) v *= p.beta_r;
    out.g2p = pulsed_g2(out.rr, out.pg, out.grid);
    out.mean_n = mean_photons(out.pg, out.rr, out.grid);
    return out;
}

FilterSpec filter_from(const Cfg& c, const std::string& kind, double kappa) {
    const double wc = c.num("filter", "omega_c", 0.0);
    if (kind == "lorentzian") return lorentzian_filter(kappa, wc);
    if (kind == "gaussian") return gaussian_filter(kappa, wc);
    if (kind == "tabulated") {
        const std::string path = c.str("filter", "table");
        if (path.empty()) throw InvalidParams("filter.table: path required for tabulated kind");
        return tabulated_filter_from_file(path);
    }
    throw InvalidParams("filter.kind: expected lorentzian/gaussian/tabulated, got '" + kind + "'");
}

FrequencyGrid freq_grid_from(const Cfg& c, const std::vector<FilterSpec>& filters,
                             const TimeGrid& tgrid) {
    if (c.has("freq", "omega_max") || c.has("freq", "n_freq")) {
        FrequencyGrid g;
        g.omega_max = c.num("freq", "omega_max", g.omega_max);
        g.n_freq = c.integer("freq", "n_freq", g.n_freq);
        for (const FilterSpec& f : filters) g.validate_for(f, tgrid);
        return g;
    }
    return default_frequency_grid(filters, tgrid);
}

// ---- scenarios.

RunOutput run_steady(const Cfg& c) {
    reject_sweep(c, "steady-g2");
    const SystemParams p = params_from(c, 0.25, true);
    const DriveEnvelope drive = constant_waveguide_drive(c.num("drive", "amplitude", 0.01));
    const TimeGrid grid = grid_from(c, 26.0);
    const SteadyG2Result r = g2_normalized_steady(p, drive, grid);

    std::string csv = "zeta,g2\n";
    for (std::size_t i = 0; i < r.delay.size(); ++i) csv += csv_row({r.delay[i], r.g2[i]});
    json s = {{"g2_zero", r.g2_zero},
              {"beta_r", p.beta_r},
              {"beta_l", p.beta_l},
              {"beta_s", p.beta_s},
              {"delta", p.delta},
              {"grid", grid_json(grid)}};
    return {std::move(csv), std::move(s), std::nullopt};
}

RunOutput run_chain_g2(const Cfg& c) {
    reject_sweep(c, "chain-g2");
    ChainParams p;
    p.n = c.integer("chain", "n", 5);
    if (p.n < 1) throw InvalidParams("chain.n must be >= 1");
    p.beta_r = c.num("chain", "beta_r", 0.45);
    p.beta_l = c.num("chain", "beta_l", p.beta_r);
    p.beta_s = c.num("chain", "beta_s", 1.0 - p.beta_r - p.beta_l);
    p.delta = c.num("chain", "delta", 0.0);
    if (c.has("chain", "phases")) {
        p.phases = c.list("chain", "phases");
        if (static_cast<int>(p.phases.size()) != p.n)
            throw InvalidParams("chain.phases: need one phase per emitter");
    } else {
        const double k0dz = c.num("chain", "k0dz", kPi);
        p.phases.resize(p.n);
        for (int j = 0; j < p.n; ++j) p.phases[j] = j * k0dz;
    }
    // Near-mirror chains turn the g2 numerator into a delicate cancellation;
    // a weaker probe keeps the quasi-steady error terms out of it.
    const DriveEnvelope drive = constant_waveguide_drive(c.num("drive", "amplitude", 0.001));
    const TimeGrid grid = grid_from(c, 26.0);
    const SteadyG2Result r = g2_normalized_steady_chain(p, drive, grid);

    std::string csv = "zeta,g2\n";
    for (std::size_t i = 0; i < r.delay.size(); ++i) csv += csv_row({r.delay[i], r.g2[i]});
    json s = {{"g2_zero", r.g2_zero},
              {"n_emitters", p.n},
              {"beta_r", p.beta_r},
              {"beta_l", p.beta_l},
              {"beta_s", p.beta_s},
              {"delta", p.delta},
              {"grid", grid_json(grid)}};
    return {std::move(csv), std::move(s), std::nullopt};
}

RunOutput run_pulsed(const Cfg& c) {
    std::vector<double> sigmas;
    if (auto sv = sweep_values(c, "pulsed-g2", "sigma", "parameter", "values"))
        sigmas = *sv;
    else
        sigmas = {c.num("drive", "sigma", 0.1)};
    if (c.has("sweep", "parameter2"))
        throw InvalidParams("sweep.parameter2: pulsed-g2 supports a single sweep axis");

    std::string csv = "sigma,g2p,mean_n\n";
    json points = json::array();
    std::optional<TriangularGrid> dump;
    for (double sigma : sigmas) {
        PulsedFields f = pulsed_fields(c, sigma);
        csv += csv_row({sigma, f.g2p, f.mean_n});
        points.push_back({{"sigma", sigma}, {"g2p", f.g2p}, {"mean_n", f.mean_n}});
        dump = std::move(f.rr);
    }
    return {std::move(csv), json{{"points", std::move(points)}}, std::move(dump)};
}

RunOutput run_validate(const Cfg& c) {
    reject_sweep(c, "validate");
    const double sigma = c.num("drive", "sigma", 0.1);
    PulsedFields f = pulsed_fields(c, sigma);
    const double g2p_oracle = regression_pulsed_g2(f.drive, c.num("params", "delta", 0.0), f.grid);
    const double n_oracle = regression_mean_photons(f.drive, c.num("params", "delta", 0.0), f.grid);
    const double rel = std::abs(f.g2p - g2p_oracle) / std::abs(g2p_oracle);

    std::string csv = "sigma,g2p_ansatz,g2p_oracle,rel_diff\n";
    csv += csv_row({sigma, f.g2p, g2p_oracle, rel});
    json s = {{"g2p_ansatz", f.g2p},
              {"g2p_oracle", g2p_oracle},
              {"rel_diff", rel},
              {"mean_n_ansatz", f.mean_n},
              {"mean_n_oracle", n_oracle},
              {"sigma", sigma},
              {"grid", grid_json(f.grid)}};
    return {std::move(csv), std::move(s), std::move(f.rr)};
}

RunOutput run_filter_map(const Cfg& c) {
    std::vector<double> sigmas, kappas;
    if (auto sv = sweep_values(c, "filter-map", "sigma", "parameter", "values"))
        sigmas = *sv;
    else
        sigmas = {c.num("drive", "sigma", 0.1)};
    if (auto kv = sweep_values(c, "filter-map", "kappa", "parameter2", "values2"))
        kappas = *kv;
    else
        kappas = {c.num("filter", "kappa", 1.0)};

    const std::string kind = c.str("filter", "kind", "lorentzian");
    if (kind == "tabulated")
        throw InvalidParams("filter.kind: filter-map needs a parametric kind to sweep kappa");

    std::string csv = "sigma,kappa,g2p,eta_sp\n";
    json points = json::array();
    std::optional<TriangularGrid> dump;
    for (double sigma : sigmas) {
        PulsedFields f = pulsed_fields(c, sigma);
        std::vector<FilterSpec> filters;
        for (double k : kappas) filters.push_back(filter_from(c, kind, k));
        const FrequencyGrid fg = freq_grid_from(c, filters, f.grid);
        const auto res = filtered_pulsed_batch(f.rr, f.pg, f.pe, filters, fg, f.grid);
        for (std::size_t i = 0; i < kappas.size(); ++i) {
            csv += csv_row({sigma, kappas[i], res[i].g2p, res[i].eta_sp});
            points.push_back({{"sigma", sigma},
                              {"kappa", kappas[i]},
                              {"g2p", res[i].g2p},
                              {"eta_sp", res[i].eta_sp}});
        }
        dump = std::move(f.rr);
    }
    return {std::move(csv), json{{"filter_kind", kind}, {"points", std::move(points)}},
            std::move(dump)};
}

RunOutput run_filter_compare(const Cfg& c) {
    std::vector<double> kappas;
    if (auto kv = sweep_values(c, "filter-compare", "kappa", "parameter", "values"))
        kappas = *kv;
    else
        kappas = {c.num("filter", "kappa", 1.0)};
    if (c.has("sweep", "parameter2"))
        throw InvalidParams("sweep.parameter2: filter-compare supports a single sweep axis");

    const double sigma = c.num("drive", "sigma", 0.1);
    PulsedFields f = pulsed_fields(c, sigma);
    std::vector<FilterSpec> filters;
    for (double k : kappas) {
        filters.push_back(filter_from(c, "lorentzian", k));
        filters.push_back(filter_from(c, "gaussian", k));
    }
    const FrequencyGrid fg = freq_grid_from(c, filters, f.grid);
    const auto res = filtered_pulsed_batch(f.rr, f.pg, f.pe, filters, fg, f.grid);

    std::string csv = "kappa,g2p_lorentzian,g2p_gaussian,eta_lorentzian,eta_gaussian\n";
    json points = json::array();
    for (std::size_t i = 0; i < kappas.size(); ++i) {
        const FilteredResult& lo = res[2 * i];
        const FilteredResult& ga = res[2 * i + 1];
        csv += csv_row({kappas[i], lo.g2p, ga.g2p, lo.eta_sp, ga.eta_sp});
        points.push_back({{"kappa", kappas[i]},
                          {"g2p_lorentzian", lo.g2p},
                          {"g2p_gaussian", ga.g2p},
                          {"eta_lorentzian", lo.eta_sp},
                          {"eta_gaussian", ga.eta_sp}});
    }
    json s = {{"sigma", sigma}, {"g2p_unfiltered", f.g2p}, {"mean_n_unfiltered", f.mean_n},
              {"points", std::move(points)}};
    return {std::move(csv), std::move(s), std::move(f.rr)};
}

RunOutput dispatch(const ConfigMap& cfg) {
    check_known(cfg);
    const Cfg c{cfg};
    const std::string scenario = c.str("", "scenario");
    if (scenario.empty()) throw InvalidParams("missing top-level 'scenario' key");
    apply_thread_count(c.integer("", "threads", 0));

    RunOutput out;
    if (scenario == "steady-g2")
        out = run_steady(c);
    else if (scenario == "pulsed-g2")
        out = run_pulsed(c);
    else if (scenario == "filter-map")
        out = run_filter_map(c);
    else if (scenario == "filter-compare")
        out = run_filter_compare(c);
    else if (scenario == "chain-g2")
        out = run_chain_g2(c);
    else if (scenario == "validate")
        out = run_validate(c);
    else
        throw InvalidParams("unknown scenario '" + scenario +
                            "'; expected one of steady-g2, pulsed-g2, filter-map, "
                            "filter-compare, chain-g2, validate");

    out.summary["scenario"] = scenario;
    out.summary["config"] = json(cfg);
    out.summary["config_text"] = config_to_text(cfg);
    return out;
}

void write_grid_bin(const std::string& path, const TriangularGrid& rr) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidParams("cannot write " + path);
    // Little-endian layout: two uint64 dims, then row-major complex<double>
    // of the symmetric n x n two-photon amplitude.
    const std::uint64_t dims[2] = {static_cast<std::uint64_t>(rr.n),
                                   static_cast<std::uint64_t>(rr.n)};
    out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
    std::vector<cxd> row(rr.n);
    for (int a = 0; a < rr.n; ++a) {
        for (int b = 0; b < rr.n; ++b) row[b] = rr.sym(a, b);
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size() * sizeof(cxd)));
    }
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void apply_thread_count(int threads) {
    if (threads < 0) throw InvalidParams("threads must be >= 0");
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

ConfigMap parse_config_text(const std::string& text) {
    ConfigMap cfg;
    std::string section;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw InvalidParams("config line " + std::to_string(lineno) +
                                    ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            cfg[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidParams("config line " + std::to_string(lineno) +
                                ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw InvalidParams("config line " + std::to_string(lineno) + ": empty key");
        if (cfg[section].count(key))
            throw InvalidParams("config line " + std::to_string(lineno) + ": duplicate key '" +
                                key + "'");
        cfg[section][key] = value;
    }
    return cfg;
}

ConfigMap parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParams("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string config_to_text(const ConfigMap& cfg) {
    std::string out;
    const auto root = cfg.find("");
    if (root != cfg.end())
        for (const auto& [k, v] : root->second) out += k + " = " + v + "\n";
    for (const auto& [sec, kv] : cfg) {
        if (sec.empty()) continue;
        out += "\n[" + sec + "]\n";
        for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
    }
    return out;
}

ScenarioResult run_scenario(const ConfigMap& cfg) {
    RunOutput out = dispatch(cfg);
    return {std::move(out.csv), out.summary.dump(2) + "\n"};
}

ScenarioResult run_scenario_to_dir(const ConfigMap& cfg, const std::string& out_dir) {
    RunOutput out = dispatch(cfg);
    const Cfg c{cfg};
    const std::string dir = out_dir.empty() ? c.str("output", "dir", "out") : out_dir;
    std::filesystem::create_directories(dir);

    {
        std::ofstream f(dir + "/result.csv", std::ios::binary);
        if (!f) throw InvalidParams("cannot write " + dir + "/result.csv");
        f << out.csv;
    }
    const std::string summary = out.summary.dump(2) + "\n";
    {
        std::ofstream f(dir + "/summary.json", std::ios::binary);
        if (!f) throw InvalidParams("cannot write " + dir + "/summary.json");
        f << summary;
    }
    if (c.flag("output", "grid_bin", false)) {
        if (!out.grid_dump)
            throw InvalidParams("output.grid_bin: no two-photon grid in scenario '" +
                                c.str("", "scenario") + "'");
        write_grid_bin(dir + "/grid.bin", *out.grid_dump);
    }
    return {std::move(out.csv), summary};
}

std::string schema_text() {
    return R"(Config format: plain text, 'key = value' lines grouped under [section]
headers; '#' starts a comment. Keys before any header are top-level.

scenario = steady-g2 | pulsed-g2 | filter-map | filter-compare | chain-g2 | validate
threads = <int>              worker threads; 0 = hardware default (default 0)

[params]                     single-emitter scenarios
beta_r = <float>             right-channel branching (default 0.25 steady, 1.0 pulsed)
beta_l = <float>             left-channel branching (default: beta_r steady, 0 pulsed)
beta_s = <float>             loss branching (default: 1 - beta_r - beta_l)
delta = <float>              drive detuning in Gamma units (default 0)

[chain]                      chain-g2 only
n = <int>                    number of emitters (default 5)
k0dz = <float>               uniform inter-emitter phase k0*dz (default pi)
phases = <float list>        explicit k0*z_j per emitter, overrides k0dz
beta_r, beta_l, beta_s, delta  as in [params] (defaults 0.45, beta_r, remainder, 0)

[drive]
amplitude = <float>          CW field amplitude (default 0.01 steady-g2, 0.001 chain-g2)
sigma = <float>              Gaussian pulse width in 1/Gamma (default 0.1)
area = <float>               pulse area (default pi)
center = <float>             pulse center; negative = auto 8*sigma (default auto)

[grid]
zeta_end = <float>           window length in 1/Gamma (default 26 CW, pulse+14 pulsed)
n_steps = <int>              grid intervals (default zeta_end / 0.01)

[filter]                     filter scenarios
kind = lorentzian | gaussian | tabulated   (default lorentzian)
kappa = <float>              bandwidth in Gamma units (default 1)
omega_c = <float>            center offset from the transition (default 0)
table = <path>               tabulated kind: rows 'omega re(T) im(T)'

[freq]                       optional frequency-grid override
omega_max = <float>          half-range of the frequency window
n_freq = <int>               frequency intervals

[sweep]                      pulsed-g2 (sigma), filter-compare (kappa),
                             filter-map (sigma x kappa)
parameter = <name>
values = <float list>
parameter2 = <name>          filter-map second axis
values2 = <float list>

[output]
dir = <path>                 output directory (default 'out')
grid_bin = true|false        also dump the two-photon amplitude grid (default false)

Outputs: result.csv (header row, 12-significant-digit floats, LF endings),
summary.json (scalars plus the full config echo), optional grid.bin (two
uint64 dims, then row-major little-endian complex double pairs).
Exit codes: 0 ok, 2 config/schema error, 3 numerical failure.
)";
}

std::vector<std::pair<std::string, std::string>> presets() {
    return {
        {"steady-antibunching",
         "scenario = steady-g2\n\n[params]\nbeta_r = 0.25\n\n[drive]\namplitude = 0.01\n\n"
         "[grid]\nzeta_end = 26\nn_steps = 2600\n"},
        {"pulsed-sigma-sweep",
         "scenario = pulsed-g2\n\n[sweep]\nparameter = sigma\n"
         "values = 0.05 0.1 0.2 0.5 1.0\n"},
        {"filter-efficiency-map",
         "scenario = filter-map\n\n[filter]\nkind = lorentzian\n\n[sweep]\n"
         "parameter = sigma\nvalues = 0.1\nparameter2 = kappa\nvalues2 = 1 2 5 10\n"},
        {"filter-compare",
         "scenario = filter-compare\n\n[drive]\nsigma = 0.1\n\n[sweep]\n"
         "parameter = kappa\nvalues = 1 2 5 10 100\n"},
        {"chain-mirror",
         "scenario = chain-g2\n\n[chain]\nn = 5\nbeta_r = 0.45\nbeta_l = 0.45\n"
         "k0dz = 3.141592653589793\n\n[grid]\nzeta_end = 26\nn_steps = 1500\n"},
        {"chain-quarter-wave",
         "scenario = chain-g2\n\n[chain]\nn = 5\nbeta_r = 0.15\nbeta_l = 0.15\n"
         "k0dz = 0.7853981633974483\n\n[grid]\nzeta_end = 26\nn_steps = 1500\n"},
        {"validate-pulsed",
         "scenario = validate\n\n[drive]\nsigma = 0.1\n\n[grid]\nn_steps = 2000\n"},
    };
}

}  // namespace wqed
