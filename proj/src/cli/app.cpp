// Copyright 2026 The ghznet Authors
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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ghznet/channels.hpp"
#include "ghznet/cli.hpp"
#include "ghznet/error.hpp"
#include "ghznet/serialize.hpp"
#include "ghznet/state_factory.hpp"
#include "ghznet/sweep.hpp"
#include "ghznet/symplectic.hpp"
#include "ghznet/tomography.hpp"

namespace ghznet::cli {

namespace {

namespace fs = std::filesystem;

struct ErrorBars {
    std::size_t samples = 10000;
    std::size_t draws = 200;
};

struct RunConfig {
    std::optional<std::string> preset;
    std::optional<Json> scenario;
    std::string output_dir;
    std::vector<std::string> formats;
    std::uint64_t seed = 0;
    int verbosity = 0;
    unsigned jobs = 1;
    std::optional<ErrorBars> error_bars;
};

struct RunFlags {
    std::string config_path;
    std::string preset;
    std::string scenario_path;
    std::string output_dir;
    std::vector<std::string> formats;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> jobs;
    int verbosity = 0;
};

struct InspectFlags {
    bool measured = false;
    std::optional<std::size_t> vacuum;
    std::string ghz;
    bool pure = false;
    std::string symmetric;
    std::string asymmetric;
    std::string file;
    std::optional<std::size_t> perturb_samples;
    std::size_t draws = 200;
    std::uint64_t seed = 0;
};

struct TuneFlags {
    double eta = 1.0;
    double transmissivity = 0.9;
    double g_a = 1.0;
    double noise_var = 5.0;
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Config:
            return kExitConfig;
        case ErrorKind::Io:
            return kExitIo;
        default:
            return kExitScenario;
    }
}

unsigned default_jobs() {
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<double> parse_list(const std::string &text, std::size_t expected, const char *what) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw Error(ErrorKind::Spec, fmt::format("{}: '{}' is not a number", what, item));
        }
    }
    if (values.size() != expected) {
        throw Error(ErrorKind::Spec, fmt::format("{} expects {} comma-separated values, got '{}'", what, expected, text));
    }
    return values;
}

RunConfig resolve_run_config(const RunFlags &flags) {
    RunConfig cfg;
    if (!flags.config_path.empty()) {
        const Json j = load_json_file(flags.config_path);
        if (!j.is_object()) {
            throw Error(ErrorKind::Config, fmt::format("{}: config must be an object", flags.config_path));
        }
        static const std::vector<std::string> kKnown{"preset", "scenario",  "output_dir", "formats",
                                                     "seed",   "verbosity", "jobs",       "error_bars"};
        for (const auto &[key, value] : j.items()) {
            if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
                throw Error(ErrorKind::Config, fmt::format("{}: unknown config section '{}'", flags.config_path, key));
            }
        }
        try {
            if (j.contains("preset")) {
                cfg.preset = j.at("preset").get<std::string>();
            }
            if (j.contains("scenario")) {
                cfg.scenario = j.at("scenario");
            }
            cfg.output_dir = j.value("output_dir", std::string());
            if (j.contains("formats")) {
                cfg.formats = j.at("formats").get<std::vector<std::string>>();
            }
            cfg.seed = j.value("seed", std::uint64_t{0});
            cfg.verbosity = j.value("verbosity", 0);
            cfg.jobs = j.value("jobs", default_jobs());
            if (j.contains("error_bars")) {
                const auto &eb = j.at("error_bars");
                cfg.error_bars = ErrorBars{eb.value("samples", std::size_t{10000}), eb.value("draws", std::size_t{200})};
            }
        } catch (const Json::exception &e) {
            throw Error(ErrorKind::Config, fmt::format("{}: {}", flags.config_path, e.what()));
        }
    } else {
        cfg.jobs = default_jobs();
    }

    if (!flags.preset.empty()) {
        cfg.preset = flags.preset;
        cfg.scenario.reset();
    }
    if (!flags.scenario_path.empty()) {
        cfg.scenario = load_json_file(flags.scenario_path);
        cfg.preset.reset();
    }
    if (!flags.output_dir.empty()) {
        cfg.output_dir = flags.output_dir;
    }
    if (cfg.output_dir.empty()) {
        const char *env = std::getenv(kOutputDirEnv);
        cfg.output_dir = env != nullptr && *env != '\0' ? env : ".";
    }
    if (!flags.formats.empty()) {
        cfg.formats = flags.formats;
    }
    if (cfg.formats.empty()) {
        cfg.formats = {"csv"};
    }
    for (const auto &f : cfg.formats) {
        if (f != "csv" && f != "json") {
            throw Error(ErrorKind::Config, fmt::format("unknown output format '{}'; expected csv or json", f));
        }
    }
    std::sort(cfg.formats.begin(), cfg.formats.end());
    cfg.formats.erase(std::unique(cfg.formats.begin(), cfg.formats.end()), cfg.formats.end());
    if (flags.seed) {
        cfg.seed = *flags.seed;
    }
    if (flags.jobs) {
        cfg.jobs = std::max(1u, *flags.jobs);
    }
    cfg.verbosity = std::max(cfg.verbosity, flags.verbosity);
    if (!cfg.preset && !cfg.scenario) {
        throw Error(ErrorKind::Config, "run needs --preset, --scenario or a config file naming one");
    }
    return cfg;
}

void write_file(const fs::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::Io, fmt::format("cannot open '{}' for writing", path.string()));
    }
    out << content;
    out.flush();
    if (!out) {
        throw Error(ErrorKind::Io, fmt::format("failed writing '{}'", path.string()));
    }
}

std::string format_ppt(const PptTriple &p) {
    return fmt::format("A={:.6f} B={:.6f} C={:.6f}", p.a, p.b, p.c);
}

std::string summary_text(const Dataset &data, const std::optional<PptSpread> &spread) {
    std::string out = fmt::format("dataset {}: {}\n", data.name, data.description);
    for (const auto &[key, value] : data.metadata) {
        out += fmt::format("  {} = {}\n", key, value);
    }
    for (const auto &s : data.sweeps) {
        const SweepSummary sum = summarize(s);
        out += fmt::format("[{}] {}\n", s.spec.id, s.spec.description);
        out += fmt::format("  source PPT: {}\n", format_ppt(sum.source_ppt));
        out += fmt::format("  regions along {}:\n", to_string(s.spec.axis));
        for (const auto &r : sum.regions) {
            out += fmt::format("    [{:.6g}, {:.6g}]  {:<3} {}\n", r.from, r.to, r.region, r.label);
        }
        if (sum.thresholds.empty()) {
            out += "  thresholds (PPT = 1): none on this grid\n";
        } else {
            out += "  thresholds (PPT = 1):\n";
            for (const auto &t : sum.thresholds) {
                out += fmt::format("    PPT_{}: {} = {:.6f}\n", mode_name(t.mode), to_string(s.spec.axis), t.value);
            }
        }
    }
    if (spread) {
        out += fmt::format("source PPT error bars ({} draws): sd A={:.6f} B={:.6f} C={:.6f}\n", spread->draws,
                           spread->stddev[0], spread->stddev[1], spread->stddev[2]);
    }
    return out;
}

int do_run(const RunFlags &flags, std::ostream &out) {
    const RunConfig cfg = resolve_run_config(flags);

    std::string name;
    std::string description;
    std::vector<ScenarioSpec> scenarios;
    if (cfg.preset) {
        name = *cfg.preset;
        scenarios = preset_scenarios(name);
        description = preset_description(name);
    } else {
        ScenarioSpec spec = scenario_from_json(*cfg.scenario);
        name = spec.id;
        description = spec.description;
        scenarios.push_back(std::move(spec));
    }
    if (name.empty() || name.find_first_of("/\\") != std::string::npos) {
        throw Error(ErrorKind::Config, fmt::format("dataset name '{}' is not usable as a file name", name));
    }

    Json resolved;
    if (cfg.preset) {
        resolved["preset"] = *cfg.preset;
    }
    resolved["scenarios"] = Json::array();
    for (const auto &s : scenarios) {
        resolved["scenarios"].push_back(scenario_to_json(s));
    }
    resolved["formats"] = cfg.formats;
    resolved["seed"] = cfg.seed;
    if (cfg.error_bars) {
        resolved["error_bars"] = {{"samples", cfg.error_bars->samples}, {"draws", cfg.error_bars->draws}};
    }

    Dataset data = cfg.preset ? run_preset(*cfg.preset, cfg.jobs)
                              : run_scenarios(name, description, std::move(scenarios), cfg.jobs);

    std::optional<PptSpread> spread;
    if (cfg.error_bars) {
        spread = ppt_spread(build_source(data.sweeps.front().spec.source), cfg.error_bars->samples,
                            cfg.error_bars->draws, cfg.seed);
    }

    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) {
        throw Error(ErrorKind::Io, fmt::format("cannot create output directory '{}': {}", cfg.output_dir, ec.message()));
    }
    const fs::path dir(cfg.output_dir);
    const std::string summary = summary_text(data, spread);
    for (const auto &format : cfg.formats) {
        if (format == "csv") {
            write_file(dir / (name + ".csv"), "# config: " + resolved.dump() + "\n" + dataset_to_csv(data));
        } else {
            Json j = dataset_to_json(data, resolved);
            if (spread) {
                j["error_bars"] = {{"stddev", spread->stddev}, {"mean", spread->mean}, {"draws", spread->draws}};
            }
            write_file(dir / (name + ".json"), j.dump(2) + "\n");
        }
    }
    write_file(dir / (name + ".summary.txt"), summary);

    out << summary;
    if (cfg.verbosity > 0) {
        for (const auto &format : cfg.formats) {
            out << "wrote " << (dir / (name + "." + format)).string() << "\n";
        }
    }
    return kExitOk;
}

CovMatrix inspect_source(const InspectFlags &f, std::string &label) {
    int chosen = (f.measured ? 1 : 0) + (f.vacuum ? 1 : 0) + (!f.ghz.empty() ? 1 : 0) + (!f.symmetric.empty() ? 1 : 0) +
                 (!f.asymmetric.empty() ? 1 : 0) + (!f.file.empty() ? 1 : 0);
    if (chosen != 1) {
        throw Error(ErrorKind::Config,
                    "inspect needs exactly one of --measured, --vacuum, --ghz, --symmetric, --asymmetric, --file");
    }
    if (f.measured) {
        label = "measured tripartite state";
        return measured_state();
    }
    if (f.vacuum) {
        if (*f.vacuum == 0) {
            throw Error(ErrorKind::Spec, "vacuum needs at least one mode");
        }
        label = fmt::format("{}-mode vacuum", *f.vacuum);
        return CovMatrix::identity(*f.vacuum);
    }
    if (!f.ghz.empty()) {
        if (f.ghz.rfind("r=", 0) == 0) {
            const double r = parse_list(f.ghz.substr(2), 1, "--ghz r=")[0];
            label = fmt::format("pure GHZ state, r = {}", r);
            return ideal_ghz_state(r);
        }
        if (f.ghz.rfind("db=", 0) == 0) {
            const auto db = parse_list(f.ghz.substr(3), 2, "--ghz db=");
            if (f.pure && db[0] != -db[1]) {
                throw Error(ErrorKind::Spec, "--pure requires squeeze_db == -antisqueeze_db");
            }
            label = fmt::format("GHZ state from {} dB / {} dB inputs", db[0], db[1]);
            return ghz_state({SqueezedModeSpec{db[0], db[1], SqueezeAxis::X}, SqueezedModeSpec{db[0], db[1], SqueezeAxis::P},
                              SqueezedModeSpec{db[0], db[1], SqueezeAxis::X}});
        }
        throw Error(ErrorKind::Spec, fmt::format("--ghz expects r=<r> or db=<squeeze>,<antisqueeze>, got '{}'", f.ghz));
    }
    if (!f.symmetric.empty()) {
        const auto v = parse_list(f.symmetric, 3, "--symmetric");
        label = fmt::format("symmetric state s={} t={} c={}", v[0], v[1], v[2]);
        return symmetric_state(v[0], v[1], v[2]);
    }
    if (!f.asymmetric.empty()) {
        const auto v = parse_list(f.asymmetric, 4, "--asymmetric");
        label = fmt::format("asymmetric state s={} t={} c={} c_x={}", v[0], v[1], v[2], v[3]);
        return asymmetric_state(v[0], v[1], v[2], v[3]);
    }
    std::ifstream probe(f.file);
    if (!probe) {
        throw Error(ErrorKind::Spec, fmt::format("cannot open covariance file '{}'", f.file));
    }
    label = f.file;
    try {
        return covariance_from_json(load_json_file(f.file)).cov;
    } catch (const Error &e) {
        throw Error(ErrorKind::Spec, e.what());
    }
}

int do_inspect(const InspectFlags &flags, std::ostream &out) {
    std::string label;
    const CovMatrix cov = inspect_source(flags, label);
    out << "state: " << label << "\n";
    out << "covariance (interleaved x,p order, shot-noise units):\n";
    for (std::size_t i = 0; i < cov.dim(); ++i) {
        out << " ";
        for (std::size_t j = 0; j < cov.dim(); ++j) {
            out << fmt::format(" {:9.4f}", cov(i, j));
        }
        out << "\n";
    }
    const auto eig = symplectic_eigenvalues(cov);
    out << "symplectic eigenvalues:";
    for (double v : eig) {
        out << fmt::format(" {:.10f}", v);
    }
    out << "\n";
    out << "physical: " << (eig.back() >= 1.0 - kPhysicalityTol ? "yes" : "no") << "\n";

    bool boundary = false;
    out << "PPT values:";
    for (std::size_t k = 0; k < cov.n_modes(); ++k) {
        const double v = ppt_value(cov, k);
        boundary = boundary || std::abs(v - 1.0) <= 1e-9;
        out << fmt::format(" PPT_{}={:.6f}", mode_name(k), v);
    }
    out << "\n";
    if (cov.n_modes() == 3) {
        const EntanglementClass cls = classify(cov);
        out << "class: " << cls.label() << " (region " << cls.region() << ")\n";
        using Q = Quadrature;
        const QuadratureTerm ab[] = {{kModeA, Q::X, 1.0}, {kModeB, Q::X, -1.0}};
        const QuadratureTerm ac[] = {{kModeA, Q::X, 1.0}, {kModeC, Q::X, -1.0}};
        const QuadratureTerm bc[] = {{kModeB, Q::X, 1.0}, {kModeC, Q::X, -1.0}};
        const QuadratureTerm psum[] = {{kModeA, Q::P, 1.0}, {kModeB, Q::P, 1.0}, {kModeC, Q::P, 1.0}};
        out << "correlation variances:\n";
        out << fmt::format("  var(xA - xB)      = {:.10f}\n", correlation_variance(cov, ab));
        out << fmt::format("  var(xA - xC)      = {:.10f}\n", correlation_variance(cov, ac));
        out << fmt::format("  var(xB - xC)      = {:.10f}\n", correlation_variance(cov, bc));
        out << fmt::format("  var(pA + pB + pC) = {:.10f}\n", correlation_variance(cov, psum));
        if (flags.perturb_samples) {
            const PptSpread spread = ppt_spread(cov, *flags.perturb_samples, flags.draws, flags.seed);
            out << fmt::format("PPT error bars ({} samples, {} draws): sd A={:.6f} B={:.6f} C={:.6f}\n",
                               *flags.perturb_samples, spread.draws, spread.stddev[0], spread.stddev[1],
                               spread.stddev[2]);
        }
    }
    if (boundary) {
        out << "note: a PPT value sits on the separability boundary (= 1); that cut is not certified entangled\n";
    }
    return kExitOk;
}

int do_tune(const TuneFlags &flags, std::ostream &out) {
    const double g_b = tuned_gb(flags.eta, flags.transmissivity, flags.g_a);
    out << fmt::format("eta = {}, T = {}, g_a = {}\n", flags.eta, flags.transmissivity, flags.g_a);
    out << fmt::format("tuned g_b = {:.6f}\n", g_b);
    if (g_b == 0.0) {
        out << "ratio g_a/g_b: n/a\n";
        out << "note: the channel adds no noise at this setting (eta = 1 or g_a = 0); revival is a no-op\n";
        return kExitOk;
    }
    out << fmt::format("ratio g_a/g_b = {:.6f}\n", flags.g_a / g_b);
    out << fmt::format("residual excess noise on the revived mode (N = {}):\n", flags.noise_var);
    out << "  g_b/tuned        g_b   residual\n";
    const ChannelSpec channel = ChannelSpec::noisy(flags.eta, flags.g_a, flags.noise_var);
    for (double factor : {0.0, 0.5, 0.9, 1.0, 1.1, 1.5, 2.0}) {
        const RevivalSpec rv{flags.transmissivity, factor * g_b};
        out << fmt::format("  {:9.2f} {:10.6f} {:10.6f}\n", factor, rv.g_b, residual_noise(channel, rv));
    }
    return kExitOk;
}

}  // namespace

int main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Tripartite Gaussian entanglement under lossy and noisy channels"};
    app.name("ghznet");
    app.require_subcommand(1);

    RunFlags run_flags;
    auto *run = app.add_subcommand("run", "Run a preset or a scenario file and write datasets");
    run->add_option("--config", run_flags.config_path, "Structured-text run configuration");
    run->add_option("--preset", run_flags.preset, "Figure preset name (see `presets`)");
    run->add_option("--scenario", run_flags.scenario_path, "Scenario file");
    run->add_option("--out", run_flags.output_dir, std::string("Output directory (default: $") + kOutputDirEnv + " or .)");
    run->add_option("--format", run_flags.formats, "Output format: csv, json (repeatable)");
    run->add_option("--seed", run_flags.seed, "Seed for measurement-noise error bars");
    run->add_option("--jobs", run_flags.jobs, "Worker threads (default: available processors)");
    run->add_flag("-v,--verbose", run_flags.verbosity, "More output");

    InspectFlags inspect_flags;
    auto *inspect = app.add_subcommand("inspect", "Print covariance, spectra, PPT values and class of a state");
    inspect->add_flag("--measured", inspect_flags.measured, "The reconstructed experimental state");
    inspect->add_option("--vacuum", inspect_flags.vacuum, "Vacuum with this many modes");
    inspect->add_option("--ghz", inspect_flags.ghz, "GHZ state: r=<r> (pure inputs) or db=<squeeze>,<antisqueeze>");
    inspect->add_flag("--pure", inspect_flags.pure, "Require pure squeezed inputs");
    inspect->add_option("--symmetric", inspect_flags.symmetric, "Symmetric state s,t,c");
    inspect->add_option("--asymmetric", inspect_flags.asymmetric, "Asymmetric state s,t,c,c_x");
    inspect->add_option("--file", inspect_flags.file, "Covariance file");
    inspect->add_option("--perturb", inspect_flags.perturb_samples, "Estimate PPT error bars for this sample count");
    inspect->add_option("--draws", inspect_flags.draws, "Ensemble size for --perturb");
    inspect->add_option("--seed", inspect_flags.seed, "Seed for --perturb");

    TuneFlags tune_flags;
    auto *tune = app.add_subcommand("tune", "Ancilla gain that cancels the channel noise on the revived mode");
    tune->add_option("--eta", tune_flags.eta, "Channel transmissivity")->required();
    tune->add_option("--T", tune_flags.transmissivity, "Revival beam-splitter transmissivity")->capture_default_str();
    tune->add_option("--g_a", tune_flags.g_a, "Channel noise magnitude")->capture_default_str();
    tune->add_option("--noise", tune_flags.noise_var, "Noise variance N for the residual table")->capture_default_str();

    auto *presets = app.add_subcommand("presets", "List figure presets");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitConfig;
    }

    try {
        if (run->parsed()) {
            return do_run(run_flags, out);
        }
        if (inspect->parsed()) {
            return do_inspect(inspect_flags, out);
        }
        if (tune->parsed()) {
            return do_tune(tune_flags, out);
        }
        if (presets->parsed()) {
            for (const auto &name : preset_names()) {
                out << fmt::format("{:<10} {}\n", name, preset_description(name));
            }
            return kExitOk;
        }
    } catch (const Error &e) {
        err << "ghznet: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        err << "ghznet: " << e.what() << "\n";
        return kExitScenario;
    }
    return kExitConfig;
}

}  // namespace ghznet::cli
