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

#include "ghznet/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <exception>
#include <thread>

#include <fmt/format.h>

#include "ghznet/error.hpp"

namespace ghznet {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double axis_tolerance(SweepAxis axis) {
    return axis == SweepAxis::NoiseVar ? 1e-3 : 1e-4;
}

}  // namespace

std::string_view to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Eta:
            return "eta";
        case SweepAxis::NoiseVar:
            return "noise_var";
        case SweepAxis::CxRatio:
            return "c_x_ratio";
    }
    return "?";
}

std::optional<SweepAxis> sweep_axis_from_string(std::string_view name) {
    for (SweepAxis axis : {SweepAxis::Eta, SweepAxis::NoiseVar, SweepAxis::CxRatio}) {
        if (to_string(axis) == name) {
            return axis;
        }
    }
    return std::nullopt;
}

CovMatrix build_source(const StateSource &source, std::optional<double> c_x_ratio) {
    return std::visit(
        Overloaded{
            [&](const MeasuredSource &) {
                if (c_x_ratio) {
                    throw Error(ErrorKind::Spec, "c_x_ratio applies only to symmetric or asymmetric sources");
                }
                return measured_state();
            },
            [&](const VacuumSource &) {
                if (c_x_ratio) {
                    throw Error(ErrorKind::Spec, "c_x_ratio applies only to symmetric or asymmetric sources");
                }
                return CovMatrix::identity(3);
            },
            [&](const GhzSource &g) {
                if (c_x_ratio) {
                    throw Error(ErrorKind::Spec, "c_x_ratio applies only to symmetric or asymmetric sources");
                }
                return ghz_state(g.inputs, g.network);
            },
            [&](const SymmetricSource &s) {
                return c_x_ratio ? asymmetric_state(s.s, s.t, s.c, *c_x_ratio * s.c) : symmetric_state(s.s, s.t, s.c);
            },
            [&](const AsymmetricSource &a) {
                return asymmetric_state(a.s, a.t, a.c, c_x_ratio ? *c_x_ratio * a.c : a.c_x);
            },
        },
        source);
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    if (n < 2) {
        return {lo};
    }
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    grid.back() = hi;
    return grid;
}

void validate(const ScenarioSpec &spec) {
    if (spec.grid.empty()) {
        throw Error(ErrorKind::Spec, fmt::format("scenario '{}' has an empty grid", spec.id));
    }
    for (std::size_t i = 1; i < spec.grid.size(); ++i) {
        if (!(spec.grid[i] > spec.grid[i - 1])) {
            throw Error(ErrorKind::Spec,
                        fmt::format("scenario '{}' grid is not strictly increasing at index {}", spec.id, i));
        }
    }
    if (spec.axis != SweepAxis::CxRatio && spec.swept_modes.empty()) {
        throw Error(ErrorKind::Spec, fmt::format("scenario '{}' sweeps {} but names no modes", spec.id,
                                                 to_string(spec.axis)));
    }
    for (std::size_t m : spec.swept_modes) {
        if (m >= 3) {
            throw Error(ErrorKind::Index, fmt::format("scenario '{}' sweeps mode {} of 3", spec.id, m));
        }
    }
    for (const auto &ch : spec.channels) {
        validate(ch);
    }
    if (spec.revival) {
        if (spec.revival->mode >= 3) {
            throw Error(ErrorKind::Index, fmt::format("scenario '{}' revives mode {} of 3", spec.id, spec.revival->mode));
        }
        validate(RevivalSpec{spec.revival->transmissivity, spec.revival->g_b.value_or(0.0)});
        if (!spec.revival->g_b && spec.revival->transmissivity == 1.0) {
            throw Error(ErrorKind::DivisionByZero,
                        fmt::format("scenario '{}' asks for a tuned revival with T = 1", spec.id));
        }
    }
    if (!(spec.detector_efficiency > 0.0 && spec.detector_efficiency <= 1.0)) {
        throw Error(ErrorKind::Spec,
                    fmt::format("detector efficiency must lie in (0, 1], got {}", spec.detector_efficiency));
    }
    if (spec.axis == SweepAxis::CxRatio && !std::holds_alternative<SymmetricSource>(spec.source) &&
        !std::holds_alternative<AsymmetricSource>(spec.source)) {
        throw Error(ErrorKind::Spec, fmt::format("scenario '{}' sweeps c_x_ratio on a source without c", spec.id));
    }
}

namespace {

struct PointState {
    CovMatrix source;
    CovMatrix state;
    double residual;
};

PointState evaluate(const ScenarioSpec &spec, double value) {
    std::optional<double> ratio;
    std::array<ChannelSpec, 3> channels = spec.channels;
    switch (spec.axis) {
        case SweepAxis::Eta:
            for (std::size_t m : spec.swept_modes) {
                channels[m].eta = value;
            }
            break;
        case SweepAxis::NoiseVar:
            for (std::size_t m : spec.swept_modes) {
                channels[m].noise_var = value;
            }
            break;
        case SweepAxis::CxRatio:
            ratio = value;
            break;
    }
    CovMatrix source = build_source(spec.source, ratio);
    CovMatrix state = source;
    double residual = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        if (spec.revival && spec.revival->mode == k) {
            const double t = spec.revival->transmissivity;
            const double g_b = spec.revival->g_b ? *spec.revival->g_b : tuned_gb(channels[k].eta, t, channels[k].g_a);
            const RevivalSpec rv{t, g_b};
            state = revive(state, k, channels[k], rv);
            residual += residual_noise(channels[k], rv);
        } else if (channels[k] != ChannelSpec::identity()) {
            state = noisy_channel(state, k, channels[k]);
            residual += (1.0 - channels[k].eta) * channels[k].g_a * channels[k].noise_var;
        }
    }
    if (spec.detector_efficiency != 1.0) {
        for (std::size_t k = 0; k < 3; ++k) {
            state = lossy_channel(state, k, spec.detector_efficiency);
        }
    }
    return {std::move(source), std::move(state), residual};
}

}  // namespace

CovMatrix evaluate_state(const ScenarioSpec &spec, double value) {
    return evaluate(spec, value).state;
}

SweepRecord evaluate_point(const ScenarioSpec &spec, double value) {
    PointState point = evaluate(spec, value);
    SweepRecord record;
    record.axis = spec.axis;
    record.value = value;
    record.ppt = ppt_triple(point.state);
    record.entanglement = classify(record.ppt);
    record.residual_noise = point.residual;
    record.scenario_id = spec.id;
    record.source_fingerprint = fingerprint(point.source);
    return record;
}

std::vector<SweepRecord> sweep(const ScenarioSpec &spec, unsigned jobs) {
    validate(spec);
    const std::size_t n = spec.grid.size();
    std::vector<SweepRecord> records(n);
    std::vector<std::exception_ptr> failures(n);

    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < n; i += stride) {
            try {
                records[i] = evaluate_point(spec, spec.grid[i]);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(jobs, 1, n);
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work, w, workers);
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (!failures[i]) {
            continue;
        }
        try {
            std::rethrow_exception(failures[i]);
        } catch (const Error &e) {
            throw Error(e.kind(), fmt::format("scenario '{}' at {} = {}: {}", spec.id, to_string(spec.axis),
                                              spec.grid[i], e.what()));
        }
    }
    return records;
}

double find_threshold(const ScenarioSpec &spec, std::size_t mode, Bracket bracket, double tol) {
    if (mode >= 3) {
        throw Error(ErrorKind::Index, fmt::format("threshold mode {} out of range", mode));
    }
    double lo = std::min(bracket.lo, bracket.hi);
    double hi = std::max(bracket.lo, bracket.hi);
    auto excess = [&](double v) { return ppt_value(evaluate_state(spec, v), mode) - 1.0; };
    double f_lo = excess(lo);
    const double f_hi = excess(hi);
    if (f_lo == 0.0) {
        return lo;
    }
    if (f_hi == 0.0) {
        return hi;
    }
    if ((f_lo < 0.0) == (f_hi < 0.0)) {
        throw Error(ErrorKind::Bracket,
                    fmt::format("PPT_{} - 1 does not change sign on [{}, {}] along {}: {:.6g} at {}, {:.6g} at {}",
                                mode_name(mode), lo, hi, to_string(spec.axis), f_lo, lo, f_hi, hi));
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = excess(mid);
        if (f_mid == 0.0) {
            return mid;
        }
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double find_eta_threshold(const ScenarioSpec &spec, std::size_t mode, Bracket bracket) {
    ScenarioSpec s = spec;
    s.axis = SweepAxis::Eta;
    if (s.swept_modes.empty()) {
        s.swept_modes = {kModeA};
    }
    return find_threshold(s, mode, bracket, axis_tolerance(SweepAxis::Eta));
}

double find_noise_threshold(const ScenarioSpec &spec, std::size_t mode, Bracket bracket) {
    ScenarioSpec s = spec;
    s.axis = SweepAxis::NoiseVar;
    if (s.swept_modes.empty()) {
        s.swept_modes = {kModeA};
    }
    return find_threshold(s, mode, bracket, axis_tolerance(SweepAxis::NoiseVar));
}

std::string fingerprint(const CovMatrix &cov) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (double v : cov.data()) {
        unsigned char bytes[sizeof(double)];
        std::memcpy(bytes, &v, sizeof(double));
        for (unsigned char b : bytes) {
            hash ^= b;
            hash *= 0x100000001b3ULL;
        }
    }
    return fmt::format("{:016x}", hash);
}

Dataset run_scenarios(std::string name, std::string description, std::vector<ScenarioSpec> scenarios, unsigned jobs) {
    Dataset data;
    data.name = std::move(name);
    data.description = std::move(description);
    for (auto &spec : scenarios) {
        auto records = sweep(spec, jobs);
        data.sweeps.push_back({std::move(spec), std::move(records)});
    }
    return data;
}

SweepSummary summarize(const SweepResult &result) {
    SweepSummary summary;
    summary.scenario_id = result.spec.id;
    summary.source_ppt = ppt_triple(build_source(
        result.spec.source,
        result.spec.axis == SweepAxis::CxRatio ? std::optional<double>(result.records.front().value) : std::nullopt));

    const auto &recs = result.records;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const std::string label = recs[i].entanglement.label();
        if (!summary.regions.empty() && summary.regions.back().label == label) {
            summary.regions.back().to = recs[i].value;
        } else {
            summary.regions.push_back({recs[i].value, recs[i].value, label, recs[i].entanglement.region()});
        }
    }

    for (std::size_t mode = 0; mode < 3; ++mode) {
        for (std::size_t i = 1; i < recs.size(); ++i) {
            const bool below_prev = recs[i - 1].ppt[mode] < 1.0;
            const bool below_here = recs[i].ppt[mode] < 1.0;
            if (below_prev == below_here) {
                continue;
            }
            // A grid point sitting on PPT = 1 (vacuum-like endpoints) is a touch, not a crossing.
            if (std::abs(recs[i - 1].ppt[mode] - 1.0) <= kClassTol || std::abs(recs[i].ppt[mode] - 1.0) <= kClassTol) {
                continue;
            }
            try {
                const double hit = find_threshold(result.spec, mode, {recs[i - 1].value, recs[i].value},
                                                  axis_tolerance(result.spec.axis));
                summary.thresholds.push_back({mode, hit});
            } catch (const Error &) {
                // Crossing sits within rounding of a grid point; the region list still shows it.
            }
        }
    }
    return summary;
}

}  // namespace ghznet
