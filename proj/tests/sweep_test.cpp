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

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "ghznet/error.hpp"
#include "ghznet/state_factory.hpp"
#include "ghznet/sweep.hpp"

using namespace ghznet;

namespace {

ScenarioSpec only(std::string_view preset) {
    auto s = preset_scenarios(preset);
    EXPECT_EQ(s.size(), 1u);
    return s.front();
}

const SweepResult &find_sweep(const Dataset &d, std::string_view id) {
    for (const auto &s : d.sweeps) {
        if (s.spec.id == id) {
            return s;
        }
    }
    throw std::runtime_error("missing sweep");
}

std::string error_text(auto &&fn, ErrorKind expected) {
    try {
        fn();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), expected) << e.what();
        return e.what();
    }
    ADD_FAILURE() << "no error thrown";
    return {};
}

// Sign-change cell of PPT_mode - 1 on a uniform grid, or -1 if none.
int crossing_cell(const std::vector<SweepRecord> &recs, std::size_t mode) {
    for (std::size_t i = 1; i < recs.size(); ++i) {
        if ((recs[i - 1].ppt[mode] < 1.0) != (recs[i].ppt[mode] < 1.0)) {
            return static_cast<int>(i - 1);
        }
    }
    return -1;
}

}  // namespace

TEST(Grid, Uniform) {
    const auto g = uniform_grid(0.0, 1.0, 201);
    ASSERT_EQ(g.size(), 201u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_DOUBLE_EQ(g[100], 0.5);
}

TEST(Validate, RejectsBadGrids) {
    ScenarioSpec s = only("fig2a");
    s.grid = {0.5, 0.5};
    EXPECT_THROW(validate(s), Error);
    s.grid = {};
    EXPECT_THROW(validate(s), Error);
    s.grid = {0.2, 0.1};
    EXPECT_THROW(validate(s), Error);
}

TEST(Sweep, Fig2PresetsAreRobust) {
    for (const char *n : {"fig2a", "fig2b", "fig2a-ghz"}) {
        const auto recs = sweep(only(n));
        ASSERT_EQ(recs.size(), kDefaultGridPoints);
        for (const auto &r : recs) {
            if (r.value > 0.0) {
                for (std::size_t k = 0; k < 3; ++k) {
                    EXPECT_LT(r.ppt[k], 1.0) << n << " " << r.value;
                }
            }
        }
    }
}

TEST(Sweep, SymmetricSourceKeepsChannelSymmetry) {
    // The measured state is not mode-symmetric (PPT_B 0.47 vs PPT_C 0.48), so
    // the exchange symmetry is checked on the symmetric projection.
    const SymmetricSource sym{2.74333, 4.88667, 2.25333};
    ScenarioSpec one = only("fig2a");
    one.source = sym;
    for (const auto &r : sweep(one)) {
        EXPECT_NEAR(r.ppt.b, r.ppt.c, 1e-8);
    }
    ScenarioSpec two = only("fig2b");
    two.source = sym;
    for (const auto &r : sweep(two)) {
        EXPECT_NEAR(r.ppt.a, r.ppt.c, 1e-8);
    }
}

TEST(Sweep, Fig2bIdentityEndpoint) {
    const auto recs = sweep(only("fig2b"));
    const auto src = ppt_triple(measured_state());
    EXPECT_EQ(recs.back().value, 1.0);
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(recs.back().ppt[k], src[k]);
    }
}

TEST(Sweep, SinglePointIdentity) {
    ScenarioSpec s = only("fig2a");
    s.grid = {1.0};
    const auto recs = sweep(s);
    ASSERT_EQ(recs.size(), 1u);
    const auto src = ppt_triple(measured_state());
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(recs[0].ppt[k], src[k]);
    }
    EXPECT_EQ(recs[0].residual_noise, 0.0);
}

TEST(Sweep, Fig4aClassSequenceIsMonotone) {
    const auto recs = sweep(only("fig4a"));
    // Walk from eta = 1 downwards: region index may only increase.
    auto rank = [](const EntanglementClass &c) {
        return c.kind == Separability::FullyInseparable ? 0 : (c.kind == Separability::OneModeBiseparable ? 1 : 2);
    };
    int prev = 0;
    std::vector<int> seen;
    for (auto it = recs.rbegin(); it != recs.rend(); ++it) {
        const int r = rank(it->entanglement);
        EXPECT_GE(r, prev) << it->value;
        if (seen.empty() || seen.back() != r) {
            seen.push_back(r);
        }
        if (r == 1) {
            EXPECT_EQ(it->entanglement.mode, kModeA);
        }
        prev = r;
    }
    EXPECT_EQ(seen, (std::vector<int>{0, 1, 2}));
}

TEST(Sweep, DeterministicAndJobsInvariant) {
    const auto spec = only("fig4a");
    const auto a = sweep(spec, 1);
    const auto b = sweep(spec, 1);
    const auto c = sweep(spec, 7);
    ASSERT_EQ(a.size(), c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < 3; ++k) {
            EXPECT_EQ(a[i].ppt[k], b[i].ppt[k]);
            EXPECT_EQ(a[i].ppt[k], c[i].ppt[k]);
        }
        EXPECT_EQ(a[i].value, c[i].value);
        EXPECT_EQ(a[i].source_fingerprint, c[i].source_fingerprint);
    }
}

TEST(Sweep, ErrorsNameTheGridPoint) {
    ScenarioSpec s = only("fig2a");
    s.grid = {0.5, 1.5};
    const auto msg = error_text([&] { (void)sweep(s); }, ErrorKind::Spec);
    EXPECT_NE(msg.find("1.5"), std::string::npos) << msg;
}

TEST(Threshold, Fig4aBoundaries) {
    const auto spec = only("fig4a");
    EXPECT_NEAR(find_eta_threshold(spec, kModeA), 0.81, 0.02);
    EXPECT_NEAR(find_eta_threshold(spec, kModeB), 0.24, 0.02);
    EXPECT_NEAR(find_eta_threshold(spec, kModeC), 0.24, 0.02);
}

TEST(Threshold, AgreesWithFineGridCell) {
    struct Case {
        std::string preset;
        std::size_t mode;
        double lo;
        double hi;
    };
    const std::vector<Case> cases{{"fig4a", kModeA, 0.0, 1.0}, {"fig4a", kModeB, 0.0, 1.0}, {"fig5a", kModeA, 0.0, 10.0}};
    for (const auto &c : cases) {
        ScenarioSpec s = only(c.preset);
        s.grid = uniform_grid(c.lo, c.hi, 1000);
        const auto recs = sweep(s, 4);
        const int cell = crossing_cell(recs, c.mode);
        ASSERT_GE(cell, 0) << c.preset;
        const double root = s.axis == SweepAxis::Eta ? find_eta_threshold(s, c.mode, {c.lo, c.hi})
                                                     : find_noise_threshold(s, c.mode, {c.lo, c.hi});
        const double tol = s.axis == SweepAxis::Eta ? 1e-4 : 1e-3;
        EXPECT_GE(root, recs[cell].value - tol) << c.preset;
        EXPECT_LE(root, recs[cell + 1].value + tol) << c.preset;
    }
}

TEST(Threshold, PureLossHasNoRoot) {
    ScenarioSpec s = only("fig2a");
    s.source = SymmetricSource{2.74333, 4.88667, 2.25333};
    const auto msg = error_text([&] { (void)find_eta_threshold(s, kModeA, {0.01, 1.0}); }, ErrorKind::Bracket);
    EXPECT_NE(msg.find("does not change sign"), std::string::npos);
}

TEST(Threshold, TunedRevivalIsNoiseImmune) {
    const auto spec = only("fig5b");
    (void)error_text([&] { (void)find_noise_threshold(spec, kModeA, {0.0, 50.0}); }, ErrorKind::Bracket);
    const auto recs = sweep(spec);
    for (const auto &r : recs) {
        EXPECT_NEAR(r.ppt.a, recs.front().ppt.a, 1e-10);
        EXPECT_LE(std::abs(r.residual_noise), 1e-12);
    }
}

TEST(Threshold, BracketBelowThresholdReportsValues) {
    const auto spec = only("fig5a");
    const auto msg = error_text([&] { (void)find_noise_threshold(spec, kModeA, {0.0, 1.0}); }, ErrorKind::Bracket);
    EXPECT_NE(msg.find("at 0"), std::string::npos) << msg;
    EXPECT_NE(msg.find("at 1"), std::string::npos) << msg;
}

TEST(Presets, NamesAndUnknown) {
    const auto names = preset_names();
    for (const char *n : {"fig2a", "fig2b", "fig3a", "fig3f", "fig4a", "fig4b", "fig5a", "fig5b"}) {
        EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
        EXPECT_FALSE(preset_description(n).empty());
    }
    const auto msg = error_text([] { (void)preset_scenarios("fig9"); }, ErrorKind::Spec);
    EXPECT_NE(msg.find("fig4a"), std::string::npos);
}

TEST(Presets, Fig3Patterns) {
    for (const char *n : {"fig3a", "fig3b"}) {
        const auto d = run_preset(n);
        for (const auto &r : d.sweeps[0].records) {
            if (r.value > 0.0) {
                EXPECT_LT(r.ppt.a, 1.0) << n << " " << r.value;
            }
        }
    }
    for (const char *n : {"fig3c", "fig3d"}) {
        EXPECT_GE(crossing_cell(run_preset(n).sweeps[0].records, kModeA), 1) << n;
    }
    for (const char *n : {"fig3e", "fig3f"}) {
        const auto d = run_preset(n);
        const auto &recs = d.sweeps[0].records;
        EXPECT_GT(recs.back().ppt.a, 1.0);
        for (const auto &r : recs) {
            EXPECT_GE(r.ppt.a, 1.0 - kClassTol) << n << " " << r.value;
        }
        EXPECT_EQ(recs.back().entanglement.label(), "OneModeBiseparable(A)");
    }
}

TEST(Presets, Fig3CarriesProjectionMetadata) {
    const auto d = run_preset("fig3c");
    bool found = false;
    for (const auto &[k, v] : d.metadata) {
        found = found || k == "c_x_only";
    }
    EXPECT_TRUE(found);
}

TEST(Presets, Fig4bRevivedBelowOneAndMatchesScaledLoss) {
    const auto d = run_preset("fig4b");
    const auto &revived = find_sweep(d, "fig4b-revived").records;
    const auto &scaled = find_sweep(d, "fig4b-scaled").records;
    ASSERT_EQ(revived.size(), scaled.size());
    for (std::size_t i = 0; i < revived.size(); ++i) {
        for (std::size_t k = 0; k < 3; ++k) {
            if (revived[i].value > 0.0) {
                EXPECT_LT(revived[i].ppt[k], 1.0);
            }
            EXPECT_NEAR(revived[i].ppt[k], scaled[i].ppt[k], 0.02);
        }
    }
    const auto &points = find_sweep(d, "fig4b-points").records;
    ASSERT_EQ(points.size(), 4u);
    for (const auto &p : points) {
        EXPECT_EQ(p.entanglement.kind, Separability::FullyInseparable);
    }
}

TEST(Summary, Fig4aThresholdsAndRegions) {
    const auto d = run_preset("fig4a");
    const auto sum = summarize(d.sweeps[0]);
    ASSERT_EQ(sum.regions.size(), 3u);
    EXPECT_EQ(sum.regions.front().region, "III");
    EXPECT_EQ(sum.regions.back().region, "I");
    ASSERT_EQ(sum.thresholds.size(), 3u);
    for (const auto &t : sum.thresholds) {
        EXPECT_NEAR(t.value, t.mode == kModeA ? 0.81 : 0.24, 0.02);
    }
}

TEST(Summary, BoundaryTouchIsNotAThreshold) {
    const auto sum = summarize(run_preset("fig2a").sweeps[0]);
    EXPECT_TRUE(sum.thresholds.empty());
}

TEST(Fingerprint, StableAndSensitive) {
    EXPECT_EQ(fingerprint(measured_state()), fingerprint(measured_state()));
    EXPECT_EQ(fingerprint(measured_state()).size(), 16u);
    EXPECT_NE(fingerprint(measured_state()), fingerprint(CovMatrix::identity(3)));
}

TEST(Sources, CxRatioAxis) {
    ScenarioSpec s;
    s.id = "cx";
    s.source = SymmetricSource{2.74333, 4.88667, 2.25333};
    s.axis = SweepAxis::CxRatio;
    s.swept_modes = {};
    s.grid = {0.3, 0.5, 0.8, 1.0};
    const auto recs = sweep(s);
    EXPECT_GT(recs[0].ppt.a, 1.0);
    EXPECT_LT(recs[3].ppt.a, 1.0);
    s.source = MeasuredSource{};
    EXPECT_THROW(validate(s), Error);
}
