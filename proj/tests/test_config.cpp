// SPDX-License-Identifier: Apache-2.0
//
// vlcsim: stochastic channel simulator for indoor visible light communication
// Copyright (C) 2026 The vlcsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <filesystem>
#include <fstream>
#include <functional>

#include <gtest/gtest.h>

#include "vlcsim/config.hpp"

using namespace vlcsim;
namespace fs = std::filesystem;

namespace {

Errc code_of(const std::function<void()> &fn)
{
    try
    {
        fn();
    }
    catch (const Error &e)
    {
        return e.code();
    }
    return Errc::InvalidArgument; // sentinel: the tests below never expect this code
}

std::string message_of(const std::function<void()> &fn)
{
    try
    {
        fn();
    }
    catch (const Error &e)
    {
        return e.what();
    }
    return "";
}

fs::path scratch_dir(const std::string &name)
{
    const fs::path d = fs::temp_directory_path() / ("vlcsim_test_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

const fs::path kSource = VLCSIM_SOURCE_DIR;

} // namespace

TEST(Config, EmptyDocumentGivesDefaults)
{
    const SimulationConfig a = parse_config("");
    const SimulationConfig b = parse_config("  \n ");
    const SimulationConfig c = parse_config("{}");
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    EXPECT_EQ(a.ensemble_size, 500);
    EXPECT_EQ(a.scenario.array.layout.rows, 4);
    EXPECT_DOUBLE_EQ(a.scenario.receiver.distance, 2.0);
    EXPECT_EQ(a.scenario.spectra.materials.size(), 4u);
}

TEST(Config, UnknownKeyNamesTheField)
{
    const auto bad = [] { parse_config(R"({"receiver": {"fov_degrees_typo": 40}})"); };
    EXPECT_EQ(code_of(bad), Errc::ValidationError);
    EXPECT_NE(message_of(bad).find("receiver.fov_degrees_typo"), std::string::npos);
    EXPECT_EQ(code_of([] { parse_config(R"({"recever": {}})"); }), Errc::ValidationError);
}

TEST(Config, SyntaxErrorReportsLine)
{
    const auto bad = [] { parse_config("{\n  \"receiver\": {\n    \"fov_deg\": 40,\n  }\n}"); };
    EXPECT_EQ(code_of(bad), Errc::ParseError);
    EXPECT_NE(message_of(bad).find("line 4"), std::string::npos) << message_of(bad);
}

TEST(Config, WrongTypeIsParseError)
{
    const auto bad = [] { parse_config(R"({"array": {"rows": "four"}})"); };
    EXPECT_EQ(code_of(bad), Errc::ParseError);
    EXPECT_NE(message_of(bad).find("array.rows"), std::string::npos);
}

TEST(Config, OutOfRangeIsValidationError)
{
    EXPECT_EQ(code_of([] { parse_config(R"({"receiver": {"fov_deg": 120}})"); }), Errc::ValidationError);
    EXPECT_EQ(code_of([] { parse_config(R"({"ensemble": {"size": 0}})"); }), Errc::ValidationError);
    EXPECT_EQ(code_of([] { parse_config(R"({"clusters": {"sb_ratio": -0.1}})"); }), Errc::ValidationError);
    EXPECT_EQ(code_of([] { parse_config(R"({"receiver": {"concentrator": "magic"}})"); }), Errc::ValidationError);
    EXPECT_EQ(code_of([] { parse_config(R"({"array": {"pattern": {"type": "builtin", "name": "nope"}}})"); }),
              Errc::ValidationError);
}

TEST(Config, FieldsApplyWithUnits)
{
    const auto c = parse_config(R"({
        "receiver": {"fov_deg": 60, "distance_m": 3.5, "num_pd": 3, "concentrator": "ideal",
                     "filter_deg_gain": [[0, 1.0], [90, 0.5]]},
        "array": {"row_spacing_m": 1.5, "pattern": {"type": "lambertian", "order": 4}},
        "clusters": {"distance_mean_m": 1.25},
        "spectra": {"led": {"wavelength_nm": 445}},
        "ensemble": {"size": 7, "seed": 99}
    })");
    const auto &s = c.scenario;
    EXPECT_NEAR(s.receiver.optics.fov, kPi / 3.0, 1e-15);
    EXPECT_DOUBLE_EQ(s.receiver.distance, 3.5);
    EXPECT_EQ(s.receiver.attitude.num_pd, 3);
    EXPECT_EQ(s.receiver.optics.concentrator, Concentrator::Ideal);
    ASSERT_EQ(s.receiver.optics.filter.size(), 2u);
    EXPECT_NEAR(s.receiver.optics.filter[1].first, kHalfPi, 1e-15);
    EXPECT_DOUBLE_EQ(s.array.layout.row_spacing, 1.5);
    EXPECT_NEAR(s.array.pattern.intensity(0.0, 0.0), 5.0 / (2.0 * kPi), 1e-12);
    EXPECT_DOUBLE_EQ(s.distance_mean(), 1.25);
    EXPECT_EQ(s.spectra.led, "line");
    EXPECT_EQ(c.ensemble_size, 7);
    EXPECT_EQ(c.seed, 99u);
}

TEST(Config, BaseConfigKeepsUnsetFields)
{
    SimulationConfig base = parse_config(R"({"receiver": {"distance_m": 5}})");
    const auto c = parse_config(R"({"ensemble": {"seed": 3}})", {}, base);
    EXPECT_DOUBLE_EQ(c.scenario.receiver.distance, 5.0);
    EXPECT_EQ(c.seed, 3u);
}

TEST(Config, SaveLoadRoundTrip)
{
    const fs::path dir = scratch_dir("roundtrip");
    SimulationConfig c = parse_config(R"({
        "receiver": {"fov_deg": 37.5, "azimuth_rate_deg_per_s": 45, "travel_elevation_deg": 90, "speed_m_per_s": 0.5,
                     "filter_deg_gain": [[0, 0.9], [60, 0.4]]},
        "array": {"rows": 3, "cols": 5, "element_powers_w": [1,2,3,4,5,6,7,8,9,10,11,12,13,14,15],
                  "pattern": {"type": "builtin", "name": "narrow-beam"}},
        "evolution": {"fixed_cluster_count": 10},
        "clusters": {"sigma_ds_m": 3.422, "elevation_std_deg": 45, "tx_mean_elevation_deg": 15},
        "spectra": {"led": {"name": "blue"}, "materials": [{"name": "plaster", "weight": 1}]},
        "time": {"end_s": 8},
        "statistics": {"fcf_lag_points": 11}
    })");
    save_config(c, dir / "a.json");
    const SimulationConfig d = load_config(dir / "a.json");
    EXPECT_EQ(config_to_json(c), config_to_json(d));
    EXPECT_EQ(config_hash(c), config_hash(d));
    EXPECT_EQ(c.scenario.array.pattern, d.scenario.array.pattern);
    EXPECT_EQ(c.scenario.spectra, d.scenario.spectra);
    save_config(d, dir / "b.json");
    std::ifstream a(dir / "a.json"), b(dir / "b.json");
    const std::string sa((std::istreambuf_iterator<char>(a)), {}), sb((std::istreambuf_iterator<char>(b)), {});
    EXPECT_EQ(sa, sb);
}

TEST(Config, HashSeesEveryField)
{
    const SimulationConfig base = parse_config("");
    const std::vector<std::string> edits{
        R"({"array": {"rows": 3}})",
        R"({"array": {"column_spacing_m": 1.01}})",
        R"({"array": {"pattern": {"type": "lambertian", "order": 2}}})",
        R"({"receiver": {"fov_deg": 84}})",
        R"({"receiver": {"area_m2": 2e-4}})",
        R"({"receiver": {"concentrator": "ideal"}})",
        R"({"evolution": {"birth_rate_per_m": 81}})",
        R"({"clusters": {"scatterers": 99}})",
        R"({"clusters": {"distance_mean_m": 1}})",
        R"({"spectra": {"led": {"name": "red"}}})",
        R"({"spectra": {"materials": [{"name": "floor", "weight": 1}]}})",
        R"({"time": {"step_s": 0.02}})",
        R"({"frequency": {"points": 100}})",
        R"({"ensemble": {"size": 10}})",
        R"({"ensemble": {"seed": 2}})",
        R"({"statistics": {"anchor_frequency_hz": 1e6}})",
    };
    std::set<std::uint64_t> seen{config_hash(base)};
    for (const auto &e : edits)
        EXPECT_TRUE(seen.insert(config_hash(parse_config(e))).second) << e;
    EXPECT_EQ(config_hash(base), config_hash(parse_config("{}")));
}

TEST(Config, DataFilesResolveAgainstConfigDirectory)
{
    const fs::path dir = scratch_dir("files");
    fs::create_directories(dir / "d");
    fs::copy_file(kSource / "data/patterns/narrow_beam.csv", dir / "d/beam.csv");
    fs::copy_file(kSource / "data/spectra/led_red.csv", dir / "d/red.csv");
    fs::copy_file(kSource / "data/spectra/material_plaster.csv", dir / "d/plaster.csv");
    {
        std::ofstream out(dir / "cfg.json");
        out << R"({"array": {"pattern": {"type": "tabulated", "file": "d/beam.csv"}},
                   "spectra": {"led": {"file": "d/red.csv"},
                               "materials": [{"name": "wall", "weight": 1, "file": "d/plaster.csv"}]}})";
    }
    const auto c = load_config(dir / "cfg.json");
    const auto builtin = parse_config(R"({"array": {"pattern": {"type": "builtin", "name": "narrow-beam"}},
                                         "spectra": {"led": {"name": "red"}, "materials": [{"name": "plaster", "weight": 1}]}})");
    EXPECT_NEAR(c.scenario.array.pattern.intensity(0.0, 0.0) / builtin.scenario.array.pattern.intensity(0.0, 0.0), 1.0, 1e-4);
    const auto g1 = material_reflectances(c.scenario.spectra), g2 = material_reflectances(builtin.scenario.spectra);
    EXPECT_NEAR(g1[0], g2[0], 1e-5);

    std::ofstream(dir / "missing.json") << R"({"spectra": {"led": {"file": "nope.csv"}}})";
    EXPECT_EQ(code_of([&] { load_config(dir / "missing.json"); }), Errc::IoError);
    EXPECT_EQ(code_of([&] { load_config(dir / "absent.json"); }), Errc::IoError);
}

TEST(TimeGrid, SampleCount)
{
    EXPECT_EQ(TimeGrid{}.samples(), 201);
    EXPECT_EQ((TimeGrid{0.0, 8.0, 0.01}).samples(), 801);
    EXPECT_EQ((TimeGrid{1.0, 1.0, 0.5}).samples(), 1);
}
