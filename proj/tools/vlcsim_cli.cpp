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

// vlcsim: runs one experiment preset and writes its tables.
//
//   vlcsim --experiment pl-ci --out results
//   vlcsim --experiment acf-time --config room.json --seed 7 --format json
//
// Exit codes: 0 success, 2 config or usage error, 3 runtime error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vlcsim/vlcsim.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Stochastic indoor VLC channel simulator"};
    std::string config_path;
    std::string experiment;
    std::optional<std::uint64_t> seed;
    std::optional<int> ensemble;
    std::string out_dir = ".";
    std::string format = "csv";
    unsigned threads = 0;
    bool dump_config = false;
    bool list = false;

    app.add_option("--config", config_path, "JSON config; omitted fields take their defaults")->check(CLI::ExistingFile);
    app.add_option("--experiment", experiment, "experiment preset");
    app.add_option("--seed", seed, "master seed (overrides the config)");
    app.add_option("--ensemble", ensemble, "realizations per sweep point (overrides the config)")->check(CLI::PositiveNumber);
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--format", format, "table format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", threads, "worker threads, 0 = all cores");
    app.add_flag("--dump-config", dump_config, "print the effective config and exit");
    app.add_flag("--list", list, "list experiment presets and exit");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    if (list)
    {
        for (const auto &n : vlcsim::experiment_names())
            std::cout << n << '\n';
        return 0;
    }

    vlcsim::SimulationConfig config;
    try
    {
        if (experiment.empty() && !dump_config)
            throw vlcsim::Error(vlcsim::Errc::InvalidArgument, "--experiment is required");
        if (!experiment.empty())
            vlcsim::require_experiment(experiment);
        if (!config_path.empty())
            config = vlcsim::load_config(config_path);
        else if (!experiment.empty())
            config = vlcsim::preset_config(experiment);
        else
            config = vlcsim::parse_config("");
        if (seed)
            config.seed = *seed;
        if (ensemble)
            config.ensemble_size = *ensemble;
        vlcsim::validate_config(config);
    }
    catch (const vlcsim::Error &e)
    {
        std::cerr << "vlcsim: " << e.what() << '\n';
        return kExitConfig;
    }

    if (dump_config)
    {
        std::cout << vlcsim::config_to_json(config).dump(2) << '\n';
        return 0;
    }

    try
    {
        const auto tables = vlcsim::run_experiment(config, experiment, threads);
        const vlcsim::Provenance prov{vlcsim::kVersion, experiment, vlcsim::config_hash(config), config.seed};
        const auto fmt = format == "json" ? vlcsim::ExportFormat::Json : vlcsim::ExportFormat::Csv;
        for (const auto &t : tables)
            std::cout << vlcsim::export_table(t, prov, out_dir, fmt).string() << '\n';
    }
    catch (const vlcsim::Error &e)
    {
        std::cerr << "vlcsim: " << e.what() << '\n';
        return kExitRuntime;
    }
    catch (const std::exception &e)
    {
        std::cerr << "vlcsim: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
