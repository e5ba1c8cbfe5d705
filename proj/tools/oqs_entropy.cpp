// Copyright 2026 The oqs-entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: simulate, steady, bounds, audit, models.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "oqs/cli/commands.hpp"
#include "oqs/cli/config.hpp"
#include "oqs/errors.hpp"

namespace {

using nlohmann::json;
using namespace oqs::cli;

struct Invocation {
    std::string config_path;
    std::string out_path;
};

// Output goes to --out, else to the config's outputs.path, else stdout.
int with_output(const Invocation& inv, const json* config,
                const std::function<int(std::ostream&)>& run) {
    std::string path = inv.out_path;
    if (path.empty() && config && config->is_object() && config->contains("outputs")) {
        const json& o = (*config)["outputs"];
        if (o.is_object() && o.contains("path") && o["path"].is_string()) path = o["path"].get<std::string>();
    }
    if (path.empty()) return run(std::cout);
    std::ofstream file(path);
    if (!file) {
        std::cerr << "error: cannot open output '" << path << "'\n";
        return kExitConfig;
    }
    return run(file);
}

std::optional<json> load(const Invocation& inv) {
    try {
        return load_json_file(inv.config_path);
    } catch (const oqs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return std::nullopt;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lindblad dynamics and von Neumann entropy bounds"};
    app.require_subcommand(1);

    Invocation simulate_inv, steady_inv, bounds_inv, audit_inv, models_inv;
    auto add_io = [](CLI::App* sub, Invocation& inv, bool config_required) {
        auto* opt = sub->add_option("--config", inv.config_path, "JSON run configuration");
        if (config_required) opt->required()->check(CLI::ExistingFile);
        sub->add_option("--out", inv.out_path, "output file (default: stdout)");
    };

    auto* simulate = app.add_subcommand("simulate", "integrate the master equation and write a trajectory CSV");
    add_io(simulate, simulate_inv, true);
    auto* steady = app.add_subcommand("steady", "steady state and the long-time entropy bound (JSON)");
    add_io(steady, steady_inv, true);
    auto* bounds = app.add_subcommand("bounds", "entropy-rate bounds at a single state (JSON)");
    add_io(bounds, bounds_inv, true);

    auto* audit = app.add_subcommand("audit", "random sweep of the variance step and the log inequality (CSV)");
    add_io(audit, audit_inv, false);
    std::optional<long long> audit_d, audit_count, audit_seed;
    bool audit_psd = false;
    audit->add_option("--d", audit_d, "Hilbert-space dimension");
    audit->add_option("--count", audit_count, "number of cases");
    audit->add_option("--seed", audit_seed, "base seed");
    audit->add_flag("--psd", audit_psd, "use positive semidefinite channels");

    auto* models = app.add_subcommand("models", "list the preset catalog");
    bool models_json = false;
    models->add_flag("--json", models_json, "machine-readable output");
    models->add_option("--out", models_inv.out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    auto run_config_command = [&](const Invocation& inv, int (*command)(const json&, std::ostream&, std::ostream&)) {
        const std::optional<json> config = load(inv);
        if (!config) return static_cast<int>(kExitConfig);
        return with_output(inv, &*config, [&](std::ostream& out) { return command(*config, out, std::cerr); });
    };

    if (simulate->parsed()) return run_config_command(simulate_inv, cmd_simulate);
    if (steady->parsed()) return run_config_command(steady_inv, cmd_steady);
    if (bounds->parsed()) return run_config_command(bounds_inv, cmd_bounds);
    if (models->parsed()) {
        return with_output(models_inv, nullptr, [&](std::ostream& out) { return cmd_models(models_json, out, std::cerr); });
    }

    // audit
    AuditSpec spec;
    std::optional<json> config;
    if (!audit_inv.config_path.empty()) {
        config = load(audit_inv);
        if (!config) return kExitConfig;
        try {
            spec = parse_audit_spec(*config);
        } catch (const oqs::Error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitConfig;
        }
    }
    if (audit_d) spec.d = *audit_d;
    if (audit_count) spec.count = *audit_count;
    if (audit_seed) {
        if (*audit_seed < 0) {
            std::cerr << "error: audit seed must be non-negative\n";
            return kExitConfig;
        }
        spec.seed = static_cast<std::uint64_t>(*audit_seed);
    }
    if (audit_psd) spec.psd_channels = true;
    return with_output(audit_inv, nullptr, [&](std::ostream& out) { return cmd_audit(spec, out, std::cerr); });
}
