// Copyright 2026 The belrev Authors
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

// Scenario runner over the belrev C API.  Exit codes: 0 success, 1
// scenario failure (unreadable file, parse error, halted run, unusable
// comparison), 2 usage error.

#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "belrev/belrev.h"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitScenarioError = 1;
constexpr int kExitUsageError = 2;

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return in.good() || in.eof();
}

struct ScenarioDeleter {
    void operator()(belrev_scenario* sc) const { belrev_scenario_destroy(sc); }
};
using ScenarioHandle = std::unique_ptr<belrev_scenario, ScenarioDeleter>;

struct StringDeleter {
    void operator()(char* s) const { belrev_string_free(s); }
};
using StringHandle = std::unique_ptr<char, StringDeleter>;

int load(const std::string& path, ScenarioHandle& out) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return kExitScenarioError;
    }
    belrev_scenario* sc = nullptr;
    if (belrev_scenario_parse(text.c_str(), &sc) != BELREV_OK) {
        std::cerr << "error: " << belrev_last_error() << "\n";
        return kExitScenarioError;
    }
    out.reset(sc);
    return kExitSuccess;
}

int cmd_run(const std::string& path, int horizon, double tolerance) {
    ScenarioHandle sc;
    if (int rc = load(path, sc); rc != kExitSuccess) return rc;
    char* trace = nullptr;
    int completed = 0;
    if (belrev_scenario_run(sc.get(), horizon, tolerance, &trace, &completed) !=
        BELREV_OK) {
        std::cerr << "error: " << belrev_last_error() << "\n";
        return kExitScenarioError;
    }
    StringHandle guard(trace);
    std::cout << trace;
    return completed ? kExitSuccess : kExitScenarioError;
}

int cmd_check(const std::string& path) {
    ScenarioHandle sc;
    if (int rc = load(path, sc); rc != kExitSuccess) return rc;
    std::cout << "ok: " << belrev_scenario_directive_count(sc.get()) << " directive(s)\n";
    return kExitSuccess;
}

int cmd_compare(const std::string& path, int horizon, double tolerance) {
    ScenarioHandle sc;
    if (int rc = load(path, sc); rc != kExitSuccess) return rc;
    char* report = nullptr;
    if (belrev_scenario_compare(sc.get(), horizon, tolerance, &report) != BELREV_OK) {
        std::cerr << "error: " << belrev_last_error() << "\n";
        return kExitScenarioError;
    }
    StringHandle guard(report);
    std::cout << report;
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"belief revision scenario runner"};
    app.fallthrough(true);
    app.require_subcommand(1);

    int horizon = 2;
    double tolerance = 1e-9;
    app.add_option("--k", horizon, "evidential horizon for the truth-value calculus")
        ->default_val(2)
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    app.add_option("--tolerance", tolerance, "tolerance for dominance assertions")
        ->default_val(1e-9)
        ->check(CLI::PositiveNumber);

    std::string run_file, check_file, compare_file;
    CLI::App* run = app.add_subcommand("run", "execute a scenario and print its trace");
    run->add_option("file", run_file, "scenario file")->required();
    CLI::App* check = app.add_subcommand("check", "parse a scenario and report directive count");
    check->add_option("file", check_file, "scenario file")->required();
    CLI::App* compare =
        app.add_subcommand("compare", "report updating vs revision on a staged conflict");
    compare->add_option("file", compare_file, "scenario file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitUsageError;
    }

    if (run->parsed()) return cmd_run(run_file, horizon, tolerance);
    if (check->parsed()) return cmd_check(check_file);
    return cmd_compare(compare_file, horizon, tolerance);
}
