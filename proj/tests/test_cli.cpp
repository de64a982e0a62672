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

// End-to-end checks of the installed command-line tool.  The test binary
// receives the tool's location in --cli-path=; each case spawns the real
// executable and inspects its exit code and output.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

#include "paths.hpp"
#include "support.hpp"

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command, capturing the requested streams.
CmdResult run_cmd(const std::string& args, const char* redirect = " 2>&1") {
    CmdResult res;
    std::string full = "\"" + g_cli_path + "\" " + args + redirect;
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string fixture(const std::string& name) {
    return "\"" + g_source_root + "/scenarios/" + name + "\"";
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/" + name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("run prints the golden trace and exits cleanly") {
    CmdResult res = run_cmd("run " + fixture("dove_swan_penguin.scn"), " 2>/dev/null");
    CHECK(res.exit_code == 0);
    CHECK(res.output ==
          support::read_file(g_source_root +
                             "/tests/golden/dove_swan_penguin.trace.txt"));
}

TEST_CASE("run reports the worked soft-update number") {
    CmdResult res = run_cmd("run " + fixture("jeffrey_demo.scn"));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("bel(p) = 0.619048") != std::string::npos);
    CHECK(res.output.find("dominated=yes") != std::string::npos);
}

TEST_CASE("refused evidence does not fail the run") {
    CmdResult res = run_cmd("run " + fixture("precondition_nonbinary.scn"));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("refused: evidence not absorbed; state unchanged") !=
          std::string::npos);
}

TEST_CASE("a hard error halts the run with exit code one") {
    std::string path = write_temp("belrev_cli_halting.scn",
                                  "atoms p\n"
                                  "prior world p=t weight 1\n"
                                  "jeffrey p 0.5\n"
                                  "query p\n");
    CmdResult res = run_cmd("run \"" + path + "\"");
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("error: ") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("check reports the directive count") {
    CmdResult res = run_cmd("check " + fixture("dove_swan_penguin.scn"));
    CHECK(res.exit_code == 0);
    CHECK(res.output == "ok: 12 directive(s)\n");
}

TEST_CASE("check rejects unparseable scenarios with exit code one") {
    std::string path =
        write_temp("belrev_cli_broken.scn", "atoms p\nquery q\n");
    CmdResult res = run_cmd("check \"" + path + "\"");
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("error: line 2") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("a missing file is a scenario error, not a usage error") {
    CmdResult res = run_cmd("run /nonexistent/missing.scn");
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("cannot read") != std::string::npos);
}

TEST_CASE("compare prints the two-engine report") {
    CmdResult res = run_cmd("compare " + fixture("contrast.scn"));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("== updating vs revision ==") != std::string::npos);
    CHECK(res.output.find("prior opinion 0.900000, posterior 0.000000") !=
          std::string::npos);
    CHECK(res.output.find("revised  <0.600000, 0.548533>") != std::string::npos);
    CHECK(res.output.find("probabilistic traces byte-identical: yes") !=
          std::string::npos);
}

TEST_CASE("compare rejects scenarios that stage no conflict") {
    std::string path = write_temp("belrev_cli_noconflict.scn",
                                  "atoms p\nprior uniform\nquery p\n");
    CmdResult res = run_cmd("compare \"" + path + "\"");
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("error: ") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cmd("").exit_code == 2);
    CHECK(run_cmd("frobnicate").exit_code == 2);
    CHECK(run_cmd("run").exit_code == 2);  // missing required file
    CHECK(run_cmd("--k 0 run " + fixture("dove_swan_penguin.scn")).exit_code == 2);
    CHECK(run_cmd("--tolerance 0 run " + fixture("dove_swan_penguin.scn")).exit_code ==
          2);
    CHECK(run_cmd("--help").exit_code == 0);
}

TEST_CASE("the horizon option feeds the calculus") {
    std::string path = write_temp("belrev_cli_horizon.scn",
                                  "nars judgment f1 dove flyer 0.9 0.9 base a\n"
                                  "nars judgment f2 dove bird 1 0.9 base a\n"
                                  "nars induct f1 f2 as h\n");
    CmdResult narrow = run_cmd("run \"" + path + "\"");
    CHECK(narrow.exit_code == 0);
    CHECK(narrow.output.find("<0.900000, 0.288256>") != std::string::npos);

    CmdResult wide = run_cmd("--k 5 run \"" + path + "\"");
    CHECK(wide.exit_code == 0);
    CHECK(wide.output.find("<0.900000, 0.139415>") != std::string::npos);
    std::remove(path.c_str());
}
