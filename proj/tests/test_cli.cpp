// Copyright 2026 The recurrence-lab Authors
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

#include "doctest.h"
#include "cli_internal.hpp"
#include "reclab/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace reclab;
using Json = cli::Json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

Json without_timing(Json j) {
    j.erase("timing");
    return j;
}

std::string temp_path(const std::string& name) { return "/tmp/reclab_test_" + name; }

}  // namespace

TEST_CASE("kneser report") {
    const Run r = run_cli({"kriz", "kneser", "--d", "5", "--k", "1"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["tool_version"] == kToolVersion);
    CHECK(j["seed"] == 0);
    CHECK(j["result"]["chi"] == 16);
    CHECK(j["result"]["bound"] == 3);
    CHECK(j["result"]["verdict"] == "pass");
    CHECK(j["all_checks_passed"] == true);
    CHECK(j["full_config"]["threads"] == "1");
}

TEST_CASE("csv projection") {
    const Run r = run_cli({"tuples", "translates", "--tuple", "0,2", "--r", "2", "--n-max", "20", "--csv", "translates"});
    CHECK(r.code == 0);
    CHECK(r.out == "translates\n3\n5\n11\n17\n");
    CHECK(run_cli({"tuples", "translates", "--csv", "nonsense"}).code == 1);
}

TEST_CASE("usage errors print the flag table") {
    const Run r = run_cli({"kriz", "kneser", "--bogus", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--nodes") != std::string::npos);
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({"kriz", "teleport"}).code == 1);
    CHECK(run_cli({"kriz", "kneser", "--d", "0"}).code == 1);
    CHECK(run_cli({"kriz", "kneser", "--d", "x"}).code == 1);
}

TEST_CASE("empty search exits 1 with a report") {
    const Run r = run_cli({"kriz", "witness", "--S", "1", "--m", "10", "--delta", "0.45"});
    CHECK(r.code == 1);
    const Json j = Json::parse(r.out);
    CHECK(j["complete"] == false);
    CHECK(j["result"]["best_size"] == 4);
}

TEST_CASE("verify recomputes and catches tampering") {
    const std::string path = temp_path("witness.json");
    REQUIRE(run_cli({"kriz", "witness", "--out", path}).code == 0);
    CHECK(run_cli({"verify", "--report", path}).code == 0);
    Json j = Json::parse(cli::read_file(path));
    j["result"]["B"] = {2, 3, 6, 8};
    j["all_checks_passed"] = true;
    std::ofstream(path) << j.dump();
    const Run v = run_cli({"verify", "--report", path});
    CHECK(v.code == 2);
    CHECK(Json::parse(v.out)["all_checks_passed"] == false);
    std::remove(path.c_str());

    const std::string gaps = temp_path("gaps.json");
    REQUIRE(run_cli({"color-gaps", "--window", "1e5", "--out", gaps}).code == 0);
    Json g = Json::parse(cli::read_file(gaps));
    std::swap(g["result"]["E1"], g["result"]["E2"]);
    g["result"]["E1"]["rle_base64"] = g["result"]["E2"]["rle_base64"];
    std::ofstream(gaps) << g.dump();
    CHECK(run_cli({"verify", "--report", gaps}).code == 2);
    std::remove(gaps.c_str());
    CHECK(run_cli({"verify", "--report", "/nonexistent.json"}).code == 1);
}

TEST_CASE("reruns from the embedded config are identical") {
    const Run a = run_cli({"tuples", "delta-star", "--r", "5", "--span", "1000", "--diffs", "multiples:6", "--trials", "300"});
    const Run b = run_cli({"tuples", "delta-star", "--r", "5", "--span", "1000", "--diffs", "multiples:6", "--trials", "300"});
    REQUIRE(a.code == 0);
    const Json ja = Json::parse(a.out);
    CHECK(without_timing(ja).dump() == without_timing(Json::parse(b.out)).dump());

    const std::string cfg = temp_path("cfg.txt");
    {
        std::ofstream f(cfg);
        f << "# regenerated\n";
        for (const auto& [k, v] : ja["full_config"].items()) f << k << " = " << v.get<std::string>() << "\n";
    }
    const Run c = run_cli({"--config", cfg});
    REQUIRE(c.code == 0);
    CHECK(without_timing(ja).dump() == without_timing(Json::parse(c.out)).dump());
    const Run d = run_cli({"tuples", "--config", cfg});
    CHECK(without_timing(ja).dump() == without_timing(Json::parse(d.out)).dump());
    // a flag overrides the file
    const Run e = run_cli({"tuples", "--config", cfg, "--seed", "4"});
    CHECK(Json::parse(e.out)["seed"] == 4);
    std::remove(cfg.c_str());
}

TEST_CASE("thread count resolution") {
    setenv("RECURRENCE_LAB_THREADS", "3", 1);
    CHECK(Json::parse(run_cli({"tuples"}).out)["full_config"]["threads"] == "3");
    CHECK(Json::parse(run_cli({"tuples", "--threads", "2"}).out)["full_config"]["threads"] == "2");
    unsetenv("RECURRENCE_LAB_THREADS");
    CHECK(Json::parse(run_cli({"tuples"}).out)["full_config"]["threads"] == "1");
    CHECK(run_cli({"tuples", "--threads", "0"}).code == 1);
}

TEST_CASE("set expressions") {
    CHECK(cli::parse_set_expr("odds", 1, 9).members() == std::vector<u64>{1, 3, 5, 7, 9});
    CHECK(cli::parse_set_expr("multiples:4", 1, 12).members() == std::vector<u64>{4, 8, 12});
    CHECK(cli::parse_set_expr("range:3..5", 1, 12).members() == std::vector<u64>{3, 4, 5});
    CHECK(cli::parse_set_expr("2,30,7", 1, 12).members() == std::vector<u64>{2, 7});
    CHECK(cli::parse_set_expr("family:primes", 1, 12).count() == 5);
}
