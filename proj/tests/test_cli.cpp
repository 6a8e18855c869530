/*
   Copyright 2026 The lefschetz library developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "lefschetz/json_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string command =
        env + (env.empty() ? "" : " ") + LEFSCHETZ_CLI_PATH " " + args +
        " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << contents;
    return path;
}

const std::string gotzmann_file = R"({"vars": 3, "char": 0,
  "gens": ["x1^2", "x1*x2", "x2^3", "x2^2*x3", "x1*x3^3", "x2*x3^3", "x3^4"]})";

}  // namespace

TEST_CASE("classify reports both forcing verdicts") {
    const auto run = run_cli("classify 1,3,4,3");
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("o-sequence:     yes") != std::string::npos);
    CHECK(run.output.find("t-index:        3") != std::string::npos);
    CHECK(run.output.find("forces WLP:     yes") != std::string::npos);
    CHECK(run.output.find("forces SLP/MRP: no (socle-width") != std::string::npos);

    const auto both = run_cli("classify 1,2,3,2,1");
    CHECK(both.exit_code == 0);
    CHECK(both.output.find("forces WLP:     yes") != std::string::npos);
    CHECK(both.output.find("forces SLP/MRP: yes") != std::string::npos);
}

TEST_CASE("classify exit codes distinguish malformed and non-O input") {
    CHECK(run_cli("classify 1,2,4").exit_code == 3);
    CHECK(run_cli("classify 1,,2").exit_code == 2);
    CHECK(run_cli("classify pineapple").exit_code == 2);
    CHECK(run_cli("classify").exit_code == 2);
    CHECK(run_cli("classify 1,2,4 --json").exit_code == 3);
}

TEST_CASE("classify json output is machine readable") {
    const auto run = run_cli("classify 1,3,4,3 --json");
    CHECK(run.exit_code == 0);
    const auto j = nlohmann::json::parse(run.output);
    CHECK(j.at("o_sequence") == true);
    CHECK(j.at("t_index") == 3);
    CHECK(j.at("forces_wlp").at("forces") == true);
    CHECK(j.at("forces_slp_mrp").at("forces") == false);
    CHECK(j.at("forces_slp_mrp").at("obstruction") == "socle-width");
}

TEST_CASE("lexseg prints minimal generators and the round trip") {
    const auto run = run_cli("lexseg 1,3,4,3");
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("x1^2, x1*x2, x1*x3^2, x2^3, x2^2*x3^2, x2*x3^3, "
                          "x3^4") != std::string::npos);
    CHECK(run.output.find("quotient hilbert function: 1,3,4,3 (matches the "
                          "input)") != std::string::npos);

    CHECK(run_cli("lexseg 1,1").output.find("x1^2") != std::string::npos);
    CHECK(run_cli("lexseg 1,2,1").output.find("x1^2, x1*x2, x2^3") !=
          std::string::npos);
    CHECK(run_cli("lexseg 1,2,4").exit_code == 3);
}

TEST_CASE("lexseg json doubles as an ideal file") {
    const auto run = run_cli("lexseg 1,3,4,3 --json");
    CHECK(run.exit_code == 0);
    const auto j = nlohmann::json::parse(run.output);
    CHECK(j.at("vars") == 3);
    CHECK(j.at("char") == 0);
    CHECK(j.at("round_trip") == true);
    const auto path = write_temp("lexseg_1343.json", run.output);

    const auto mrp =
        run_cli("test --ideal " + path.string() + " --property mrp --strategy lastvar");
    CHECK(mrp.exit_code == 1);  // fails: h_t = 3 > 2
    CHECK(mrp.output.find("fails-observed") != std::string::npos);
}

TEST_CASE("test subcommand verdicts map to exit codes") {
    const auto path = write_temp("gotzmann.json", gotzmann_file);

    const auto slp =
        run_cli("test --ideal " + path.string() + " --property slp --strategy random");
    CHECK(slp.exit_code == 0);
    CHECK(slp.output.find("holds-probabilistic") != std::string::npos);

    const auto mrp = run_cli("test --ideal " + path.string() +
                             " --property mrp --strategy random --json");
    CHECK(mrp.exit_code == 0);
    const auto report = lefschetz::report_from_json(
        nlohmann::json::parse(mrp.output));
    CHECK(report.verdict == lefschetz::Verdict::holds_probabilistic);
    CHECK(report.property == lefschetz::LefschetzProperty::mrp);

    CHECK(run_cli("test --ideal /no/such/file.json --property slp").exit_code == 2);
    CHECK(run_cli("test --ideal " + path.string() + " --property nope").exit_code ==
          2);
}

TEST_CASE("json test output is byte-identical for identical seed and flags") {
    const auto path = write_temp("gotzmann2.json", gotzmann_file);
    const std::string args = "test --ideal " + path.string() +
                             " --property slp --strategy random --seed 42 --json";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    // the env var supplies the default seed; the flag wins over it
    const auto via_env = run_cli(
        "test --ideal " + path.string() + " --property slp --strategy random --json",
        "LEFSCHETZ_SEED=42");
    CHECK(via_env.output == first.output);
    const auto flag_wins = run_cli(args, "LEFSCHETZ_SEED=7");
    CHECK(flag_wins.output == first.output);
}

TEST_CASE("characteristic p testing through the CLI") {
    const auto path = write_temp(
        "char2.json", R"({"vars": 2, "char": 2, "gens": ["x1^2", "x2^2"]})");
    const auto slp = run_cli("test --ideal " + path.string() +
                             " --property slp --strategy exhaustive");
    CHECK(slp.exit_code == 1);  // L^2 dies between degrees 0 and 2

    const auto mrp = run_cli("test --ideal " + path.string() +
                             " --property mrp --strategy exhaustive");
    CHECK(mrp.exit_code == 0);
    CHECK(mrp.output.find("holds-deterministic") != std::string::npos);

    const auto char5 = write_temp(
        "char5.json", R"({"vars": 2, "char": 5, "gens": ["x1^5", "x2^5"]})");
    const auto inconclusive = run_cli("test --ideal " + char5.string() +
                                      " --property slp --strategy random");
    CHECK(inconclusive.exit_code == 4);

    const auto too_large = run_cli("test --ideal " + char5.string() +
                                   " --property mrp --strategy exhaustive "
                                   "--budget 3");
    CHECK(too_large.exit_code == 5);
}

TEST_CASE("a quotient can hold MRP while failing SLP") {
    const std::string cube =
        "x1^3 + 3*x1^2*x2 + 3*x1^2*x3 + 3*x1*x2^2 + 6*x1*x2*x3 + 3*x1*x3^2 + "
        "x2^3 + 3*x2^2*x3 + 3*x2*x3^2 + x3^3";
    const auto path = write_temp(
        "mrp_not_slp.json",
        R"({"vars": 3, "char": 0, "gens": ["x1^3", "x2^3", "x3^3", ")" + cube +
            R"("]})");
    CHECK(run_cli("test --ideal " + path.string() +
                  " --property slp --strategy random")
              .exit_code == 1);
    CHECK(run_cli("test --ideal " + path.string() +
                  " --property mrp --strategy random")
              .exit_code == 0);
}

TEST_CASE("degenerate classifications") {
    const auto trivial = run_cli("classify 1");
    CHECK(trivial.exit_code == 0);
    CHECK(trivial.output.find("forces SLP/MRP: yes") != std::string::npos);
    CHECK(run_cli("lexseg 1").exit_code == 2);  // needs at least one variable
}

TEST_CASE("hpbound prints the Herzog-Popescu sum") {
    const auto zero = run_cli("hpbound 1,3,4,3 --p 3 --d 1");
    CHECK(zero.exit_code == 0);
    CHECK(zero.output == "0\n");

    const auto one = run_cli("hpbound 1,3,4,3 --p 3 --d 2");
    CHECK(one.output == "1\n");

    CHECK(run_cli("hpbound 1,3,4,3 --p 1 --d 2").exit_code == 2);  // p < d
}

TEST_CASE("sweep cross-checks the classification") {
    const auto run = run_cli("sweep --max-r 2 --max-e 3 --max-h 4");
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("mismatches: 0") != std::string::npos);

    const auto as_json =
        run_cli("sweep --max-r 2 --max-e 3 --max-h 4 --json");
    const auto j = nlohmann::json::parse(as_json.output);
    CHECK(j.at("mismatches") == 0);
    CHECK(j.at("sequences") == j.at("rows").size());
    CHECK(j.at("forcing") == j.at("sequences"));  // r <= 2 always forces

    CHECK(run_cli("sweep --max-r 3 --max-e 4 --max-sequences 3").exit_code == 5);
}
