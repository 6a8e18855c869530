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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "lefschetz/lefschetz.hpp"

namespace {

using namespace lefschetz;

// exit codes:
//   0 success / property holds      3 not an O-sequence
//   1 property fails / mismatches   4 inconclusive verdict
//   2 malformed input or usage      5 budget exceeded
constexpr int exit_ok = 0;
constexpr int exit_fails = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_not_o_sequence = 3;
constexpr int exit_inconclusive = 4;
constexpr int exit_budget = 5;

HilbertFunction parse_sequence(const std::string& text) {
    std::vector<long long> values;
    std::string token;
    for (std::size_t k = 0; k <= text.size(); ++k) {
        if (k < text.size() && text[k] != ',') {
            if (!std::isspace(static_cast<unsigned char>(text[k])))
                token += text[k];
            continue;
        }
        if (token.empty())
            throw InvalidArgument("empty entry in sequence \"" + text + "\"");
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("cannot parse \"" + token + "\" as an integer");
        }
        if (used != token.size())
            throw InvalidArgument("cannot parse \"" + token + "\" as an integer");
        values.push_back(value);
        token.clear();
    }
    return HilbertFunction(values);
}

json verdict_to_json(const ForcingVerdict& v) {
    json j;
    j["forces"] = v.forces;
    j["obstruction"] = to_string(v.obstruction);
    if (v.failing_index) j["failing_index"] = *v.failing_index;
    return j;
}

std::string verdict_text(const ForcingVerdict& v, const HilbertFunction& h) {
    if (v.forces) return "yes";
    if (v.obstruction == Obstruction::socle_width) {
        const long long t = t_index(h);
        return "no (socle-width: h_t = " + std::to_string(h[t]) +
               " > 2 at t = " + std::to_string(t) + ")";
    }
    return "no (growth-condition at i = " + std::to_string(*v.failing_index) +
           ")";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct RunConfig {
    std::uint64_t seed = 0;
    int trials = 3;
    long long coeff_bound = 1000;
    long long degree_cap = 50;
    long long budget = 20000;
    bool json_output = false;
};

void add_config_flags(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--seed", config.seed, "sampling seed (default 0)");
    cmd->add_option("--trials", config.trials, "random trials per test")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--coeff-bound", config.coeff_bound,
                    "random integer coefficients land in [-B, B]")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--degree-cap", config.degree_cap,
                    "artinian detection cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget", config.budget,
                    "form-count budget for exhaustive enumeration")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--json", config.json_output, "machine-readable output");
}

FormStrategy make_strategy(const std::string& name, const RunConfig& config) {
    if (name == "random")
        return RandomIntStrategy{config.coeff_bound, config.trials, config.seed};
    if (name == "allones") return AllOnesLinearStrategy{};
    if (name == "lastvar") return LastVariablePowerStrategy{};
    if (name == "exhaustive") return ExhaustiveFiniteFieldStrategy{config.budget};
    throw InvalidArgument("unknown strategy \"" + name + "\"");
}

int run_classify(const std::string& sequence, const RunConfig& config) {
    const HilbertFunction h = parse_sequence(sequence);
    if (!is_o_sequence(h)) {
        if (config.json_output) {
            json j;
            j["sequence"] = h.values();
            j["o_sequence"] = false;
            emit(j);
        } else {
            std::cout << "sequence:       " << h.to_string() << "\n"
                      << "o-sequence:     no\n";
        }
        return exit_not_o_sequence;
    }
    const auto wlp = forces_wlp(h);
    const auto slp_mrp = forces_slp_mrp(h);
    if (config.json_output) {
        json j;
        j["sequence"] = h.values();
        j["o_sequence"] = true;
        j["t_index"] = t_index(h);
        j["forces_wlp"] = verdict_to_json(wlp);
        j["forces_slp_mrp"] = verdict_to_json(slp_mrp);
        emit(j);
    } else {
        std::cout << "sequence:       " << h.to_string() << "\n"
                  << "o-sequence:     yes\n"
                  << "t-index:        " << t_index(h) << "\n"
                  << "forces WLP:     " << verdict_text(wlp, h) << "\n"
                  << "forces SLP/MRP: " << verdict_text(slp_mrp, h) << "\n";
    }
    return exit_ok;
}

int run_lexseg(const std::string& sequence, const RunConfig& config) {
    const HilbertFunction h = parse_sequence(sequence);
    const RationalField field;
    const auto ideal = lex_segment_ideal(h, field);
    const auto round_trip = hilbert_function(ideal, config.degree_cap);
    if (config.json_output) {
        json j = ideal_to_json(ideal);  // doubles as an ideal file
        j["hilbert_function"] = round_trip.values();
        j["round_trip"] = round_trip == h;
        emit(j);
    } else {
        std::cout << "variables:  " << ideal.var_count() << "\n";
        std::cout << "generators: ";
        for (std::size_t k = 0; k < ideal.generators().size(); ++k) {
            if (k) std::cout << ", ";
            std::cout << ideal.generators()[k].to_string();
        }
        std::cout << "\n"
                  << "quotient hilbert function: " << round_trip.to_string()
                  << (round_trip == h ? " (matches the input)"
                                      : " (MISMATCH - please report)")
                  << "\n";
    }
    return round_trip == h ? exit_ok : exit_fails;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open \"" + path + "\"");
    json j;
    in >> j;
    return j;
}

void print_report_human(const PropertyReport& report) {
    std::cout << "property: " << to_string(report.property) << "\n"
              << "strategy: " << strategy_name(report.strategy) << "\n"
              << "field:    "
              << (report.field.characteristic == 0
                      ? std::string("rationals")
                      : "F_" + std::to_string(report.field.characteristic))
              << "\n"
              << "verdict:  " << to_string(report.verdict) << "\n"
              << "   d   i   max  best  trials\n";
    for (const auto& cell : report.entries) {
        std::cout << "  " << cell.form_degree << "   " << cell.start_degree
                  << "   " << cell.max_possible << "    " << cell.best_rank
                  << "     " << cell.trials_used
                  << (cell.best_rank < cell.max_possible ? "   <- deficit" : "")
                  << "\n";
    }
    if (!report.note.empty()) std::cout << "note: " << report.note << "\n";
}

int report_exit_code(const PropertyReport& report) {
    switch (report.verdict) {
        case Verdict::holds_deterministic:
        case Verdict::holds_probabilistic: return exit_ok;
        case Verdict::fails_observed: return exit_fails;
        case Verdict::inconclusive: return exit_inconclusive;
    }
    return exit_inconclusive;
}

int run_test(const std::string& ideal_path, const std::string& property,
             const std::string& strategy_name_, const RunConfig& config) {
    const AnyIdeal loaded = ideal_from_json(load_json_file(ideal_path));
    const LefschetzProperty prop = property_from_string(property);
    const FormStrategy strategy = make_strategy(strategy_name_, config);
    const PropertyReport report = std::visit(
        [&](const auto& ideal) {
            switch (prop) {
                case LefschetzProperty::wlp:
                    return test_wlp(ideal, strategy, config.degree_cap);
                case LefschetzProperty::slp:
                    return test_slp(ideal, strategy, config.degree_cap);
                default:
                    return test_mrp(ideal, strategy, config.degree_cap);
            }
        },
        loaded);
    if (config.json_output) {
        emit(report_to_json(report));
    } else {
        print_report_human(report);
    }
    return report_exit_code(report);
}

int run_hpbound(const std::string& sequence, long long p, long long d,
                const RunConfig& config) {
    const HilbertFunction h = parse_sequence(sequence);
    const Int bound = hp_upper_bound(h, p, d);
    if (config.json_output) {
        json j;
        j["sequence"] = h.values();
        j["p"] = p;
        j["d"] = d;
        j["bound"] = bound.str();
        emit(j);
    } else {
        std::cout << bound.str() << "\n";
    }
    return exit_ok;
}

int run_sweep_cmd(long long max_r, long long max_e, long long max_value,
                  long long max_sequences, const RunConfig& config) {
    const SweepResult result =
        run_sweep(max_r, max_e, max_value, max_sequences, config.degree_cap);
    if (config.json_output) {
        json rows = json::array();
        for (const auto& row : result.rows) {
            rows.push_back({{"sequence", row.h.values()},
                            {"forces", row.forces},
                            {"slp", row.slp_holds},
                            {"mrp", row.mrp_holds},
                            {"checked", row.checked},
                            {"mismatch", row.mismatch}});
        }
        json j;
        j["max_r"] = max_r;
        j["max_e"] = max_e;
        j["max_value"] = max_value;
        j["sequences"] = result.sequences;
        j["forcing"] = result.forcing;
        j["mismatches"] = result.mismatches;
        j["rows"] = rows;
        emit(j);
    } else {
        for (const auto& row : result.rows) {
            if (!row.mismatch) continue;
            std::cout << "MISMATCH " << row.h.to_string() << ": forces="
                      << (row.forces ? "yes" : "no")
                      << " slp=" << (row.slp_holds ? "holds" : "fails")
                      << " mrp=" << (row.mrp_holds ? "holds" : "fails") << "\n";
        }
        std::cout << "sequences:  " << result.sequences << "\n"
                  << "forcing:    " << result.forcing << "\n"
                  << "mismatches: " << result.mismatches << "\n";
    }
    return result.mismatches == 0 ? exit_ok : exit_fails;
}

std::uint64_t default_seed_from_env() {
    const char* env = std::getenv("LEFSCHETZ_SEED");
    if (!env) return 0;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        return 0;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Hilbert-function classification and exact rank testing of the weak/"
        "strong Lefschetz and maximal rank properties on artinian quotients"};
    app.require_subcommand(1);

    RunConfig config;
    config.seed = default_seed_from_env();

    std::string sequence, ideal_path, property, strategy = "random";
    long long hp_p = 1, hp_d = 1;
    long long max_r = 3, max_e = 4, max_value = 6, max_sequences = 100000;

    auto* classify = app.add_subcommand(
        "classify", "classify a Hilbert function: O-sequence, t-index, forcing");
    classify->add_option("sequence", sequence, "comma-separated values")
        ->required();
    add_config_flags(classify, config);

    auto* lexseg = app.add_subcommand(
        "lexseg", "minimal generators of the lex-segment ideal realizing H");
    lexseg->add_option("sequence", sequence, "comma-separated values")->required();
    add_config_flags(lexseg, config);

    auto* test = app.add_subcommand(
        "test", "rank-test a property on an explicit quotient algebra");
    test->add_option("--ideal", ideal_path, "ideal file (JSON)")->required();
    test->add_option("--property", property, "wlp | slp | mrp")->required();
    test->add_option("--strategy", strategy,
                     "random | lastvar | allones | exhaustive");
    add_config_flags(test, config);

    auto* hpbound = app.add_subcommand(
        "hpbound", "Herzog-Popescu upper bound for H(A/F, p), deg F = d");
    hpbound->add_option("sequence", sequence, "comma-separated values")->required();
    hpbound->add_option("--p", hp_p, "target degree p >= d")->required();
    hpbound->add_option("--d", hp_d, "form degree d >= 1")->required();
    add_config_flags(hpbound, config);

    auto* sweep = app.add_subcommand(
        "sweep",
        "enumerate artinian O-sequences and cross-check the classification "
        "against lex-segment rank tests");
    sweep->add_option("--max-r", max_r, "largest h_1");
    sweep->add_option("--max-e", max_e, "largest socle degree");
    sweep->add_option("--max-h", max_value, "largest value");
    sweep->add_option("--max-sequences", max_sequences, "enumeration budget");
    add_config_flags(sweep, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (classify->parsed()) return run_classify(sequence, config);
        if (lexseg->parsed()) return run_lexseg(sequence, config);
        if (test->parsed()) return run_test(ideal_path, property, strategy, config);
        if (hpbound->parsed()) return run_hpbound(sequence, hp_p, hp_d, config);
        return run_sweep_cmd(max_r, max_e, max_value, max_sequences, config);
    } catch (const NotAnOSequence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_not_o_sequence;
    } catch (const ExhaustiveTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
}
