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

#ifndef LEFSCHETZ_JSON_IO_HPP
#define LEFSCHETZ_JSON_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lefschetz/ideal.hpp"
#include "lefschetz/parse.hpp"
#include "lefschetz/report.hpp"

namespace lefschetz {

using nlohmann::json;

inline json strategy_to_json(const FormStrategy& s) {
    json j;
    j["kind"] = strategy_name(s);
    if (const auto* random = std::get_if<RandomIntStrategy>(&s)) {
        j["coeff_bound"] = random->coeff_bound;
        j["trials"] = random->trials;
        j["seed"] = random->seed;
    } else if (const auto* ex = std::get_if<ExhaustiveFiniteFieldStrategy>(&s)) {
        j["budget"] = ex->budget;
    }
    return j;
}

inline FormStrategy strategy_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "random")
        return RandomIntStrategy{j.at("coeff_bound").get<long long>(),
                                 j.at("trials").get<int>(),
                                 j.at("seed").get<std::uint64_t>()};
    if (kind == "allones") return AllOnesLinearStrategy{};
    if (kind == "lastvar") return LastVariablePowerStrategy{};
    if (kind == "exhaustive")
        return ExhaustiveFiniteFieldStrategy{j.at("budget").get<long long>()};
    throw InvalidArgument("unknown strategy kind \"" + kind + "\"");
}

inline json report_to_json(const PropertyReport& report) {
    json entries = json::array();
    for (const auto& cell : report.entries) {
        entries.push_back({{"d", cell.form_degree},
                           {"i", cell.start_degree},
                           {"max_possible", cell.max_possible},
                           {"best_rank", cell.best_rank},
                           {"trials_used", cell.trials_used}});
    }
    json j;
    j["property"] = to_string(report.property);
    j["verdict"] = to_string(report.verdict);
    j["entries"] = entries;
    j["strategy"] = strategy_to_json(report.strategy);
    j["seed"] = report.seed;
    j["field"] = {{"char", report.field.characteristic}};
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

inline PropertyReport report_from_json(const json& j) {
    PropertyReport report;
    report.property = property_from_string(j.at("property").get<std::string>());
    report.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    for (const auto& cell : j.at("entries")) {
        report.entries.push_back({cell.at("d").get<long long>(),
                                  cell.at("i").get<long long>(),
                                  cell.at("max_possible").get<long long>(),
                                  cell.at("best_rank").get<long long>(),
                                  cell.at("trials_used").get<long long>()});
    }
    report.strategy = strategy_from_json(j.at("strategy"));
    report.seed = j.at("seed").get<std::uint64_t>();
    report.field = FieldSpec{j.at("field").at("char").get<long long>()};
    if (j.contains("note")) report.note = j.at("note").get<std::string>();
    return report;
}

/// A graded ideal over either supported field, as loaded from an ideal file.
using AnyIdeal = std::variant<GradedIdeal<RationalField>, GradedIdeal<PrimeField>>;

/// Ideal file format: {"vars": r, "char": 0 or p, "gens": ["<poly>", ...]}.
inline AnyIdeal ideal_from_json(const json& j) {
    const int vars = j.at("vars").get<int>();
    const long long characteristic = j.at("char").get<long long>();
    std::vector<std::string> gens =
        j.at("gens").get<std::vector<std::string>>();
    if (characteristic == 0) {
        RationalField field;
        std::vector<Polynomial<RationalField>> polys;
        for (const auto& text : gens)
            polys.push_back(parse_polynomial(text, vars, field));
        return GradedIdeal<RationalField>(field, vars, std::move(polys));
    }
    PrimeField field(characteristic);
    std::vector<Polynomial<PrimeField>> polys;
    for (const auto& text : gens)
        polys.push_back(parse_polynomial(text, vars, field));
    return GradedIdeal<PrimeField>(field, vars, std::move(polys));
}

template <class F>
json ideal_to_json(const GradedIdeal<F>& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
    json j;
    j["vars"] = ideal.var_count();
    j["char"] = ideal.field().characteristic();
    j["gens"] = gens;
    return j;
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_JSON_IO_HPP
