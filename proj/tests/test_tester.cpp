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

#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "lefschetz/hp_bounds.hpp"
#include "lefschetz/json_io.hpp"
#include "lefschetz/sweep.hpp"
#include "lefschetz/tester.hpp"

using namespace lefschetz;

namespace {

const RationalField Q;

GradedIdeal<RationalField> ideal_q(int r, const std::vector<std::string>& gens) {
    std::vector<Polynomial<RationalField>> polys;
    for (const auto& g : gens) polys.push_back(parse_polynomial(g, r, Q));
    return GradedIdeal<RationalField>(Q, r, polys);
}

GradedIdeal<PrimeField> ideal_p(long long p, int r,
                                const std::vector<std::string>& gens) {
    PrimeField field(p);
    std::vector<Polynomial<PrimeField>> polys;
    for (const auto& g : gens) polys.push_back(parse_polynomial(g, r, field));
    return GradedIdeal<PrimeField>(field, r, polys);
}

GradedIdeal<RationalField> gotzmann_ideal() {
    return ideal_q(3, {"x1^2", "x1*x2", "x2^3", "x2^2*x3", "x1*x3^3",
                       "x2*x3^3", "x3^4"});
}

const RankEntry* find_entry(const PropertyReport& report, long long d,
                            long long i) {
    for (const auto& cell : report.entries)
        if (cell.form_degree == d && cell.start_degree == i) return &cell;
    return nullptr;
}

/// Seeded generator of small artinian monomial ideals: variable powers plus
/// a few extra monomials, rejected until the socle degree fits.
GradedIdeal<RationalField> random_artinian_monomial_ideal(Rng& rng,
                                                          long long max_socle) {
    while (true) {
        const int r = static_cast<int>(rng.uniform(1, 3));
        std::vector<Polynomial<RationalField>> gens;
        for (int k = 1; k <= r; ++k) {
            const int power = static_cast<int>(rng.uniform(2, 3));
            gens.push_back(Polynomial<RationalField>::monomial_term(
                Q, Monomial::variable_power(r, k, power), Q.one()));
        }
        const long long extras = rng.uniform(0, 2);
        for (long long k = 0; k < extras; ++k) {
            const long long degree = rng.uniform(2, 3);
            const auto basis = monomials_of_degree(r, degree);
            const auto& pick = basis[static_cast<std::size_t>(
                rng.uniform(0, static_cast<long long>(basis.size()) - 1))];
            gens.push_back(Polynomial<RationalField>::monomial_term(Q, pick, Q.one()));
        }
        GradedIdeal<RationalField> ideal(Q, r, gens);
        const auto h = hilbert_function(ideal, 50);
        if (h.socle_degree() >= 1 && h.socle_degree() <= max_socle) return ideal;
    }
}

}  // namespace

TEST_CASE("multiplication rank on a complete intersection") {
    const auto ideal = ideal_q(2, {"x1^2", "x2^2"});
    const auto [r1, m1] =
        multiplication_rank(ideal, parse_polynomial("x1 + x2", 2, Q), 1);
    CHECK(r1 == 1);
    CHECK(m1 == 1);

    // a form inside the ideal multiplies to zero: legal, rank 0
    const auto [r0, m0] =
        multiplication_rank(ideal, parse_polynomial("x1^2", 2, Q), 0);
    CHECK(r0 == 0);
    CHECK(m0 == 1);
}

TEST_CASE("multiplication rank on the Gotzmann quotient") {
    const auto ideal = gotzmann_ideal();
    const auto [r, m] =
        multiplication_rank(ideal, parse_polynomial("x1 + 2*x2 + 3*x3", 3, Q), 2);
    CHECK(m == 3);  // min(h_2, h_3) = min(4, 3)
    CHECK(r == 3);
}

TEST_CASE("rank-quotient identity: two routes agree") {
    Rng rng(424242);
    for (int round = 0; round < 12; ++round) {
        const auto ideal = random_artinian_monomial_ideal(rng, 4);
        const auto h = hilbert_function(ideal, 50);
        const long long e = h.socle_degree();
        const long long d = rng.uniform(1, e);
        Rng form_rng(derive_seed(rng.next(), 1));
        const auto f = random_form(Q, ideal.var_count(), d, form_rng, 9);
        const auto h_modulo = hilbert_function(ideal.with_form(f), 50);
        for (long long i = 0; i + d <= e; ++i) {
            const auto [observed, unused] = multiplication_rank(ideal, f, i);
            CHECK(observed == h[i + d] - h_modulo[i + d]);
        }
    }
}

TEST_CASE("SLP fails on the lex-segment of 1,3,4,3 exactly as expected") {
    const auto lex = lex_segment_ideal(HilbertFunction({1, 3, 4, 3}), Q);
    const auto slp = test_slp(lex, LastVariablePowerStrategy{});
    CHECK(slp.verdict == Verdict::fails_observed);
    const auto* cell = find_entry(slp, 2, 1);
    REQUIRE(cell != nullptr);
    CHECK(cell->max_possible == 3);
    CHECK(cell->best_rank == 2);

    const auto mrp = test_mrp(lex, LastVariablePowerStrategy{});
    CHECK(mrp.verdict == Verdict::fails_observed);
}

TEST_CASE("Gotzmann quotient has SLP and MRP under random sampling") {
    const auto ideal = gotzmann_ideal();
    const RandomIntStrategy strategy{1000, 3, 0};
    const auto slp = test_slp(ideal, strategy);
    CHECK(slp.verdict == Verdict::holds_probabilistic);
    const auto mrp = test_mrp(ideal, strategy);
    CHECK(mrp.verdict == Verdict::holds_probabilistic);
    const auto wlp = test_wlp(ideal, strategy);
    CHECK(wlp.verdict == Verdict::holds_probabilistic);

    // forcing fails for this Hilbert function even though this algebra
    // passes: the class is about all algebras
    CHECK_FALSE(forces_slp_mrp(HilbertFunction({1, 3, 4, 3})).forces);
}

TEST_CASE("reports are deterministic and monotone in the trial budget") {
    const auto ideal = gotzmann_ideal();
    const auto a = test_slp(ideal, RandomIntStrategy{1000, 3, 17});
    const auto b = test_slp(ideal, RandomIntStrategy{1000, 3, 17});
    CHECK(a == b);

    const auto fewer = test_slp(ideal, RandomIntStrategy{1000, 1, 17});
    for (const auto& cell : fewer.entries) {
        const auto* more = find_entry(a, cell.form_degree, cell.start_degree);
        REQUIRE(more != nullptr);
        CHECK(more->best_rank >= cell.best_rank);
    }

    const auto reseeded = test_slp(ideal, RandomIntStrategy{1000, 3, 18});
    CHECK(reseeded.seed == 18);
}

TEST_CASE("deterministic grading needs a verified stable ideal") {
    const auto lex = lex_segment_ideal(HilbertFunction({1, 3, 2, 2, 1}), Q);
    const auto report = test_slp(lex, LastVariablePowerStrategy{});
    CHECK(report.verdict == Verdict::holds_deterministic);

    // (x2^2) union friends is monomial but not stable: downgrade to
    // probabilistic even under x_r powers
    const auto unstable = ideal_q(2, {"x2^2", "x1^3"});
    CHECK_FALSE(is_stable(unstable));
    const auto downgraded = test_slp(unstable, LastVariablePowerStrategy{});
    CHECK((downgraded.verdict == Verdict::holds_probabilistic ||
           downgraded.verdict == Verdict::fails_observed));

    const auto allones = test_slp(lex, AllOnesLinearStrategy{});
    CHECK((allones.verdict == Verdict::holds_probabilistic ||
           allones.verdict == Verdict::fails_observed));
}

TEST_CASE("SLP implies MRP implies WLP at the report level") {
    const std::vector<HilbertFunction> sequences{
        HilbertFunction({1, 3, 2, 2, 1}), HilbertFunction({1, 2, 3, 2, 1}),
        HilbertFunction({1, 3, 4, 3}), HilbertFunction({1, 3, 6, 6})};
    for (const auto& h : sequences) {
        const auto lex = lex_segment_ideal(h, Q);
        const auto slp = test_slp(lex, LastVariablePowerStrategy{});
        const auto mrp = test_mrp(lex, LastVariablePowerStrategy{});
        const auto wlp = test_wlp(lex, LastVariablePowerStrategy{});
        if (slp.holds()) CHECK(mrp.holds());
        if (mrp.holds()) CHECK(wlp.holds());
        // on stable ideals the x_r-power routes for SLP and MRP agree
        CHECK(slp.holds() == mrp.holds());
    }
}

TEST_CASE("powers of linear forms vanish early over F_p") {
    for (const long long p : {2LL, 3LL}) {
        const auto ideal = ideal_p(
            p, 2,
            {"x1^" + std::to_string(p), "x2^" + std::to_string(p)});
        const auto h = hilbert_function(ideal, 50);
        CHECK(h.socle_degree() == 2 * (p - 1));
        const auto slp = test_slp(ideal, ExhaustiveFiniteFieldStrategy{});
        CHECK(slp.verdict == Verdict::fails_observed);
        for (long long a = p; a <= 2 * (p - 1); ++a) {
            const auto* cell = find_entry(slp, a, 0);
            REQUIRE(cell != nullptr);
            CHECK(cell->best_rank == 0);  // every L^a lies in the ideal
            CHECK(cell->max_possible == 1);
        }
        const auto mrp = test_mrp(ideal, ExhaustiveFiniteFieldStrategy{});
        CHECK(mrp.verdict == Verdict::holds_deterministic);
        CHECK_FALSE(mrp.note.empty());
    }
}

TEST_CASE("sampling over a prime field cannot refute, only report") {
    const auto ideal = ideal_p(5, 2, {"x1^5", "x2^5"});
    const auto slp = test_slp(ideal, RandomIntStrategy{1000, 50, 1});
    CHECK(slp.verdict == Verdict::inconclusive);  // L^5 always dies
    CHECK_FALSE(slp.note.empty());

    const auto mrp = test_mrp(ideal, RandomIntStrategy{1000, 50, 1});
    CHECK((mrp.holds() || mrp.verdict == Verdict::inconclusive));
    CHECK(mrp.verdict != Verdict::fails_observed);
}

TEST_CASE("exhaustive enumeration respects its budget") {
    const auto ideal = ideal_p(5, 3, {"x1^5", "x2^5", "x3^5"});
    CHECK_THROWS_AS(test_slp(ideal, ExhaustiveFiniteFieldStrategy{4}),
                    ExhaustiveTooLarge);
    CHECK_THROWS_AS(test_slp(gotzmann_ideal(), ExhaustiveFiniteFieldStrategy{}),
                    InvalidStrategy);
}

TEST_CASE("projective form enumeration covers the space once") {
    PrimeField f3(3);
    const auto forms = enumerate_projective_forms(f3, 2, 1, 100);
    CHECK(forms.size() == 4);  // (3^2 - 1) / 2
    const auto quadrics = enumerate_projective_forms(f3, 2, 2, 100);
    CHECK(quadrics.size() == 13);  // (3^3 - 1) / 2
    for (std::size_t a = 0; a < quadrics.size(); ++a)
        for (std::size_t b = a + 1; b < quadrics.size(); ++b)
            CHECK(!(quadrics[a] == quadrics[b]));
}

TEST_CASE("exact sequence decomposition holds degreewise") {
    const auto ideal = ideal_q(2, {"x1^2", "x2^2"});
    CHECK(verify_exact_sequence_decomposition(ideal,
                                              parse_polynomial("x1 + x2", 2, Q)));

    Rng rng(5150);
    for (int round = 0; round < 10; ++round) {
        const auto sample = random_artinian_monomial_ideal(rng, 5);
        const auto h = hilbert_function(sample, 50);
        Rng form_rng(rng.next());
        const long long d = form_rng.uniform(1, h.socle_degree());
        auto f = random_form(Q, sample.var_count(), d, form_rng, 9);
        if (in_ideal_slice(sample, f)) continue;
        CHECK(verify_exact_sequence_decomposition(sample, f));
    }

    CHECK_THROWS_AS(
        verify_exact_sequence_decomposition(ideal, parse_polynomial("x1^2", 2, Q)),
        FormInIdeal);
}

TEST_CASE("colon quotients by general powers have socle degree e - d") {
    const auto ideal = ideal_q(2, {"x1^3", "x2^3"});  // e = 4
    CHECK(socle_colon_check(ideal, 2, RandomIntStrategy{1000, 3, 0}));
    CHECK(socle_colon_check(ideal, 4, RandomIntStrategy{1000, 3, 0}));
    CHECK_THROWS_AS(socle_colon_check(ideal, 5, RandomIntStrategy{}),
                    InvalidArgument);

    // over F_p the p-th power of every linear form lies in (x^p, y^p)
    const auto char_p = ideal_p(3, 2, {"x1^3", "x2^3"});
    CHECK_FALSE(socle_colon_check(char_p, 3, ExhaustiveFiniteFieldStrategy{}));
}

TEST_CASE("Herzog-Popescu bound holds end to end") {
    CHECK(verify_hp_theorem(gotzmann_ideal(), 1, RandomIntStrategy{1000, 3, 0}));
    CHECK(verify_hp_theorem(ideal_q(2, {"x1^2", "x2^2"}), 1,
                            RandomIntStrategy{1000, 3, 0}));
    CHECK(verify_hp_theorem(gotzmann_ideal(), 2, RandomIntStrategy{1000, 3, 0}));
    CHECK_THROWS_AS(
        verify_hp_theorem(ideal_p(3, 2, {"x1^3", "x2^3"}), 1, RandomIntStrategy{}),
        InvalidArgument);
}

TEST_CASE("sweep cross-checks classification against lex-segment behavior") {
    const auto result = run_sweep(2, 3, 4, 10000);
    CHECK(result.mismatches == 0);
    CHECK(result.sequences == static_cast<long long>(result.rows.size()));
    // with r <= 2 every sequence forces
    CHECK(result.forcing == result.sequences);

    CHECK_THROWS_AS(run_sweep(3, 4, 6, 10), BudgetExceeded);
}

TEST_CASE("property report JSON round-trips") {
    const auto lex = lex_segment_ideal(HilbertFunction({1, 3, 4, 3}), Q);
    for (const FormStrategy& strategy :
         {FormStrategy{RandomIntStrategy{50, 2, 11}},
          FormStrategy{AllOnesLinearStrategy{}},
          FormStrategy{LastVariablePowerStrategy{}}}) {
        const auto report = test_slp(lex, strategy);
        CHECK(report_from_json(report_to_json(report)) == report);
    }
    const auto prime_report = test_mrp(ideal_p(2, 2, {"x1^2", "x2^2"}),
                                       ExhaustiveFiniteFieldStrategy{500});
    CHECK(report_from_json(report_to_json(prime_report)) == prime_report);
}

TEST_CASE("ideal files round-trip") {
    const auto ideal = gotzmann_ideal();
    const json j = ideal_to_json(ideal);
    const auto back = ideal_from_json(j);
    REQUIRE(std::holds_alternative<GradedIdeal<RationalField>>(back));
    const auto& same = std::get<GradedIdeal<RationalField>>(back);
    CHECK(hilbert_function(same, 50) == hilbert_function(ideal, 50));
    CHECK(ideal_to_json(same) == j);

    const json prime = {{"vars", 2},
                        {"char", 5},
                        {"gens", json::array({"x1^2", "3*x1*x2"})}};
    const auto loaded = ideal_from_json(prime);
    REQUIRE(std::holds_alternative<GradedIdeal<PrimeField>>(loaded));
    CHECK(std::get<GradedIdeal<PrimeField>>(loaded).field().characteristic() == 5);
}
