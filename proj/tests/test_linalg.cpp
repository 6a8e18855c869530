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

#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "lefschetz/matrix.hpp"
#include "lefschetz/rng.hpp"

using namespace lefschetz;

namespace {

DenseMatrix<RationalField> rational_matrix(
    const std::vector<std::vector<long long>>& rows) {
    RationalField field;
    DenseMatrix<RationalField> m(field, rows.size(),
                                 rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = Rational(rows[i][j]);
    return m;
}

DenseMatrix<PrimeField> prime_matrix(const PrimeField& field,
                                     const std::vector<std::vector<long long>>& rows) {
    DenseMatrix<PrimeField> m(field, rows.size(),
                              rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = field.from_integer(rows[i][j]);
    return m;
}

std::vector<std::vector<long long>> random_grid(Rng& rng, std::size_t rows,
                                                std::size_t cols) {
    std::vector<std::vector<long long>> grid(rows, std::vector<long long>(cols));
    for (auto& row : grid)
        for (auto& v : row) v = rng.uniform(-9, 9);
    return grid;
}

}  // namespace

TEST_CASE("rank basics over the rationals") {
    RationalField field;
    DenseMatrix<RationalField> identity(field, 4, 4);
    for (std::size_t k = 0; k < 4; ++k) identity(k, k) = Rational(1);
    CHECK(rank(identity) == 4);

    CHECK(rank(DenseMatrix<RationalField>(field, 3, 5)) == 0);
    CHECK(rank(rational_matrix({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(rational_matrix({{0, 1}, {0, 2}})) == 1);
    CHECK(rank(rational_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("rank handles fractional entries") {
    RationalField field;
    DenseMatrix<RationalField> m(field, 2, 2);
    m(0, 0) = Rational(1, 2);
    m(0, 1) = Rational(1, 3);
    m(1, 0) = Rational(3, 2);
    m(1, 1) = Rational(1, 1);
    CHECK(rank(m) == 1);  // second row is 3x the first
    m(1, 1) = Rational(2, 1);
    CHECK(rank(m) == 2);
}

TEST_CASE("rank basics over a prime field") {
    PrimeField f5(5);
    CHECK(rank(prime_matrix(f5, {{1, 2}, {2, 4}})) == 1);
    CHECK(rank(prime_matrix(f5, {{5, 10}, {1, 2}})) == 1);  // first row is 0 mod 5
    CHECK(rank(prime_matrix(f5, {{1, 0}, {0, 1}})) == 2);
    PrimeField f2(2);
    CHECK(rank(prime_matrix(f2, {{2, 4}, {6, 8}})) == 0);
    CHECK_THROWS_AS(PrimeField(4), InvalidArgument);
    CHECK_THROWS_AS(PrimeField(1), InvalidArgument);
}

TEST_CASE("rank is bounded and permutation invariant") {
    Rng rng(20260811);
    for (int round = 0; round < 40; ++round) {
        const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 6));
        const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 6));
        auto grid = random_grid(rng, rows, cols);
        const auto m = rational_matrix(grid);
        const long long r = rank(m);
        CHECK(r <= static_cast<long long>(std::min(rows, cols)));

        auto shuffled = grid;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1],
                      shuffled[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(i) - 1))]);
        CHECK(rank(rational_matrix(shuffled)) == r);
    }
}

TEST_CASE("rank over large primes matches the rational rank") {
    Rng rng(7);
    PrimeField p1(1000003), p2(999983);
    for (int round = 0; round < 30; ++round) {
        const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 6));
        const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 6));
        const auto grid = random_grid(rng, rows, cols);
        const long long rational_rank = rank(rational_matrix(grid));
        const long long r1 = rank(prime_matrix(p1, grid));
        const long long r2 = rank(prime_matrix(p2, grid));
        CHECK(r1 <= rational_rank);
        CHECK(r2 <= rational_rank);
        CHECK(std::max(r1, r2) == rational_rank);
        // small primes can only lose rank
        CHECK(rank(prime_matrix(PrimeField(2), grid)) <= rational_rank);
        CHECK(rank(prime_matrix(PrimeField(3), grid)) <= rational_rank);
    }
}

TEST_CASE("stacked rank") {
    const auto a = rational_matrix({{1}, {0}, {0}});
    const auto b = rational_matrix({{0}, {1}, {0}});
    CHECK(rank_of_stacked(a, b) == 2);
    CHECK(rank_of_stacked(a, a) == 1);

    RationalField field;
    const DenseMatrix<RationalField> empty(field, 3, 0);
    CHECK(rank_of_stacked(a, empty) == 1);

    const auto wrong_rows = rational_matrix({{1}, {2}});
    CHECK_THROWS_AS(rank_of_stacked(a, wrong_rows), DimensionMismatch);
}

TEST_CASE("stacked rank is symmetric in the sum of spans") {
    Rng rng(99);
    RationalField field;
    for (int round = 0; round < 30; ++round) {
        const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto a = rational_matrix(
            random_grid(rng, rows, static_cast<std::size_t>(rng.uniform(0, 4))));
        const auto b = rational_matrix(
            random_grid(rng, rows, static_cast<std::size_t>(rng.uniform(0, 4))));
        CHECK(rank_of_stacked(a, b) == rank_of_stacked(b, a));
        CHECK(rank_of_stacked(a, b) >= rank(b));
    }
}

TEST_CASE("prime field element arithmetic") {
    PrimeField f7(7);
    CHECK(f7.from_integer(-1) == 6);
    CHECK(f7.from_integer(Int("700000000000000000003")) == 3);
    for (long long a = 1; a < 7; ++a) CHECK(f7.mul(a, f7.inv(a)) == 1);
    CHECK_THROWS_AS(f7.inv(0), InvalidArgument);
}
