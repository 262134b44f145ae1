/*
   Copyright 2026 The fareyflow authors

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

#include "fareyflow/rational.hpp"

#include "doctest.h"

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

using namespace fareyflow;

namespace {

std::vector<Fraction> fracs(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Fraction> out;
    for (auto [p, q] : pairs) {
        out.emplace_back(p, q);
    }
    return out;
}

int totient(int k) {
    int result = 0;
    for (int i = 1; i <= k; ++i) {
        if (std::gcd(i, k) == 1) {
            ++result;
        }
    }
    return result;
}

}  // namespace

TEST_CASE("make_fraction reduces and validates") {
    Fraction f = make_fraction(44375, 64000);
    CHECK(f == Fraction(355, 512));
    CHECK(f.num() == 355);
    CHECK(f.den() == 512);

    CHECK(make_fraction(0, 7) == Fraction(0, 1));
    CHECK(make_fraction(9, 13) == Fraction(9, 13));

    CHECK_THROWS_AS(make_fraction(1, 0), std::domain_error);
    CHECK_THROWS_AS(make_fraction(-1, 2), std::domain_error);
    CHECK_THROWS_AS(make_fraction(1, -2), std::domain_error);  // normalizes to -1/2
}

TEST_CASE("fraction arithmetic is exact and ordered") {
    Fraction a(9, 13), b(355, 512);
    CHECK((a - b) == Fraction(-7, 6656));
    CHECK((a - b).is_negative());
    CHECK((a - b).abs() == Fraction(7, 6656));
    CHECK(a < Fraction(355, 512) + Fraction(1, 100));
    CHECK(Fraction(1, 3) + Fraction(1, 6) == Fraction(1, 2));
    CHECK(Fraction(2, 3) * Fraction(3, 4) == Fraction(1, 2));
    CHECK(Fraction(1, 2) / Fraction(1, 4) == Fraction(2, 1));
    CHECK_THROWS_AS(Fraction(1, 2) / Fraction(0, 1), std::domain_error);
    CHECK(Fraction(7, 6656).to_double() == doctest::Approx(0.0010516827).epsilon(1e-9));
}

TEST_CASE("farey sequences match the classical listings up to order 8") {
    const std::vector<std::vector<std::pair<int, int>>> listings = {
        {{0, 1}, {1, 1}},
        {{0, 1}, {1, 2}, {1, 1}},
        {{0, 1}, {1, 3}, {1, 2}, {2, 3}, {1, 1}},
        {{0, 1}, {1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4}, {1, 1}},
        {{0, 1}, {1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2}, {3, 5}, {2, 3}, {3, 4}, {4, 5}, {1, 1}},
        {{0, 1}, {1, 6}, {1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2}, {3, 5}, {2, 3}, {3, 4}, {4, 5},
         {5, 6}, {1, 1}},
        {{0, 1}, {1, 7}, {1, 6}, {1, 5}, {1, 4}, {2, 7}, {1, 3}, {2, 5}, {3, 7}, {1, 2}, {4, 7},
         {3, 5}, {2, 3}, {5, 7}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 1}},
        {{0, 1}, {1, 8}, {1, 7}, {1, 6}, {1, 5}, {1, 4}, {2, 7}, {1, 3}, {3, 8}, {2, 5}, {3, 7},
         {1, 2}, {4, 7}, {3, 5}, {5, 8}, {2, 3}, {5, 7}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
         {1, 1}},
    };
    for (int m = 1; m <= 8; ++m) {
        CAPTURE(m);
        CHECK(farey_sequence(m).elems == fracs(listings[std::size_t(m - 1)]));
    }
    CHECK_THROWS_AS(farey_sequence(0), std::invalid_argument);
}

TEST_CASE("recurrence and enumeration strategies agree up to order 256") {
    for (int m : {1, 2, 3, 5, 8, 13, 50, 100, 256}) {
        CAPTURE(m);
        CHECK(farey_sequence(m).elems == farey_sequence_enumerated(m).elems);
    }
}

TEST_CASE("cardinality matches the totient sum for m <= 64") {
    std::size_t expected = 1;
    for (int m = 1; m <= 64; ++m) {
        expected += std::size_t(totient(m));
        CAPTURE(m);
        CHECK(farey_sequence(m).elems.size() == expected);
    }
}

TEST_CASE("each farey sequence is contained in the next") {
    for (int m = 1; m < 40; ++m) {
        std::set<Fraction> bigger;
        for (const auto& f : farey_sequence(m + 1).elems) {
            bigger.insert(f);
        }
        for (const auto& f : farey_sequence(m).elems) {
            CAPTURE(m);
            CHECK(bigger.count(f) == 1);
        }
    }
}

TEST_CASE("neighbor identity q*r - p*s = 1") {
    for (int m = 1; m <= 100; ++m) {
        CAPTURE(m);
        CHECK(farey_neighbors_check(farey_sequence(m)));
    }
    CHECK(farey_neighbors_check(fracs({{0, 1}, {1, 1}})));
    CHECK_FALSE(farey_neighbors_check(fracs({{0, 1}, {2, 3}, {1, 1}})));
}
