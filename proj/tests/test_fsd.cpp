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

#include "fareyflow/fsd.hpp"

#include "doctest.h"

#include <algorithm>
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

// Reference pick: scan a materialized RF for the min-numerator element of an
// open interval, smallest denominator on ties.
std::optional<Fraction> brute_force_pick(const std::vector<Fraction>& rf, const Fraction& lo,
                                         const Fraction& hi) {
    std::optional<Fraction> best;
    for (const Fraction& f : rf) {
        if (!(lo < f && f < hi)) {
            continue;
        }
        if (!best || f.num() < best->num() ||
            (f.num() == best->num() && f.den() < best->den())) {
            best = f;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("accuracy level bounds") {
    CHECK(AccuracyLevel(6).base() == 64);
    CHECK(AccuracyLevel(1).n() == 1);
    CHECK_THROWS_AS(AccuracyLevel(0), std::invalid_argument);
    CHECK_THROWS_AS(AccuracyLevel(13), std::invalid_argument);   // default ceiling 12
    CHECK_NOTHROW(AccuracyLevel(13, 16));
    CHECK_THROWS_AS(AccuracyLevel(17, 16), std::invalid_argument);
    CHECK_THROWS_AS(AccuracyLevel(5, 17), std::invalid_argument);
}

TEST_CASE("bs_sequence") {
    CHECK(bs_sequence(AccuracyLevel(3)).elems ==
          fracs({{0, 1}, {1, 8}, {1, 4}, {3, 8}, {1, 2}, {5, 8}, {3, 4}, {7, 8}, {1, 1}}));
    CHECK(bs_sequence(AccuracyLevel(1)).elems == fracs({{0, 1}, {1, 2}, {1, 1}}));

    FsdSequence bs6 = bs_sequence(AccuracyLevel(6));
    CHECK(bs6.size() == 65);
    CHECK(bs6.contains(Fraction(11, 16)));  // 44/64 stored reduced
    CHECK(bs6.elems[44] == Fraction(11, 16));
}

TEST_CASE("reduced_farey") {
    FsdSequence rf8 = reduced_farey(AccuracyLevel(3));
    CHECK(rf8.kind == SequenceKind::RF);
    // First interior run as listed.
    std::vector<Fraction> head(rf8.elems.begin(), rf8.elems.begin() + 7);
    CHECK(head == fracs({{0, 1}, {1, 8}, {1, 7}, {1, 6}, {1, 5}, {2, 9}, {1, 4}}));
    CHECK_FALSE(rf8.contains(Fraction(1, 9)));  // would take 8 buffer units
    CHECK(rf8.size() == 37);

    CHECK(reduced_farey(AccuracyLevel(1)).elems == fracs({{0, 1}, {1, 2}, {1, 1}}));

    // Interior elements realize a/(a+b) with a, b below 2^n.
    for (const Fraction& f : rf8.elems) {
        if (f.is_zero() || f == Fraction::one()) {
            continue;
        }
        CHECK(f.num() < 8);
        CHECK(f.den() - f.num() < 8);
    }
}

TEST_CASE("fsd_sequence reproduces the n = 3 lattice") {
    FsdSequence fsd8 = fsd_sequence(AccuracyLevel(3));
    CHECK(fsd8.size() == 21);
    CHECK(fsd8.elems == fracs({{0, 1}, {1, 8}, {1, 6}, {1, 5},  {1, 4}, {2, 7}, {1, 3},
                               {3, 8}, {2, 5}, {4, 9}, {1, 2},  {5, 9}, {3, 5}, {5, 8},
                               {2, 3}, {5, 7}, {3, 4}, {4, 5},  {5, 6}, {7, 8}, {1, 1}}));
    // The half-interval picks inside (1/8, 1/4).
    CHECK(fsd8.contains(Fraction(1, 6)));
    CHECK(fsd8.contains(Fraction(1, 5)));
    CHECK_FALSE(fsd8.contains(Fraction(1, 7)));  // loses the min-numerator tie to 1/6
}

TEST_CASE("fsd_sequence small and frozen cases") {
    CHECK(fsd_sequence(AccuracyLevel(1)).elems == fracs({{0, 1}, {1, 2}, {1, 1}}));
    CHECK(fsd_sequence(AccuracyLevel(2)).elems ==
          fracs({{0, 1}, {1, 4}, {1, 3}, {2, 5}, {1, 2}, {3, 5}, {2, 3}, {3, 4}, {1, 1}}));
    CHECK(fsd_sequence(AccuracyLevel(4)).elems ==
          fracs({{0, 1},  {1, 16}, {1, 11}, {1, 9},  {1, 8},  {1, 7},   {1, 6},  {3, 16},
                 {1, 5},  {2, 9},  {1, 4},  {3, 11}, {2, 7},  {5, 16},  {1, 3},  {4, 11},
                 {3, 8},  {2, 5},  {3, 7},  {7, 16}, {4, 9},  {8, 17},  {1, 2},  {9, 17},
                 {5, 9},  {9, 16}, {4, 7},  {3, 5},  {5, 8},  {7, 11},  {2, 3},  {11, 16},
                 {5, 7},  {8, 11}, {3, 4},  {7, 9},  {4, 5},  {13, 16}, {5, 6},  {6, 7},
                 {7, 8},  {8, 9},  {10, 11}, {15, 16}, {1, 1}}));
}

TEST_CASE("fsd picks are the min-numerator RF elements of their half-intervals") {
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        const std::uint64_t base = std::uint64_t(1) << n;
        const auto rf = reduced_farey(AccuracyLevel(n)).elems;
        const auto fsd = fsd_sequence(AccuracyLevel(n));
        std::set<Fraction> expected;
        for (std::uint64_t k = 0; k <= base; ++k) {
            expected.insert(Fraction(BigInt(k), BigInt(base)));
        }
        for (std::uint64_t y = 0; y < base; ++y) {
            Fraction lo(BigInt(y), BigInt(base));
            Fraction mid(BigInt(2 * y + 1), BigInt(2 * base));
            Fraction hi(BigInt(y + 1), BigInt(base));
            if (auto pick = brute_force_pick(rf, lo, mid)) {
                expected.insert(*pick);
            }
            if (auto pick = brute_force_pick(rf, mid, hi)) {
                expected.insert(*pick);
            }
        }
        CHECK(fsd.elems == std::vector<Fraction>(expected.begin(), expected.end()));
    }
}

TEST_CASE("fsd sequences are strictly increasing with bounded gaps") {
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        FsdSequence seq = fsd_sequence(AccuracyLevel(n));
        for (std::size_t i = 0; i + 1 < seq.elems.size(); ++i) {
            CHECK(seq.elems[i] < seq.elems[i + 1]);
        }
        CHECK(seq.elems.front() == Fraction::zero());
        CHECK(seq.elems.back() == Fraction::one());
        CHECK(seq.max_adjacent_gap() <= Fraction(BigInt(1), BigInt(std::uint64_t(1) << n)));
    }
}

TEST_CASE("verify_theorems") {
    for (int n = 1; n <= 10; ++n) {
        CAPTURE(n);
        TheoremReport report = verify_theorems(fsd_sequence(AccuracyLevel(n)));
        CHECK(report.all_passed());
    }

    TheoremReport r8 = verify_theorems(fsd_sequence(AccuracyLevel(3)));
    REQUIRE(r8.checks.size() == 4);
    CHECK(r8.checks[0].passed);  // T1
    CHECK(r8.checks[1].passed);  // T2
    CHECK(r8.checks[2].passed);  // T3
    CHECK(r8.checks[3].informational);
    CHECK(r8.checks[3].passed);  // 21 == 3(2^3 - 1)
    CHECK(r8.max_gap == Fraction(1, 8));

    SUBCASE("corrupted sequence fails T3") {
        FsdSequence bad = fsd_sequence(AccuracyLevel(3));
        bad.elems.erase(std::find(bad.elems.begin(), bad.elems.end(), Fraction(1, 2)));
        TheoremReport report = verify_theorems(bad);
        CHECK_FALSE(report.all_passed());
        CHECK(report.checks[0].passed);
        CHECK_FALSE(report.checks[2].passed);
    }

    SUBCASE("only FSD sequences are accepted") {
        CHECK_THROWS_AS(verify_theorems(bs_sequence(AccuracyLevel(3))), std::invalid_argument);
    }
}
