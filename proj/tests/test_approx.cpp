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

#include "fareyflow/approx.hpp"

#include "doctest.h"

#include <random>

using namespace fareyflow;

namespace {

TargetCF target_of(const Fraction& f) {
    return {f, f.str()};
}

// Deterministic stream of rational targets in [0, 1].
struct RandomTargets {
    std::mt19937_64 rng{20260809};
    std::uniform_int_distribution<std::int64_t> dens{1, 1000000};

    TargetCF next() {
        std::int64_t d = dens(rng);
        std::int64_t p = std::uniform_int_distribution<std::int64_t>{0, d}(rng);
        return target_of(Fraction(p, d));
    }
};

}  // namespace

TEST_CASE("parse_target accepts percent, decimal, and fraction forms") {
    CHECK(parse_target("9/13").value == Fraction(9, 13));
    CHECK(parse_target("44.375/64").value == Fraction(355, 512));
    CHECK(parse_target("0%").value == Fraction::zero());
    CHECK(parse_target("69.3%").value == Fraction(693, 1000));
    CHECK(parse_target("0.693").value == Fraction(693, 1000));
    CHECK(parse_target("1").value == Fraction::one());
    CHECK(parse_target("100%").value == Fraction::one());
    CHECK(parse_target(" 50 % ").value == Fraction(1, 2));
    CHECK(parse_target("44.375/64").original_text == "44.375/64");

    CHECK_THROWS_AS(parse_target(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_target("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_target("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_target("-0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_target("1.5"), std::out_of_range);
    CHECK_THROWS_AS(parse_target("120%"), std::out_of_range);
    CHECK_THROWS_AS(parse_target("1/0"), std::domain_error);
}

TEST_CASE("oracle reproduces the worked 44.375/64 case") {
    const TargetCF t = parse_target("44.375/64");

    Approximation over_fsd = find_closest_oracle(t, fsd_sequence(AccuracyLevel(6)));
    CHECK(over_fsd.chosen == Fraction(9, 13));
    CHECK(over_fsd.error == Fraction(-7, 6656));
    CHECK(over_fsd.error == Fraction(9, 13) - Fraction(355, 512));

    Approximation over_bs = find_closest_oracle(t, bs_sequence(AccuracyLevel(6)));
    CHECK(over_bs.chosen == Fraction(11, 16));  // 44/64
    CHECK(over_bs.error == Fraction(-3, 512));  // -0.375/64 exactly
}

TEST_CASE("oracle maps members to themselves and endpoints to endpoints") {
    FsdSequence fsd8 = fsd_sequence(AccuracyLevel(3));
    Approximation a = find_closest_oracle(target_of(Fraction(3, 8)), fsd8);
    CHECK(a.chosen == Fraction(3, 8));
    CHECK(a.error.is_zero());

    Approximation zero = find_closest_fast(target_of(Fraction::zero()), fsd8);
    CHECK(zero.chosen == Fraction::zero());
    CHECK(zero.error.is_zero());
}

TEST_CASE("fast search matches the worked example") {
    Approximation a = find_closest_fast(parse_target("44.375/64"), fsd_sequence(AccuracyLevel(6)));
    CHECK(a.chosen == Fraction(9, 13));
    CHECK(a.error == Fraction(-7, 6656));
    CHECK_FALSE(a.oracle_fallback);
}

TEST_CASE("fast search equals the oracle everywhere") {
    RandomTargets targets;
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        FsdSequence fsd = fsd_sequence(AccuracyLevel(n));
        FsdSequence bs = bs_sequence(AccuracyLevel(n));

        for (const Fraction& member : fsd.elems) {
            Approximation fast = find_closest_fast(target_of(member), fsd);
            CHECK(fast.chosen == member);
            CHECK(fast.error.is_zero());
        }
        for (int i = 0; i < 2000; ++i) {
            TargetCF t = targets.next();
            for (const FsdSequence* seq : {&fsd, &bs}) {
                Approximation fast = find_closest_fast(t, *seq);
                Approximation slow = find_closest_oracle(t, *seq);
                CHECK(fast.chosen == slow.chosen);
                CHECK(fast.error == slow.error);
                CHECK_FALSE(fast.oracle_fallback);
            }
        }
    }
}

TEST_CASE("exact midpoint ties go to the lower element in both paths") {
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        FsdSequence fsd = fsd_sequence(AccuracyLevel(n));
        for (std::size_t i = 0; i + 1 < fsd.elems.size(); ++i) {
            Fraction mid = (fsd.elems[i] + fsd.elems[i + 1]) / Fraction(2, 1);
            TargetCF t = target_of(mid);
            Approximation fast = find_closest_fast(t, fsd);
            Approximation slow = find_closest_oracle(t, fsd);
            CHECK(slow.chosen == fsd.elems[i]);
            CHECK(fast.chosen == fsd.elems[i]);
        }
    }
}

TEST_CASE("compare_lattices: FSD error never exceeds BS error") {
    const TargetCF worked = parse_target("44.375/64");
    LatticeComparison cmp = compare_lattices(worked, AccuracyLevel(6));
    CHECK(cmp.bs.error.abs() == Fraction(3, 512));
    CHECK(cmp.fsd.error.abs() == Fraction(7, 6656));
    CHECK(cmp.fsd.error.abs().to_double() == doctest::Approx(0.00105168).epsilon(1e-4));

    LatticeComparison half = compare_lattices(target_of(Fraction(1, 2)), AccuracyLevel(4));
    CHECK(half.bs.error.is_zero());
    CHECK(half.fsd.error.is_zero());
}

TEST_CASE("dominance and BS error bound over a random sweep") {
    AccuracyLevel n(6);
    FsdSequence fsd = fsd_sequence(n);
    FsdSequence bs = bs_sequence(n);
    const Fraction bs_bound(1, 128);  // 1/2^{n+1}

    RandomTargets targets;
    for (int i = 0; i < 2000; ++i) {
        TargetCF t = targets.next();
        Approximation over_fsd = find_closest_fast(t, fsd);
        Approximation over_bs = find_closest_fast(t, bs);
        CHECK(over_fsd.error.abs() <= over_bs.error.abs());
        CHECK(over_bs.error.abs() <= bs_bound);
    }
}
