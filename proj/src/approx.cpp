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

#include <cctype>
#include <cstddef>
#include <stdexcept>

namespace fareyflow {

namespace {

// Parses one unsigned decimal number ("44", "44.375") into an exact
// fraction. Advances pos past the number.
Fraction parse_decimal(const std::string& text, std::size_t& pos) {
    BigInt digits = 0;
    BigInt scale = 1;
    bool any_digit = false;
    bool seen_dot = false;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits = digits * 10 + (c - '0');
            if (seen_dot) {
                scale *= 10;
            }
            any_digit = true;
            ++pos;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
            ++pos;
        } else {
            break;
        }
    }
    if (!any_digit) {
        throw std::invalid_argument("expected a number in \"" + text + "\"");
    }
    return {digits, scale};
}

void skip_spaces(const std::string& text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
}

}  // namespace

TargetCF parse_target(const std::string& text) {
    std::size_t pos = 0;
    skip_spaces(text, pos);
    Fraction value = parse_decimal(text, pos);
    skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_spaces(text, pos);
        Fraction denom = parse_decimal(text, pos);
        value = value / denom;  // throws on zero denominator
        skip_spaces(text, pos);
    }
    if (pos < text.size() && text[pos] == '%') {
        ++pos;
        value = value / Fraction(100, 1);
        skip_spaces(text, pos);
    }
    if (pos != text.size()) {
        throw std::invalid_argument("cannot parse target \"" + text + "\"");
    }
    if (value.is_negative() || value > Fraction::one()) {
        throw std::out_of_range("target " + value.str() + " outside [0, 1]");
    }
    return {value, text};
}

namespace {

Approximation make_result(const TargetCF& target, const FsdSequence& seq, const Fraction& chosen,
                          bool fallback = false) {
    return {target, chosen, chosen - target.value, seq.kind, seq.n, fallback};
}

// Nearer of two lattice neighbors; exact ties prefer the lower element.
const Fraction& pick_nearer(const Fraction& lower, const Fraction& upper, const Fraction& t) {
    Fraction down = t - lower;
    Fraction up = upper - t;
    return (down <= up) ? lower : upper;
}

}  // namespace

Approximation find_closest_oracle(const TargetCF& target, const FsdSequence& seq) {
    if (seq.elems.empty()) {
        throw std::invalid_argument("empty lattice");
    }
    const Fraction& t = target.value;
    std::size_t best = 0;
    Fraction best_dist = (seq.elems[0] - t).abs();
    for (std::size_t i = 1; i < seq.elems.size(); ++i) {
        Fraction dist = (seq.elems[i] - t).abs();
        if (dist < best_dist) {
            best = i;
            best_dist = dist;
        }
        // Ascending order: ties keep the earlier (lower) element, and once
        // past the target the distances only grow.
    }
    return make_result(target, seq, seq.elems[best]);
}

Approximation find_closest_fast(const TargetCF& target, const FsdSequence& seq) {
    if (seq.elems.empty()) {
        throw std::invalid_argument("empty lattice");
    }
    const auto& elems = seq.elems;
    const Fraction& t = target.value;
    if (t <= elems.front()) {
        return make_result(target, seq, elems.front());
    }
    if (t >= elems.back()) {
        return make_result(target, seq, elems.back());
    }

    // Bracket between floor(t * 2^n)/2^n and ceil(t * 2^n)/2^n, both of
    // which belong to every lattice this library builds (BS is a subset of
    // RF and FSD). Guard with a plain binary search anyway.
    const BigInt base = BigInt(1) << seq.n;
    BigInt scaled_floor = (t.num() * base) / t.den();
    std::size_t lo, hi;
    Fraction lower_elem(scaled_floor, base);
    Fraction upper_elem(scaled_floor + 1, base);
    auto lo_idx = seq.index_of(lower_elem);
    auto hi_idx = seq.index_of(upper_elem);
    if (lo_idx && hi_idx) {
        lo = *lo_idx;
        hi = *hi_idx;
    } else {
        auto it = std::lower_bound(elems.begin(), elems.end(), t);
        hi = std::size_t(it - elems.begin());
        lo = hi - 1;  // t > front() guarantees hi >= 1
    }

    if (elems[lo] == t) {
        return make_result(target, seq, elems[lo]);
    }
    if (elems[hi] == t) {
        return make_result(target, seq, elems[hi]);
    }

    std::size_t iterations = 0;
    while (hi - lo > 1) {
        if (++iterations > elems.size()) {
            // Termination insurance; interpolation cannot stall, but a
            // linear scan is always a correct answer.
            Approximation fb = find_closest_oracle(target, seq);
            fb.oracle_fallback = true;
            return fb;
        }
        const std::size_t width_before = hi - lo;

        // False position on index vs (value - target): the interpolated
        // index x = (lo*up + hi*down) / (down + up) estimates where the
        // sign change sits.
        Fraction down = t - elems[lo];       // > 0
        Fraction up = elems[hi] - t;         // > 0
        Fraction x = (Fraction(BigInt(lo), 1) * up + Fraction(BigInt(hi), 1) * down) /
                     (down + up);
        BigInt xf = x.num() / x.den();  // floor; x >= 0
        std::size_t probe = xf.convert_to<std::size_t>();
        if (probe < lo) probe = lo;
        if (probe >= hi) probe = hi - 1;

        std::size_t pair_lo, pair_hi;
        if (elems[probe] <= t) {
            pair_lo = probe;
            pair_hi = probe + 1;
        } else {
            pair_lo = probe - 1;
            pair_hi = probe;
        }

        if (elems[pair_lo] <= t && t <= elems[pair_hi]) {
            lo = pair_lo;
            hi = pair_hi;
        } else if (t < elems[pair_lo]) {
            hi = pair_lo;
        } else {
            lo = pair_hi;
        }

        if (hi - lo >= width_before) {
            throw std::logic_error("closest-element bracket failed to shrink");
        }
        if (elems[lo] == t) {
            return make_result(target, seq, elems[lo]);
        }
        if (elems[hi] == t) {
            return make_result(target, seq, elems[hi]);
        }
    }

    return make_result(target, seq, pick_nearer(elems[lo], elems[hi], t));
}

LatticeComparison compare_lattices(const TargetCF& target, AccuracyLevel n) {
    LatticeComparison cmp;
    cmp.bs = find_closest_fast(target, bs_sequence(n));
    cmp.fsd = find_closest_fast(target, fsd_sequence(n));
    if (cmp.fsd.error.abs() > cmp.bs.error.abs()) {
        // BS is contained in FSD, so this cannot happen.
        throw std::logic_error("FSD approximation worse than BS for " + target.value.str());
    }
    return cmp;
}

}  // namespace fareyflow
