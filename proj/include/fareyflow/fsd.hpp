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

#pragma once

#include "fareyflow/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fareyflow {

/// Accuracy level n: the diluter has n sample inlets and n buffer inlets
/// whose widths double from 1x to 2^{n-1}x, so at most 2^n - 1 units of
/// either fluid can flow at once.
class AccuracyLevel {
public:
    static constexpr int kDefaultCeiling = 12;
    static constexpr int kHardCeiling = 16;

    explicit AccuracyLevel(int n, int ceiling = kDefaultCeiling);

    int n() const { return n_; }
    std::uint64_t base() const { return std::uint64_t(1) << n_; }  ///< 2^n

private:
    int n_;
};

enum class SequenceKind { BS, RF, FSD };

std::string to_string(SequenceKind kind);

/// Ordered concentration lattice: strictly increasing fractions in [0,1]
/// with endpoints 0 (pure buffer) and 1 (pure sample).
struct FsdSequence {
    SequenceKind kind = SequenceKind::BS;
    int n = 1;
    std::vector<Fraction> elems;

    std::size_t size() const { return elems.size(); }
    bool contains(const Fraction& f) const;
    /// Index of f, or nullopt. Binary search; elems must be sorted.
    std::optional<std::size_t> index_of(const Fraction& f) const;
    Fraction max_adjacent_gap() const;
};

/// BS_n = {0/2^n, 1/2^n, ..., 2^n/2^n}, stored reduced. 2^n + 1 elements.
FsdSequence bs_sequence(AccuracyLevel n);

/// RF_{2^n}: the concentrations the inlet ladder can realize directly,
/// {a/(a+b) : 0 <= a,b <= 2^n - 1, a+b != 0}. Equivalently (for n >= 2) the
/// subset of F_{2^{n+1}-3} whose interior elements have numerator < 2^n and
/// denominator-minus-numerator < 2^n; both routes are computed and checked
/// against each other for n <= 8. For n = 1 only the ladder enumeration
/// applies (F_1 has no interior elements at all).
FsdSequence reduced_farey(AccuracyLevel n);

/// FSD_{2^n}: all of BS_n plus, for each half of every BS gap
/// (y/2^n, (2y+1)/2^{n+1}) and ((2y+1)/2^{n+1}, (y+1)/2^n), the RF element
/// strictly inside with the smallest numerator (smallest denominator on
/// ties), when one exists. Sorted ascending, deduplicated.
FsdSequence fsd_sequence(AccuracyLevel n);

struct TheoremCheck {
    std::string name;
    bool passed = false;
    bool informational = false;  ///< reported, not counted toward failure
    std::string detail;
};

struct TheoremReport {
    std::vector<TheoremCheck> checks;
    Fraction max_gap;

    bool all_passed() const;
    std::string summary() const;
};

/// Structural checks on an FSD sequence: numerator and buffer-unit bounds on
/// every interior element, cardinality strictly above the 2^n binary levels,
/// set-superset of BS_n, plus the measured max adjacent gap and the
/// 3(2^n - 1) cardinality diagnostic. Throws if the sequence kind is not FSD.
TheoremReport verify_theorems(const FsdSequence& seq);

}  // namespace fareyflow
