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

#include "fareyflow/fsd.hpp"
#include "fareyflow/rational.hpp"

#include <string>

namespace fareyflow {

/// A requested concentration, kept exact, together with the literal text it
/// was parsed from.
struct TargetCF {
    Fraction value;
    std::string original_text;
};

/// Accepts percentages ("69.3%"), decimals ("0.693"), and fractions
/// ("9/13", "44.375/64"). Conversion is exact: decimal digits scale to
/// powers of ten, never through floating point. Throws on unparsable text
/// or values outside [0,1].
TargetCF parse_target(const std::string& text);

/// Result of mapping a target onto a lattice.
struct Approximation {
    TargetCF target;
    Fraction chosen;
    Fraction error;  ///< chosen - target, exact and signed
    SequenceKind lattice_kind = SequenceKind::FSD;
    int n = 1;
    bool oracle_fallback = false;  ///< fast path hit its iteration cap
};

/// Linear scan for the element minimizing |x - t|. Exact midpoint ties go to
/// the lower element (less sample consumed). This is the reference the fast
/// search is tested against.
Approximation find_closest_oracle(const TargetCF& target, const FsdSequence& seq);

/// Same contract as find_closest_oracle. Brackets the target between the
/// two surrounding multiples of 1/2^n (members of every lattice kind here),
/// then narrows by false-position interpolation on (index, value - target)
/// until the target sits between consecutive elements. All arithmetic is
/// exact; the bracket shrinks strictly every round, and a cap of |seq|
/// iterations falls back to the oracle with the fallback flag set.
Approximation find_closest_fast(const TargetCF& target, const FsdSequence& seq);

struct LatticeComparison {
    Approximation bs;
    Approximation fsd;
};

/// Approximates the target over both BS_n and FSD_{2^n}. Because the FSD
/// lattice contains the BS lattice, |fsd.error| <= |bs.error| always.
LatticeComparison compare_lattices(const TargetCF& target, AccuracyLevel n);

}  // namespace fareyflow
