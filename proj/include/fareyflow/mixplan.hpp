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

#include <cstdint>
#include <vector>

namespace fareyflow {

enum class Fluid { Sample, Buffer };

std::string to_string(Fluid fluid);

/// One mixing step: a power-of-two volume of one fluid joins the running
/// mixture. Position is the bit index that produced the step.
struct MixStep {
    Fluid fluid = Fluid::Sample;
    std::uint64_t volume = 0;
    int position = 0;

    bool operator==(const MixStep&) const = default;
};

/// Split-free linear mixing chain: each step merges one new inflow with the
/// accumulated mixture. Built by scanning the unit counts' binary forms from
/// the least significant bit, sample bit before buffer bit per position.
struct MixTree {
    std::vector<MixStep> steps;
    std::uint64_t accum_sample = 0;
    std::uint64_t accum_total = 0;

    bool operator==(const MixTree&) const = default;
};

/// Port flags of the 2n-inlet ladder, indexed by inlet from the left
/// (narrowest first, weight 2^i). Re-use ports are always the complement of
/// the mixing ports.
struct InletStates {
    std::vector<bool> sample_mix;
    std::vector<bool> sample_reuse;
    std::vector<bool> buffer_mix;
    std::vector<bool> buffer_reuse;

    int n() const { return int(sample_mix.size()); }
    bool operator==(const InletStates&) const = default;
};

/// Executable dilution recipe for one concentration.
struct DilutionPlan {
    Fraction cf;
    int n = 1;
    std::uint64_t sample_units = 0;
    std::uint64_t buffer_units = 0;
    std::vector<bool> sample_bits;  ///< LSB first = leftmost inlet
    std::vector<bool> buffer_bits;
    MixTree tree;
};

/// One scaled injection choice (k*phi sample, k*(psi-phi) buffer) giving the
/// same concentration at k-fold output flow.
struct ThroughputOption {
    std::uint64_t sample = 0;
    std::uint64_t buffer = 0;
    std::uint64_t rate = 0;  ///< sample + buffer

    bool operator==(const ThroughputOption&) const = default;
};

/// Builds the plan for cf = phi/psi: phi units of sample, psi - phi of
/// buffer, n-bit expansions, and the split-free mixing chain. The pure
/// endpoints 0 and 1 dispense one unit of the single fluid through the
/// narrowest inlet. Throws when phi or psi - phi needs 2^n units or more;
/// the caller should re-approximate at a higher accuracy.
DilutionPlan make_plan(const Fraction& cf, AccuracyLevel n);

/// Mixing-port flags from the unit counts' binary forms; re-use flags are
/// the bitwise complement.
InletStates inlet_states(const DilutionPlan& plan);

/// All (k*phi, k*(psi-phi)) with both components at most 2^n - 1, ascending
/// by output rate. Throws on an unrepresentable cf.
std::vector<ThroughputOption> throughput_options(const Fraction& cf, AccuracyLevel n);

/// Simulates the chain as a running weighted average and returns the final
/// concentration. Throws on a tree with zero total volume.
Fraction replay_tree(const MixTree& tree);

/// Weighted value of a bit vector (bit i counts 2^i).
std::uint64_t decode_units(const std::vector<bool>& bits);

}  // namespace fareyflow
