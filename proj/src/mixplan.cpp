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

#include "fareyflow/mixplan.hpp"

#include <stdexcept>

namespace fareyflow {

std::string to_string(Fluid fluid) {
    return fluid == Fluid::Sample ? "sample" : "buffer";
}

namespace {

std::vector<bool> to_bits(std::uint64_t value, int n) {
    std::vector<bool> bits(n);
    for (int i = 0; i < n; ++i) {
        bits[i] = (value >> i) & 1;
    }
    return bits;
}

}  // namespace

std::uint64_t decode_units(const std::vector<bool>& bits) {
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
            value |= std::uint64_t(1) << i;
        }
    }
    return value;
}

DilutionPlan make_plan(const Fraction& cf, AccuracyLevel n) {
    if (cf.is_negative() || cf > Fraction::one()) {
        throw std::domain_error("concentration outside [0, 1]: " + cf.str());
    }
    const std::uint64_t cap = n.base();  // 2^n

    std::uint64_t sample_units, buffer_units;
    if (cf.is_zero()) {
        sample_units = 0;
        buffer_units = 1;  // one unit of buffer through the narrowest inlet
    } else if (cf == Fraction::one()) {
        sample_units = 1;
        buffer_units = 0;
    } else {
        BigInt phi = cf.num();
        BigInt varphi = cf.den() - cf.num();
        if (phi >= cap || varphi >= cap) {
            throw std::domain_error("concentration " + cf.str() + " needs " + phi.str() +
                                    " sample and " + varphi.str() +
                                    " buffer units; ladder holds " + std::to_string(cap - 1) +
                                    " of each. Re-approximate at higher accuracy.");
        }
        sample_units = phi.convert_to<std::uint64_t>();
        buffer_units = varphi.convert_to<std::uint64_t>();
    }

    DilutionPlan plan;
    plan.cf = cf;
    plan.n = n.n();
    plan.sample_units = sample_units;
    plan.buffer_units = buffer_units;
    plan.sample_bits = to_bits(sample_units, n.n());
    plan.buffer_bits = to_bits(buffer_units, n.n());

    // LSB to MSB, sample bit before buffer bit at each position.
    for (int i = 0; i < n.n(); ++i) {
        const std::uint64_t volume = std::uint64_t(1) << i;
        if (plan.sample_bits[i]) {
            plan.tree.steps.push_back({Fluid::Sample, volume, i});
            plan.tree.accum_sample += volume;
            plan.tree.accum_total += volume;
        }
        if (plan.buffer_bits[i]) {
            plan.tree.steps.push_back({Fluid::Buffer, volume, i});
            plan.tree.accum_total += volume;
        }
    }
    return plan;
}

InletStates inlet_states(const DilutionPlan& plan) {
    InletStates states;
    states.sample_mix = plan.sample_bits;
    states.buffer_mix = plan.buffer_bits;
    states.sample_reuse.reserve(plan.sample_bits.size());
    states.buffer_reuse.reserve(plan.buffer_bits.size());
    for (bool open : plan.sample_bits) {
        states.sample_reuse.push_back(!open);
    }
    for (bool open : plan.buffer_bits) {
        states.buffer_reuse.push_back(!open);
    }
    return states;
}

std::vector<ThroughputOption> throughput_options(const Fraction& cf, AccuracyLevel n) {
    if (cf.is_negative() || cf > Fraction::one()) {
        throw std::domain_error("concentration outside [0, 1]: " + cf.str());
    }
    const BigInt cap = n.base() - 1;  // 2^n - 1 units per fluid
    BigInt phi = cf.num();
    BigInt varphi = cf.den() - cf.num();
    if (phi > cap || varphi > cap) {
        throw std::domain_error("concentration " + cf.str() + " not representable at n = " +
                                std::to_string(n.n()));
    }
    std::vector<ThroughputOption> options;
    for (BigInt k = 1;; ++k) {
        BigInt a = k * phi;
        BigInt b = k * varphi;
        if (a > cap || b > cap) {
            break;
        }
        options.push_back({a.convert_to<std::uint64_t>(), b.convert_to<std::uint64_t>(),
                           (a + b).convert_to<std::uint64_t>()});
    }
    return options;
}

Fraction replay_tree(const MixTree& tree) {
    std::uint64_t sample = 0;
    std::uint64_t total = 0;
    for (const MixStep& step : tree.steps) {
        if (step.fluid == Fluid::Sample) {
            sample += step.volume;
        }
        total += step.volume;
    }
    if (total == 0) {
        throw std::domain_error("mixing chain carries no fluid");
    }
    return {BigInt(sample), BigInt(total)};
}

}  // namespace fareyflow
