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

#include "fareyflow/hydro.hpp"

#include "fareyflow/layout.hpp"

#include <stdexcept>

namespace fareyflow {

namespace {

constexpr double kLaminarLimit = 2000.0;

std::uint64_t arm_units(const InletStates& states, const JunctionArm& arm) {
    const auto& open = arm.fluid == Fluid::Sample ? states.sample_mix : states.buffer_mix;
    if (!open[arm.inlet_index]) {
        return 0;
    }
    return std::uint64_t(1) << arm.inlet_index;
}

}  // namespace

double reynolds(const FluidProps& fluid, double speed, double length) {
    if (fluid.density <= 0 || fluid.dynamic_viscosity <= 0 || speed <= 0 || length <= 0) {
        throw std::domain_error("Reynolds number needs positive density, viscosity, speed, length");
    }
    return fluid.density * speed * length / fluid.dynamic_viscosity;
}

double hydraulic_diameter(double width, double height) {
    if (width <= 0 || height <= 0) {
        throw std::domain_error("hydraulic diameter needs positive width and height");
    }
    return 2.0 * width * height / (width + height);
}

LaminarVerdict validate_laminar(const ChannelSpec& spec, const FluidProps& fluid) {
    LaminarVerdict verdict;
    for (std::size_t i = 0; i < spec.flow_widths.size(); ++i) {
        const double l = spec.characteristic_length > 0
                             ? spec.characteristic_length
                             : hydraulic_diameter(spec.flow_widths[i], spec.height);
        const double r = reynolds(fluid, spec.injection_speed, l);
        if (r > verdict.max_reynolds) {
            verdict.max_reynolds = r;
            verdict.location = i < spec.flow_labels.size() ? spec.flow_labels[i] : "";
        }
        if (r >= kLaminarLimit) {
            verdict.ok = false;
        }
    }
    return verdict;
}

FluxProfile flux_profile(const InletStates& states, const ChannelSpec& spec) {
    if (states.n() != spec.n) {
        throw std::invalid_argument("inlet states are for n = " + std::to_string(states.n()) +
                                    " but channel spec has n = " + std::to_string(spec.n));
    }
    FluxProfile profile;
    const auto arms = junction_order(states.n());
    std::uint64_t cumulative = 0;
    std::uint64_t previous = 0;
    std::size_t arm_idx = 0;
    // The Y-junction merges the first two arms into the first segment.
    cumulative += arm_units(states, arms[0]);
    cumulative += arm_units(states, arms[1]);
    profile.cumulative_units.push_back(cumulative);
    for (arm_idx = 2; arm_idx < arms.size(); ++arm_idx) {
        previous = cumulative;
        cumulative += arm_units(states, arms[arm_idx]);
        if (cumulative < previous) {
            throw std::logic_error("flux decreased along the channel");
        }
        profile.cumulative_units.push_back(cumulative);
    }
    const std::uint64_t expected =
        decode_units(states.sample_mix) + decode_units(states.buffer_mix);
    if (profile.final_units() != expected) {
        throw std::logic_error("flux not conserved: channel carries " +
                               std::to_string(profile.final_units()) + " of " +
                               std::to_string(expected) + " injected units");
    }
    return profile;
}

ChannelSpec channel_for_states(const InletStates& states, double unit_width, double height,
                               double injection_speed) {
    ChannelSpec spec;
    spec.height = height;
    spec.unit_width = unit_width;
    spec.injection_speed = injection_speed;
    spec.n = states.n();
    for (int i = 0; i < states.n(); ++i) {
        spec.inlet_widths.push_back(unit_width * double(std::uint64_t(1) << i));
    }

    const auto arms = junction_order(states.n());
    for (const auto& arm : arms) {
        if (arm_units(states, arm) > 0) {
            spec.flow_labels.push_back(to_string(arm.fluid) + "-arm-" +
                                       std::to_string(arm.inlet_index));
            spec.flow_widths.push_back(unit_width *
                                       double(std::uint64_t(1) << arm.inlet_index));
        }
    }
    // Constant speed: a segment's width grows with the units it carries.
    FluxProfile profile = flux_profile(states, spec);
    for (std::size_t i = 0; i < profile.cumulative_units.size(); ++i) {
        if (profile.cumulative_units[i] == 0) {
            continue;
        }
        spec.flow_labels.push_back("segment-" + std::to_string(i));
        spec.flow_widths.push_back(unit_width * double(profile.cumulative_units[i]));
    }
    return spec;
}

}  // namespace fareyflow
