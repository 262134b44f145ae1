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

#include "fareyflow/mixplan.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fareyflow {

/// One inlet of the ladder: its two ports steer the fluid toward the mixing
/// channel or back to the reservoir, never both.
struct InletArm {
    int index = 0;                      ///< 0 = leftmost, narrowest
    std::uint64_t width_multiplier = 1; ///< 2^index
    bool mix_open = false;
    bool reuse_open = true;

    bool operator==(const InletArm&) const = default;
};

struct JunctionArm {
    Fluid fluid = Fluid::Sample;
    int inlet_index = 0;

    bool operator==(const JunctionArm&) const = default;
};

/// Arm-joining order along the mixing channel. The first sample and buffer
/// arms form the Y-junction; the remaining arms alternate sample/buffer
/// toward the outlet. This convention is the single configuration point for
/// the serpentine's topology.
std::vector<JunctionArm> junction_order(int n);

/// Structural model of the 2n-inlet, 1-outlet serpentine diluter with its
/// two re-use return channels.
struct NetworkModel {
    int n = 1;
    std::vector<InletArm> sample_inlets;
    std::vector<InletArm> buffer_inlets;
    std::vector<JunctionArm> junctions;
    std::string sample_return = "sample-reservoir";
    std::string buffer_return = "buffer-reservoir";
    std::string outlet = "OUT";

    bool operator==(const NetworkModel&) const = default;
};

/// Model with port states copied from the plan's inlet states.
NetworkModel build_network(const DilutionPlan& plan);

/// Same, from bare port states (used for synthetic configurations).
NetworkModel build_network(const InletStates& states);

/// Machine-readable description of the model; parse_description() inverts it
/// exactly. Stable byte-for-byte for a given model.
std::string emit_description(const NetworkModel& model);

NetworkModel parse_description(const std::string& text);

/// Styling knobs for the schematic. Defaults produce a legible page.
struct SchematicStyle {
    double unit_stroke = 2.0;  ///< px per 1x of width
    double arm_length = 70.0;  ///< px
    int fin_zones = 6;         ///< labeled boxes A.. along the channel
};

/// Deterministic SVG 1.1 drawing: serpentine mixing channel, inlet arms at
/// 120 degrees with widths scaled by 2^i, mixing ports green when open and
/// red when closed, re-use ports complement-colored, re-use return channels,
/// labeled fin zones, and the outlet.
std::string emit_schematic(const NetworkModel& model, const SchematicStyle& style = {});

}  // namespace fareyflow
