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

/// Newtonian fluid bulk properties.
struct FluidProps {
    double density = 998.0;              ///< kg/m^3
    double dynamic_viscosity = 1.002e-3; ///< Pa s

    static FluidProps water_20c() { return {}; }
};

/// Geometry of the diluter's wetted channels. Heights are uniform; inlet
/// widths double from unit_width upward; a mixing-channel segment after a
/// junction is as wide as the units it carries (constant flow speed, so
/// cross-section tracks flux). flow_widths lists every width that actually
/// carries fluid for the configured inlet states.
struct ChannelSpec {
    double height = 25e-6;          ///< m
    double unit_width = 10e-6;      ///< m, the 1x inlet
    double injection_speed = 1e-3;  ///< m/s
    double characteristic_length = 0;  ///< m; 0 = derive per segment
    int n = 1;
    std::vector<double> inlet_widths;  ///< all n per-fluid widths, x..2^{n-1}x
    std::vector<std::string> flow_labels;
    std::vector<double> flow_widths;
};

/// Cumulative flow along the mixing channel, in exact unit-flux multiples.
/// Entry 0 is the segment after the Y-junction; each later entry follows one
/// more inlet arm.
struct FluxProfile {
    std::vector<std::uint64_t> cumulative_units;

    std::uint64_t final_units() const {
        return cumulative_units.empty() ? 0 : cumulative_units.back();
    }
};

/// rho * u * l / mu. Throws on non-positive input.
double reynolds(const FluidProps& fluid, double speed, double length);

/// Hydraulic diameter 2wh/(w+h) of a rectangular duct.
double hydraulic_diameter(double width, double height);

struct LaminarVerdict {
    bool ok = true;
    double max_reynolds = 0;
    std::string location;  ///< segment label of the worst case
};

/// Evaluates the Reynolds number at every flowing segment, taking each
/// segment's hydraulic diameter as the characteristic length (or the spec's
/// characteristic_length override when set). Laminar iff every R < 2000.
/// With nothing flowing the verdict is vacuously ok.
LaminarVerdict validate_laminar(const ChannelSpec& spec, const FluidProps& fluid);

/// Cumulative unit flux after each junction for the given port states.
/// Throws when states and spec disagree on n. The final value equals the
/// total open-inlet units; conservation is checked, not assumed.
FluxProfile flux_profile(const InletStates& states, const ChannelSpec& spec);

/// Geometry for a configured run: inlet widths, plus flow-carrying segment
/// widths derived from the cumulative flux under constant speed.
ChannelSpec channel_for_states(const InletStates& states, double unit_width = 10e-6,
                               double height = 25e-6, double injection_speed = 1e-3);

}  // namespace fareyflow
