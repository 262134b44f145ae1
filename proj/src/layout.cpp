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

#include "fareyflow/layout.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fareyflow {

std::vector<JunctionArm> junction_order(int n) {
    if (n < 1) {
        throw std::invalid_argument("network needs at least one inlet pair");
    }
    std::vector<JunctionArm> arms;
    arms.reserve(2 * std::size_t(n));
    for (int i = 0; i < n; ++i) {
        arms.push_back({Fluid::Sample, i});
        arms.push_back({Fluid::Buffer, i});
    }
    return arms;
}

namespace {

std::vector<InletArm> make_inlets(const std::vector<bool>& mix, const std::vector<bool>& reuse) {
    std::vector<InletArm> inlets;
    inlets.reserve(mix.size());
    for (std::size_t i = 0; i < mix.size(); ++i) {
        inlets.push_back({int(i), std::uint64_t(1) << i, mix[i], reuse[i]});
    }
    return inlets;
}

}  // namespace

NetworkModel build_network(const InletStates& states) {
    NetworkModel model;
    model.n = states.n();
    model.sample_inlets = make_inlets(states.sample_mix, states.sample_reuse);
    model.buffer_inlets = make_inlets(states.buffer_mix, states.buffer_reuse);
    model.junctions = junction_order(model.n);
    return model;
}

NetworkModel build_network(const DilutionPlan& plan) {
    return build_network(inlet_states(plan));
}

namespace {

using nlohmann::json;

constexpr const char* kSchema = "fareyflow/1";

json inlets_to_json(const std::vector<InletArm>& inlets) {
    json arr = json::array();
    for (const auto& inlet : inlets) {
        arr.push_back({{"index", inlet.index},
                       {"width_multiplier", inlet.width_multiplier},
                       {"mix_open", inlet.mix_open},
                       {"reuse_open", inlet.reuse_open}});
    }
    return arr;
}

std::vector<InletArm> inlets_from_json(const json& arr) {
    std::vector<InletArm> inlets;
    for (const auto& j : arr) {
        inlets.push_back({j.at("index").get<int>(),
                          j.at("width_multiplier").get<std::uint64_t>(),
                          j.at("mix_open").get<bool>(), j.at("reuse_open").get<bool>()});
    }
    return inlets;
}

}  // namespace

std::string emit_description(const NetworkModel& model) {
    json j;
    j["schema"] = kSchema;
    j["type"] = "network";
    j["n"] = model.n;
    j["sample_inlets"] = inlets_to_json(model.sample_inlets);
    j["buffer_inlets"] = inlets_to_json(model.buffer_inlets);
    json junctions = json::array();
    for (const auto& arm : model.junctions) {
        junctions.push_back({{"fluid", to_string(arm.fluid)}, {"inlet_index", arm.inlet_index}});
    }
    j["junctions"] = junctions;
    j["sample_return"] = model.sample_return;
    j["buffer_return"] = model.buffer_return;
    j["outlet"] = model.outlet;
    return j.dump(2) + "\n";
}

NetworkModel parse_description(const std::string& text) {
    json j = json::parse(text);
    if (j.value("schema", "") != kSchema || j.value("type", "") != "network") {
        throw std::invalid_argument("not a fareyflow network description");
    }
    NetworkModel model;
    model.n = j.at("n").get<int>();
    model.sample_inlets = inlets_from_json(j.at("sample_inlets"));
    model.buffer_inlets = inlets_from_json(j.at("buffer_inlets"));
    for (const auto& arm : j.at("junctions")) {
        Fluid fluid = arm.at("fluid").get<std::string>() == "sample" ? Fluid::Sample
                                                                     : Fluid::Buffer;
        model.junctions.push_back({fluid, arm.at("inlet_index").get<int>()});
    }
    model.sample_return = j.at("sample_return").get<std::string>();
    model.buffer_return = j.at("buffer_return").get<std::string>();
    model.outlet = j.at("outlet").get<std::string>();
    return model;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

void draw_line(std::ostream& os, double x1, double y1, double x2, double y2, double width,
               const char* color, const char* extra = "") {
    os << "  <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
       << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << color << "\" stroke-width=\"" << fmt(width)
       << "\"" << extra << "/>\n";
}

void draw_port(std::ostream& os, const char* cls, double cx, double cy, bool open) {
    os << "  <circle class=\"" << cls << "\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
       << "\" r=\"5.0\" fill=\"" << (open ? "green" : "red")
       << "\" stroke=\"black\" stroke-width=\"0.8\"/>\n";
}

void draw_text(std::ostream& os, double x, double y, const std::string& text,
               const char* anchor = "middle", double size = 11.0) {
    os << "  <text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" font-size=\"" << fmt(size)
       << "\" font-family=\"sans-serif\" text-anchor=\"" << anchor << "\">" << text
       << "</text>\n";
}

}  // namespace

std::string emit_schematic(const NetworkModel& model, const SchematicStyle& style) {
    const int n = model.n;
    const double max_arm_width = style.unit_stroke * double(std::uint64_t(1) << (n - 1));
    const double dx = std::max(48.0, max_arm_width + 28.0);  // keep fat arms apart
    const double x0 = 90.0;                                  // Y-junction
    const std::size_t arm_count = model.junctions.size();
    const double x_last = x0 + double(arm_count - 2) * dx;
    const double serp_w = 150.0;
    const double width = x_last + 90.0 + serp_w + 120.0;
    const double arm_dy = style.arm_length * 0.866;  // sin 60
    const double channel_y = arm_dy + 95.0;
    const double return_top = 28.0;
    const double return_bottom = 2 * channel_y - 28.0;
    const double height = 2 * channel_y;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
       << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height)
       << "\">\n";
    os << "  <rect width=\"" << fmt(width) << "\" height=\"" << fmt(height)
       << "\" fill=\"white\"/>\n";
    draw_text(os, 12.0, 18.0,
              "free-flow diluter: " + std::to_string(2 * n) + " inlets, 1 outlet (n = " +
                  std::to_string(n) + ")",
              "start", 13.0);

    // Re-use return channels back to the reservoirs.
    draw_line(os, x0 - 60.0, return_top, x_last + 40.0, return_top, 2.0, "#888888");
    draw_text(os, x0 - 64.0, return_top + 4.0, model.sample_return, "end", 9.0);
    draw_line(os, x0 - 60.0, return_bottom, x_last + 40.0, return_bottom, 2.0, "#888888");
    draw_text(os, x0 - 64.0, return_bottom + 4.0, model.buffer_return, "end", 9.0);

    // Mixing channel spine with a serpentine tail.
    const double serp_x = x_last + 90.0;
    const double amp = 34.0;
    os << "  <polyline fill=\"none\" stroke=\"#222222\" stroke-width=\"7.0\" points=\""
       << fmt(x0) << "," << fmt(channel_y) << " " << fmt(serp_x) << "," << fmt(channel_y) << " "
       << fmt(serp_x + serp_w * 0.2) << "," << fmt(channel_y - amp) << " "
       << fmt(serp_x + serp_w * 0.4) << "," << fmt(channel_y + amp) << " "
       << fmt(serp_x + serp_w * 0.6) << "," << fmt(channel_y - amp) << " "
       << fmt(serp_x + serp_w * 0.8) << "," << fmt(channel_y + amp) << " "
       << fmt(serp_x + serp_w) << "," << fmt(channel_y) << " " << fmt(serp_x + serp_w + 60.0)
       << "," << fmt(channel_y) << "\"/>\n";
    draw_text(os, serp_x + serp_w + 66.0, channel_y + 4.0, model.outlet, "start");

    // Fin zones along the straight mixing stretch.
    const double zone_span = (serp_x - x0 - 20.0) / double(style.fin_zones);
    for (int z = 0; z < style.fin_zones; ++z) {
        const double zx = x0 + 10.0 + z * zone_span;
        os << "  <rect x=\"" << fmt(zx + 4.0) << "\" y=\"" << fmt(channel_y + 14.0)
           << "\" width=\"" << fmt(zone_span - 8.0)
           << "\" height=\"16.0\" fill=\"none\" stroke=\"#aaaaaa\" stroke-dasharray=\"3,2\"/>\n";
        draw_text(os, zx + zone_span / 2.0, channel_y + 26.0, std::string(1, char('A' + z)), "middle",
                  9.0);
    }

    // Inlet arms in junction order; the first two form the Y.
    for (std::size_t j = 0; j < arm_count; ++j) {
        const JunctionArm& arm = model.junctions[j];
        const bool top = arm.fluid == Fluid::Sample;
        const InletArm& inlet =
            (top ? model.sample_inlets : model.buffer_inlets)[std::size_t(arm.inlet_index)];
        const double jx = j < 2 ? x0 : x0 + double(j - 1) * dx;
        const double sy = top ? channel_y - arm_dy : channel_y + arm_dy;
        const double sx = jx - style.arm_length * 0.5;  // 120-degree separation from the channel
        const double stroke = style.unit_stroke * double(inlet.width_multiplier);
        const char* color = top ? "#77aaff" : "#ffaa66";

        draw_line(os, sx, sy, jx, channel_y, stroke, color);
        // Bypass branch from the arm base to the fluid's return channel.
        const double ry = top ? return_top : return_bottom;
        draw_line(os, sx, sy, sx, ry, 1.5, "#888888");

        draw_port(os, "mix-port", (sx + jx) / 2.0, (sy + channel_y) / 2.0, inlet.mix_open);
        draw_port(os, "reuse-port", sx, (sy + ry) / 2.0, inlet.reuse_open);

        const std::string label = (top ? "S" : "B") + std::to_string(inlet.index);
        draw_text(os, sx, top ? sy - 8.0 : sy + 16.0, label);
        draw_text(os, sx, top ? sy - 20.0 : sy + 28.0,
                  std::to_string(inlet.width_multiplier) + "x", "middle", 9.0);
    }

    os << "</svg>\n";
    return os.str();
}

}  // namespace fareyflow
