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
#include "fareyflow/fsd.hpp"
#include "fareyflow/hydro.hpp"
#include "fareyflow/interchange.hpp"
#include "fareyflow/layout.hpp"
#include "fareyflow/mixplan.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace fareyflow;

struct GlobalOptions {
    int n = -1;  // -1: not set, subcommands fall back to 6
    std::string outdir;
    std::string format = "csv";
    double density = 998.0;
    double viscosity = 1.002e-3;
    double injection_speed = 1e-3;
    double unit_width = 10e-6;
    double channel_height = 25e-6;

    int accuracy(int sub_n) const { return sub_n > 0 ? sub_n : (n > 0 ? n : 6); }

    FluidProps fluid() const { return {density, viscosity}; }

    std::string resolve(const std::string& path) const {
        if (outdir.empty() || path.empty() || path == "-" ||
            std::filesystem::path(path).is_absolute()) {
            return path;
        }
        return (std::filesystem::path(outdir) / path).string();
    }
};

void write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << content;
}

FsdSequence build_sequence(const std::string& kind, AccuracyLevel n) {
    if (kind == "bs") return bs_sequence(n);
    if (kind == "rf") return reduced_farey(n);
    return fsd_sequence(n);
}

std::string signed_error_line(const Approximation& a) {
    std::ostringstream os;
    os << a.error.str() << " (" << a.error.to_double() << "), |error| = " << a.error.abs().str()
       << " (" << a.error.abs().to_double() << ")";
    return os.str();
}

std::string onoff_row(const std::vector<bool>& bits) {
    std::string row;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        row += bits[i] ? "on " : "off";
        if (i + 1 < bits.size()) {
            row += "  ";
        }
    }
    return row;
}

int run_gen(const GlobalOptions& g, int sub_n, const std::string& kind, const std::string& output,
            const std::string& json_path) {
    AccuracyLevel n(g.accuracy(sub_n));
    FsdSequence seq = build_sequence(kind, n);
    std::cerr << to_string(seq.kind) << " n=" << seq.n << ": " << seq.size()
              << " elements, max adjacent gap " << seq.max_adjacent_gap().str() << "\n";

    const bool want_json = g.format == "json" && json_path.empty();
    std::string primary = output.empty() ? "-" : g.resolve(output);
    write_file(primary, want_json ? sequence_to_json(seq) : sequence_to_csv(seq));
    if (!json_path.empty()) {
        write_file(g.resolve(json_path), sequence_to_json(seq));
    }
    return 0;
}

int run_approx(const GlobalOptions& g, int sub_n, const std::string& target_text,
               const std::string& json_path) {
    AccuracyLevel n(g.accuracy(sub_n));
    TargetCF target = parse_target(target_text);
    LatticeComparison cmp = compare_lattices(target, n);

    std::cout << "target " << target.original_text << " = " << target.value.str() << " ("
              << target.value.to_double() << "), n = " << n.n() << "\n";
    std::cout << "  fsd choice: " << cmp.fsd.chosen.str() << ", error "
              << signed_error_line(cmp.fsd) << "\n";
    std::cout << "  bs  choice: " << cmp.bs.chosen.str() << ", error " << signed_error_line(cmp.bs)
              << "\n";
    const char* better = cmp.fsd.error.abs() < cmp.bs.error.abs() ? "fsd lattice is strictly closer"
                                                                  : "both lattices tie";
    std::cout << "  " << better << "\n";
    if (!json_path.empty()) {
        write_file(g.resolve(json_path), approximation_to_json(cmp.fsd));
    }
    return 0;
}

int run_plan(const GlobalOptions& g, int sub_n, const std::string& target_text,
             const std::string& svg_path, const std::string& json_path) {
    AccuracyLevel n(g.accuracy(sub_n));
    TargetCF target = parse_target(target_text);
    Approximation approx = find_closest_fast(target, fsd_sequence(n));
    DilutionPlan plan = make_plan(approx.chosen, n);
    InletStates states = inlet_states(plan);

    std::cout << "target " << target.original_text << " -> cf " << plan.cf.str() << " (error "
              << approx.error.str() << " = " << approx.error.to_double() << ")\n";
    std::cout << "units: " << plan.sample_units << " sample + " << plan.buffer_units
              << " buffer = " << (plan.sample_units + plan.buffer_units) << "\n";
    std::cout << "mix steps (LSB first):\n";
    for (const MixStep& s : plan.tree.steps) {
        std::cout << "  " << to_string(s.fluid) << " " << s.volume << "u (inlet " << s.position
                  << ")\n";
    }
    std::cout << "inlet ports toward mixer, left to right (1x first):\n";
    std::cout << "  sample: " << onoff_row(states.sample_mix) << "\n";
    std::cout << "  buffer: " << onoff_row(states.buffer_mix) << "\n";
    std::cout << "re-use ports are the complements.\n";

    ChannelSpec spec =
        channel_for_states(states, g.unit_width, g.channel_height, g.injection_speed);
    LaminarVerdict verdict = validate_laminar(spec, g.fluid());
    FluxProfile flux = flux_profile(states, spec);
    std::cout << "hydro: final flux " << flux.final_units() << " unit-fluxes, max Reynolds "
              << verdict.max_reynolds << (verdict.ok ? " (laminar)" : " (NOT laminar)");
    if (!verdict.location.empty()) {
        std::cout << " at " << verdict.location;
    }
    std::cout << "\n";

    if (!json_path.empty()) {
        write_file(g.resolve(json_path), plan_to_json(plan, states));
    }
    if (!svg_path.empty()) {
        write_file(g.resolve(svg_path), emit_schematic(build_network(plan)));
        std::cerr << "schematic written to " << g.resolve(svg_path) << "\n";
    }
    return verdict.ok ? 0 : 2;
}

int run_batch(const GlobalOptions& g, int sub_n, const std::string& input,
              const std::string& output) {
    AccuracyLevel n(g.accuracy(sub_n));
    std::ifstream in(input);
    if (!in) {
        throw std::runtime_error("cannot read " + input);
    }
    FsdSequence bs = bs_sequence(n);
    FsdSequence fsd = fsd_sequence(n);

    std::ostringstream report;
    report << "target,n,bs_choice,bs_error,fsd_choice,fsd_error,sample_units,buffer_units,"
              "dominance\n";
    std::string line;
    int line_no = 0;
    int failures = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
        if (trimmed.empty() || trimmed[0] == '#') {
            continue;
        }
        try {
            TargetCF target = parse_target(trimmed);
            Approximation ab = find_closest_fast(target, bs);
            Approximation af = find_closest_fast(target, fsd);
            DilutionPlan plan = make_plan(af.chosen, n);
            const bool dominance = af.error.abs() <= ab.error.abs();
            report << trimmed << ',' << n.n() << ',' << ab.chosen.str() << ',' << ab.error.str()
                   << ',' << af.chosen.str() << ',' << af.error.str() << ',' << plan.sample_units
                   << ',' << plan.buffer_units << ',' << (dominance ? "true" : "false") << '\n';
        } catch (const std::exception& e) {
            std::cerr << input << ":" << line_no << ": " << e.what() << "\n";
            ++failures;
        }
    }
    write_file(output.empty() ? "-" : g.resolve(output), report.str());
    if (failures > 0) {
        std::cerr << failures << " row(s) failed\n";
        return 1;
    }
    return 0;
}

int run_throughput(const GlobalOptions& g, int sub_n, const std::string& target_text) {
    AccuracyLevel n(g.accuracy(sub_n));
    TargetCF target = parse_target(target_text);
    auto options = throughput_options(target.value, n);
    std::cout << "sample,buffer,rate\n";
    for (const ThroughputOption& opt : options) {
        std::cout << opt.sample << ',' << opt.buffer << ',' << opt.rate << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dilution-plan synthesis for free-flowing microfluidic diluters"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.set_config("--config")->envname("FAREYFLOW_CONFIG");
    app.add_option("--n", g.n, "default accuracy level (sample inlets per fluid)");
    app.add_option("--outdir", g.outdir, "directory for relative output paths");
    app.add_option("--format", g.format, "primary output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--density", g.density, "fluid density [kg/m^3]")->check(CLI::PositiveNumber);
    app.add_option("--viscosity", g.viscosity, "dynamic viscosity [Pa s]")
        ->check(CLI::PositiveNumber);
    app.add_option("--injection-speed", g.injection_speed, "inlet flow speed [m/s]")
        ->check(CLI::PositiveNumber);
    app.add_option("--unit-width", g.unit_width, "width of the 1x inlet [m]")
        ->check(CLI::PositiveNumber);
    app.add_option("--channel-height", g.channel_height, "channel height [m]")
        ->check(CLI::PositiveNumber);

    int sub_n = -1;
    std::string kind = "fsd", target_text, input, output, svg_path, json_path;

    CLI::App* gen = app.add_subcommand("gen", "generate a concentration lattice");
    gen->add_option("--n", sub_n, "accuracy level");
    gen->add_option("--kind", kind, "lattice kind")->check(CLI::IsMember({"bs", "rf", "fsd"}));
    gen->add_option("--output,-o", output, "CSV (or JSON with --format json) file, - for stdout");
    gen->add_option("--json", json_path, "also write the JSON form here");

    CLI::App* approx = app.add_subcommand("approx", "map a target CF to the closest lattice CF");
    approx->add_option("--n", sub_n, "accuracy level");
    approx->add_option("--target,-t", target_text, "target CF (percent, decimal, or fraction)")
        ->required();
    approx->add_option("--json", json_path, "write the approximation record here");

    CLI::App* plan = app.add_subcommand("plan", "synthesize the full dilution plan");
    plan->add_option("--n", sub_n, "accuracy level");
    plan->add_option("--target,-t", target_text, "target CF")->required();
    plan->add_option("--svg", svg_path, "write the network schematic here");
    plan->add_option("--json", json_path, "write the plan record here");

    CLI::App* batch = app.add_subcommand("batch", "approximate a CSV of targets");
    batch->add_option("--n", sub_n, "accuracy level");
    batch->add_option("--input,-i", input, "one target per line")->required();
    batch->add_option("--output,-o", output, "report CSV, - for stdout");

    CLI::App* throughput = app.add_subcommand("throughput", "flow-rate options for a CF");
    throughput->add_option("--n", sub_n, "accuracy level");
    throughput->add_option("--target,-t", target_text, "target CF")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return run_gen(g, sub_n, kind, output, json_path);
        if (approx->parsed()) return run_approx(g, sub_n, target_text, json_path);
        if (plan->parsed()) return run_plan(g, sub_n, target_text, svg_path, json_path);
        if (batch->parsed()) return run_batch(g, sub_n, input, output);
        if (throughput->parsed()) return run_throughput(g, sub_n, target_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
