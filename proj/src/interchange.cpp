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

#include "fareyflow/interchange.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace fareyflow {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "fareyflow/1";

json fraction_to_json(const Fraction& f) {
    return {{"num", f.num().str()}, {"den", f.den().str()}};
}

std::string value_str(const Fraction& f) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", f.to_double());
    return buf;
}

json bits_to_json(const std::vector<bool>& bits) {
    json arr = json::array();
    for (bool b : bits) {
        arr.push_back(b ? 1 : 0);
    }
    return arr;
}

}  // namespace

std::string sequence_to_json(const FsdSequence& seq) {
    json j;
    j["schema"] = kSchema;
    j["type"] = "sequence";
    j["kind"] = to_string(seq.kind);
    j["n"] = seq.n;
    json elems = json::array();
    for (const Fraction& f : seq.elems) {
        elems.push_back(fraction_to_json(f));
    }
    j["elements"] = elems;
    return j.dump(2) + "\n";
}

std::string sequence_to_csv(const FsdSequence& seq) {
    std::ostringstream os;
    os << "index,numerator,denominator,value,kind\n";
    const std::string kind = to_string(seq.kind);
    for (std::size_t i = 0; i < seq.elems.size(); ++i) {
        const Fraction& f = seq.elems[i];
        os << i << ',' << f.num().str() << ',' << f.den().str() << ',' << value_str(f) << ','
           << kind << '\n';
    }
    return os.str();
}

std::string plan_to_json(const DilutionPlan& plan, const InletStates& states) {
    json j;
    j["schema"] = kSchema;
    j["type"] = "plan";
    j["cf"] = fraction_to_json(plan.cf);
    j["n"] = plan.n;
    j["sample_units"] = plan.sample_units;
    j["buffer_units"] = plan.buffer_units;
    j["sample_bits"] = bits_to_json(plan.sample_bits);
    j["buffer_bits"] = bits_to_json(plan.buffer_bits);
    json steps = json::array();
    for (const MixStep& s : plan.tree.steps) {
        steps.push_back(
            {{"fluid", to_string(s.fluid)}, {"volume", s.volume}, {"position", s.position}});
    }
    j["mix_steps"] = steps;
    j["inlet_states"] = {{"sample_mix", bits_to_json(states.sample_mix)},
                         {"sample_reuse", bits_to_json(states.sample_reuse)},
                         {"buffer_mix", bits_to_json(states.buffer_mix)},
                         {"buffer_reuse", bits_to_json(states.buffer_reuse)}};
    return j.dump(2) + "\n";
}

std::string approximation_to_json(const Approximation& approx) {
    json j;
    j["schema"] = kSchema;
    j["type"] = "approximation";
    j["target_text"] = approx.target.original_text;
    j["target"] = fraction_to_json(approx.target.value);
    j["chosen"] = fraction_to_json(approx.chosen);
    j["error"] = fraction_to_json(approx.error);
    j["abs_error_decimal"] = approx.error.abs().to_double();
    j["lattice"] = to_string(approx.lattice_kind);
    j["n"] = approx.n;
    return j.dump(2) + "\n";
}

}  // namespace fareyflow
