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

#include "fareyflow/approx.hpp"
#include "fareyflow/fsd.hpp"
#include "fareyflow/mixplan.hpp"

#include <string>

namespace fareyflow {

// Serialized forms share one versioned schema tag; numerators and
// denominators travel as decimal strings so arbitrary precision survives.

std::string sequence_to_json(const FsdSequence& seq);

/// CSV with header: index,numerator,denominator,value,kind.
std::string sequence_to_csv(const FsdSequence& seq);

std::string plan_to_json(const DilutionPlan& plan, const InletStates& states);

std::string approximation_to_json(const Approximation& approx);

}  // namespace fareyflow
