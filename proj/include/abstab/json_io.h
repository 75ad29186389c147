// Copyright 2026 The abstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ABSTAB_JSON_IO_H
#define ABSTAB_JSON_IO_H

#include <string>

#include "json.hpp"

#include "abstab/circuit.h"

namespace abstab {

using json = nlohmann::ordered_json;

/// Circuit files carry "format": "abstab-circuit/1"; linear systems "abstab-system/1".
constexpr const char *kCircuitFormat = "abstab-circuit/1";
constexpr const char *kSystemFormat = "abstab-system/1";

/// Integers are decimal strings on output; input also accepts JSON integers.
json integer_to_json(const Integer &v);
Integer integer_from_json(const json &j, const std::string &where);

json element_to_json(const GroupElement &g);
GroupElement element_from_json(const json &j, const GroupSpec &group, const std::string &where);

json pauli_to_json(const PauliLabel &p);
PauliLabel pauli_from_json(const json &j, const GroupSpec &group, const std::string &where);

json gate_to_json(const Gate &gate);
Gate gate_from_json(const json &j, const GroupSpec &group, const std::string &where);

json program_to_json(const CircuitProgram &program);
/// Strict: unknown fields, wrong types and bad values all throw std::invalid_argument.
CircuitProgram program_from_json(const json &j);
CircuitProgram parse_program(const std::string &text);

json normal_form_to_json(const NormalFormState &nf);
json transcript_to_json(const RunTranscript &t);

struct LinearSystem {
    HomMatrix hom;
    GroupElement rhs;
};
LinearSystem system_from_json(const json &j);
json solution_to_json(const SolveReport &r);

}  // namespace abstab

#endif
