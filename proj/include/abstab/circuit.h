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

#ifndef ABSTAB_CIRCUIT_H
#define ABSTAB_CIRCUIT_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "abstab/measurement.h"

namespace abstab {

/// Apply the gate only if the named register holds the given eigenvalue exponent.
struct Condition {
    std::string reg;
    Integer equals;
};

struct GateStep {
    Gate gate;
    std::optional<Condition> condition;
};

struct MeasureStep {
    PauliLabel pauli;
    std::string reg;
};

/// Reads one register per codomain factor of `hom`, decodes b, solves hom(g') = b and applies
/// X(target - g') on the leading factors. Each source must hold the outcome of a Z(e_j)
/// measurement on a factor whose modulus equals the matching codomain modulus.
struct CosetCorrectStep {
    HomMatrix hom;
    GroupElement target;
    std::vector<std::string> sources;
};

using Step = std::variant<GateStep, MeasureStep, CosetCorrectStep>;

struct CircuitProgram {
    GroupSpec group;
    GroupElement input;
    std::vector<Step> steps;
};

struct OutcomeRecord {
    std::string reg;
    Integer outcome;
    Rational probability;
    /// Set when the measured operator was diagonal.
    bool diagonal = false;
};

struct RunTranscript {
    uint64_t seed = 0;
    std::vector<OutcomeRecord> records;
    StabilizerGroup final_stabilizer;
    NormalFormState final_state;
};

/// Checks group consistency and that registers are written once before being read.
void validate_program(const CircuitProgram &program);

RunTranscript run(const CircuitProgram &program, uint64_t seed);

/// Marginal distribution of `reg`. Earlier random measurements need an entry in `given`.
OutcomeDistribution exact_distribution(const CircuitProgram &program, const std::string &reg,
                                       const std::map<std::string, Integer> &given);

/// Program over G x Z_|G|^s that ends in |x + H> tensored with a basis ancilla.
CircuitProgram coset_prepare(const SubgroupGens &H, const GroupElement &x);

/// Per-shot seed derivation used by the CLI.
uint64_t shot_seed(uint64_t seed, uint64_t shot);

}  // namespace abstab

#endif
