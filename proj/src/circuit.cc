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

#include "abstab/circuit.h"

#include <set>
#include <stdexcept>

namespace abstab {

void validate_program(const CircuitProgram &program) {
    const GroupSpec &G = program.group;
    if (program.input.group() != G) {
        throw std::invalid_argument("program input " + program.input.str() + " is not in " + G.str());
    }
    std::set<std::string> written;
    auto require_reg = [&](const std::string &reg, size_t step) {
        if (!written.count(reg)) {
            throw std::invalid_argument("step " + std::to_string(step) + " reads register '" + reg +
                                        "' before it is measured");
        }
    };
    for (size_t k = 0; k < program.steps.size(); k++) {
        const Step &step = program.steps[k];
        if (auto *s = std::get_if<GateStep>(&step)) {
            if (s->gate.group != G) {
                throw std::invalid_argument("step " + std::to_string(k) + ": gate acts on " + s->gate.group.str());
            }
            if (s->condition) {
                require_reg(s->condition->reg, k);
            }
        } else if (auto *s = std::get_if<MeasureStep>(&step)) {
            if (s->pauli.group() != G) {
                throw std::invalid_argument("step " + std::to_string(k) + ": Pauli over " + s->pauli.group().str());
            }
            if (!written.insert(s->reg).second) {
                throw std::invalid_argument("step " + std::to_string(k) + ": register '" + s->reg +
                                            "' is written twice");
            }
        } else {
            const auto &c = std::get<CosetCorrectStep>(step);
            const GroupSpec &D = c.hom.domain();
            if (D.rank() > G.rank()) {
                throw std::invalid_argument("step " + std::to_string(k) + ": correction domain is too large");
            }
            for (size_t i = 0; i < D.rank(); i++) {
                if (D.modulus(i) != G.modulus(i)) {
                    throw std::invalid_argument("step " + std::to_string(k) +
                                                ": correction domain does not match the leading factors");
                }
            }
            if (c.target.group() != D) {
                throw std::invalid_argument("step " + std::to_string(k) + ": correction target is not in " +
                                            D.str());
            }
            if (c.sources.size() != c.hom.codomain().rank()) {
                throw std::invalid_argument("step " + std::to_string(k) +
                                            ": correction needs one source register per codomain factor");
            }
            for (const auto &r : c.sources) {
                require_reg(r, k);
            }
        }
    }
}

namespace {

// Drives the step loop; `choose` picks (outcome, distribution) for each measurement.
template <typename Choose>
StabilizerGroup execute(const CircuitProgram &program, std::map<std::string, Integer> &registers, Choose &&choose) {
    const GroupSpec &G = program.group;
    StabilizerGroup S = initial_state_stabilizer(G, program.input);
    for (const Step &step : program.steps) {
        if (auto *s = std::get_if<GateStep>(&step)) {
            if (s->condition && registers.at(s->condition->reg) != floor_mod(s->condition->equals, G.phase_modulus())) {
                continue;
            }
            S = conjugate_all(s->gate, S);
        } else if (auto *s = std::get_if<MeasureStep>(&step)) {
            auto chosen = choose(S, *s);
            if (!chosen) {
                break;
            }
            registers[s->reg] = chosen->outcome;
            S = std::move(chosen->post);
        } else {
            const auto &c = std::get<CosetCorrectStep>(step);
            const GroupSpec &D = c.hom.domain();
            const GroupSpec &C = c.hom.codomain();
            std::vector<Integer> b(C.rank());
            for (size_t l = 0; l < C.rank(); l++) {
                Integer num = registers.at(c.sources[l]) * C.modulus(l);
                if (!mpz_divisible_p(num.get_mpz_t(), G.phase_modulus().get_mpz_t())) {
                    throw std::invalid_argument("coset correction: register '" + c.sources[l] +
                                                "' does not hold a Z_" + to_string(C.modulus(l)) + " value");
                }
                b[l] = num / G.phase_modulus();
            }
            auto sol = solve(c.hom, GroupElement(C, b));
            if (!sol) {
                throw std::invalid_argument("coset correction: syndrome is not in the image");
            }
            GroupElement shift = c.target - sol->particular;
            std::vector<Integer> full(G.rank(), Integer(0));
            for (size_t i = 0; i < D.rank(); i++) {
                full[i] = shift[i];
            }
            S = conjugate_all(make_pauli_gate(make_X(GroupElement(G, full))), S);
        }
    }
    return S;
}

}  // namespace

RunTranscript run(const CircuitProgram &program, uint64_t seed) {
    validate_program(program);
    std::mt19937_64 rng(seed);
    RunTranscript t;
    t.seed = seed;
    std::map<std::string, Integer> registers;
    auto choose = [&](const StabilizerGroup &S, const MeasureStep &m) -> std::optional<MeasurementResult> {
        MeasurementResult r = measure(S, m.pauli, rng);
        t.records.push_back(OutcomeRecord{m.reg, r.outcome, r.probability, m.pauli.is_diagonal()});
        return r;
    };
    t.final_stabilizer = execute(program, registers, choose);
    t.final_state = normal_form(t.final_stabilizer);
    return t;
}

OutcomeDistribution exact_distribution(const CircuitProgram &program, const std::string &reg,
                                       const std::map<std::string, Integer> &given) {
    validate_program(program);
    std::optional<OutcomeDistribution> result;
    std::map<std::string, Integer> registers;
    auto choose = [&](const StabilizerGroup &S, const MeasureStep &m) -> std::optional<MeasurementResult> {
        OutcomeDistribution dist = outcome_distribution(S, m.pauli);
        if (m.reg == reg) {
            result = dist;
            return std::nullopt;
        }
        auto it = given.find(m.reg);
        if (it != given.end()) {
            return measure_forced(S, m.pauli, it->second);
        }
        if (!dist.is_deterministic()) {
            throw std::invalid_argument("indeterminate prefix: register '" + m.reg + "' is random and not given");
        }
        return measure_forced(S, m.pauli, dist.base());
    };
    execute(program, registers, choose);
    if (!result) {
        throw std::invalid_argument("register '" + reg + "' is never measured");
    }
    return *result;
}

CircuitProgram coset_prepare(const SubgroupGens &H, const GroupElement &x) {
    const GroupSpec &G = H.group;
    if (x.group() != G) {
        throw std::invalid_argument("coset_prepare: coset representative is not in " + G.str());
    }
    HomMatrix hide = hiding_hom(H);
    const size_t m = G.rank();
    const size_t s = hide.codomain().rank();
    GroupSpec full = G.product(hide.codomain());

    CircuitProgram p{full, GroupElement(full), {}};
    std::vector<size_t> factors;
    for (size_t i = 0; i < m; i++) {
        factors.push_back(i);
    }
    p.steps.push_back(GateStep{make_qft(full, factors, false), std::nullopt});

    // (g, h) -> (g, h + hide(g)).
    IntMatrix alpha = IntMatrix::identity(m + s);
    for (size_t l = 0; l < s; l++) {
        for (size_t j = 0; j < m; j++) {
            alpha.at(m + l, j) = hide.at(l, j);
        }
    }
    p.steps.push_back(GateStep{make_automorphism(validate_hom(alpha, full, full)), std::nullopt});

    std::vector<std::string> sources;
    for (size_t l = 0; l < s; l++) {
        std::string reg = "syndrome_" + std::to_string(l);
        p.steps.push_back(MeasureStep{make_Z(GroupElement::basis(full, m + l)), reg});
        sources.push_back(reg);
    }
    p.steps.push_back(CosetCorrectStep{hide, x, sources});
    return p;
}

uint64_t shot_seed(uint64_t seed, uint64_t shot) {
    // splitmix64 finalizer.
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (shot + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace abstab
