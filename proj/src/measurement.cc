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

#include "abstab/measurement.h"

#include <stdexcept>

namespace abstab {

double Rational::to_double() const {
    mpq_class q(num, den);
    return q.get_d();
}

DiagonalizationResult diagonalize_pauli(const PauliLabel &p) {
    const GroupSpec &G = p.group();
    DiagonalizationResult out{{}, p};
    for (size_t i = 0; i < G.rank(); i++) {
        // Signed Euclid on (z, x): shear z by a multiple of x, then Fourier swap (z, x) -> (x, -z).
        Integer z = p.z[i];
        Integer x = p.x[i];
        const Integer &d = G.modulus(i);
        while (x != 0) {
            Integer q;
            mpz_tdiv_q(q.get_mpz_t(), z.get_mpz_t(), x.get_mpz_t());
            if (q != 0) {
                out.circuit.push_back(phase_power_gate(G, i, floor_mod(-q, d)));
                z -= q * x;
            }
            out.circuit.push_back(fourier_gate(G, i));
            Integer nz = x;
            x = -z;
            z = nz;
        }
        if (z < 0) {
            // F^2 is the negation |x> -> |-x>.
            out.circuit.push_back(fourier_gate(G, i));
            out.circuit.push_back(fourier_gate(G, i));
        }
    }
    for (const auto &gate : out.circuit) {
        out.diagonal = conjugate(gate, out.diagonal);
    }
    if (!out.diagonal.is_diagonal()) {
        throw std::logic_error("diagonalize_pauli: result is not diagonal");
    }
    return out;
}

OutcomeDistribution::OutcomeDistribution(Integer modulus, Integer base, Integer step)
    : modulus_(std::move(modulus)), step_(std::move(step)) {
    if (sgn(step_) <= 0 || !mpz_divisible_p(modulus_.get_mpz_t(), step_.get_mpz_t())) {
        throw std::invalid_argument("outcome step must divide the phase modulus");
    }
    base_ = floor_mod(base, step_);
    count_ = modulus_ / step_;
}

Rational OutcomeDistribution::probability(const Integer &k) const {
    if (!contains(k)) {
        return Rational{0, 1};
    }
    return Rational{1, count_};
}

bool OutcomeDistribution::contains(const Integer &k) const {
    return floor_mod(k, step_) == base_;
}

std::vector<std::pair<Integer, Rational>> OutcomeDistribution::entries(size_t limit) const {
    if (count_ > limit) {
        throw std::length_error("outcome distribution has " + to_string(count_) + " outcomes");
    }
    std::vector<std::pair<Integer, Rational>> out;
    for (Integer k = base_; k < modulus_; k += step_) {
        out.emplace_back(k, Rational{1, count_});
    }
    return out;
}

Integer OutcomeDistribution::sample(std::mt19937_64 &rng) const {
    return base_ + step_ * uniform_below(count_, rng);
}

OutcomeDistribution outcome_distribution(const StabilizerGroup &S, const PauliLabel &p) {
    if (p.group() != S.group) {
        throw std::invalid_argument("measured Pauli is over " + p.group().str() + " but the state over " +
                                    S.group.str());
    }
    const GroupSpec &G = S.group;
    DiagonalizationResult dr = diagonalize_pauli(p);
    StabilizerGroup T = S;
    for (const auto &gate : dr.circuit) {
        T = conjugate_all(gate, T);
    }
    StructureResult r = structure_test(T);
    // Outcome y = omega(g, x) for x in s + H, uniform over omega(s) + omega(H) in Z_lcm.
    const GroupElement &g = dr.diagonal.z;
    GroupSpec cyclic = GroupSpec::uniform(1, G.exponent());
    SubgroupGens image(cyclic);
    for (const auto &h : r.labels.x_parts.gens) {
        image.gens.emplace_back(cyclic, std::vector<Integer>{omega_exponent(g, h)});
    }
    Integer n = subgroup_order(image);
    Integer scale = G.phase_modulus() / G.exponent();
    Integer k0 = dr.diagonal.phase + scale * omega_exponent(g, r.support_offset);
    return OutcomeDistribution(G.phase_modulus(), k0, G.phase_modulus() / n);
}

std::vector<PauliLabel> centralizer(const StabilizerGroup &S, const PauliLabel &p) {
    const GroupSpec &G = S.group;
    const size_t k = S.gens.size();
    // prod sigma_i^{w_i} commutes with p iff sum w_i c_i == 0 mod |G|.
    IntMatrix row(1, k);
    for (size_t i = 0; i < k; i++) {
        row.at(0, i) = character_exponent(S.gens[i].z, p.x) - character_exponent(p.z, S.gens[i].x);
    }
    GroupSpec domain = GroupSpec::uniform(k, G.exponent());
    GroupSpec codomain = GroupSpec::uniform(1, G.order());
    HomMatrix c = validate_hom(row, domain, codomain);
    auto sol = solve(c, GroupElement(codomain));
    std::vector<PauliLabel> out;
    for (const auto &w : sol->kernel.gens) {
        PauliLabel acc = identity(G);
        for (size_t i = 0; i < k; i++) {
            if (w[i] != 0) {
                acc = multiply(acc, power(S.gens[i], w[i]));
            }
        }
        if (!acc.is_identity()) {
            out.push_back(std::move(acc));
        }
    }
    return out;
}

namespace {

MeasurementResult finish(const StabilizerGroup &S, const PauliLabel &p, const OutcomeDistribution &dist,
                         const Integer &k) {
    MeasurementResult out{floor_mod(k, S.group.phase_modulus()), dist.probability(k), {S.group, {}}};
    StabilizerGroup post{S.group, {with_phase(p, p.phase - out.outcome)}};
    for (auto &c : centralizer(S, p)) {
        post.gens.push_back(std::move(c));
    }
    out.post = compact(post);
    return out;
}

}  // namespace

MeasurementResult measure(const StabilizerGroup &S, const PauliLabel &p, std::mt19937_64 &rng) {
    OutcomeDistribution dist = outcome_distribution(S, p);
    return finish(S, p, dist, dist.sample(rng));
}

MeasurementResult measure_forced(const StabilizerGroup &S, const PauliLabel &p, const Integer &outcome) {
    OutcomeDistribution dist = outcome_distribution(S, p);
    if (!dist.contains(outcome)) {
        throw std::invalid_argument("forced outcome " + to_string(outcome) + " has probability zero");
    }
    return finish(S, p, dist, outcome);
}

}  // namespace abstab
