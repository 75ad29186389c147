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

#ifndef ABSTAB_MEASUREMENT_H
#define ABSTAB_MEASUREMENT_H

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "abstab/stabilizer.h"

namespace abstab {

struct Rational {
    Integer num;
    Integer den;

    bool operator==(const Rational &other) const {
        return num * other.den == other.num * den;
    }
    double to_double() const;
};

/// C p C^dagger = gamma^a Z(g) for the normalizer circuit C (applied front to back).
struct DiagonalizationResult {
    std::vector<Gate> circuit;
    PauliLabel diagonal;
};

DiagonalizationResult diagonalize_pauli(const PauliLabel &p);

/// Outcomes of a Pauli measurement: eigenvalue exponents k (eigenvalue gamma^k) forming the
/// class base + step Z inside Z_{2|G|}, each with probability 1 / count.
class OutcomeDistribution {
   public:
    OutcomeDistribution(Integer modulus, Integer base, Integer step);

    const Integer &modulus() const {
        return modulus_;
    }
    const Integer &base() const {
        return base_;
    }
    const Integer &step() const {
        return step_;
    }
    const Integer &count() const {
        return count_;
    }
    bool is_deterministic() const {
        return count_ == 1;
    }

    Rational probability(const Integer &k) const;
    bool contains(const Integer &k) const;
    /// All outcomes in increasing order; throws if there are more than `limit`.
    std::vector<std::pair<Integer, Rational>> entries(size_t limit = 1u << 20) const;
    Integer sample(std::mt19937_64 &rng) const;

   private:
    Integer modulus_;
    Integer base_;
    Integer step_;
    Integer count_;
};

/// Requires a stabilizer group with a unique state.
OutcomeDistribution outcome_distribution(const StabilizerGroup &S, const PauliLabel &p);

/// Elements of S commuting with p.
std::vector<PauliLabel> centralizer(const StabilizerGroup &S, const PauliLabel &p);

struct MeasurementResult {
    Integer outcome;
    Rational probability;
    StabilizerGroup post;
};

MeasurementResult measure(const StabilizerGroup &S, const PauliLabel &p, std::mt19937_64 &rng);
/// Throws when the forced outcome has probability zero.
MeasurementResult measure_forced(const StabilizerGroup &S, const PauliLabel &p, const Integer &outcome);

}  // namespace abstab

#endif
