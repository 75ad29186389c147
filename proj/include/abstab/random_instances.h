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

#ifndef ABSTAB_RANDOM_INSTANCES_H
#define ABSTAB_RANDOM_INSTANCES_H

#include <random>

#include "abstab/circuit.h"

namespace abstab {

/// Random moduli in [2, max_modulus] with product at most max_order.
GroupSpec random_group(std::mt19937_64 &rng, uint64_t max_order, size_t max_rank = 4, uint64_t max_modulus = 16);
GroupElement random_element(const GroupSpec &G, std::mt19937_64 &rng);
/// Random homomorphism: entry (j, i) is a random multiple of d_j / gcd(c_i, d_j).
HomMatrix random_hom(const GroupSpec &H, const GroupSpec &G, std::mt19937_64 &rng);
/// Half the time A x for a random x, otherwise uniform in the codomain.
GroupElement random_rhs(const HomMatrix &A, std::mt19937_64 &rng);
SubgroupGens random_subgroup(const GroupSpec &G, std::mt19937_64 &rng, size_t max_gens = 3);
PauliLabel random_pauli(const GroupSpec &G, std::mt19937_64 &rng);
QuadraticFunction random_quadratic(const GroupSpec &G, std::mt19937_64 &rng);
Gate random_automorphism(const GroupSpec &G, std::mt19937_64 &rng);
/// Any of the four gate kinds, library gates included.
Gate random_gate(const GroupSpec &G, std::mt19937_64 &rng);
/// Basis state followed by random gates and measurements.
StabilizerGroup random_stabilizer_state(const GroupSpec &G, std::mt19937_64 &rng, size_t gates = 8,
                                        size_t measurements = 2);
/// Subgroup of a random state's stabilizer group: a valid group, possibly with a larger fixed space.
StabilizerGroup random_stabilizer_code(const GroupSpec &G, std::mt19937_64 &rng);

}  // namespace abstab

#endif
