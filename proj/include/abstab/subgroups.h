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

#ifndef ABSTAB_SUBGROUPS_H
#define ABSTAB_SUBGROUPS_H

#include <optional>
#include <random>
#include <vector>

#include "abstab/linear_solver.h"

namespace abstab {

/// The matrix with the generators of H as columns, domain Z_d^r with d = exponent of G.
HomMatrix generator_matrix(const SubgroupGens &H);

/// Coefficients x with sum x_i h_i == b, or nullopt when b is not in H.
std::optional<std::vector<Integer>> member_decompose(const GroupElement &b, const SubgroupGens &H);
bool contains(const SubgroupGens &H, const GroupElement &b);
/// Every generator of A lies in B.
bool is_subgroup_of(const SubgroupGens &A, const SubgroupGens &B);
bool same_subgroup(const SubgroupGens &A, const SubgroupGens &B);

Integer subgroup_order(const SubgroupGens &H);

/// Generators of H cap K, plus for each of them the coefficients over the generators of H.
struct Intersection {
    SubgroupGens gens;
    std::vector<std::vector<Integer>> h_coefficients;
};
Intersection intersect_with_coefficients(const SubgroupGens &H, const SubgroupGens &K);
SubgroupGens intersect(const SubgroupGens &H, const SubgroupGens &K);

/// Generated subgroup of H and K together.
SubgroupGens join(const SubgroupGens &H, const SubgroupGens &K);

/// H-perp = {g : chi_g(h) = 1 for all h in H}.
SubgroupGens orthogonal(const SubgroupGens &H);

/// Solutions of chi_g(h_i) = gamma^{a_i} for all i, where gamma = exp(i pi / |G|).
/// Empty when some a_i is odd or the system is inconsistent.
struct CharacterSolution {
    GroupElement particular;
    SubgroupGens kernel;
};
std::optional<CharacterSolution> solve_character_system(const std::vector<GroupElement> &h,
                                                        const std::vector<Integer> &a, const GroupSpec &group);

/// A homomorphism G -> Z_|G|^s whose kernel is H.
HomMatrix hiding_hom(const SubgroupGens &H);

/// Uniform element of H.
GroupElement uniform_sample_subgroup(const SubgroupGens &H, std::mt19937_64 &rng);

}  // namespace abstab

#endif
