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

#ifndef ABSTAB_STABILIZER_H
#define ABSTAB_STABILIZER_H

#include <optional>
#include <random>
#include <vector>

#include "abstab/gates.h"
#include "abstab/subgroups.h"

namespace abstab {

/// A group of commuting Pauli operators given by generators.
struct StabilizerGroup {
    GroupSpec group;
    std::vector<PauliLabel> gens;
};

/// The x-part group, the diagonal subgroup and its z-part group.
struct LabelGroups {
    SubgroupGens x_parts;
    std::vector<PauliLabel> diagonal;
    SubgroupGens diagonal_z_parts;
};

/// Support x + D-perp of the stabilized space and its dimension |D-perp| / |H|.
struct StructureResult {
    LabelGroups labels;
    GroupElement support_offset;
    SubgroupGens support_group;
    Integer dimension;
};

/// Throws on non-commuting generators or when there is no common +1 eigenvector.
void validate_stabilizer(const StabilizerGroup &S);

LabelGroups label_groups(const StabilizerGroup &S);
/// nullopt when the stabilized space is empty.
std::optional<StructureResult> try_structure_test(const StabilizerGroup &S);
StructureResult structure_test(const StabilizerGroup &S);

bool is_unique(const StabilizerGroup &S);
Integer group_order(const StabilizerGroup &S);

/// psi(x) = sum_{h in H} xi(h) |s + h>, with xi(0) = 1.
struct NormalFormState {
    GroupElement offset;
    SubgroupGens x_parts;
    /// witnesses[k] is a stabilizer element with x-part x_parts.gens[k].
    std::vector<PauliLabel> witnesses;
    Integer support_size;
};

NormalFormState normal_form(const StabilizerGroup &S);

/// Phase exponent of psi(g) relative to psi(s), or nullopt outside the support.
/// Every nonzero amplitude has squared magnitude 1 / support_size.
std::optional<Integer> amplitude(const NormalFormState &nf, const GroupElement &g);
GroupElement sample_support(const NormalFormState &nf, std::mt19937_64 &rng);

StabilizerGroup initial_state_stabilizer(const GroupSpec &group, const GroupElement &x);

/// Same group, at most 2m generators.
StabilizerGroup compact(const StabilizerGroup &S);

StabilizerGroup conjugate_all(const Gate &gate, const StabilizerGroup &S);

}  // namespace abstab

#endif
