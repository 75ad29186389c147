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

#include "abstab/subgroups.h"

#include <stdexcept>

namespace abstab {

HomMatrix generator_matrix(const SubgroupGens &H) {
    GroupSpec domain = GroupSpec::uniform(H.size(), H.group.exponent());
    return hom_from_columns(domain, H.gens, H.group);
}

std::optional<std::vector<Integer>> member_decompose(const GroupElement &b, const SubgroupGens &H) {
    if (b.group() != H.group) {
        throw std::invalid_argument("member_decompose: element and subgroup live in different groups");
    }
    auto sol = solve(generator_matrix(H), b);
    if (!sol) {
        return std::nullopt;
    }
    return sol->particular.residues();
}

bool contains(const SubgroupGens &H, const GroupElement &b) {
    return member_decompose(b, H).has_value();
}

bool is_subgroup_of(const SubgroupGens &A, const SubgroupGens &B) {
    for (const auto &g : A.gens) {
        if (!contains(B, g)) {
            return false;
        }
    }
    return true;
}

bool same_subgroup(const SubgroupGens &A, const SubgroupGens &B) {
    return is_subgroup_of(A, B) && is_subgroup_of(B, A);
}

Integer subgroup_order(const SubgroupGens &H) {
    HomMatrix A = generator_matrix(H);
    Integer kernel = count_solutions(A, GroupElement(H.group));
    Integer total;
    mpz_pow_ui(total.get_mpz_t(), H.group.exponent().get_mpz_t(), H.size());
    return total / kernel;
}

Intersection intersect_with_coefficients(const SubgroupGens &H, const SubgroupGens &K) {
    if (H.group != K.group) {
        throw std::invalid_argument("intersect: subgroups live in different groups");
    }
    const size_t r = H.size();
    std::vector<GroupElement> cols = H.gens;
    cols.insert(cols.end(), K.gens.begin(), K.gens.end());
    GroupSpec domain = GroupSpec::uniform(cols.size(), H.group.exponent());
    HomMatrix A = hom_from_columns(domain, cols, H.group);
    auto sol = solve(A, GroupElement(H.group));
    Intersection out{SubgroupGens(H.group), {}};
    for (const auto &x : sol->kernel.gens) {
        GroupElement g(H.group);
        std::vector<Integer> coeff(x.residues().begin(), x.residues().begin() + r);
        for (size_t i = 0; i < r; i++) {
            g += H.gens[i].scaled(coeff[i]);
        }
        if (!g.is_zero()) {
            out.gens.gens.push_back(std::move(g));
            out.h_coefficients.push_back(std::move(coeff));
        }
    }
    return out;
}

SubgroupGens intersect(const SubgroupGens &H, const SubgroupGens &K) {
    return intersect_with_coefficients(H, K).gens;
}

SubgroupGens join(const SubgroupGens &H, const SubgroupGens &K) {
    if (H.group != K.group) {
        throw std::invalid_argument("join: subgroups live in different groups");
    }
    SubgroupGens out = H;
    out.gens.insert(out.gens.end(), K.gens.begin(), K.gens.end());
    return out;
}

namespace {

// Row i is (|G|/d_j) h_i(j): chi_g(h_i) = exp(2 pi i (Omega g)_i / |G|).
HomMatrix character_matrix(const std::vector<GroupElement> &h, const GroupSpec &G) {
    GroupSpec codomain = GroupSpec::uniform(h.size(), G.order());
    IntMatrix m(h.size(), G.rank());
    for (size_t i = 0; i < h.size(); i++) {
        if (h[i].group() != G) {
            throw std::invalid_argument("character system: element " + h[i].str() + " is not in " + G.str());
        }
        for (size_t j = 0; j < G.rank(); j++) {
            m.at(i, j) = G.order_cofactor(j) * h[i][j];
        }
    }
    return validate_hom(m, G, codomain);
}

}  // namespace

SubgroupGens orthogonal(const SubgroupGens &H) {
    auto sol = solve_character_system(H.gens, std::vector<Integer>(H.size(), Integer(0)), H.group);
    return sol->kernel;
}

std::optional<CharacterSolution> solve_character_system(const std::vector<GroupElement> &h,
                                                        const std::vector<Integer> &a, const GroupSpec &group) {
    if (h.size() != a.size()) {
        throw std::invalid_argument("solve_character_system: element and phase lists differ in length");
    }
    std::vector<Integer> half(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        Integer ai = floor_mod(a[i], group.phase_modulus());
        if (mpz_odd_p(ai.get_mpz_t())) {
            return std::nullopt;
        }
        half[i] = ai / 2;
    }
    HomMatrix omega = character_matrix(h, group);
    auto sol = solve(omega, GroupElement(omega.codomain(), half));
    if (!sol) {
        return std::nullopt;
    }
    return CharacterSolution{sol->particular, sol->kernel};
}

HomMatrix hiding_hom(const SubgroupGens &H) {
    SubgroupGens perp = orthogonal(H);
    if (perp.gens.empty()) {
        // H is all of G: one zero row.
        GroupSpec codomain = GroupSpec::uniform(1, H.group.order());
        return validate_hom(IntMatrix(1, H.group.rank()), H.group, codomain);
    }
    return character_matrix(perp.gens, H.group);
}

GroupElement uniform_sample_subgroup(const SubgroupGens &H, std::mt19937_64 &rng) {
    GroupElement out(H.group);
    const Integer &d = H.group.exponent();
    for (const auto &h : H.gens) {
        out += h.scaled(uniform_below(d, rng));
    }
    return out;
}

}  // namespace abstab
