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

#include "abstab/stabilizer.h"

#include <stdexcept>

namespace abstab {

namespace {

void require_group(const StabilizerGroup &S) {
    for (const auto &g : S.gens) {
        if (g.group() != S.group) {
            throw std::invalid_argument("stabilizer generator " + g.str() + " is not over " + S.group.str());
        }
    }
}

PauliLabel product_of_powers(const StabilizerGroup &S, const std::vector<Integer> &w) {
    PauliLabel acc = identity(S.group);
    for (size_t i = 0; i < w.size(); i++) {
        if (w[i] != 0) {
            acc = multiply(acc, power(S.gens[i], w[i]));
        }
    }
    return acc;
}

}  // namespace

void validate_stabilizer(const StabilizerGroup &S) {
    require_group(S);
    for (size_t i = 0; i < S.gens.size(); i++) {
        for (size_t j = i + 1; j < S.gens.size(); j++) {
            if (!commutes(S.gens[i], S.gens[j])) {
                throw std::invalid_argument("non-commuting generators (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
            }
        }
    }
    if (!try_structure_test(S)) {
        throw std::invalid_argument("no common +1 eigenstate");
    }
}

LabelGroups label_groups(const StabilizerGroup &S) {
    require_group(S);
    LabelGroups out{SubgroupGens(S.group), {}, SubgroupGens(S.group)};
    std::vector<GroupElement> xs;
    for (const auto &g : S.gens) {
        xs.push_back(g.x);
        if (!g.x.is_zero()) {
            out.x_parts.gens.push_back(g.x);
        }
    }
    // Kernel of v -> sum v_i x_i over Z_{2|G|}^k: those products are diagonal.
    GroupSpec exponents = GroupSpec::uniform(S.gens.size(), S.group.phase_modulus());
    HomMatrix phi = hom_from_columns(exponents, xs, S.group);
    auto sol = solve(phi, GroupElement(S.group));
    for (const auto &v : sol->kernel.gens) {
        PauliLabel d = product_of_powers(S, v.residues());
        if (!d.x.is_zero()) {
            throw std::logic_error("label_groups: kernel product is not diagonal");
        }
        if (d.is_identity()) {
            continue;
        }
        out.diagonal_z_parts.gens.push_back(d.z);
        out.diagonal.push_back(std::move(d));
    }
    return out;
}

std::optional<StructureResult> try_structure_test(const StabilizerGroup &S) {
    LabelGroups labels = label_groups(S);
    std::vector<GroupElement> zs;
    std::vector<Integer> phases;
    for (const auto &d : labels.diagonal) {
        zs.push_back(d.z);
        phases.push_back(-d.phase);
    }
    // gamma^{a} chi_g(x) = 1  <=>  chi_g(x) = gamma^{-a}.
    auto sol = solve_character_system(zs, phases, S.group);
    if (!sol) {
        return std::nullopt;
    }
    Integer perp = subgroup_order(sol->kernel);
    Integer h = subgroup_order(labels.x_parts);
    if (!mpz_divisible_p(perp.get_mpz_t(), h.get_mpz_t())) {
        throw std::logic_error("structure_test: |H| does not divide |D-perp|");
    }
    return StructureResult{std::move(labels), sol->particular, sol->kernel, perp / h};
}

StructureResult structure_test(const StabilizerGroup &S) {
    auto r = try_structure_test(S);
    if (!r) {
        throw std::invalid_argument("stabilizer group has empty support");
    }
    return *r;
}

bool is_unique(const StabilizerGroup &S) {
    StructureResult r = structure_test(S);
    return same_subgroup(r.labels.x_parts, r.support_group);
}

Integer group_order(const StabilizerGroup &S) {
    LabelGroups labels = label_groups(S);
    return subgroup_order(labels.x_parts) * subgroup_order(labels.diagonal_z_parts);
}

NormalFormState normal_form(const StabilizerGroup &S) {
    StructureResult r = structure_test(S);
    if (!same_subgroup(r.labels.x_parts, r.support_group)) {
        throw std::invalid_argument("normal_form: stabilizer group does not fix a unique state");
    }
    NormalFormState nf{r.support_offset, SubgroupGens(S.group), {}, 0};
    for (const auto &g : S.gens) {
        if (!g.x.is_zero()) {
            nf.x_parts.gens.push_back(g.x);
            nf.witnesses.push_back(g);
        }
    }
    nf.support_size = subgroup_order(nf.x_parts);
    return nf;
}

std::optional<Integer> amplitude(const NormalFormState &nf, const GroupElement &g) {
    auto w = member_decompose(g - nf.offset, nf.x_parts);
    if (!w) {
        return std::nullopt;
    }
    PauliLabel sigma = identity(nf.offset.group());
    for (size_t k = 0; k < w->size(); k++) {
        if ((*w)[k] != 0) {
            sigma = multiply(sigma, power(nf.witnesses[k], (*w)[k]));
        }
    }
    // <s + h|psi> = gamma^a chi_{g'}(s + h) <s|psi>.
    return floor_mod(sigma.phase + 2 * character_exponent(sigma.z, g), g.group().phase_modulus());
}

GroupElement sample_support(const NormalFormState &nf, std::mt19937_64 &rng) {
    return nf.offset + uniform_sample_subgroup(nf.x_parts, rng);
}

StabilizerGroup initial_state_stabilizer(const GroupSpec &group, const GroupElement &x) {
    if (x.group() != group) {
        throw std::invalid_argument("initial state " + x.str() + " is not in " + group.str());
    }
    StabilizerGroup S{group, {}};
    for (size_t i = 0; i < group.rank(); i++) {
        Integer a = -2 * group.order_cofactor(i) * x[i];
        S.gens.emplace_back(a, GroupElement::basis(group, i), GroupElement(group));
    }
    return S;
}

StabilizerGroup compact(const StabilizerGroup &S) {
    require_group(S);
    const GroupSpec &G = S.group;
    const size_t m = G.rank();
    const size_t k = S.gens.size();
    // Columns (z_i; x_i) followed by diag(d, d), over Z_lcm.
    IntMatrix M(2 * m, k + 2 * m);
    for (size_t c = 0; c < k; c++) {
        for (size_t r = 0; r < m; r++) {
            M.at(r, c) = S.gens[c].z[r];
            M.at(m + r, c) = S.gens[c].x[r];
        }
    }
    for (size_t r = 0; r < m; r++) {
        M.at(r, k + r) = G.modulus(r);
        M.at(m + r, k + m + r) = G.modulus(r);
    }
    SmithForm snf = smith_normal_form(M, G.exponent());
    StabilizerGroup out{G, {}};
    for (size_t i = 0; i < snf.rank; i++) {
        std::vector<Integer> w(k);
        for (size_t j = 0; j < k; j++) {
            w[j] = snf.v.at(j, i);
        }
        PauliLabel p = product_of_powers(S, w);
        if (p.z.is_zero() && p.x.is_zero()) {
            if (p.phase != 0) {
                throw std::invalid_argument("stabilizer group contains a nontrivial multiple of the identity");
            }
            continue;
        }
        out.gens.push_back(std::move(p));
    }
    return out;
}

StabilizerGroup conjugate_all(const Gate &gate, const StabilizerGroup &S) {
    StabilizerGroup out{S.group, {}};
    out.gens.reserve(S.gens.size());
    for (const auto &g : S.gens) {
        out.gens.push_back(conjugate(gate, g));
    }
    return out;
}

}  // namespace abstab
