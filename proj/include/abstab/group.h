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

#ifndef ABSTAB_GROUP_H
#define ABSTAB_GROUP_H

#include <memory>
#include <string>
#include <vector>

#include "abstab/integer.h"

namespace abstab {

/// A finite abelian group Z_{d_1} x ... x Z_{d_m}.
///
/// Cheap to copy: the moduli and derived constants live behind a shared pointer.
/// Rank zero is the trivial group; it only shows up as the domain or codomain of
/// degenerate homomorphisms. Use make_group for user-facing construction.
class GroupSpec {
   public:
    GroupSpec();
    explicit GroupSpec(std::vector<Integer> moduli);

    /// `count` copies of Z_modulus.
    static GroupSpec uniform(size_t count, const Integer &modulus);

    size_t rank() const;
    const std::vector<Integer> &moduli() const;
    const Integer &modulus(size_t i) const;
    /// |G|, written g in the phase conventions.
    const Integer &order() const;
    /// 2|G|. Pauli phases gamma^a live in Z_{2|G|}.
    const Integer &phase_modulus() const;
    /// lcm of the moduli.
    const Integer &exponent() const;
    /// |G| / d_i.
    const Integer &order_cofactor(size_t i) const;
    /// lcm / d_i.
    const Integer &exponent_cofactor(size_t i) const;

    /// Direct product, moduli of `this` first.
    GroupSpec product(const GroupSpec &other) const;

    bool operator==(const GroupSpec &other) const;
    bool operator!=(const GroupSpec &other) const {
        return !(*this == other);
    }

    std::string str() const;

   private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

/// Validated constructor: at least one factor, every modulus >= 1.
GroupSpec make_group(const std::vector<Integer> &moduli);

/// An element of a GroupSpec. Residues are always stored reduced into [0, d_i).
class GroupElement {
   public:
    GroupElement() = default;
    explicit GroupElement(GroupSpec group);
    GroupElement(GroupSpec group, const std::vector<Integer> &values);

    static GroupElement basis(const GroupSpec &group, size_t i);

    const GroupSpec &group() const {
        return group_;
    }
    size_t rank() const {
        return residues_.size();
    }
    const Integer &operator[](size_t i) const {
        return residues_[i];
    }
    const std::vector<Integer> &residues() const {
        return residues_;
    }
    bool is_zero() const;

    GroupElement operator+(const GroupElement &other) const;
    GroupElement operator-(const GroupElement &other) const;
    GroupElement operator-() const;
    GroupElement &operator+=(const GroupElement &other);
    GroupElement scaled(const Integer &k) const;

    bool operator==(const GroupElement &other) const;
    bool operator!=(const GroupElement &other) const {
        return !(*this == other);
    }

    /// Restriction to factors [begin, begin + count).
    GroupElement slice(size_t begin, size_t count) const;
    /// Concatenation in G x K.
    GroupElement concat(const GroupElement &other) const;

    std::string str() const;

   private:
    void require_same_group(const GroupElement &other) const;

    GroupSpec group_;
    std::vector<Integer> residues_;
};

/// A finite list of generators of a subgroup. Not deduplicated or minimized.
struct SubgroupGens {
    GroupSpec group;
    std::vector<GroupElement> gens;

    SubgroupGens() = default;
    explicit SubgroupGens(GroupSpec g) : group(std::move(g)) {
    }
    SubgroupGens(GroupSpec g, std::vector<GroupElement> elements);

    size_t size() const {
        return gens.size();
    }
};

/// The exponent t in chi_g(h) = exp(2 pi i t / |G|), reduced into [0, |G|).
Integer character_exponent(const GroupElement &g, const GroupElement &h);

/// omega-valued pairing sum_i (lcm/d_i) g_i x_i reduced into [0, lcm).
Integer omega_exponent(const GroupElement &g, const GroupElement &x);

/// Mixed-radix index of an element, most significant factor first.
uint64_t element_index(const GroupElement &g);
GroupElement element_from_index(const GroupSpec &group, uint64_t index);

}  // namespace abstab

#endif
