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

#include "abstab/group.h"

#include <sstream>
#include <stdexcept>

namespace abstab {

struct GroupSpec::Data {
    std::vector<Integer> moduli;
    Integer order;
    Integer phase_modulus;
    Integer exponent;
    std::vector<Integer> order_cofactors;
    std::vector<Integer> exponent_cofactors;
};

GroupSpec::GroupSpec() : GroupSpec(std::vector<Integer>{}) {
}

GroupSpec::GroupSpec(std::vector<Integer> moduli) {
    auto data = std::make_shared<Data>();
    data->order = 1;
    data->exponent = 1;
    for (size_t i = 0; i < moduli.size(); i++) {
        if (sgn(moduli[i]) <= 0) {
            throw std::invalid_argument("modulus " + std::to_string(i) + " must be positive, got " +
                                        to_string(moduli[i]));
        }
        data->order *= moduli[i];
        // Left to right, one gcd per step.
        data->exponent = lcm(data->exponent, moduli[i]);
    }
    data->phase_modulus = 2 * data->order;
    for (const auto &d : moduli) {
        data->order_cofactors.push_back(data->order / d);
        data->exponent_cofactors.push_back(data->exponent / d);
    }
    data->moduli = std::move(moduli);
    data_ = std::move(data);
}

GroupSpec GroupSpec::uniform(size_t count, const Integer &modulus) {
    return GroupSpec(std::vector<Integer>(count, modulus));
}

size_t GroupSpec::rank() const {
    return data_->moduli.size();
}
const std::vector<Integer> &GroupSpec::moduli() const {
    return data_->moduli;
}
const Integer &GroupSpec::modulus(size_t i) const {
    return data_->moduli[i];
}
const Integer &GroupSpec::order() const {
    return data_->order;
}
const Integer &GroupSpec::phase_modulus() const {
    return data_->phase_modulus;
}
const Integer &GroupSpec::exponent() const {
    return data_->exponent;
}
const Integer &GroupSpec::order_cofactor(size_t i) const {
    return data_->order_cofactors[i];
}
const Integer &GroupSpec::exponent_cofactor(size_t i) const {
    return data_->exponent_cofactors[i];
}

GroupSpec GroupSpec::product(const GroupSpec &other) const {
    std::vector<Integer> m = moduli();
    m.insert(m.end(), other.moduli().begin(), other.moduli().end());
    return GroupSpec(std::move(m));
}

bool GroupSpec::operator==(const GroupSpec &other) const {
    return data_ == other.data_ || data_->moduli == other.data_->moduli;
}

std::string GroupSpec::str() const {
    std::ostringstream out;
    out << "G(";
    for (size_t i = 0; i < rank(); i++) {
        if (i) {
            out << ",";
        }
        out << modulus(i).get_str();
    }
    out << ")";
    return out.str();
}

GroupSpec make_group(const std::vector<Integer> &moduli) {
    if (moduli.empty()) {
        throw std::invalid_argument("a group needs at least one factor");
    }
    return GroupSpec(moduli);
}

GroupElement::GroupElement(GroupSpec group) : group_(std::move(group)), residues_(group_.rank(), Integer(0)) {
}

GroupElement::GroupElement(GroupSpec group, const std::vector<Integer> &values) : group_(std::move(group)) {
    if (values.size() != group_.rank()) {
        throw std::invalid_argument("element has " + std::to_string(values.size()) + " components but " +
                                    group_.str() + " has rank " + std::to_string(group_.rank()));
    }
    residues_.reserve(values.size());
    for (size_t i = 0; i < values.size(); i++) {
        residues_.push_back(floor_mod(values[i], group_.modulus(i)));
    }
}

GroupElement GroupElement::basis(const GroupSpec &group, size_t i) {
    if (i >= group.rank()) {
        throw std::out_of_range("basis index out of range");
    }
    std::vector<Integer> v(group.rank(), Integer(0));
    v[i] = 1;
    return GroupElement(group, v);
}

bool GroupElement::is_zero() const {
    for (const auto &r : residues_) {
        if (r != 0) {
            return false;
        }
    }
    return true;
}

void GroupElement::require_same_group(const GroupElement &other) const {
    if (group_ != other.group_) {
        throw std::invalid_argument("elements belong to different groups: " + group_.str() + " vs " +
                                    other.group_.str());
    }
}

GroupElement GroupElement::operator+(const GroupElement &other) const {
    GroupElement r = *this;
    r += other;
    return r;
}

GroupElement &GroupElement::operator+=(const GroupElement &other) {
    require_same_group(other);
    for (size_t i = 0; i < residues_.size(); i++) {
        residues_[i] += other.residues_[i];
        if (residues_[i] >= group_.modulus(i)) {
            residues_[i] -= group_.modulus(i);
        }
    }
    return *this;
}

GroupElement GroupElement::operator-(const GroupElement &other) const {
    return *this + (-other);
}

GroupElement GroupElement::operator-() const {
    GroupElement r = *this;
    for (size_t i = 0; i < residues_.size(); i++) {
        if (r.residues_[i] != 0) {
            r.residues_[i] = group_.modulus(i) - r.residues_[i];
        }
    }
    return r;
}

GroupElement GroupElement::scaled(const Integer &k) const {
    GroupElement r = *this;
    for (size_t i = 0; i < residues_.size(); i++) {
        r.residues_[i] = floor_mod(residues_[i] * k, group_.modulus(i));
    }
    return r;
}

bool GroupElement::operator==(const GroupElement &other) const {
    return group_ == other.group_ && residues_ == other.residues_;
}

GroupElement GroupElement::slice(size_t begin, size_t count) const {
    if (begin + count > rank()) {
        throw std::out_of_range("slice out of range");
    }
    std::vector<Integer> m(group_.moduli().begin() + begin, group_.moduli().begin() + begin + count);
    std::vector<Integer> v(residues_.begin() + begin, residues_.begin() + begin + count);
    return GroupElement(GroupSpec(std::move(m)), v);
}

GroupElement GroupElement::concat(const GroupElement &other) const {
    std::vector<Integer> v = residues_;
    v.insert(v.end(), other.residues_.begin(), other.residues_.end());
    return GroupElement(group_.product(other.group_), v);
}

std::string GroupElement::str() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < residues_.size(); i++) {
        if (i) {
            out << ",";
        }
        out << residues_[i].get_str();
    }
    out << ")";
    return out.str();
}

SubgroupGens::SubgroupGens(GroupSpec g, std::vector<GroupElement> elements)
    : group(std::move(g)), gens(std::move(elements)) {
    for (const auto &e : gens) {
        if (e.group() != group) {
            throw std::invalid_argument("generator " + e.str() + " is not in " + group.str());
        }
    }
}

Integer character_exponent(const GroupElement &g, const GroupElement &h) {
    if (g.group() != h.group()) {
        throw std::invalid_argument("character_exponent: elements belong to different groups");
    }
    const GroupSpec &G = g.group();
    Integer t = 0;
    for (size_t i = 0; i < G.rank(); i++) {
        t += G.order_cofactor(i) * g[i] * h[i];
    }
    return floor_mod(t, G.order());
}

Integer omega_exponent(const GroupElement &g, const GroupElement &x) {
    if (g.group() != x.group()) {
        throw std::invalid_argument("omega_exponent: elements belong to different groups");
    }
    const GroupSpec &G = g.group();
    Integer t = 0;
    for (size_t i = 0; i < G.rank(); i++) {
        t += G.exponent_cofactor(i) * g[i] * x[i];
    }
    return floor_mod(t, G.exponent());
}

uint64_t element_index(const GroupElement &g) {
    uint64_t index = 0;
    for (size_t i = 0; i < g.rank(); i++) {
        index = index * g.group().modulus(i).get_ui() + g[i].get_ui();
    }
    return index;
}

GroupElement element_from_index(const GroupSpec &group, uint64_t index) {
    std::vector<Integer> v(group.rank());
    for (size_t i = group.rank(); i-- > 0;) {
        uint64_t d = group.modulus(i).get_ui();
        v[i] = static_cast<unsigned long>(index % d);
        index /= d;
    }
    return GroupElement(group, v);
}

}  // namespace abstab
