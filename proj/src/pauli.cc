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

#include "abstab/pauli.h"

#include <stdexcept>

namespace abstab {

PauliLabel::PauliLabel(Integer a, GroupElement z_part, GroupElement x_part)
    : phase(std::move(a)), z(std::move(z_part)), x(std::move(x_part)) {
    if (z.group() != x.group()) {
        throw std::invalid_argument("Pauli label parts live in different groups");
    }
    phase = floor_mod(phase, z.group().phase_modulus());
}

std::string PauliLabel::str() const {
    return "gamma^" + to_string(phase) + " Z" + z.str() + " X" + x.str();
}

PauliLabel identity(const GroupSpec &group) {
    return PauliLabel(0, GroupElement(group), GroupElement(group));
}

PauliLabel make_X(const GroupElement &h) {
    return PauliLabel(0, GroupElement(h.group()), h);
}

PauliLabel make_Z(const GroupElement &g) {
    return PauliLabel(0, g, GroupElement(g.group()));
}

PauliLabel with_phase(const PauliLabel &p, const Integer &a) {
    return PauliLabel(a, p.z, p.x);
}

PauliLabel multiply(const PauliLabel &p, const PauliLabel &q) {
    if (p.group() != q.group()) {
        throw std::invalid_argument("multiply: Pauli operators over different groups");
    }
    // X(h1) Z(g2) = chi_{g2}(h1)^{-1} Z(g2) X(h1).
    Integer a = p.phase + q.phase - 2 * character_exponent(q.z, p.x);
    return PauliLabel(a, p.z + q.z, p.x + q.x);
}

PauliLabel power(const PauliLabel &p, const Integer &n) {
    if (sgn(n) < 0) {
        throw std::invalid_argument("power: exponent must be nonnegative");
    }
    // (Z(g)X(h))^n = chi_g(h)^{-n(n-1)/2} Z(ng) X(nh).
    Integer t = character_exponent(p.z, p.x);
    Integer a = n * p.phase - n * (n - 1) * t;
    return PauliLabel(a, p.z.scaled(n), p.x.scaled(n));
}

PauliLabel inverse(const PauliLabel &p) {
    return power(p, p.group().phase_modulus() - 1);
}

bool commutes(const PauliLabel &p, const PauliLabel &q) {
    if (p.group() != q.group()) {
        throw std::invalid_argument("commutes: Pauli operators over different groups");
    }
    return character_exponent(p.z, q.x) == character_exponent(q.z, p.x);
}

}  // namespace abstab
