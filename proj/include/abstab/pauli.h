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

#ifndef ABSTAB_PAULI_H
#define ABSTAB_PAULI_H

#include <string>

#include "abstab/group.h"

namespace abstab {

/// gamma^phase Z(z) X(x) with gamma = exp(i pi / |G|) and phase reduced mod 2|G|.
///
/// Z(g)|h> = chi_g(h)|h>, X(g)|h> = |g + h>.
struct PauliLabel {
    Integer phase;
    GroupElement z;
    GroupElement x;

    PauliLabel() = default;
    PauliLabel(Integer a, GroupElement z_part, GroupElement x_part);

    const GroupSpec &group() const {
        return z.group();
    }
    bool is_diagonal() const {
        return x.is_zero();
    }
    bool is_identity() const {
        return phase == 0 && z.is_zero() && x.is_zero();
    }
    bool operator==(const PauliLabel &other) const {
        return phase == other.phase && z == other.z && x == other.x;
    }
    bool operator!=(const PauliLabel &other) const {
        return !(*this == other);
    }
    std::string str() const;
};

PauliLabel identity(const GroupSpec &group);
PauliLabel make_X(const GroupElement &h);
PauliLabel make_Z(const GroupElement &g);
PauliLabel with_phase(const PauliLabel &p, const Integer &a);

PauliLabel multiply(const PauliLabel &p, const PauliLabel &q);
/// p^n for n >= 0.
PauliLabel power(const PauliLabel &p, const Integer &n);
PauliLabel inverse(const PauliLabel &p);
bool commutes(const PauliLabel &p, const PauliLabel &q);

}  // namespace abstab

#endif
