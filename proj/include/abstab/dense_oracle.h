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

#ifndef ABSTAB_DENSE_ORACLE_H
#define ABSTAB_DENSE_ORACLE_H

#include <complex>
#include <cstdint>
#include <vector>

#include "abstab/stabilizer.h"

namespace abstab {

/// Reference state-vector simulator for small groups. Everything here is built from the
/// operator definitions alone, never from the label tables, so it can check them.
using Complex = std::complex<double>;

constexpr uint64_t kDenseCap = 4096;

/// Amplitudes in mixed-radix order, most significant factor first.
struct DenseState {
    GroupSpec group;
    std::vector<Complex> amps;
};

struct DenseMatrix {
    size_t n = 0;
    std::vector<Complex> data;

    Complex &at(size_t r, size_t c) {
        return data[r * n + c];
    }
    const Complex &at(size_t r, size_t c) const {
        return data[r * n + c];
    }
};

DenseState dense_basis_state(const GroupSpec &group, const GroupElement &x, uint64_t cap = kDenseCap);

DenseState apply_pauli_dense(const PauliLabel &p, const DenseState &psi);
DenseState apply_gate_dense(const Gate &gate, const DenseState &psi);

DenseMatrix dense_pauli(const PauliLabel &p);
DenseMatrix dense_gate(const Gate &gate);
DenseMatrix multiply(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix adjoint(const DenseMatrix &a);
double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);

/// p_k = |P_k psi|^2 for every eigenvalue exponent k in [0, 2|G|).
std::vector<double> outcome_probabilities_dense(const DenseState &psi, const PauliLabel &p);
/// Normalized P_k psi.
DenseState project_dense(const DenseState &psi, const PauliLabel &p, uint64_t k);

/// Projector onto the common +1 eigenspace of the generators.
DenseMatrix stabilizer_projector_dense(const StabilizerGroup &S);
uint64_t projector_rank(const DenseMatrix &proj);
/// Indices x with <x|P|x> > tol.
std::vector<uint64_t> projector_support(const DenseMatrix &proj, double tol = 1e-9);
/// For a rank-one projector: its normalized range vector.
DenseState projector_state(const GroupSpec &group, const DenseMatrix &proj);

DenseState dense_from_normal_form(const NormalFormState &nf);
/// Max entry difference after removing the best global phase.
double state_distance(const DenseState &a, const DenseState &b);
bool compare_state(const NormalFormState &nf, const DenseState &psi, double tol = 1e-9);

}  // namespace abstab

#endif
