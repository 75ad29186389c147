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

#ifndef ABSTAB_GATES_H
#define ABSTAB_GATES_H

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "abstab/linear_solver.h"
#include "abstab/pauli.h"

namespace abstab {

/// xi(g) = gamma^{n(g)} determined by n(e_i), n(2 e_i) and n(e_i + e_j) for i < j.
///
/// With beta_ii = n(2e_i) - 2 n(e_i) and beta_ij = n(e_i + e_j) - n(e_i) - n(e_j):
///   n(g) = sum_i [g_i n(e_i) + C(g_i, 2) beta_ii] + sum_{i<j} g_i g_j beta_ij  (mod 2|G|).
class QuadraticFunction {
   public:
    /// `pair` is m x m; only entries above the diagonal are read.
    /// Throws std::invalid_argument naming the offending entry if xi is not quadratic on G.
    static QuadraticFunction from_tables(const GroupSpec &group, const std::vector<Integer> &diag,
                                         const std::vector<Integer> &doubled, const IntMatrix &pair);
    /// Tables from a symmetric beta matrix and the n(e_i) column. Only the algebraic
    /// conditions are checked, not the relation itself.
    static QuadraticFunction from_beta(const GroupSpec &group, const std::vector<Integer> &diag, const IntMatrix &beta);

    const GroupSpec &group() const;
    const std::vector<Integer> &diag() const;
    const std::vector<Integer> &doubled() const;
    /// n(e_i + e_j), i != j.
    Integer pair(size_t i, size_t j) const;
    const Integer &beta(size_t i, size_t j) const;

    Integer eval(const GroupElement &g) const;
    /// Exponent of B(g, h) = xi(g + h) / (xi(g) xi(h)).
    Integer bilinear(const GroupElement &g, const GroupElement &h) const;
    /// The f with B(x, h) = chi_f(x) for every x.
    GroupElement f2(const GroupElement &h) const;
    QuadraticFunction negated() const;

   private:
    struct Data;
    explicit QuadraticFunction(std::shared_ptr<const Data> data) : data_(std::move(data)) {
    }
    static QuadraticFunction build(const GroupSpec &group, const std::vector<Integer> &diag,
                                   const std::vector<Integer> &doubled, const IntMatrix &pair, bool spot_check);
    std::shared_ptr<const Data> data_;
};

/// Fourier transform on the listed factors; F = d^{-1/2} sum omega^{xy} |x><y|.
struct PartialQft {
    std::vector<size_t> factors;
    bool inverse = false;
};

/// |g> -> |alpha(g)> for an automorphism alpha of G.
struct Automorphism {
    HomMatrix forward;
    HomMatrix backward;
    /// Z(g) -> Z(dual g): dual(i, j) = d_i backward(j, i) / d_j.
    IntMatrix dual;
};

struct QuadraticPhase {
    QuadraticFunction xi;
};

struct PauliGate {
    PauliLabel label;
};

struct Gate {
    GroupSpec group;
    std::variant<PartialQft, Automorphism, QuadraticPhase, PauliGate> kind;

    std::string name() const;
};

Gate make_qft(const GroupSpec &group, std::vector<size_t> factors, bool inverse = false);
/// Throws if the matrix is not an invertible endomorphism of its domain.
Gate make_automorphism(const HomMatrix &alpha);
Gate make_quadratic_phase(const QuadraticFunction &xi);
Gate make_pauli_gate(const PauliLabel &label);

/// U p U^dagger.
PauliLabel conjugate(const Gate &gate, const PauliLabel &p);
Gate invert_gate(const Gate &gate);

// Library gates.
Gate fourier_gate(const GroupSpec &group, size_t i);
/// (x_i, x_j) -> (x_i, x_j + k x_i) with k = d_j / gcd(d_i, d_j), i.e. k = 1 for equal moduli.
Gate sum_gate(const GroupSpec &group, size_t control, size_t target);
/// omega^{x_i x_j} with omega a primitive gcd(d_i, d_j)-th root of unity.
Gate cz_gate(const GroupSpec &group, size_t i, size_t j);
/// exp(i pi c x (x + d) / d) on factor i; S is c = 1.
Gate phase_power_gate(const GroupSpec &group, size_t i, const Integer &c);
Gate phase_S_gate(const GroupSpec &group, size_t i);
/// |x_i> -> |a x_i>, gcd(a, d_i) == 1.
Gate mult_gate(const GroupSpec &group, size_t i, const Integer &a);

}  // namespace abstab

#endif
