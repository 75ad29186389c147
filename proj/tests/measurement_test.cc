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

#include <gtest/gtest.h>

#include "abstab/dense_oracle.h"
#include "abstab/random_instances.h"
#include "brute_force.h"

namespace abstab {
namespace {

const GroupSpec Z2 = make_group({2});
const GroupSpec Z4 = make_group({4});

GroupElement el(const GroupSpec &G, std::vector<int> v) {
    return GroupElement(G, std::vector<Integer>(v.begin(), v.end()));
}

StabilizerGroup coset_z4() {
    return {Z4, {make_X(el(Z4, {2})), make_Z(el(Z4, {2}))}};
}

bool same_group(const StabilizerGroup &a, const StabilizerGroup &b) {
    return brute::pauli_closure(a.group, a.gens) == brute::pauli_closure(b.group, b.gens);
}

TEST(DiagonalizeTest, Examples) {
    DiagonalizationResult a = diagonalize_pauli(make_Z(el(Z4, {3})));
    EXPECT_TRUE(a.circuit.empty());
    EXPECT_EQ(a.diagonal, make_Z(el(Z4, {3})));
    DiagonalizationResult b = diagonalize_pauli(make_X(el(Z2, {1})));
    EXPECT_TRUE(b.diagonal.is_diagonal());
    EXPECT_EQ(b.diagonal.z, el(Z2, {1}));
    DiagonalizationResult c = diagonalize_pauli(PauliLabel(0, el(Z4, {2}), el(Z4, {2})));
    EXPECT_TRUE(c.diagonal.is_diagonal());
    EXPECT_EQ(c.diagonal.z, el(Z4, {2}));
}

TEST(DiagonalizeTest, CircuitConjugatesToDiagonal) {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 200; t++) {
        GroupSpec G = random_group(rng, 64);
        PauliLabel p = random_pauli(G, rng);
        DiagonalizationResult d = diagonalize_pauli(p);
        PauliLabel q = p;
        DenseMatrix u = dense_pauli(identity(G));
        for (const auto &g : d.circuit) {
            q = conjugate(g, q);
            u = multiply(dense_gate(g), u);
        }
        EXPECT_EQ(q, d.diagonal);
        EXPECT_TRUE(q.is_diagonal());
        EXPECT_LT(max_abs_diff(multiply(multiply(u, dense_pauli(p)), adjoint(u)), dense_pauli(q)), 1e-9);
    }
}

TEST(DiagonalizeTest, BigModuliStaysShort) {
    std::mt19937_64 rng(62);
    Integer a = Integer(1) << 256;
    GroupSpec G = make_group({a, a + 1});
    for (int t = 0; t < 20; t++) {
        DiagonalizationResult d = diagonalize_pauli(random_pauli(G, rng));
        EXPECT_TRUE(d.diagonal.is_diagonal());
        // Euclid on 256-bit numbers: a few hundred steps at most.
        EXPECT_LT(d.circuit.size(), 2000u);
    }
}

TEST(OutcomeTest, Examples) {
    GroupSpec Z22 = make_group({2, 2});
    StabilizerGroup zero = initial_state_stabilizer(Z22, GroupElement(Z22));
    OutcomeDistribution a = outcome_distribution(zero, make_Z(el(Z22, {1, 0})));
    EXPECT_TRUE(a.is_deterministic());
    EXPECT_EQ(a.probability(0), (Rational{1, 1}));
    // Z(1) on (|0> + |2>)/sqrt 2: eigenvalues +1 and -1 = gamma^4.
    OutcomeDistribution b = outcome_distribution(coset_z4(), make_Z(el(Z4, {1})));
    EXPECT_EQ(b.count(), 2);
    EXPECT_EQ(b.probability(0), (Rational{1, 2}));
    EXPECT_EQ(b.probability(4), (Rational{1, 2}));
    EXPECT_EQ(b.probability(2), (Rational{0, 1}));
    OutcomeDistribution c = outcome_distribution(initial_state_stabilizer(Z2, el(Z2, {0})), make_X(el(Z2, {1})));
    EXPECT_EQ(c.probability(0), (Rational{1, 2}));
    EXPECT_EQ(c.probability(2), (Rational{1, 2}));
}

TEST(MeasureTest, Examples) {
    MeasurementResult a = measure_forced(coset_z4(), make_Z(el(Z4, {1})), 0);
    StabilizerGroup want{Z4, {make_Z(el(Z4, {1})), make_Z(el(Z4, {2}))}};
    EXPECT_TRUE(same_group(a.post, want));
    EXPECT_EQ(a.probability, (Rational{1, 2}));
    StabilizerGroup zero = initial_state_stabilizer(Z4, GroupElement(Z4));
    EXPECT_TRUE(same_group(measure_forced(zero, make_Z(el(Z4, {1})), 0).post, zero));
    StabilizerGroup z2 = initial_state_stabilizer(Z2, GroupElement(Z2));
    MeasurementResult c = measure_forced(z2, make_X(el(Z2, {1})), 2);
    EXPECT_TRUE(same_group(c.post, {Z2, {PauliLabel(2, el(Z2, {0}), el(Z2, {1}))}}));
    EXPECT_THROW(measure_forced(z2, make_Z(el(Z2, {1})), 2), std::invalid_argument);
}

TEST(CentralizerTest, Examples) {
    std::vector<PauliLabel> a = centralizer(coset_z4(), make_Z(el(Z4, {1})));
    EXPECT_EQ(brute::pauli_closure(Z4, a), brute::pauli_closure(Z4, {make_Z(el(Z4, {2}))}));
    StabilizerGroup z{Z2, {make_Z(el(Z2, {1}))}};
    EXPECT_EQ(brute::pauli_closure(Z2, centralizer(z, make_X(el(Z2, {1})))).size(), 1u);
    EXPECT_EQ(brute::pauli_closure(Z2, centralizer(z, make_Z(el(Z2, {1})))), brute::pauli_closure(Z2, z.gens));
}

TEST(CentralizerTest, RandomAgainstClosure) {
    std::mt19937_64 rng(63);
    for (int t = 0; t < 100; t++) {
        GroupSpec G = random_group(rng, 32);
        StabilizerGroup S = random_stabilizer_state(G, rng);
        PauliLabel p = random_pauli(G, rng);
        auto all = brute::pauli_closure(G, S.gens);
        std::set<brute::LabelKey> want;
        for (const auto &k : all) {
            // Commutes iff chi_{g}(h') = chi_{g'}(h) on the labels.
            PauliLabel q(std::get<0>(k), element_from_index(G, std::get<1>(k)), element_from_index(G, std::get<2>(k)));
            if (commutes(p, q)) {
                want.insert(k);
            }
        }
        EXPECT_EQ(brute::pauli_closure(G, centralizer(S, p)), want);
    }
}

TEST(MeasureTest, RandomAgainstDense) {
    std::mt19937_64 rng(64);
    for (int t = 0; t < 150; t++) {
        GroupSpec G = random_group(rng, 64);
        StabilizerGroup S = random_stabilizer_state(G, rng);
        PauliLabel p = random_pauli(G, rng);
        DenseState psi = projector_state(G, stabilizer_projector_dense(S));
        auto dense = outcome_probabilities_dense(psi, p);
        OutcomeDistribution dist = outcome_distribution(S, p);
        Rational total{0, 1};
        for (const auto &[k, pr] : dist.entries()) {
            total = Rational{total.num * pr.den + pr.num * total.den, total.den * pr.den};
        }
        EXPECT_EQ(total, (Rational{1, 1}));
        for (uint64_t k = 0; k < dense.size(); k++) {
            EXPECT_NEAR(dist.probability(static_cast<unsigned long>(k)).to_double(), dense[k], 1e-9);
        }
        MeasurementResult m = measure(S, p, rng);
        EXPECT_TRUE(is_unique(m.post));
        EXPECT_TRUE(compare_state(normal_form(m.post), project_dense(psi, p, m.outcome.get_ui())));
        // Measuring again repeats the outcome and leaves the state alone.
        OutcomeDistribution again = outcome_distribution(m.post, p);
        EXPECT_TRUE(again.is_deterministic());
        EXPECT_TRUE(again.contains(m.outcome));
        EXPECT_TRUE(same_group(measure_forced(m.post, p, m.outcome).post, m.post));
    }
}

TEST(MeasureTest, BigModuli) {
    std::mt19937_64 rng(65);
    Integer a = Integer(1) << 128;
    GroupSpec G = make_group({a, a * 3});
    StabilizerGroup S = random_stabilizer_state(G, rng, 20, 5);
    for (int t = 0; t < 20; t++) {
        PauliLabel p = random_pauli(G, rng);
        MeasurementResult m = measure(S, p, rng);
        EXPECT_TRUE(outcome_distribution(m.post, p).is_deterministic());
        EXPECT_LE(m.post.gens.size(), 2 * G.rank());
        S = m.post;
    }
}

}  // namespace
}  // namespace abstab
