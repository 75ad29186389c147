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

#include "abstab/selftest.h"

#include <cmath>
#include <functional>

#include "abstab/dense_oracle.h"
#include "abstab/random_instances.h"

namespace abstab {

namespace {

void record(SelfTestResult &r, bool ok, const std::string &detail) {
    r.trials++;
    if (!ok) {
        if (r.failures == 0) {
            r.first_failure = detail;
        }
        r.failures++;
    }
}

template <typename F>
void guarded(SelfTestResult &r, F &&f) {
    try {
        f();
    } catch (const std::exception &e) {
        record(r, false, std::string("exception: ") + e.what());
    }
}

SelfTestResult check_solver(uint64_t max_order, std::mt19937_64 &rng, uint64_t trials) {
    SelfTestResult r{"linear_solver_vs_brute_force"};
    for (uint64_t t = 0; t < trials; t++) {
        guarded(r, [&] {
            GroupSpec H = random_group(rng, max_order);
            GroupSpec G = random_group(rng, max_order);
            HomMatrix A = random_hom(H, G, rng);
            GroupElement b = random_rhs(A, rng);
            uint64_t n = H.order().get_ui();
            uint64_t brute = 0;
            for (uint64_t i = 0; i < n; i++) {
                if (apply_hom(A, element_from_index(H, i)) == b) {
                    brute++;
                }
            }
            SolveReport rep = solve_report(A, b);
            bool ok = rep.count == brute && rep.solution.has_value() == (brute > 0);
            if (ok && rep.solution) {
                ok = apply_hom(A, rep.solution->particular) == b;
                for (const auto &k : rep.solution->kernel.gens) {
                    ok = ok && apply_hom(A, k).is_zero();
                }
            }
            record(r, ok, H.str() + " -> " + G.str());
        });
    }
    return r;
}

SelfTestResult check_conjugation(uint64_t max_order, std::mt19937_64 &rng, uint64_t trials) {
    SelfTestResult r{"conjugation_vs_dense"};
    for (uint64_t t = 0; t < trials; t++) {
        guarded(r, [&] {
            GroupSpec G = random_group(rng, max_order);
            Gate U = random_gate(G, rng);
            PauliLabel p = random_pauli(G, rng);
            DenseMatrix u = dense_gate(U);
            DenseMatrix expect = multiply(multiply(u, dense_pauli(p)), adjoint(u));
            double diff = max_abs_diff(expect, dense_pauli(conjugate(U, p)));
            record(r, diff < 1e-9, U.name() + " on " + G.str());
        });
    }
    return r;
}

SelfTestResult check_measurement(uint64_t max_order, std::mt19937_64 &rng, uint64_t trials) {
    SelfTestResult r{"measurement_vs_dense"};
    for (uint64_t t = 0; t < trials; t++) {
        guarded(r, [&] {
            GroupSpec G = random_group(rng, max_order);
            StabilizerGroup S = random_stabilizer_state(G, rng);
            PauliLabel p = random_pauli(G, rng);
            DenseState psi = projector_state(G, stabilizer_projector_dense(S));
            std::vector<double> dense = outcome_probabilities_dense(psi, p);
            OutcomeDistribution dist = outcome_distribution(S, p);
            bool ok = true;
            for (uint64_t k = 0; k < dense.size(); k++) {
                ok = ok && std::abs(dist.probability(Integer(static_cast<unsigned long>(k))).to_double() - dense[k]) < 1e-9;
            }
            MeasurementResult m = measure(S, p, rng);
            DenseState post = project_dense(psi, p, m.outcome.get_ui());
            ok = ok && compare_state(normal_form(m.post), post);
            record(r, ok, "measure on " + G.str());
        });
    }
    return r;
}

SelfTestResult check_amplitudes(uint64_t max_order, std::mt19937_64 &rng, uint64_t trials) {
    SelfTestResult r{"amplitudes_vs_dense"};
    for (uint64_t t = 0; t < trials; t++) {
        guarded(r, [&] {
            GroupSpec G = random_group(rng, max_order);
            StabilizerGroup S = random_stabilizer_state(G, rng);
            DenseState psi = projector_state(G, stabilizer_projector_dense(S));
            record(r, compare_state(normal_form(S), psi), "state on " + G.str());
        });
    }
    return r;
}

}  // namespace

std::vector<SelfTestResult> run_selftest(uint64_t max_order, uint64_t seed, uint64_t trials) {
    if (max_order < 2) {
        max_order = 2;
    }
    if (max_order > 128) {
        max_order = 128;
    }
    std::mt19937_64 rng(seed);
    return {check_solver(max_order, rng, trials), check_conjugation(max_order, rng, trials),
            check_measurement(max_order, rng, trials), check_amplitudes(max_order, rng, trials)};
}

}  // namespace abstab
