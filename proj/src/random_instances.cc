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

#include "abstab/random_instances.h"

#include <algorithm>

namespace abstab {

namespace {

uint64_t pick(std::mt19937_64 &rng, uint64_t lo, uint64_t hi) {
    return std::uniform_int_distribution<uint64_t>(lo, hi)(rng);
}

Integer random_unit(const Integer &d, std::mt19937_64 &rng) {
    while (true) {
        Integer a = uniform_below(d, rng);
        if (gcd(a, d) == 1) {
            return a;
        }
    }
}

}  // namespace

GroupSpec random_group(std::mt19937_64 &rng, uint64_t max_order, size_t max_rank, uint64_t max_modulus) {
    size_t rank = pick(rng, 1, max_rank);
    std::vector<Integer> moduli;
    uint64_t order = 1;
    for (size_t i = 0; i < rank; i++) {
        uint64_t allowed = std::min<uint64_t>(max_modulus, max_order / order);
        if (allowed < 2) {
            break;
        }
        uint64_t d = pick(rng, 2, allowed);
        moduli.push_back(Integer(static_cast<unsigned long>(d)));
        order *= d;
    }
    if (moduli.empty()) {
        moduli.push_back(Integer(static_cast<unsigned long>(std::min<uint64_t>(2, max_order))));
    }
    return make_group(moduli);
}

GroupElement random_element(const GroupSpec &G, std::mt19937_64 &rng) {
    std::vector<Integer> v;
    for (const auto &d : G.moduli()) {
        v.push_back(uniform_below(d, rng));
    }
    return GroupElement(G, v);
}

HomMatrix random_hom(const GroupSpec &H, const GroupSpec &G, std::mt19937_64 &rng) {
    IntMatrix m(G.rank(), H.rank());
    for (size_t j = 0; j < G.rank(); j++) {
        for (size_t i = 0; i < H.rank(); i++) {
            Integer g = gcd(H.modulus(i), G.modulus(j));
            m.at(j, i) = (G.modulus(j) / g) * uniform_below(g, rng);
        }
    }
    return validate_hom(m, H, G);
}

GroupElement random_rhs(const HomMatrix &A, std::mt19937_64 &rng) {
    if (pick(rng, 0, 1)) {
        return apply_hom(A, random_element(A.domain(), rng));
    }
    return random_element(A.codomain(), rng);
}

SubgroupGens random_subgroup(const GroupSpec &G, std::mt19937_64 &rng, size_t max_gens) {
    SubgroupGens H(G);
    size_t k = pick(rng, 0, max_gens);
    for (size_t i = 0; i < k; i++) {
        H.gens.push_back(random_element(G, rng));
    }
    return H;
}

PauliLabel random_pauli(const GroupSpec &G, std::mt19937_64 &rng) {
    return PauliLabel(uniform_below(G.phase_modulus(), rng), random_element(G, rng), random_element(G, rng));
}

QuadraticFunction random_quadratic(const GroupSpec &G, std::mt19937_64 &rng) {
    const size_t m = G.rank();
    const Integer &two_g = G.phase_modulus();
    IntMatrix beta(m, m);
    std::vector<Integer> diag(m);
    for (size_t i = 0; i < m; i++) {
        const Integer &d = G.modulus(i);
        Integer rho = uniform_below(d, rng);
        beta.at(i, i) = rho * (two_g / d);
        // n(e_i) = (|G|/d) nu with nu == (d - 1) rho mod 2 keeps xi(d e_i) = 1.
        Integer nu = uniform_below(d, rng) * 2 + floor_mod((d - 1) * rho, 2);
        diag[i] = G.order_cofactor(i) * nu;
        for (size_t j = i + 1; j < m; j++) {
            Integer g = gcd(d, G.modulus(j));
            Integer b = uniform_below(g, rng) * (two_g / g);
            beta.at(i, j) = b;
            beta.at(j, i) = b;
        }
    }
    return QuadraticFunction::from_beta(G, diag, beta);
}

Gate random_automorphism(const GroupSpec &G, std::mt19937_64 &rng) {
    const size_t m = G.rank();
    IntMatrix M = IntMatrix::identity(m);
    size_t steps = pick(rng, 1, 2 * m + 1);
    for (size_t s = 0; s < steps; s++) {
        IntMatrix E = IntMatrix::identity(m);
        size_t i = pick(rng, 0, m - 1);
        size_t j = pick(rng, 0, m - 1);
        if (i == j || pick(rng, 0, 2) == 0) {
            E.at(i, i) = random_unit(G.modulus(i), rng);
        } else {
            Integer g = gcd(G.modulus(i), G.modulus(j));
            E.at(j, i) = (G.modulus(j) / g) * uniform_below(g, rng);
        }
        IntMatrix P(m, m);
        for (size_t r = 0; r < m; r++) {
            for (size_t c = 0; c < m; c++) {
                Integer acc = 0;
                for (size_t k = 0; k < m; k++) {
                    acc += E.at(r, k) * M.at(k, c);
                }
                P.at(r, c) = floor_mod(acc, G.modulus(r));
            }
        }
        M = std::move(P);
    }
    return make_automorphism(validate_hom(M, G, G));
}

Gate random_gate(const GroupSpec &G, std::mt19937_64 &rng) {
    const size_t m = G.rank();
    switch (pick(rng, 0, 8)) {
        case 0: {
            std::vector<size_t> f;
            for (size_t i = 0; i < m; i++) {
                if (pick(rng, 0, 1)) {
                    f.push_back(i);
                }
            }
            if (f.empty()) {
                f.push_back(pick(rng, 0, m - 1));
            }
            std::shuffle(f.begin(), f.end(), rng);
            return make_qft(G, f, pick(rng, 0, 1) == 1);
        }
        case 1:
            return random_automorphism(G, rng);
        case 2:
            return make_quadratic_phase(random_quadratic(G, rng));
        case 3:
            return make_pauli_gate(random_pauli(G, rng));
        case 4:
            if (m >= 2) {
                size_t i = pick(rng, 0, m - 1);
                size_t j = (i + pick(rng, 1, m - 1)) % m;
                return sum_gate(G, i, j);
            }
            return fourier_gate(G, 0);
        case 5:
            if (m >= 2) {
                size_t i = pick(rng, 0, m - 1);
                size_t j = (i + pick(rng, 1, m - 1)) % m;
                return cz_gate(G, i, j);
            }
            return phase_S_gate(G, 0);
        case 6:
            return phase_S_gate(G, pick(rng, 0, m - 1));
        case 7: {
            size_t i = pick(rng, 0, m - 1);
            return mult_gate(G, i, random_unit(G.modulus(i), rng));
        }
        default:
            return fourier_gate(G, pick(rng, 0, m - 1));
    }
}

StabilizerGroup random_stabilizer_state(const GroupSpec &G, std::mt19937_64 &rng, size_t gates,
                                        size_t measurements) {
    StabilizerGroup S = initial_state_stabilizer(G, random_element(G, rng));
    size_t total = gates + measurements;
    for (size_t k = 0; k < total; k++) {
        bool do_measure = pick(rng, 0, total - 1) < measurements;
        if (do_measure) {
            S = measure(S, random_pauli(G, rng), rng).post;
        } else {
            S = conjugate_all(random_gate(G, rng), S);
        }
    }
    return S;
}

StabilizerGroup random_stabilizer_code(const GroupSpec &G, std::mt19937_64 &rng) {
    StabilizerGroup S = random_stabilizer_state(G, rng);
    StabilizerGroup out{G, {}};
    size_t k = pick(rng, 0, S.gens.size());
    const Integer &d = G.exponent();
    for (size_t t = 0; t < k; t++) {
        PauliLabel acc = identity(G);
        for (const auto &g : S.gens) {
            acc = multiply(acc, power(g, uniform_below(d, rng)));
        }
        out.gens.push_back(acc);
    }
    return out;
}

}  // namespace abstab
