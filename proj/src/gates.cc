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

#include "abstab/gates.h"

#include <set>
#include <stdexcept>

namespace abstab {

struct QuadraticFunction::Data {
    GroupSpec group;
    std::vector<Integer> diag;
    std::vector<Integer> doubled;
    IntMatrix pair;
    IntMatrix beta;
    // B(x, h) = chi_{F h}(x).
    IntMatrix f2;
};

namespace {

std::string entry_name(size_t i, size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

QuadraticFunction QuadraticFunction::from_tables(const GroupSpec &group, const std::vector<Integer> &diag,
                                                 const std::vector<Integer> &doubled, const IntMatrix &pair) {
    return build(group, diag, doubled, pair, true);
}

QuadraticFunction QuadraticFunction::build(const GroupSpec &group, const std::vector<Integer> &diag,
                                           const std::vector<Integer> &doubled, const IntMatrix &pair,
                                           bool spot_check) {
    const size_t m = group.rank();
    if (diag.size() != m || doubled.size() != m || pair.rows() != m || pair.cols() != m) {
        throw std::invalid_argument("quadratic phase tables do not match the rank of " + group.str());
    }
    const Integer &two_g = group.phase_modulus();
    auto data = std::make_shared<Data>();
    data->group = group;
    data->pair = IntMatrix(m, m);
    data->beta = IntMatrix(m, m);
    data->f2 = IntMatrix(m, m);
    for (size_t i = 0; i < m; i++) {
        data->diag.push_back(floor_mod(diag[i], two_g));
        data->doubled.push_back(floor_mod(doubled[i], two_g));
    }
    for (size_t i = 0; i < m; i++) {
        data->beta.at(i, i) = floor_mod(data->doubled[i] - 2 * data->diag[i], two_g);
        for (size_t j = i + 1; j < m; j++) {
            Integer p = floor_mod(pair.at(i, j), two_g);
            data->pair.at(i, j) = p;
            data->pair.at(j, i) = p;
            Integer b = floor_mod(p - data->diag[i] - data->diag[j], two_g);
            data->beta.at(i, j) = b;
            data->beta.at(j, i) = b;
        }
    }
    for (size_t i = 0; i < m; i++) {
        const Integer &di = group.modulus(i);
        for (size_t j = 0; j < m; j++) {
            if (floor_mod(di * data->beta.at(i, j), two_g) != 0) {
                throw std::invalid_argument("quadratic phase: B is not bilinear on " + group.str() + " at entry " +
                                            entry_name(i, j));
            }
        }
        Integer top = di * data->diag[i] + choose2(di) * data->beta.at(i, i);
        if (floor_mod(top, two_g) != 0) {
            throw std::invalid_argument("quadratic phase: xi(d_i e_i) != 1 for factor " + std::to_string(i));
        }
    }
    for (size_t k = 0; k < m; k++) {
        for (size_t j = 0; j < m; j++) {
            Integer num = data->beta.at(k, j) * group.modulus(k);
            data->f2.at(k, j) = floor_mod(num / two_g, group.modulus(k));
        }
    }
    QuadraticFunction result(std::move(data));

    if (!spot_check) {
        return result;
    }
    // xi(g + h) = xi(g) xi(h) B(g, h): every pair on small groups, a fixed sample otherwise.
    auto check = [&](const GroupElement &g, const GroupElement &h) {
        Integer lhs = result.eval(g + h);
        Integer rhs = floor_mod(result.eval(g) + result.eval(h) + result.bilinear(g, h), two_g);
        if (lhs != rhs) {
            throw std::invalid_argument("quadratic phase: relation fails at " + g.str() + ", " + h.str());
        }
    };
    if (group.order() <= 64) {
        uint64_t n = group.order().get_ui();
        for (uint64_t a = 0; a < n; a++) {
            for (uint64_t b = 0; b < n; b++) {
                check(element_from_index(group, a), element_from_index(group, b));
            }
        }
    } else {
        std::mt19937_64 rng(0x5157);
        for (int t = 0; t < 64; t++) {
            std::vector<Integer> g(m), h(m);
            for (size_t i = 0; i < m; i++) {
                g[i] = uniform_below(group.modulus(i), rng);
                h[i] = uniform_below(group.modulus(i), rng);
            }
            check(GroupElement(group, g), GroupElement(group, h));
        }
    }
    return result;
}

QuadraticFunction QuadraticFunction::from_beta(const GroupSpec &group, const std::vector<Integer> &diag,
                                               const IntMatrix &beta) {
    const size_t m = group.rank();
    if (diag.size() != m || beta.rows() != m || beta.cols() != m) {
        throw std::invalid_argument("quadratic phase tables do not match the rank of " + group.str());
    }
    std::vector<Integer> doubled(m);
    IntMatrix pair(m, m);
    for (size_t i = 0; i < m; i++) {
        doubled[i] = 2 * diag[i] + beta.at(i, i);
        for (size_t j = i + 1; j < m; j++) {
            pair.at(i, j) = diag[i] + diag[j] + beta.at(i, j);
        }
    }
    return build(group, diag, doubled, pair, false);
}

const GroupSpec &QuadraticFunction::group() const {
    return data_->group;
}
const std::vector<Integer> &QuadraticFunction::diag() const {
    return data_->diag;
}
const std::vector<Integer> &QuadraticFunction::doubled() const {
    return data_->doubled;
}
Integer QuadraticFunction::pair(size_t i, size_t j) const {
    return data_->pair.at(i, j);
}
const Integer &QuadraticFunction::beta(size_t i, size_t j) const {
    return data_->beta.at(i, j);
}

Integer QuadraticFunction::eval(const GroupElement &g) const {
    if (g.group() != data_->group) {
        throw std::invalid_argument("quadratic phase: element is not in " + data_->group.str());
    }
    const size_t m = g.rank();
    Integer n = 0;
    for (size_t i = 0; i < m; i++) {
        n += g[i] * data_->diag[i] + choose2(g[i]) * data_->beta.at(i, i);
        for (size_t j = i + 1; j < m; j++) {
            n += g[i] * g[j] * data_->beta.at(i, j);
        }
    }
    return floor_mod(n, data_->group.phase_modulus());
}

Integer QuadraticFunction::bilinear(const GroupElement &g, const GroupElement &h) const {
    const size_t m = g.rank();
    Integer n = 0;
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            n += g[i] * h[j] * data_->beta.at(i, j);
        }
    }
    return floor_mod(n, data_->group.phase_modulus());
}

GroupElement QuadraticFunction::f2(const GroupElement &h) const {
    const size_t m = h.rank();
    std::vector<Integer> f(m);
    for (size_t k = 0; k < m; k++) {
        Integer acc = 0;
        for (size_t j = 0; j < m; j++) {
            acc += data_->f2.at(k, j) * h[j];
        }
        f[k] = acc;
    }
    return GroupElement(data_->group, f);
}

QuadraticFunction QuadraticFunction::negated() const {
    const size_t m = data_->group.rank();
    std::vector<Integer> diag(m), doubled(m);
    IntMatrix pair(m, m);
    for (size_t i = 0; i < m; i++) {
        diag[i] = -data_->diag[i];
        doubled[i] = -data_->doubled[i];
        for (size_t j = i + 1; j < m; j++) {
            pair.at(i, j) = -data_->pair.at(i, j);
        }
    }
    return build(data_->group, diag, doubled, pair, false);
}

std::string Gate::name() const {
    switch (kind.index()) {
        case 0:
            return std::get<PartialQft>(kind).inverse ? "qft_inverse" : "qft";
        case 1:
            return "automorphism";
        case 2:
            return "quadratic_phase";
        default:
            return "pauli";
    }
}

Gate make_qft(const GroupSpec &group, std::vector<size_t> factors, bool inverse) {
    std::set<size_t> seen;
    for (size_t f : factors) {
        if (f >= group.rank()) {
            throw std::invalid_argument("qft: factor " + std::to_string(f) + " out of range for " + group.str());
        }
        if (!seen.insert(f).second) {
            throw std::invalid_argument("qft: factor " + std::to_string(f) + " listed twice");
        }
    }
    return Gate{group, PartialQft{std::move(factors), inverse}};
}

namespace {

IntMatrix dual_matrix(const HomMatrix &backward) {
    const GroupSpec &G = backward.domain();
    const size_t m = G.rank();
    IntMatrix dual(m, m);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            Integer num = G.modulus(i) * backward.at(j, i);
            dual.at(i, j) = floor_mod(num / G.modulus(j), G.modulus(i));
        }
    }
    return dual;
}

}  // namespace

Gate make_automorphism(const HomMatrix &alpha) {
    const GroupSpec &G = alpha.domain();
    if (alpha.codomain() != G) {
        throw std::invalid_argument("automorphism must map " + G.str() + " to itself");
    }
    if (count_solutions(alpha, GroupElement(G)) != 1) {
        throw std::invalid_argument("automorphism matrix is not invertible: nontrivial kernel");
    }
    std::vector<GroupElement> cols;
    for (size_t k = 0; k < G.rank(); k++) {
        auto sol = solve(alpha, GroupElement::basis(G, k));
        if (!sol) {
            throw std::invalid_argument("automorphism matrix is not invertible: e_" + std::to_string(k) +
                                        " is not in the image");
        }
        cols.push_back(sol->particular);
    }
    HomMatrix backward = hom_from_columns(G, cols, G);
    IntMatrix dual = dual_matrix(backward);
    return Gate{G, Automorphism{alpha, std::move(backward), std::move(dual)}};
}

Gate make_quadratic_phase(const QuadraticFunction &xi) {
    return Gate{xi.group(), QuadraticPhase{xi}};
}

Gate make_pauli_gate(const PauliLabel &label) {
    return Gate{label.group(), PauliGate{label}};
}

PauliLabel conjugate(const Gate &gate, const PauliLabel &p) {
    if (p.group() != gate.group) {
        throw std::invalid_argument("conjugate: Pauli operator over " + p.group().str() + " but gate acts on " +
                                    gate.group.str());
    }
    const GroupSpec &G = gate.group;
    if (auto *q = std::get_if<PartialQft>(&gate.kind)) {
        std::vector<Integer> z = p.z.residues();
        std::vector<Integer> x = p.x.residues();
        Integer a = p.phase;
        for (size_t i : q->factors) {
            Integer g = z[i];
            Integer h = x[i];
            // Z^g X^h -> omega^{gh} Z^h X^{-g}, inverse: omega^{gh} Z^{-h} X^{g}.
            a += 2 * G.order_cofactor(i) * g * h;
            if (q->inverse) {
                z[i] = -h;
                x[i] = g;
            } else {
                z[i] = h;
                x[i] = -g;
            }
        }
        return PauliLabel(a, GroupElement(G, z), GroupElement(G, x));
    }
    if (auto *q = std::get_if<Automorphism>(&gate.kind)) {
        const size_t m = G.rank();
        std::vector<Integer> z(m);
        for (size_t i = 0; i < m; i++) {
            Integer acc = 0;
            for (size_t j = 0; j < m; j++) {
                acc += q->dual.at(i, j) * p.z[j];
            }
            z[i] = acc;
        }
        return PauliLabel(p.phase, GroupElement(G, z), apply_hom(q->forward, p.x));
    }
    if (auto *q = std::get_if<QuadraticPhase>(&gate.kind)) {
        // D X(h) D^dagger = xi(h) X(h) Z(f) = xi(h) chi_f(h)^{-1} Z(f) X(h).
        GroupElement f = q->xi.f2(p.x);
        Integer a = p.phase + q->xi.eval(p.x) - 2 * character_exponent(f, p.x);
        return PauliLabel(a, p.z + f, p.x);
    }
    const auto &q = std::get<PauliGate>(gate.kind);
    return multiply(multiply(q.label, p), inverse(q.label));
}

Gate invert_gate(const Gate &gate) {
    if (auto *q = std::get_if<PartialQft>(&gate.kind)) {
        return Gate{gate.group, PartialQft{q->factors, !q->inverse}};
    }
    if (auto *q = std::get_if<Automorphism>(&gate.kind)) {
        return Gate{gate.group, Automorphism{q->backward, q->forward, dual_matrix(q->forward)}};
    }
    if (auto *q = std::get_if<QuadraticPhase>(&gate.kind)) {
        return Gate{gate.group, QuadraticPhase{q->xi.negated()}};
    }
    return Gate{gate.group, PauliGate{inverse(std::get<PauliGate>(gate.kind).label)}};
}

namespace {

void check_factor(const GroupSpec &group, size_t i, const char *what) {
    if (i >= group.rank()) {
        throw std::invalid_argument(std::string(what) + ": factor " + std::to_string(i) + " out of range for " +
                                    group.str());
    }
}

}  // namespace

Gate fourier_gate(const GroupSpec &group, size_t i) {
    return make_qft(group, {i}, false);
}

Gate sum_gate(const GroupSpec &group, size_t control, size_t target) {
    check_factor(group, control, "sum_gate");
    check_factor(group, target, "sum_gate");
    if (control == target) {
        throw std::invalid_argument("sum_gate: control and target coincide");
    }
    IntMatrix m = IntMatrix::identity(group.rank());
    m.at(target, control) = group.modulus(target) / gcd(group.modulus(control), group.modulus(target));
    return make_automorphism(validate_hom(m, group, group));
}

Gate cz_gate(const GroupSpec &group, size_t i, size_t j) {
    check_factor(group, i, "cz_gate");
    check_factor(group, j, "cz_gate");
    if (i == j) {
        throw std::invalid_argument("cz_gate: the two factors coincide");
    }
    IntMatrix beta(group.rank(), group.rank());
    Integer b = group.phase_modulus() / gcd(group.modulus(i), group.modulus(j));
    beta.at(i, j) = b;
    beta.at(j, i) = b;
    return make_quadratic_phase(
        QuadraticFunction::from_beta(group, std::vector<Integer>(group.rank(), Integer(0)), beta));
}

Gate phase_power_gate(const GroupSpec &group, size_t i, const Integer &c) {
    check_factor(group, i, "phase_gate");
    std::vector<Integer> diag(group.rank(), Integer(0));
    IntMatrix beta(group.rank(), group.rank());
    const Integer &d = group.modulus(i);
    diag[i] = group.order_cofactor(i) * c * (1 + d);
    beta.at(i, i) = 2 * c * group.order_cofactor(i);
    return make_quadratic_phase(QuadraticFunction::from_beta(group, diag, beta));
}

Gate phase_S_gate(const GroupSpec &group, size_t i) {
    return phase_power_gate(group, i, 1);
}

Gate mult_gate(const GroupSpec &group, size_t i, const Integer &a) {
    check_factor(group, i, "mult_gate");
    if (gcd(a, group.modulus(i)) != 1) {
        throw std::invalid_argument("mult_gate: " + to_string(a) + " is not a unit modulo " +
                                    to_string(group.modulus(i)));
    }
    IntMatrix m = IntMatrix::identity(group.rank());
    m.at(i, i) = a;
    return make_automorphism(validate_hom(m, group, group));
}

}  // namespace abstab
