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

#include "abstab/dense_oracle.h"

#include <cmath>
#include <stdexcept>

namespace abstab {

namespace {

const double kPi = std::acos(-1.0);

uint64_t dim_of(const GroupSpec &G, uint64_t cap = kDenseCap) {
    if (G.order() > cap) {
        throw std::invalid_argument("dense oracle: |G| = " + to_string(G.order()) + " exceeds the cap of " +
                                    std::to_string(cap));
    }
    return G.order().get_ui();
}

std::vector<uint64_t> moduli_u64(const GroupSpec &G) {
    std::vector<uint64_t> d;
    for (const auto &m : G.moduli()) {
        d.push_back(m.get_ui());
    }
    return d;
}

std::vector<uint64_t> strides(const std::vector<uint64_t> &d) {
    std::vector<uint64_t> s(d.size(), 1);
    for (size_t i = d.size(); i-- > 1;) {
        s[i - 1] = s[i] * d[i];
    }
    return s;
}

std::vector<uint64_t> digits(uint64_t index, const std::vector<uint64_t> &d) {
    std::vector<uint64_t> out(d.size());
    for (size_t i = d.size(); i-- > 0;) {
        out[i] = index % d[i];
        index /= d[i];
    }
    return out;
}

uint64_t undigits(const std::vector<uint64_t> &x, const std::vector<uint64_t> &d) {
    uint64_t index = 0;
    for (size_t i = 0; i < d.size(); i++) {
        index = index * d[i] + x[i];
    }
    return index;
}

std::vector<uint64_t> residues_u64(const GroupElement &g) {
    std::vector<uint64_t> r;
    for (const auto &v : g.residues()) {
        r.push_back(v.get_ui());
    }
    return r;
}

// exp(i pi num / den).
Complex root(uint64_t num, uint64_t den) {
    double t = kPi * static_cast<double>(num % (2 * den)) / static_cast<double>(den);
    return {std::cos(t), std::sin(t)};
}

}  // namespace

DenseState dense_basis_state(const GroupSpec &group, const GroupElement &x, uint64_t cap) {
    uint64_t n = dim_of(group, cap);
    DenseState s{group, std::vector<Complex>(n, Complex(0, 0))};
    s.amps[undigits(residues_u64(x), moduli_u64(group))] = 1;
    return s;
}

DenseState apply_pauli_dense(const PauliLabel &p, const DenseState &psi) {
    const GroupSpec &G = psi.group;
    std::vector<uint64_t> d = moduli_u64(G);
    uint64_t order = G.order().get_ui();
    uint64_t a = p.phase.get_ui();
    std::vector<uint64_t> g = residues_u64(p.z);
    std::vector<uint64_t> h = residues_u64(p.x);
    DenseState out{G, std::vector<Complex>(psi.amps.size(), Complex(0, 0))};
    for (uint64_t idx = 0; idx < psi.amps.size(); idx++) {
        std::vector<uint64_t> x = digits(idx, d);
        // gamma^a chi_g(x + h) |x + h>, chi_g(y) = exp(2 pi i sum g_i y_i / d_i).
        uint64_t num = a;
        for (size_t i = 0; i < d.size(); i++) {
            x[i] = (x[i] + h[i]) % d[i];
            num += 2 * (order / d[i]) * ((g[i] * x[i]) % d[i]);
        }
        out.amps[undigits(x, d)] += root(num, order) * psi.amps[idx];
    }
    return out;
}

DenseState apply_gate_dense(const Gate &gate, const DenseState &psi) {
    const GroupSpec &G = psi.group;
    std::vector<uint64_t> d = moduli_u64(G);
    std::vector<uint64_t> st = strides(d);
    uint64_t order = G.order().get_ui();
    const uint64_t n = psi.amps.size();
    if (auto *q = std::get_if<PartialQft>(&gate.kind)) {
        DenseState cur = psi;
        for (size_t f : q->factors) {
            DenseState next{G, std::vector<Complex>(n, Complex(0, 0))};
            uint64_t df = d[f];
            double norm = 1.0 / std::sqrt(static_cast<double>(df));
            for (uint64_t idx = 0; idx < n; idx++) {
                uint64_t y = (idx / st[f]) % df;
                uint64_t rest = idx - y * st[f];
                for (uint64_t x = 0; x < df; x++) {
                    // omega^{xy} = exp(2 pi i x y / d).
                    uint64_t e = (x * y) % df;
                    if (q->inverse) {
                        e = (df - e) % df;
                    }
                    next.amps[rest + x * st[f]] += norm * root(2 * e, df) * cur.amps[idx];
                }
            }
            cur = std::move(next);
        }
        return cur;
    }
    if (auto *q = std::get_if<Automorphism>(&gate.kind)) {
        DenseState out{G, std::vector<Complex>(n, Complex(0, 0))};
        const IntMatrix &A = q->forward.entries();
        for (uint64_t idx = 0; idx < n; idx++) {
            std::vector<uint64_t> x = digits(idx, d);
            std::vector<uint64_t> y(d.size(), 0);
            for (size_t r = 0; r < d.size(); r++) {
                uint64_t acc = 0;
                for (size_t c = 0; c < d.size(); c++) {
                    acc = (acc + A.at(r, c).get_ui() * x[c]) % d[r];
                }
                y[r] = acc;
            }
            out.amps[undigits(y, d)] += psi.amps[idx];
        }
        return out;
    }
    if (auto *q = std::get_if<QuadraticPhase>(&gate.kind)) {
        DenseState out = psi;
        const QuadraticFunction &xi = q->xi;
        const uint64_t two_g = 2 * order;
        const size_t m = d.size();
        // Tables read directly: t1 = n(e_i), t2 = n(2 e_i), t3 = n(e_i + e_j).
        std::vector<int64_t> t1(m), t2(m);
        for (size_t i = 0; i < m; i++) {
            t1[i] = xi.diag()[i].get_si();
            t2[i] = xi.doubled()[i].get_si();
        }
        for (uint64_t idx = 0; idx < n; idx++) {
            std::vector<uint64_t> x = digits(idx, d);
            __int128 e = 0;
            for (size_t i = 0; i < m; i++) {
                __int128 xi_ = x[i];
                __int128 bii = t2[i] - 2 * t1[i];
                e += xi_ * t1[i] + (xi_ * (xi_ - 1) / 2) * bii;
                for (size_t j = i + 1; j < m; j++) {
                    __int128 bij = xi.pair(i, j).get_si() - t1[i] - t1[j];
                    e += xi_ * static_cast<__int128>(x[j]) * bij;
                }
            }
            int64_t r = static_cast<int64_t>(e % static_cast<__int128>(two_g));
            if (r < 0) {
                r += static_cast<int64_t>(two_g);
            }
            out.amps[idx] *= root(static_cast<uint64_t>(r), order);
        }
        return out;
    }
    return apply_pauli_dense(std::get<PauliGate>(gate.kind).label, psi);
}

namespace {

template <typename F>
DenseMatrix matrix_of(const GroupSpec &G, F &&apply) {
    uint64_t n = dim_of(G, 512);
    DenseMatrix m{n, std::vector<Complex>(n * n, Complex(0, 0))};
    for (uint64_t c = 0; c < n; c++) {
        DenseState e{G, std::vector<Complex>(n, Complex(0, 0))};
        e.amps[c] = 1;
        DenseState col = apply(e);
        for (uint64_t r = 0; r < n; r++) {
            m.at(r, c) = col.amps[r];
        }
    }
    return m;
}

}  // namespace

DenseMatrix dense_pauli(const PauliLabel &p) {
    return matrix_of(p.group(), [&](const DenseState &s) { return apply_pauli_dense(p, s); });
}

DenseMatrix dense_gate(const Gate &gate) {
    return matrix_of(gate.group, [&](const DenseState &s) { return apply_gate_dense(gate, s); });
}

DenseMatrix multiply(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix m{a.n, std::vector<Complex>(a.n * a.n, Complex(0, 0))};
    for (size_t i = 0; i < a.n; i++) {
        for (size_t k = 0; k < a.n; k++) {
            Complex v = a.at(i, k);
            if (v == Complex(0, 0)) {
                continue;
            }
            for (size_t j = 0; j < a.n; j++) {
                m.at(i, j) += v * b.at(k, j);
            }
        }
    }
    return m;
}

DenseMatrix adjoint(const DenseMatrix &a) {
    DenseMatrix m{a.n, std::vector<Complex>(a.n * a.n)};
    for (size_t i = 0; i < a.n; i++) {
        for (size_t j = 0; j < a.n; j++) {
            m.at(i, j) = std::conj(a.at(j, i));
        }
    }
    return m;
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.n != b.n) {
        return INFINITY;
    }
    double worst = 0;
    for (size_t k = 0; k < a.data.size(); k++) {
        worst = std::max(worst, std::abs(a.data[k] - b.data[k]));
    }
    return worst;
}

namespace {

// (1/2|G|) sum_j gamma^{-kj} p^j psi, with p^j built by repeated application.
std::vector<std::vector<Complex>> powers(const DenseState &psi, const PauliLabel &p) {
    uint64_t two_g = 2 * psi.group.order().get_ui();
    std::vector<std::vector<Complex>> v;
    DenseState cur = psi;
    for (uint64_t j = 0; j < two_g; j++) {
        v.push_back(cur.amps);
        cur = apply_pauli_dense(p, cur);
    }
    return v;
}

std::vector<Complex> spectral(const std::vector<std::vector<Complex>> &v, uint64_t k, uint64_t order) {
    uint64_t two_g = 2 * order;
    std::vector<Complex> out(v[0].size(), Complex(0, 0));
    for (uint64_t j = 0; j < two_g; j++) {
        Complex w = root((two_g - (k * j) % two_g) % two_g, order) / static_cast<double>(two_g);
        for (size_t x = 0; x < out.size(); x++) {
            out[x] += w * v[j][x];
        }
    }
    return out;
}

}  // namespace

std::vector<double> outcome_probabilities_dense(const DenseState &psi, const PauliLabel &p) {
    uint64_t order = psi.group.order().get_ui();
    auto v = powers(psi, p);
    std::vector<double> probs(2 * order, 0.0);
    for (uint64_t k = 0; k < 2 * order; k++) {
        std::vector<Complex> pk = spectral(v, k, order);
        double s = 0;
        for (const auto &c : pk) {
            s += std::norm(c);
        }
        probs[k] = s;
    }
    return probs;
}

DenseState project_dense(const DenseState &psi, const PauliLabel &p, uint64_t k) {
    uint64_t order = psi.group.order().get_ui();
    DenseState out{psi.group, spectral(powers(psi, p), k, order)};
    double s = 0;
    for (const auto &c : out.amps) {
        s += std::norm(c);
    }
    if (s < 1e-18) {
        throw std::invalid_argument("dense oracle: outcome has probability zero");
    }
    for (auto &c : out.amps) {
        c /= std::sqrt(s);
    }
    return out;
}

DenseMatrix stabilizer_projector_dense(const StabilizerGroup &S) {
    const GroupSpec &G = S.group;
    uint64_t n = dim_of(G, 512);
    uint64_t order = G.order().get_ui();
    DenseMatrix m{n, std::vector<Complex>(n * n, Complex(0, 0))};
    for (uint64_t c = 0; c < n; c++) {
        DenseState e{G, std::vector<Complex>(n, Complex(0, 0))};
        e.amps[c] = 1;
        for (const auto &g : S.gens) {
            e.amps = spectral(powers(e, g), 0, order);
        }
        for (uint64_t r = 0; r < n; r++) {
            m.at(r, c) = e.amps[r];
        }
    }
    return m;
}

uint64_t projector_rank(const DenseMatrix &proj) {
    double tr = 0;
    for (size_t i = 0; i < proj.n; i++) {
        tr += proj.at(i, i).real();
    }
    return static_cast<uint64_t>(std::llround(tr));
}

std::vector<uint64_t> projector_support(const DenseMatrix &proj, double tol) {
    std::vector<uint64_t> out;
    for (size_t i = 0; i < proj.n; i++) {
        if (proj.at(i, i).real() > tol) {
            out.push_back(i);
        }
    }
    return out;
}

DenseState projector_state(const GroupSpec &group, const DenseMatrix &proj) {
    size_t best = 0;
    double best_norm = -1;
    for (size_t c = 0; c < proj.n; c++) {
        double s = 0;
        for (size_t r = 0; r < proj.n; r++) {
            s += std::norm(proj.at(r, c));
        }
        if (s > best_norm) {
            best_norm = s;
            best = c;
        }
    }
    DenseState out{group, std::vector<Complex>(proj.n)};
    double norm = std::sqrt(best_norm);
    for (size_t r = 0; r < proj.n; r++) {
        out.amps[r] = proj.at(r, best) / norm;
    }
    return out;
}

DenseState dense_from_normal_form(const NormalFormState &nf) {
    const GroupSpec &G = nf.offset.group();
    uint64_t n = dim_of(G);
    uint64_t order = G.order().get_ui();
    double mag = 1.0 / std::sqrt(nf.support_size.get_d());
    DenseState out{G, std::vector<Complex>(n, Complex(0, 0))};
    for (uint64_t idx = 0; idx < n; idx++) {
        auto ph = amplitude(nf, element_from_index(G, idx));
        if (ph) {
            out.amps[idx] = mag * root(ph->get_ui(), order);
        }
    }
    return out;
}

double state_distance(const DenseState &a, const DenseState &b) {
    if (a.amps.size() != b.amps.size()) {
        return INFINITY;
    }
    size_t best = 0;
    for (size_t i = 0; i < a.amps.size(); i++) {
        if (std::abs(a.amps[i]) > std::abs(a.amps[best])) {
            best = i;
        }
    }
    Complex ph(1, 0);
    Complex overlap = std::conj(a.amps[best]) * b.amps[best];
    if (std::abs(overlap) > 1e-15) {
        ph = overlap / std::abs(overlap);
    }
    double worst = 0;
    for (size_t i = 0; i < a.amps.size(); i++) {
        worst = std::max(worst, std::abs(a.amps[i] * ph - b.amps[i]));
    }
    return worst;
}

bool compare_state(const NormalFormState &nf, const DenseState &psi, double tol) {
    return state_distance(dense_from_normal_form(nf), psi) <= tol;
}

}  // namespace abstab
