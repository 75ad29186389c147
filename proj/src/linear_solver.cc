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

#include "abstab/linear_solver.h"

#include <stdexcept>
#include <utility>

namespace abstab {

IntMatrix::IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.at(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>> &rows, size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("matrix row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                        " entries, expected " + std::to_string(cols));
        }
        for (size_t c = 0; c < cols; c++) {
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

IntMatrix IntMatrix::multiply(const IntMatrix &other, const Integer &modulus) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("matrix shapes do not match");
    }
    IntMatrix r(rows_, other.cols_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < other.cols_; j++) {
            Integer acc = 0;
            for (size_t k = 0; k < cols_; k++) {
                acc += at(i, k) * other.at(k, j);
            }
            r.at(i, j) = floor_mod(acc, modulus);
        }
    }
    return r;
}

bool IntMatrix::operator==(const IntMatrix &other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

HomMatrix::HomMatrix(GroupSpec domain, GroupSpec codomain, IntMatrix entries)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), entries_(std::move(entries)) {
}

GroupElement HomMatrix::column(size_t c) const {
    std::vector<Integer> v(codomain_.rank());
    for (size_t r = 0; r < codomain_.rank(); r++) {
        v[r] = entries_.at(r, c);
    }
    return GroupElement(codomain_, v);
}

HomMatrix validate_hom(const IntMatrix &entries, const GroupSpec &domain, const GroupSpec &codomain) {
    if (entries.rows() != codomain.rank() || entries.cols() != domain.rank()) {
        throw std::invalid_argument("homomorphism matrix is " + std::to_string(entries.rows()) + "x" +
                                    std::to_string(entries.cols()) + " but " + domain.str() + " -> " +
                                    codomain.str() + " needs " + std::to_string(codomain.rank()) + "x" +
                                    std::to_string(domain.rank()));
    }
    IntMatrix reduced(entries.rows(), entries.cols());
    for (size_t c = 0; c < entries.cols(); c++) {
        for (size_t r = 0; r < entries.rows(); r++) {
            reduced.at(r, c) = floor_mod(entries.at(r, c), codomain.modulus(r));
            if (floor_mod(domain.modulus(c) * reduced.at(r, c), codomain.modulus(r)) != 0) {
                throw std::invalid_argument("not a homomorphism: column " + std::to_string(c) + " times " +
                                            to_string(domain.modulus(c)) + " is nonzero in row " +
                                            std::to_string(r));
            }
        }
    }
    return HomMatrix(domain, codomain, std::move(reduced));
}

HomMatrix hom_from_columns(const GroupSpec &domain, const std::vector<GroupElement> &columns,
                           const GroupSpec &codomain) {
    if (columns.size() != domain.rank()) {
        throw std::invalid_argument("hom_from_columns: column count does not match the domain rank");
    }
    IntMatrix m(codomain.rank(), domain.rank());
    for (size_t c = 0; c < columns.size(); c++) {
        if (columns[c].group() != codomain) {
            throw std::invalid_argument("hom_from_columns: column is not in the codomain");
        }
        for (size_t r = 0; r < codomain.rank(); r++) {
            m.at(r, c) = columns[c][r];
        }
    }
    return validate_hom(m, domain, codomain);
}

GroupElement apply_hom(const HomMatrix &A, const GroupElement &x) {
    if (x.group() != A.domain()) {
        throw std::invalid_argument("apply_hom: element is not in the domain " + A.domain().str());
    }
    std::vector<Integer> out(A.codomain().rank());
    for (size_t r = 0; r < A.codomain().rank(); r++) {
        Integer acc = 0;
        for (size_t c = 0; c < A.domain().rank(); c++) {
            acc += A.at(r, c) * x[c];
        }
        out[r] = acc;
    }
    return GroupElement(A.codomain(), out);
}

namespace {

// When the pivot already divides b, keep the pivot row untouched.
ExtGcd pivot_gcd(const Integer &a, const Integer &b) {
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        return ExtGcd{a, 1, 0};
    }
    return ext_gcd(a, b);
}

// Rows k and i of `s` become s*row_k + t*row_i and -b'*row_k + a'*row_i.
void combine_rows(SmithForm &f, size_t k, size_t i) {
    const Integer &d = f.modulus;
    Integer a = f.s.at(k, k);
    Integer b = f.s.at(i, k);
    ExtGcd e = pivot_gcd(a, b);
    Integer ap = a / e.g;
    Integer bp = b / e.g;
    auto apply = [&](IntMatrix &m) {
        for (size_t c = 0; c < m.cols(); c++) {
            Integer x = m.at(k, c);
            Integer y = m.at(i, c);
            m.at(k, c) = floor_mod(e.s * x + e.t * y, d);
            m.at(i, c) = floor_mod(ap * y - bp * x, d);
        }
    };
    apply(f.s);
    apply(f.u);
    // U^{-1} picks up the inverse operation on the right.
    IntMatrix &w = f.u_inv;
    for (size_t r = 0; r < w.rows(); r++) {
        Integer x = w.at(r, k);
        Integer y = w.at(r, i);
        w.at(r, k) = floor_mod(ap * x + bp * y, d);
        w.at(r, i) = floor_mod(e.s * y - e.t * x, d);
    }
}

void combine_cols(SmithForm &f, size_t k, size_t j) {
    const Integer &d = f.modulus;
    Integer a = f.s.at(k, k);
    Integer b = f.s.at(k, j);
    ExtGcd e = pivot_gcd(a, b);
    Integer ap = a / e.g;
    Integer bp = b / e.g;
    auto apply = [&](IntMatrix &m) {
        for (size_t r = 0; r < m.rows(); r++) {
            Integer x = m.at(r, k);
            Integer y = m.at(r, j);
            m.at(r, k) = floor_mod(e.s * x + e.t * y, d);
            m.at(r, j) = floor_mod(ap * y - bp * x, d);
        }
    };
    apply(f.s);
    apply(f.v);
    IntMatrix &w = f.v_inv;
    for (size_t c = 0; c < w.cols(); c++) {
        Integer x = w.at(k, c);
        Integer y = w.at(j, c);
        w.at(k, c) = floor_mod(ap * x + bp * y, d);
        w.at(j, c) = floor_mod(e.s * y - e.t * x, d);
    }
}

void swap_rows(IntMatrix &m, size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t c = 0; c < m.cols(); c++) {
        std::swap(m.at(a, c), m.at(b, c));
    }
}

void swap_cols(IntMatrix &m, size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t r = 0; r < m.rows(); r++) {
        std::swap(m.at(r, a), m.at(r, b));
    }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix &M, const Integer &d) {
    if (sgn(d) <= 0) {
        throw std::invalid_argument("smith_normal_form: modulus must be positive");
    }
    const size_t m = M.rows();
    const size_t n = M.cols();
    SmithForm f;
    f.modulus = d;
    f.s = IntMatrix(m, n);
    for (size_t r = 0; r < m; r++) {
        for (size_t c = 0; c < n; c++) {
            f.s.at(r, c) = floor_mod(M.at(r, c), d);
        }
    }
    f.u = IntMatrix::identity(m);
    f.u_inv = IntMatrix::identity(m);
    f.v = IntMatrix::identity(n);
    f.v_inv = IntMatrix::identity(n);
    if (d == 1) {
        for (size_t r = 0; r < m; r++) {
            for (size_t c = 0; c < m; c++) {
                f.u.at(r, c) = 0;
                f.u_inv.at(r, c) = 0;
            }
        }
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                f.v.at(r, c) = 0;
                f.v_inv.at(r, c) = 0;
            }
        }
        return f;
    }

    size_t k = 0;
    for (; k < std::min(m, n); k++) {
        bool found = false;
        size_t pr = 0, pc = 0;
        Integer best;
        for (size_t r = k; r < m; r++) {
            for (size_t c = k; c < n; c++) {
                if (f.s.at(r, c) == 0) {
                    continue;
                }
                Integer q = gcd(f.s.at(r, c), d);
                if (!found || q < best) {
                    found = true;
                    best = q;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (!found) {
            break;
        }
        swap_rows(f.s, k, pr);
        swap_rows(f.u, k, pr);
        swap_cols(f.u_inv, k, pr);
        swap_cols(f.s, k, pc);
        swap_cols(f.v, k, pc);
        swap_rows(f.v_inv, k, pc);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t r = k + 1; r < m; r++) {
                if (f.s.at(r, k) != 0) {
                    combine_rows(f, k, r);
                }
            }
            for (size_t c = k + 1; c < n; c++) {
                if (f.s.at(k, c) != 0) {
                    combine_cols(f, k, c);
                }
            }
            for (size_t r = k + 1; r < m; r++) {
                if (f.s.at(r, k) != 0) {
                    dirty = true;
                    break;
                }
            }
        }
    }
    f.rank = k;
    return f;
}

DiagonalKernel diagonal_kernel(const SmithForm &snf, size_t cols) {
    const Integer &d = snf.modulus;
    DiagonalKernel out;
    out.size = 1;
    for (size_t i = 0; i < cols; i++) {
        std::vector<Integer> g(cols, Integer(0));
        if (i < snf.rank) {
            Integer q = gcd(snf.diagonal(i), d);
            out.size *= q;
            g[i] = floor_mod(d / q, d);
        } else {
            out.size *= d;
            g[i] = floor_mod(Integer(1), d);
        }
        if (g[i] != 0) {
            out.gens.push_back(std::move(g));
        }
    }
    return out;
}

SolveReport solve_report(const HomMatrix &A, const GroupElement &b) {
    if (b.group() != A.codomain()) {
        throw std::invalid_argument("solve: right-hand side is not in the codomain " + A.codomain().str());
    }
    const GroupSpec &H = A.domain();
    const GroupSpec &G = A.codomain();
    const size_t n = H.rank();
    const size_t m = G.rank();
    Integer d = 1;
    for (const auto &c : H.moduli()) {
        d = lcm(d, c);
    }
    for (const auto &c : G.moduli()) {
        d = lcm(d, c);
    }

    // [A | D] over Z_d^(n+m).
    IntMatrix M(m, n + m);
    for (size_t r = 0; r < m; r++) {
        for (size_t c = 0; c < n; c++) {
            M.at(r, c) = A.at(r, c);
        }
        M.at(r, n + r) = G.modulus(r);
    }
    SmithForm snf = smith_normal_form(M, d);
    DiagonalKernel dk = diagonal_kernel(snf, n + m);

    SolveReport report;
    report.lcm = d;
    report.enlarged_kernel_size = dk.size;
    report.projection_kernel_size = 1;
    for (const auto &c : H.moduli()) {
        report.projection_kernel_size *= d / c;
    }

    std::vector<Integer> rhs(m);
    for (size_t r = 0; r < m; r++) {
        Integer acc = 0;
        for (size_t c = 0; c < m; c++) {
            acc += snf.u.at(r, c) * b[c];
        }
        rhs[r] = floor_mod(acc, d);
    }
    std::vector<Integer> y(n + m, Integer(0));
    bool solvable = true;
    for (size_t r = 0; r < m && solvable; r++) {
        if (r < snf.rank) {
            const Integer &s = snf.diagonal(r);
            Integer q = gcd(s, d);
            if (floor_mod(rhs[r], q) != 0) {
                solvable = false;
                break;
            }
            Integer dq = d / q;
            auto inv = inverse_mod(s / q, dq);
            y[r] = floor_mod((rhs[r] / q) * *inv, dq);
        } else if (rhs[r] != 0) {
            solvable = false;
        }
    }
    if (!solvable) {
        report.count = 0;
        return report;
    }

    auto project = [&](const std::vector<Integer> &z) {
        std::vector<Integer> x(n);
        for (size_t i = 0; i < n; i++) {
            Integer acc = 0;
            for (size_t c = 0; c < n + m; c++) {
                acc += snf.v.at(i, c) * z[c];
            }
            x[i] = acc;
        }
        return GroupElement(H, x);
    };

    SubgroupGens kernel(H);
    for (const auto &g : dk.gens) {
        GroupElement e = project(g);
        if (!e.is_zero()) {
            kernel.gens.push_back(std::move(e));
        }
    }
    report.solution = SolutionCoset{project(y), std::move(kernel)};

    Integer denom = G.order() * report.projection_kernel_size;
    if (!mpz_divisible_p(dk.size.get_mpz_t(), denom.get_mpz_t())) {
        throw std::logic_error("solve: enlarged kernel size is not divisible by |G| |ker pi|");
    }
    report.count = dk.size / denom;
    return report;
}

GeneralSolution solve(const HomMatrix &A, const GroupElement &b) {
    return solve_report(A, b).solution;
}

Integer count_solutions(const HomMatrix &A, const GroupElement &b) {
    return solve_report(A, b).count;
}

}  // namespace abstab
