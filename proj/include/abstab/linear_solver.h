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

#ifndef ABSTAB_LINEAR_SOLVER_H
#define ABSTAB_LINEAR_SOLVER_H

#include <optional>
#include <vector>

#include "abstab/group.h"

namespace abstab {

/// Dense row-major integer matrix. Zero rows or zero columns are allowed.
class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols);
    static IntMatrix identity(size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>> &rows, size_t cols);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    Integer &at(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Integer &at(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    IntMatrix multiply(const IntMatrix &other, const Integer &modulus) const;
    bool operator==(const IntMatrix &other) const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// A homomorphism H -> G given by its columns a_i = image of e_i.
/// Entries of row j are reduced mod d_j. Construct through validate_hom.
class HomMatrix {
   public:
    const GroupSpec &domain() const {
        return domain_;
    }
    const GroupSpec &codomain() const {
        return codomain_;
    }
    const IntMatrix &entries() const {
        return entries_;
    }
    const Integer &at(size_t r, size_t c) const {
        return entries_.at(r, c);
    }
    GroupElement column(size_t c) const;

   private:
    friend HomMatrix validate_hom(const IntMatrix &, const GroupSpec &, const GroupSpec &);
    HomMatrix(GroupSpec domain, GroupSpec codomain, IntMatrix entries);

    GroupSpec domain_;
    GroupSpec codomain_;
    IntMatrix entries_;
};

/// Checks c_i a_i == 0 in the codomain for every column; the error names the column.
HomMatrix validate_hom(const IntMatrix &entries, const GroupSpec &domain, const GroupSpec &codomain);

/// Builds the matrix whose columns are the given codomain elements.
HomMatrix hom_from_columns(const GroupSpec &domain, const std::vector<GroupElement> &columns,
                           const GroupSpec &codomain);

GroupElement apply_hom(const HomMatrix &A, const GroupElement &x);

/// U * M * V == S mod d with S diagonal (s_0, ..., s_{rank-1}, 0, ...).
struct SmithForm {
    Integer modulus;
    IntMatrix s;
    IntMatrix u;
    IntMatrix u_inv;
    IntMatrix v;
    IntMatrix v_inv;
    size_t rank = 0;

    const Integer &diagonal(size_t i) const {
        return s.at(i, i);
    }
};

/// Diagonalization over Z_d. The pivot at each step is the remaining entry with the
/// smallest gcd(entry, d), ties broken by lowest (row, col).
SmithForm smith_normal_form(const IntMatrix &M, const Integer &d);

/// Generators of {y in Z_d^cols : S y == 0 mod d} plus its exact size.
struct DiagonalKernel {
    std::vector<std::vector<Integer>> gens;
    Integer size;
};
DiagonalKernel diagonal_kernel(const SmithForm &snf, size_t cols);

/// x0 + ker(A), or nullopt when A x = b has no solution.
struct SolutionCoset {
    GroupElement particular;
    SubgroupGens kernel;
};
using GeneralSolution = std::optional<SolutionCoset>;

/// Everything the enlarged-system solve produces, for callers that want the counts.
struct SolveReport {
    GeneralSolution solution;
    Integer count;                  // number of solutions in the domain
    Integer lcm;                    // working modulus d
    Integer enlarged_kernel_size;   // solutions of [A|D] y = 0 over Z_d^(n+m)
    Integer projection_kernel_size; // d^n / prod c_i
};

SolveReport solve_report(const HomMatrix &A, const GroupElement &b);
GeneralSolution solve(const HomMatrix &A, const GroupElement &b);
Integer count_solutions(const HomMatrix &A, const GroupElement &b);

}  // namespace abstab

#endif
