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

#include "abstab/random_instances.h"
#include "brute_force.h"

namespace abstab {
namespace {

IntMatrix mat(std::vector<std::vector<Integer>> rows, size_t cols) {
    return IntMatrix::from_rows(rows, cols);
}

bool is_diagonal(const IntMatrix &s) {
    for (size_t r = 0; r < s.rows(); r++) {
        for (size_t c = 0; c < s.cols(); c++) {
            if (r != c && s.at(r, c) != 0) {
                return false;
            }
        }
    }
    return true;
}

void expect_valid_snf(const IntMatrix &M, const Integer &d) {
    SmithForm f = smith_normal_form(M, d);
    IntMatrix reduced(M.rows(), M.cols());
    for (size_t r = 0; r < M.rows(); r++) {
        for (size_t c = 0; c < M.cols(); c++) {
            reduced.at(r, c) = floor_mod(M.at(r, c), d);
        }
    }
    EXPECT_EQ(f.u.multiply(reduced, d).multiply(f.v, d), f.s);
    EXPECT_TRUE(is_diagonal(f.s));
    EXPECT_EQ(f.u.multiply(f.u_inv, d), IntMatrix::identity(M.rows()));
    EXPECT_EQ(f.v.multiply(f.v_inv, d), IntMatrix::identity(M.cols()));
}

TEST(HomMatrixTest, Validation) {
    GroupSpec Z2 = make_group({2}), Z4 = make_group({4});
    EXPECT_THROW(validate_hom(mat({{1}}, 1), Z2, Z4), std::invalid_argument);
    HomMatrix A = validate_hom(mat({{2}}, 1), Z2, Z4);
    EXPECT_EQ(apply_hom(A, GroupElement(Z2, {1})), GroupElement(Z4, {2}));
    GroupSpec Z44 = make_group({4, 4});
    HomMatrix B = validate_hom(mat({{1, 1}}, 2), Z44, Z4);
    EXPECT_EQ(apply_hom(B, GroupElement(Z44, {3, 3})), GroupElement(Z4, {2}));
    EXPECT_TRUE(apply_hom(B, GroupElement(Z44)).is_zero());
    EXPECT_NO_THROW(validate_hom(IntMatrix::identity(3), GroupSpec::uniform(3, 5), GroupSpec::uniform(3, 5)));
}

TEST(SmithFormTest, Examples) {
    SmithForm a = smith_normal_form(mat({{2, 0}, {0, 2}}, 2), 4);
    EXPECT_EQ(a.s, mat({{2, 0}, {0, 2}}, 2));
    EXPECT_EQ(a.rank, 2u);
    SmithForm z = smith_normal_form(mat({{0}}, 1), 4);
    EXPECT_EQ(z.rank, 0u);
    EXPECT_EQ(z.s.at(0, 0), 0);
    SmithForm r = smith_normal_form(mat({{2, 2}}, 2), 4);
    EXPECT_EQ(r.s, mat({{2, 0}}, 2));
    expect_valid_snf(mat({{2, 2}}, 2), 4);
}

TEST(SmithFormTest, RandomMatricesAndDegenerateShapes) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; t++) {
        size_t rows = rng() % 5, cols = rng() % 5;
        Integer d = 2 + rng() % 60;
        IntMatrix M(rows, cols);
        for (size_t r = 0; r < rows; r++) {
            for (size_t c = 0; c < cols; c++) {
                M.at(r, c) = uniform_below(d, rng);
            }
        }
        expect_valid_snf(M, d);
    }
}

TEST(SmithFormTest, DividingPivotTerminates) {
    // gcdext can return (s, t) = (0, 1) when the pivot divides the entry.
    expect_valid_snf(mat({{2, 4}, {6, 8}}, 2), 16);
    expect_valid_snf(mat({{3, 6, 9}}, 3), 27);
}

TEST(DiagonalKernelTest, MatchesEnumeration) {
    for (int d = 1; d <= 30; d++) {
        for (int s = 0; s <= 30; s++) {
            SmithForm f = smith_normal_form(mat({{s}}, 1), d);
            DiagonalKernel k = diagonal_kernel(f, 1);
            int count = 0;
            for (int x = 0; x < d; x++) {
                count += (s * x) % d == 0;
            }
            EXPECT_EQ(k.size, count) << "s=" << s << " d=" << d;
        }
    }
    SmithForm f = smith_normal_form(mat({{2}}, 1), 4);
    EXPECT_EQ(diagonal_kernel(f, 1).size, 2);
    EXPECT_EQ(diagonal_kernel(smith_normal_form(mat({{1}}, 1), 4), 1).size, 1);
    EXPECT_EQ(diagonal_kernel(smith_normal_form(mat({{0}}, 1), 4), 1).size, 4);
}

TEST(SolveTest, Examples) {
    GroupSpec Z4 = make_group({4});
    HomMatrix A = validate_hom(mat({{2}}, 1), Z4, Z4);
    GeneralSolution s = solve(A, GroupElement(Z4, {2}));
    ASSERT_TRUE(s.has_value());
    brute::IndexSet got = brute::shift(Z4, brute::to_set(s->kernel), element_index(s->particular));
    EXPECT_EQ(got, (brute::IndexSet{1, 3}));
    EXPECT_EQ(count_solutions(A, GroupElement(Z4, {2})), 2);
    EXPECT_FALSE(solve(A, GroupElement(Z4, {1})).has_value());
    EXPECT_EQ(count_solutions(A, GroupElement(Z4, {1})), 0);
    GeneralSolution h = solve(A, GroupElement(Z4));
    ASSERT_TRUE(h.has_value());
    EXPECT_TRUE(h->particular.is_zero());
    GroupSpec G = GroupSpec::uniform(3, 7);
    EXPECT_EQ(count_solutions(validate_hom(IntMatrix::identity(3), G, G), GroupElement(G, {1, 2, 3})), 1);
}

TEST(SolveTest, ZeroShapes) {
    GroupSpec Z4 = make_group({4});
    GroupSpec empty;
    HomMatrix to_trivial = validate_hom(IntMatrix(0, 1), Z4, empty);
    EXPECT_EQ(count_solutions(to_trivial, GroupElement(empty)), 4);
    HomMatrix from_trivial = validate_hom(IntMatrix(1, 0), empty, Z4);
    EXPECT_EQ(count_solutions(from_trivial, GroupElement(Z4)), 1);
    EXPECT_EQ(count_solutions(from_trivial, GroupElement(Z4, {1})), 0);
}

TEST(SolveTest, RandomAgainstEnumeration) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 300; t++) {
        GroupSpec H = random_group(rng, 64), G = random_group(rng, 64);
        HomMatrix A = random_hom(H, G, rng);
        GroupElement b = random_rhs(A, rng);
        brute::IndexSet want = brute::solution_set(A, b);
        SolveReport rep = solve_report(A, b);
        ASSERT_EQ(rep.count, static_cast<unsigned long>(want.size())) << H.str() << " -> " << G.str();
        ASSERT_EQ(rep.solution.has_value(), !want.empty());
        if (rep.solution) {
            EXPECT_EQ(apply_hom(A, rep.solution->particular), b);
            for (const auto &k : rep.solution->kernel.gens) {
                EXPECT_TRUE(apply_hom(A, k).is_zero());
            }
            EXPECT_EQ(brute::shift(H, brute::to_set(rep.solution->kernel), element_index(rep.solution->particular)),
                      want);
            // |ker [A|D]| = |G| |ker A| |ker pi|.
            EXPECT_EQ(rep.enlarged_kernel_size, G.order() * rep.count * rep.projection_kernel_size);
        }
    }
}

TEST(SolveTest, BigModuli) {
    Integer d = Integer(1) << 128;
    GroupSpec G = make_group({d, d});
    HomMatrix A = validate_hom(mat({{3, 5}, {7, 12}}, 2), G, G);
    GroupElement b(G, {Integer(12345), d - 1});
    GeneralSolution s = solve(A, b);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(apply_hom(A, s->particular), b);
    EXPECT_EQ(count_solutions(A, b), 1);
}

}  // namespace
}  // namespace abstab
