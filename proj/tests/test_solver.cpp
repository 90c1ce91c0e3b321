#include <gtest/gtest.h>

#include "lie4/solver.hpp"

using namespace lie4;

namespace {

Poly V(size_t i) { return Poly::var(i); }

PolySystem sys(std::vector<std::string> names, std::vector<Poly> eqs, std::vector<Poly> nz = {}) {
    return {std::move(names), std::move(eqs), std::move(nz)};
}

}  // namespace

TEST(Solver, SumOfSquaresForcesZero) {
    auto s = sys({"x", "y"}, {V(0) * V(0) + V(1) * V(1)});
    auto r = solve_small_system(s);
    ASSERT_EQ(r.status, SolveStatus::Finite);
    ASSERT_EQ(r.branches.size(), 1u);
    auto x = realize(s, r.branches[0], {});
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], 0);
    EXPECT_EQ((*x)[1], 0);
}

TEST(Solver, NonzeroConstraintMakesItEmpty) {
    auto s = sys({"x", "y"}, {V(0) * V(0) + V(1) * V(1)}, {V(0) * V(0) + V(1) * V(1)});
    EXPECT_EQ(solve_small_system(s).status, SolveStatus::Empty);
}

TEST(Solver, IrrationalRootsAreRejectedNotLost) {
    // x^2 = 2 has real roots, none rational: must not be reported Empty.
    auto s = sys({"x"}, {V(0) * V(0) - Poly(Q(2))});
    EXPECT_NE(solve_small_system(s).status, SolveStatus::Empty);
    auto t = sys({"x"}, {V(0) * V(0) + Poly(Q(2))});
    EXPECT_EQ(solve_small_system(t).status, SolveStatus::Empty);
}

TEST(Solver, RationalRootsBranch) {
    auto s = sys({"x", "y"}, {(V(0) - Poly(Q(1))) * (V(0) + Poly(Q(1, 2))), V(1) - V(0)});
    auto r = solve_small_system(s);
    ASSERT_EQ(r.status, SolveStatus::Finite);
    std::vector<Q> xs;
    for (auto& b : r.branches) xs.push_back((*realize(s, b, {}))[0]);
    std::sort(xs.begin(), xs.end());
    EXPECT_EQ(xs, (std::vector<Q>{Q(-1, 2), Q(1)}));
}

TEST(Solver, BilinearSystemForcesTwoVariables) {
    // b2 (1 + b1) = 0, b3 (1 + b1) = 0, b1 b2 = b2 with nothing forcing b1 = -1.
    auto s = sys({"b1", "b2", "b3"}, {V(1) * (Poly(Q(1)) + V(0)), V(2) * (Poly(Q(1)) + V(0)), V(0) * V(1) - V(1)},
                 {Poly(Q(1)) + V(0)});
    auto r = solve_small_system(s);
    ASSERT_EQ(r.status, SolveStatus::Parametrized);
    for (auto& b : r.branches)
        for (auto& x : sample_branch(s, b, 10)) {
            EXPECT_EQ(x[1], 0);
            EXPECT_EQ(x[2], 0);
        }
}

TEST(Solver, PivotBranchesRecheckAgainstOriginalEquations) {
    // a t = b s + s, alpha = 0, t beta = 0, beta = b s + s - a t
    auto s = sys({"a", "b", "s", "t", "alpha", "beta"},
                 {V(4), V(2) * V(4) + V(3) * V(5), V(1) * V(2) + V(2) - V(0) * V(3) - V(5),
                  V(1) * V(2) - V(0) * V(3) - V(0) * V(4) - V(1) * V(5)});
    auto r = solve_small_system(s);
    ASSERT_EQ(r.status, SolveStatus::Parametrized);
    size_t n = 0;
    for (auto& b : r.branches) n += sample_branch(s, b, 20).size();
    EXPECT_GT(n, 20u);
}

TEST(Solver, SamplesMoveEveryFreeVariable) {
    auto s = sys({"x", "y", "z"}, {V(2)});
    auto r = solve_small_system(s);
    ASSERT_EQ(r.branches.size(), 1u);
    auto xs = sample_branch(s, r.branches[0], 6);
    bool x_moves = false, y_moves = false;
    for (auto& x : xs) {
        x_moves |= x[0] != 0;
        y_moves |= x[1] != 0;
    }
    EXPECT_TRUE(x_moves && y_moves);
}

TEST(Solver, BudgetExhaustionIsUndecided) {
    auto s = sys({"x", "y", "z"}, {V(0) * V(1) - V(2), V(1) * V(2) - V(0), V(0) * V(2) - V(1)});
    auto r = solve_small_system(s, 2);
    EXPECT_EQ(r.status, SolveStatus::Undecided);
    EXPECT_TRUE(r.budget_exhausted);
}

TEST(Solver, SturmCountsRealRoots) {
    EXPECT_EQ(real_root_count({Q(-2), Q(0), Q(1)}), 2);
    EXPECT_EQ(real_root_count({Q(1), Q(0), Q(1)}), 0);
    EXPECT_EQ(real_root_count({Q(0), Q(-1), Q(0), Q(1)}), 3);
}
