#include <gtest/gtest.h>

#include <random>

#include "sppr/lp.hpp"

using namespace sppr;

namespace {

Constraint row(std::vector<LinearTerm> terms, Relation rel, Rational rhs) {
  return {std::move(terms), rel, std::move(rhs), "test row"};
}

// Exhaustive vertex enumeration for tiny programs in two variables: every
// optimum of a bounded LP lies on the intersection of two tight rows/bounds.
std::optional<Rational> brute_force_2d(const LinearProgram& lp) {
  struct Line {
    Rational a, b, c;  // a x + b y = c
  };
  std::vector<Line> lines;
  for (const auto& c : lp.constraints) {
    Rational a, b;
    for (const auto& t : c.terms) (t.var == 0 ? a : b) += t.coef;
    lines.push_back({a, b, c.rhs});
  }
  lines.push_back({Rational(1), Rational(0), lp.variables[0].lower_bound});
  lines.push_back({Rational(0), Rational(1), lp.variables[1].lower_bound});
  std::optional<Rational> best;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      Rational det = lines[i].a * lines[j].b - lines[i].b * lines[j].a;
      if (det.is_zero()) continue;
      Rational x = (lines[i].c * lines[j].b - lines[i].b * lines[j].c) / det;
      Rational y = (lines[i].a * lines[j].c - lines[i].c * lines[j].a) / det;
      std::vector<Rational> pt{x, y};
      if (lp.first_violation(pt)) continue;
      Rational v = lp.evaluate(lp.objective.terms, pt);
      if (!best || (lp.objective.sense == Sense::minimize ? v < *best : v > *best)) best = v;
    }
  return best;
}

}  // namespace

TEST(Lp, SingleLowerBound) {
  LinearProgram lp;
  auto x = lp.add_variable("x");
  lp.constraints.push_back(row({{x, Rational(1)}}, Relation::ge, Rational(3)));
  lp.objective = {{{x, Rational(1)}}, Sense::minimize};
  auto c = solve_lp(lp);
  ASSERT_EQ(c.status, LpStatus::optimal);
  EXPECT_EQ(c.optimum, Rational(3));
  EXPECT_EQ(c.assignment[0], Rational(3));
  EXPECT_TRUE(verify_optimality(lp, c));
}

TEST(Lp, InfeasibleAndUnbounded) {
  LinearProgram lp;
  auto x = lp.add_variable("x");
  lp.constraints.push_back(row({{x, Rational(1)}}, Relation::ge, Rational(2)));
  lp.constraints.push_back(row({{x, Rational(1)}}, Relation::le, Rational(1)));
  lp.objective = {{{x, Rational(1)}}, Sense::minimize};
  EXPECT_EQ(solve_lp(lp).status, LpStatus::infeasible);

  LinearProgram up;
  auto y = up.add_variable("y");
  up.constraints.push_back(row({{y, Rational(1)}}, Relation::ge, Rational(2)));
  up.objective = {{{y, Rational(1)}}, Sense::maximize};
  EXPECT_EQ(solve_lp(up).status, LpStatus::unbounded);

  LinearProgram down;
  auto z = down.add_variable("z", Rational(-5));
  down.objective = {{{z, Rational(-1)}}, Sense::maximize};
  auto c = solve_lp(down);
  ASSERT_EQ(c.status, LpStatus::optimal);
  EXPECT_EQ(c.optimum, Rational(5));
}

TEST(Lp, EqualityAndMaximise) {
  // max x + 2y, x + y = 4, y <= 3, x >= 1/2.
  LinearProgram lp;
  auto x = lp.add_variable("x", Rational(1, 2));
  auto y = lp.add_variable("y");
  lp.constraints.push_back(row({{x, Rational(1)}, {y, Rational(1)}}, Relation::eq, Rational(4)));
  lp.constraints.push_back(row({{y, Rational(1)}}, Relation::le, Rational(3)));
  lp.objective = {{{x, Rational(1)}, {y, Rational(2)}}, Sense::maximize};
  auto c = solve_lp(lp);
  ASSERT_EQ(c.status, LpStatus::optimal);
  EXPECT_EQ(c.optimum, Rational(7));
  EXPECT_EQ(c.assignment[0], Rational(1));
  EXPECT_EQ(c.assignment[1], Rational(3));
  EXPECT_TRUE(verify_optimality(lp, c));
}

TEST(Lp, ValidationRejectsBadPrograms) {
  LinearProgram lp;
  lp.add_variable("x");
  lp.constraints.push_back(row({{3, Rational(1)}}, Relation::ge, Rational(0)));
  EXPECT_THROW(solve_lp(lp), Error);
  LinearProgram nameless;
  auto x = nameless.add_variable("x");
  nameless.constraints.push_back({{{x, Rational(1)}}, Relation::ge, Rational(0), ""});
  EXPECT_THROW(solve_lp(nameless), Error);
}

TEST(Lp, TamperedCertificateIsRejected) {
  LinearProgram lp;
  auto x = lp.add_variable("x");
  auto y = lp.add_variable("y");
  lp.constraints.push_back(row({{x, Rational(1)}, {y, Rational(2)}}, Relation::ge, Rational(4)));
  lp.objective = {{{x, Rational(3)}, {y, Rational(1)}}, Sense::minimize};
  auto c = solve_lp(lp);
  ASSERT_TRUE(verify_optimality(lp, c));
  EXPECT_EQ(c.optimum, Rational(2));
  auto worse = c;
  worse.assignment = {Rational(4), Rational(0)};
  worse.optimum = Rational(12);
  EXPECT_FALSE(verify_optimality(lp, worse));
}

TEST(Lp, RandomTwoVariableProgramsMatchVertexEnumeration) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coef(-4, 6), rhs(-3, 12), pick(0, 2);
  int optimal = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram lp;
    lp.add_variable("x", Rational(pick(rng)));
    lp.add_variable("y", Rational(pick(rng) - 1));
    for (int r = 0; r < 4; ++r) {
      Relation rel = std::vector<Relation>{Relation::le, Relation::ge, Relation::le}[pick(rng)];
      lp.constraints.push_back(row({{0, Rational(coef(rng))}, {1, Rational(coef(rng))}}, rel,
                                   Rational(rhs(rng))));
    }
    // Box keeps every feasible program bounded.
    lp.constraints.push_back(row({{0, Rational(1)}}, Relation::le, Rational(20)));
    lp.constraints.push_back(row({{1, Rational(1)}}, Relation::le, Rational(20)));
    lp.objective = {{{0, Rational(coef(rng))}, {1, Rational(coef(rng))}},
                    trial % 2 ? Sense::maximize : Sense::minimize};
    auto c = solve_lp(lp);
    auto want = brute_force_2d(lp);
    if (!want) {
      ASSERT_EQ(c.status, LpStatus::infeasible) << trial;
      continue;
    }
    ASSERT_EQ(c.status, LpStatus::optimal) << trial;
    ASSERT_EQ(c.optimum, *want) << trial;
    ASSERT_TRUE(verify_optimality(lp, c));
    ++optimal;
  }
  EXPECT_GT(optimal, 100);
}

TEST(Lp, IncrementalRowsMatchFreshSolve) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coef(0, 5), rhs(1, 30);
  for (int trial = 0; trial < 40; ++trial) {
    LinearProgram lp;
    for (int v = 0; v < 4; ++v) lp.add_variable("v" + std::to_string(v), Rational(1));
    lp.objective = {{{0, Rational(1)}, {1, Rational(2)}, {2, Rational(1)}, {3, Rational(3)}},
                    Sense::minimize};
    IncrementalLp inc(lp);
    for (int step = 0; step < 6; ++step) {
      Constraint c = row({}, step % 3 == 2 ? Relation::eq : Relation::ge, Rational(rhs(rng)));
      for (std::size_t v = 0; v < 4; ++v) c.terms.push_back({v, Rational(coef(rng))});
      lp.constraints.push_back(c);
      inc.add_constraint(c);
      auto fresh = solve_lp(lp);
      auto warm = inc.solve();
      ASSERT_EQ(fresh.status, warm.status);
      if (fresh.status == LpStatus::optimal) {
        ASSERT_EQ(fresh.optimum, warm.optimum);
        ASSERT_TRUE(verify_optimality(lp, warm));
      } else {
        break;
      }
    }
  }
}
