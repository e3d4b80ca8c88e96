#include <gtest/gtest.h>

#include "movcone/pell.hpp"
#include "oracles.hpp"

using namespace movcone;

namespace {

std::pair<Integer, Integer> xy(const PellSolution& s) { return {s.x(), s.y()}; }

}  // namespace

TEST(Pell, FundamentalSolutions) {
  EXPECT_EQ(xy(pell_fundamental(10)), std::make_pair(Integer(19), Integer(6)));
  EXPECT_EQ(xy(pell_fundamental(2)), std::make_pair(Integer(3), Integer(2)));
  EXPECT_EQ(xy(pell_fundamental(61)),
            std::make_pair(Integer(1766319049), Integer(226153980)));
  EXPECT_EQ(pell_fundamental(421).x(), Integer("3879474045914926879468217167061449"));
}

TEST(Pell, FundamentalAgreesWithBruteForceForSmallD) {
  for (std::uint64_t d = 2; d < 60; ++d) {
    if (is_perfect_square(Integer(d))) continue;
    auto [x, y] = oracle::pell_min(d);
    PellSolution sol = pell_fundamental(Integer(d));
    EXPECT_EQ(sol.x(), Integer(x)) << "D=" << d;
    EXPECT_EQ(sol.y(), Integer(y)) << "D=" << d;
  }
}

TEST(Pell, RejectsSquaresAndSmallD) {
  EXPECT_THROW(pell_fundamental(9), PerfectSquare);
  EXPECT_THROW(pell_fundamental(1), InvalidInput);
  EXPECT_THROW(pell_fundamental(-3), InvalidInput);
}

TEST(Pell, SolutionSequence) {
  auto sols = pell_solutions(2, 2);
  ASSERT_EQ(sols.size(), 2u);
  EXPECT_EQ(xy(sols[1]), std::make_pair(Integer(17), Integer(12)));
  EXPECT_EQ(xy(pell_solutions(10, 1).front()), std::make_pair(Integer(19), Integer(6)));
  EXPECT_EQ(xy(pell_solutions(3, 1).front()), std::make_pair(Integer(2), Integer(1)));
  auto many = pell_solutions(7, 6);
  for (std::size_t i = 1; i < many.size(); ++i) EXPECT_LT(many[i - 1].x(), many[i].x());
  EXPECT_THROW(pell_solutions(7, 0), InvalidInput);
}

TEST(Pell, TwoTerm) {
  auto s27 = solve_two_term(2, 7);
  ASSERT_TRUE(s27);
  EXPECT_EQ(xy(*s27), std::make_pair(Integer(2), Integer(1)));
  EXPECT_FALSE(solve_two_term(2, 5));
  auto s12 = solve_two_term(1, 2);
  ASSERT_TRUE(s12);
  EXPECT_EQ(xy(*s12), std::make_pair(Integer(3), Integer(2)));
  EXPECT_FALSE(solve_two_term(2, 8));  // AB = 16
  EXPECT_THROW(solve_two_term(0, 3), InvalidInput);
}

TEST(Pell, TwoTermNoSolutionMatchesResidueObstruction) {
  // 2x^2 = 1 mod 5 has no solution.
  for (int x = 0; x < 5; ++x) EXPECT_NE((2 * x * x) % 5, 1);
}

TEST(Pell, FirstWithDivisibility) {
  EXPECT_EQ(xy(*first_with_divisibility(10, 2)), std::make_pair(Integer(19), Integer(6)));
  EXPECT_EQ(xy(*first_with_divisibility(24, 2)), std::make_pair(Integer(5), Integer(1)));
  EXPECT_EQ(xy(*first_with_divisibility(8, 2)), std::make_pair(Integer(3), Integer(1)));
  // x = 3, 17, 99: 5 divides 99 + 1
  EXPECT_EQ(first_with_divisibility(2, 5)->x(), 99);
}

TEST(Pell, FirstWithDivisibilityAgreesWithSequenceScan) {
  for (int d = 2; d <= 40; ++d) {
    if (is_perfect_square(Integer(d))) continue;
    for (int q = 1; q <= 6; ++q) {
      auto got = first_with_divisibility(d, q);
      std::optional<Integer> expected;
      for (const PellSolution& s : pell_solutions(d, 40)) {
        if ((s.x() + 1) % q == 0) {
          expected = s.x();
          break;
        }
      }
      ASSERT_EQ(got.has_value(), expected.has_value()) << "D=" << d << " q=" << q;
      if (got) {
        EXPECT_EQ(got->x(), *expected) << "D=" << d << " q=" << q;
      }
    }
  }
}

TEST(Pell, DivisibilityCanFailForGood) {
  // D = 3: x = 2, 7, 26, 97, 362, ... mod 5 cycles through 2, 2, 1, 2, 2, 1 ...
  EXPECT_FALSE(first_with_divisibility(3, 5));
  EXPECT_FALSE(first_with_divisibility(2, 7));
}

TEST(Pell, DivisibilityScanCap) {
  EXPECT_THROW(first_with_divisibility(2, 5, 2), CapExceeded);
  EXPECT_THROW(first_with_divisibility(2, 0), InvalidInput);
}
