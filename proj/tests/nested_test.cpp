#include <gtest/gtest.h>

#include <vector>

#include "movcone/nested.hpp"

using namespace movcone;

TEST(EpsInf, ClosedForms) {
  EXPECT_EQ(eps_inf(ProjectivePlane{}, 5), make_rational(1, 5));
  EXPECT_EQ(eps_inf(Hirzebruch{1, 1, 2}, 2), make_rational(1, 2));
  EXPECT_EQ(eps_inf(Hirzebruch{2, 3, 10}, 4), make_rational(3, 4));
  EXPECT_EQ(eps_inf(VeryGeneralK3{2}, 2), make_rational(1, 2));
  EXPECT_EQ(eps_inf(VeryGeneralK3{10}, 6), make_rational(10, 12));
}

TEST(EpsInf, Ranges) {
  EXPECT_THROW(eps_inf(ProjectivePlane{}, 1), OutOfRange);
  EXPECT_THROW(eps_inf(VeryGeneralK3{10}, 5), OutOfRange);
  EXPECT_THROW(eps_inf(Hirzebruch{1, 2, 2}, 3), InvalidInput);  // b <= ae is not ample
  EXPECT_THROW(eps_inf(VeryGeneralK3{7}, 9), InvalidInput);
}

TEST(Nagata, Compare) {
  EXPECT_EQ(nagata_value_compare(1, 4, make_rational(1, 2)), NagataComparison::Equal);
  EXPECT_EQ(nagata_value_compare(2, 2, make_rational(1, 2)), NagataComparison::Below);
  EXPECT_EQ(nagata_value_compare(10, 1, make_rational(60, 19)), NagataComparison::Below);
  EXPECT_EQ(nagata_value_compare(1, 1, Rational(2)), NagataComparison::Above);
}

TEST(Nagata, Submaximal) {
  std::vector<std::int64_t> ten(10, 1);
  EXPECT_TRUE(is_nagata_submaximal(3, ten, 1, 10));
  std::vector<std::int64_t> one{1};
  EXPECT_FALSE(is_nagata_submaximal(1, one, 1, 1));
  EXPECT_FALSE(is_nagata_submaximal(5, one, 4, 1));
  EXPECT_THROW(is_nagata_submaximal(1, one, 1, 2), InvalidInput);
}

TEST(MoriDream, Obstruction) {
  auto p2 = mds_obstructed(1, 16, true);
  EXPECT_EQ(p2.verdict, MdsVerdict::NotObstructed);
  EXPECT_TRUE(p2.p2_perfect_square);
  auto k3 = mds_obstructed(2, 3);
  EXPECT_EQ(k3.verdict, MdsVerdict::Obstructed);
  EXPECT_TRUE(k3.assumes_nagata);
  EXPECT_EQ(mds_obstructed(2, 2).verdict, MdsVerdict::NotObstructed);
  EXPECT_FALSE(mds_obstructed(1, 9, true).p2_perfect_square);
}
