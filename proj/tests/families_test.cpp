#include "fixtures.hpp"
#include "gpindex/distance.hpp"
#include "gpindex/errors.hpp"
#include "gpindex/families.hpp"
#include "gpindex/gp_index.hpp"
#include "gpindex/symmetry.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace gpindex {
namespace {

TEST(TadpoleTest, Construction) {
  const Graph t32 = tadpole({3, 2});
  EXPECT_EQ(t32.order(), 5);
  EXPECT_EQ(t32.size(), 5);
  // The triangle with a two-edge tail is the last of the seven 5-vertex examples.
  EXPECT_EQ(canonical_form(t32), canonical_form(fixtures::noninteger5_graphs()[6]));

  const Graph t52 = tadpole({5, 2});
  EXPECT_EQ(t52.order(), 7);
  EXPECT_EQ(t52.size(), 7);
  EXPECT_EQ(t52.degree(4), 3);
  EXPECT_EQ(t52.degree(6), 1);
}

TEST(TadpoleTest, RejectsBadParameters) {
  EXPECT_THROW(tadpole({4, 2}), InvalidInput);
  EXPECT_THROW(tadpole({1, 2}), InvalidInput);
  EXPECT_THROW(tadpole({5, 3}), InvalidInput);
  EXPECT_THROW(tadpole({5, 0}), InvalidInput);
  EXPECT_THROW(tadpole({61, 4}), InvalidInput);
  EXPECT_NO_THROW(tadpole({61, 2}));
  EXPECT_THROW(tadpole_is_noninteger(6), InvalidInput);
}

TEST(TadpoleClosedFormTest, Examples) {
  EXPECT_EQ(tadpole_gp_closed_form({3, 2}), Rational(5, 2));
  EXPECT_EQ(tadpole_gp_closed_form({5, 2}), Rational(21, 2));
  EXPECT_EQ(tadpole_gp_closed_form({7, 2}), Rational(27));
  EXPECT_TRUE(tadpole_is_noninteger(3));
  EXPECT_FALSE(tadpole_is_noninteger(7));
  EXPECT_TRUE(tadpole_is_noninteger(11));
  EXPECT_FALSE(tadpole_is_noninteger(9));
}

TEST(TadpoleClosedFormTest, ResidueCriterionMatchesBinomialParity) {
  for (int l = 3; l <= 10001; l += 2) {
    ASSERT_EQ(tadpole_is_noninteger(l), tadpole_binomial_is_odd(l)) << l;
  }
}

TEST(TadpoleClosedFormTest, MatchesOracleOnSmallMembers) {
  for (const auto& spec : {TadpoleSpec{3, 2}, TadpoleSpec{3, 4}, TadpoleSpec{5, 2}, TadpoleSpec{5, 4},
                           TadpoleSpec{7, 2}}) {
    EXPECT_EQ(oracle::gp(tadpole(spec)), tadpole_gp_closed_form(spec));
  }
}

TEST(TadpoleGridTest, ClosedFormOrbitsAndGroup) {
  for (int l = 3; l <= 13; l += 2) {
    for (int t = 2; t <= 6; t += 2) {
      const TadpoleSpec spec{l, t};
      const Graph g = tadpole(spec);
      const Rational computed = gp_orbit_representative(g);
      EXPECT_EQ(computed, tadpole_gp_closed_form(spec)) << l << "," << t;
      EXPECT_EQ(computed.is_integer(), !tadpole_is_noninteger(l)) << l << "," << t;

      const AutomorphismGroup group = automorphism_group(g);
      EXPECT_EQ(group.order, 2);
      const DistanceMatrix d = bfs_distances(g);
      int pairs = 0;
      int singles = 0;
      std::vector<int> pair_distances;
      for (const auto& orbit : group.orbits) {
        if (orbit.size() == 1) ++singles;
        if (orbit.size() == 2) {
          ++pairs;
          // Both members sit at the same distance from the attachment vertex.
          EXPECT_EQ(d(orbit[0], l - 1), d(orbit[1], l - 1));
          pair_distances.push_back(d(orbit[0], orbit[1]));
        }
      }
      EXPECT_EQ(pairs, (l - 1) / 2);
      EXPECT_EQ(singles, t + 1);
      std::sort(pair_distances.begin(), pair_distances.end());
      for (int k = 0; k < pairs; ++k) EXPECT_EQ(pair_distances[k], k + 1);
    }
  }
}

TEST(TadpoleGridTest, LargeMembers) {
  for (const auto& spec : {TadpoleSpec{59, 2}, TadpoleSpec{35, 28}, TadpoleSpec{43, 20}}) {
    EXPECT_EQ(gp_orbit_representative(tadpole(spec)), tadpole_gp_closed_form(spec));
  }
}

}  // namespace
}  // namespace gpindex
