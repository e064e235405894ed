#include <gtest/gtest.h>

#include "brute.hpp"
#include "flatac/setfam.hpp"
#include "support.hpp"

namespace {

using flatac::CascadeTerm;
using flatac::errc;
using flatac::Family;
using flatac::SubsetMask;

using support::error_code;
using support::S;

TEST(SubsetMask, ElementsAndOrder) {
  const SubsetMask a = S({1, 3, 5});
  EXPECT_EQ(a.size(), 3);
  EXPECT_TRUE(a.contains(3));
  EXPECT_FALSE(a.contains(2));
  EXPECT_EQ(a.max_element(), 5);
  EXPECT_EQ(a.elements(), (std::vector<int>{1, 3, 5}));
  EXPECT_TRUE(S({1, 3}).subset_of(a));
  // Colex: the larger maximum of the symmetric difference decides.
  EXPECT_LT(S({1, 2, 4}), S({1, 3, 4}));
  EXPECT_LT(S({2, 3, 4}), S({1, 2, 5}));
  EXPECT_EQ(flatac::to_string(a), "{1,3,5}");
}

TEST(SubsetMask, EnumerationIsColexAndComplete) {
  for (int n = 0; n <= 9; ++n) {
    for (int card = 0; card <= n; ++card) {
      std::vector<SubsetMask> got;
      flatac::for_each_subset(n, card, [&](SubsetMask s) { got.push_back(s); });
      EXPECT_EQ(got, brute::level(n, card)) << n << " " << card;
    }
  }
  std::int64_t count = 0;
  flatac::for_each_subset(64, 1, [&](SubsetMask) { ++count; });
  EXPECT_EQ(count, 64);
}

TEST(Binomial, TableValues) {
  EXPECT_EQ(flatac::binom(9, 3), 84);
  EXPECT_EQ(flatac::binom(64, 32), 1832624140942590534LL);
  EXPECT_EQ(flatac::binom(5, 7), 0);
  EXPECT_EQ(flatac::binom(5, -1), 0);
}

TEST(Family, CanonicalForm) {
  const Family f(5, 2, {S({3, 4}), S({1, 2}), S({3, 4}), S({1, 5})});
  ASSERT_EQ(f.size(), 3U);
  EXPECT_EQ(f[0], S({1, 2}));
  EXPECT_EQ(f[1], S({3, 4}));
  EXPECT_EQ(f[2], S({1, 5}));
  EXPECT_TRUE(f.contains(S({1, 5})));
  EXPECT_EQ(error_code([] { Family(4, 2, {S({1, 2, 3})}); }), errc::bad_family);
  EXPECT_EQ(error_code([] { Family(4, 2, {S({1, 5})}); }), errc::bad_family);
}

TEST(Shadow, Examples) {
  EXPECT_EQ(error_code([] { flatac::shadow(Family(4, 0, {SubsetMask{}})); }), errc::empty_cardinality);
  EXPECT_EQ(flatac::shadow(Family(3, 3, {S({1, 2, 3})})), Family(3, 2, {S({1, 2}), S({1, 3}), S({2, 3})}));
  EXPECT_EQ(flatac::shadow(flatac::colex_prefix(14, 3, 6)).size(), 14U);
}

TEST(Shade, Examples) {
  EXPECT_EQ(flatac::shade(Family(4, 2, {S({1, 2})})), Family(4, 3, {S({1, 2, 3}), S({1, 2, 4})}));
  EXPECT_TRUE(flatac::shade(Family(4, 2, {})).empty());
  EXPECT_EQ(flatac::shade(Family::level(5, 2)), Family::level(5, 3));
  EXPECT_EQ(flatac::shade(Family::level(5, 2)).size(), 10U);
  EXPECT_EQ(error_code([] { flatac::shade(Family(3, 3, {S({1, 2, 3})})); }), errc::full_cardinality);
}

TEST(Shadow, MatchesBruteForce) {
  for (int n = 1; n <= 7; ++n) {
    for (int card = 1; card <= n; ++card) {
      const auto lvl = brute::level(n, card);
      // Every third set of the level, as an arbitrary non-prefix family.
      std::vector<SubsetMask> some;
      for (std::size_t i = 0; i < lvl.size(); i += 3) some.push_back(lvl[i]);
      EXPECT_EQ(support::members(flatac::shadow(Family(n, card, some))), brute::shadow(some, n, card));
    }
  }
}

TEST(ColexPrefix, Examples) {
  EXPECT_EQ(flatac::colex_prefix(1, 3, 5), Family(5, 3, {S({1, 2, 3})}));
  EXPECT_EQ(flatac::colex_prefix(4, 3, 5), Family(5, 3, {S({1, 2, 3}), S({1, 2, 4}), S({1, 3, 4}), S({2, 3, 4})}));
  EXPECT_EQ(flatac::shadow(flatac::colex_prefix(6, 3, 13)).size(), 9U);
  EXPECT_EQ(error_code([] { flatac::colex_prefix(11, 3, 5); }), errc::count_out_of_range);
  EXPECT_EQ(error_code([] { flatac::colex_prefix(-1, 3, 5); }), errc::count_out_of_range);
}

TEST(ColexPrefix, ExtendsByOneLargerSet) {
  for (int card = 1; card <= 4; ++card) {
    const Family full = Family::level(9, card);
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(full.size()); ++t) {
      const Family a = flatac::colex_prefix(t, card, 9);
      const Family b = flatac::colex_prefix(t + 1, card, 9);
      ASSERT_EQ(b.size(), a.size() + 1);
      EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin()));
      if (t > 0) {
        EXPECT_LT(a[a.size() - 1], b[b.size() - 1]);
      }
    }
  }
}

TEST(Cascade, Examples) {
  EXPECT_EQ(flatac::cascade_representation(10, 3).terms, (std::vector<CascadeTerm>{{5, 3}}));
  EXPECT_EQ(flatac::cascade_representation(14, 3).terms, (std::vector<CascadeTerm>{{5, 3}, {3, 2}, {1, 1}}));
  EXPECT_EQ(flatac::cascade_representation(1, 3).terms, (std::vector<CascadeTerm>{{3, 3}}));
  EXPECT_EQ(flatac::cascade_representation(14, 3).bottom_index(), 1);
  EXPECT_EQ(error_code([] { flatac::cascade_representation(0, 3); }), errc::zero_has_no_cascade);
  EXPECT_EQ(error_code([] { flatac::cascade_representation(65, 1); }), errc::count_out_of_range);
}

TEST(Cascade, RoundTripsAndDecreases) {
  for (int card = 1; card <= 6; ++card) {
    for (std::int64_t t = 1; t <= std::min<std::int64_t>(3000, flatac::binom(64, card)); ++t) {
      const auto rep = flatac::cascade_representation(t, card);
      std::int64_t total = 0;
      for (std::size_t i = 0; i < rep.terms.size(); ++i) {
        total += flatac::binom(rep.terms[i].top, rep.terms[i].index);
        EXPECT_GE(rep.terms[i].top, rep.terms[i].index);
        if (i > 0) {
          EXPECT_LT(rep.terms[i].top, rep.terms[i - 1].top);
          EXPECT_LT(rep.terms[i].index, rep.terms[i - 1].index);
        }
      }
      EXPECT_EQ(total, t);
      EXPECT_GE(rep.bottom_index(), 1);
    }
  }
}

TEST(KruskalKatona, Examples) {
  EXPECT_EQ(flatac::kk_shadow_size(10, 3), 10);
  EXPECT_EQ(flatac::kk_shadow_size(14, 3), 14);
  EXPECT_EQ(flatac::kk_shadow_size(1, 3), 3);
}

TEST(KruskalKatona, MatchesShadowOfPrefix) {
  for (int card : {2, 3, 4}) {
    for (std::int64_t t = 1; t <= flatac::binom(12, card); ++t) {
      ASSERT_EQ(flatac::kk_shadow_size(t, card),
                static_cast<std::int64_t>(flatac::shadow(flatac::colex_prefix(t, card, 12)).size()))
          << "t=" << t << " card=" << card;
    }
  }
}

TEST(SquashedSize, Examples) {
  EXPECT_EQ(flatac::squashed_size(13, 2, 0), 78);
  EXPECT_EQ(flatac::squashed_size(13, 2, 6), 75);
  EXPECT_EQ(flatac::squashed_size(13, 2, flatac::binom(13, 3)), 286);
  EXPECT_EQ(error_code([] { flatac::squashed_size(13, 2, 287); }), errc::count_out_of_range);
}

TEST(SquashedSize, NeverBelowCatalanBound) {
  for (int n = 4; n <= 14; ++n) {
    for (int l = 1; l + 1 <= n; ++l) {
      std::int64_t least = flatac::binom(n, l);
      for (std::int64_t t = 0; t <= flatac::binom(n, l + 1); ++t) least = std::min(least, flatac::squashed_size(n, l, t));
      EXPECT_GE(least, flatac::binom(n, l) - flatac::catalan_prefix_sum(l)) << n << " " << l;
    }
  }
  // The bound is attained once n is large enough for the whole staircase.
  EXPECT_EQ(flatac::squashed_size(13, 2, 6), flatac::binom(13, 2) - flatac::catalan_prefix_sum(2));
}

TEST(Catalan, PrefixSums) {
  EXPECT_EQ(flatac::catalan_prefix_sum(1), 1);
  EXPECT_EQ(flatac::catalan_prefix_sum(2), 3);
  EXPECT_EQ(flatac::catalan_prefix_sum(3), 8);
  EXPECT_EQ(flatac::catalan_prefix_sum(4), 22);
  EXPECT_EQ(flatac::binom(9, 3) - 3 - flatac::catalan_prefix_sum(3), 73);
  EXPECT_EQ(flatac::binom(10, 4) - 3 - flatac::catalan_prefix_sum(4), 185);
}

TEST(OverlapF, SmallValues) {
  const std::vector<std::int64_t> expected{0, 0, 0, 1, 1, 3, 3, 4, 4, 7, 7};
  for (int t = 0; t <= 10; ++t) EXPECT_EQ(flatac::overlap_f(t), expected[static_cast<std::size_t>(t)]) << t;
  EXPECT_EQ(flatac::overlap_f(11), 10);
  EXPECT_EQ(flatac::overlap_f(30), 29);
}

TEST(ShadowShade, ClosureMonotone) {
  for (int n = 3; n <= 7; ++n) {
    for (int card = 1; card < n; ++card) {
      const auto lvl = brute::level(n, card);
      std::vector<SubsetMask> some;
      for (std::size_t i = 1; i < lvl.size(); i += 2) some.push_back(lvl[i]);
      if (some.empty()) continue;
      const Family g(n, card, some);
      const Family up = flatac::shade(g);
      const Family back = flatac::shadow(up);
      for (SubsetMask s : g) EXPECT_TRUE(back.contains(s));
      const Family down = flatac::shadow(g);
      if (down.card() < n) {
        const Family again = flatac::shade(down);
        for (SubsetMask s : g) EXPECT_TRUE(again.contains(s));
      }
    }
  }
}

}  // namespace
