#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "flatac/base_l2.hpp"
#include "flatac/lift.hpp"
#include "catalog.hpp"
#include "support.hpp"

namespace {

using testcat::catalog;
using testcat::from_random_downset;

using flatac::errc;
using flatac::Family;
using flatac::FlatAntichain;
using flatac::SubsetMask;
using support::error_code;

FlatAntichain full_lower(int n, int l) { return FlatAntichain(n, l, Family(n, l + 1, {}), Family::level(n, l)); }

SubsetMask permute(SubsetMask s, const std::vector<int>& perm) {
  SubsetMask out;
  for (int e : s.elements()) out = out.with(perm[static_cast<std::size_t>(e - 1)]);
  return out;
}

FlatAntichain permute(const FlatAntichain& a, const std::vector<int>& perm) {
  std::vector<SubsetMask> up, low;
  for (SubsetMask s : a.upper) up.push_back(permute(s, perm));
  for (SubsetMask s : a.lower) low.push_back(permute(s, perm));
  return FlatAntichain(a.n, a.l, Family(a.n, a.l + 1, up), Family(a.n, a.l, low));
}

TEST(LiftAddIsolated, Examples) {
  const auto a = flatac::lift_add_isolated(full_lower(5, 2));
  EXPECT_EQ(a.n, 6);
  EXPECT_EQ(a.size(), 15);  // 10 lower sets plus C(5,1)
  EXPECT_TRUE(flatac::check_maximal_flat(a).is_maximal);

  const auto b = flatac::lift_add_isolated(flatac::six_nine_antichain());
  EXPECT_EQ(b.n, 7);
  EXPECT_EQ(b.size(), 15);
  EXPECT_TRUE(flatac::check_maximal_flat(b).is_maximal);

  // Each lift of a 12-vertex (2,3) antichain adds the 12 sets {i, 13}.
  const auto c = flatac::base_case_construct(12, 100);
  EXPECT_EQ(flatac::lift_add_isolated(c).size(), 112);

  EXPECT_EQ(error_code([] { flatac::lift_add_isolated(full_lower(5, 1)); }), errc::level_range);
}

TEST(LiftJoinElement, Examples) {
  const auto a = flatac::lift_join_element(full_lower(6, 2));
  EXPECT_EQ(a.n, 7);
  EXPECT_EQ(a.l, 3);
  EXPECT_EQ(a.size(), 30);
  EXPECT_TRUE(flatac::check_maximal_flat(a).is_maximal);
  EXPECT_EQ(error_code([] { flatac::lift_join_element(full_lower(5, 4)); }), errc::level_range);
  EXPECT_EQ(error_code([] { flatac::lift_join_element(full_lower(5, 1)); }), errc::level_range);
}

TEST(LiftPair, Examples) {
  const auto a = flatac::lift_pair(full_lower(7, 2), full_lower(7, 2));
  EXPECT_EQ(a.n, 9);
  EXPECT_EQ(a.l, 3);
  EXPECT_EQ(a.size(), 84);
  EXPECT_EQ(a.size(), flatac::binom(9, 3));
  EXPECT_TRUE(flatac::check_maximal_flat(a).is_maximal);
  EXPECT_EQ(a, flatac::assemble_from_upper(9, 3, a.upper));
  EXPECT_EQ(error_code([] { flatac::lift_pair(full_lower(7, 2), full_lower(8, 2)); }), errc::ground_mismatch);
  EXPECT_EQ(error_code([] { flatac::lift_pair(full_lower(7, 2), full_lower(7, 3)); }), errc::ground_mismatch);
  EXPECT_EQ(error_code([] { flatac::lift_pair(full_lower(6, 5), full_lower(6, 5)); }), errc::level_range);
}

TEST(LiftPair, LeftEndIdentity) {
  for (int l = 3; l <= 8; ++l) {
    const auto lhs = flatac::binom(2 * l, l - 1) + flatac::binom(2 * l, l + 1) + flatac::binom(2 * l + 1, l - 1);
    const auto rhs = flatac::binom(2 * l + 2, l) - flatac::binom(2 * l, l) / (l + 1);
    EXPECT_EQ(lhs, rhs) << l;
  }
}

TEST(LiftAddIsolated, CatalogPreservesMaximality) {
  int checked = 0;
  for (int n = 5; n <= 8; ++n) {
    for (int l = 2; l <= n - 2; ++l) {
      for (const auto& a : catalog(n, l, 15, static_cast<std::uint64_t>(n * 10 + l))) {
        ASSERT_TRUE(flatac::check_maximal_flat(a).is_maximal);
        const auto b = flatac::lift_add_isolated(a);
        EXPECT_EQ(b.size(), a.size() + flatac::binom(n, l - 1));
        EXPECT_TRUE(flatac::check_maximal_flat(b).is_maximal);
        ++checked;
      }
    }
  }
  EXPECT_GE(checked, 50);
}

TEST(LiftJoinElement, CatalogPreservesMaximality) {
  int checked = 0;
  for (int n = 5; n <= 8; ++n) {
    for (int l = 2; l <= n - 2; ++l) {
      for (const auto& a : catalog(n, l, 15, static_cast<std::uint64_t>(n * 100 + l))) {
        const auto b = flatac::lift_join_element(a);
        EXPECT_EQ(b.size(), a.size() + flatac::binom(n, l + 2));
        EXPECT_TRUE(flatac::check_maximal_flat(b).is_maximal);
        ++checked;
      }
    }
  }
  EXPECT_GE(checked, 50);
}

TEST(LiftPair, CatalogPreservesMaximality) {
  int checked = 0;
  for (int n = 5; n <= 7; ++n) {
    for (int l = 2; l <= n - 2; ++l) {
      const auto cat = catalog(n, l, 8, static_cast<std::uint64_t>(n * 1000 + l));
      for (const auto& a1 : cat) {
        for (const auto& a2 : cat) {
          const auto b = flatac::lift_pair(a1, a2);
          EXPECT_EQ(b.size(), a1.size() + a2.size() + flatac::binom(n, l + 2) + flatac::binom(n, l - 1));
          EXPECT_TRUE(flatac::check_maximal_flat(b).is_maximal);
          ++checked;
        }
      }
    }
  }
  EXPECT_GE(checked, 50);
}

TEST(Lifts, CommuteWithRelabelling) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 7;
    const int l = 2 + trial % 3;
    const auto a = from_random_downset(n, l, rng);
    const auto b = from_random_downset(n, l, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto extended = perm;
    extended.push_back(n + 1);
    extended.push_back(n + 2);

    EXPECT_EQ(flatac::lift_add_isolated(permute(a, perm)), permute(flatac::lift_add_isolated(a), extended));
    EXPECT_EQ(flatac::lift_join_element(permute(a, perm)), permute(flatac::lift_join_element(a), extended));
    if (l + 1 <= n - 2) {
      EXPECT_EQ(flatac::lift_pair(permute(a, perm), permute(b, perm)), permute(flatac::lift_pair(a, b), extended));
    }
  }
}

}  // namespace
