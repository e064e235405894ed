#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "flatac/antichain.hpp"
#include "support.hpp"

namespace {

using flatac::errc;
using flatac::Family;
using flatac::FlatAntichain;
using flatac::SubsetMask;
using flatac::verify_engine;
using support::error_code;
using support::S;

std::vector<SubsetMask> all_members(const FlatAntichain& a) {
  std::vector<SubsetMask> v(a.lower.begin(), a.lower.end());
  v.insert(v.end(), a.upper.begin(), a.upper.end());
  return v;
}

TEST(AssembleFromUpper, Examples) {
  const FlatAntichain a = flatac::assemble_from_upper(4, 2, Family(4, 3, {S({1, 2, 3})}));
  EXPECT_EQ(a.lower, Family(4, 2, {S({1, 4}), S({2, 4}), S({3, 4})}));
  EXPECT_EQ(a.size(), 4);

  const Family fixture(6, 3, {S({1, 2, 5}), S({1, 2, 6}), S({3, 4, 5}), S({3, 4, 6})});
  EXPECT_EQ(flatac::assemble_from_upper(6, 2, fixture).size(), 9);

  const FlatAntichain empty = flatac::assemble_from_upper(13, 2, Family(13, 3, {}));
  EXPECT_EQ(empty.lower.size(), 78U);
  EXPECT_EQ(empty.size(), 78);

  EXPECT_EQ(error_code([] { flatac::assemble_from_upper(5, 2, Family(5, 2, {S({1, 2})})); }), errc::bad_family);
}

TEST(FlatAntichain, RejectsWrongShape) {
  EXPECT_EQ(error_code([] { FlatAntichain(5, 2, Family(5, 2, {}), Family(5, 2, {})); }), errc::bad_family);
  EXPECT_EQ(error_code([] { FlatAntichain(5, 5, Family(5, 5, {}), Family(5, 5, {})); }), errc::bad_family);
  EXPECT_EQ(error_code([] { FlatAntichain(5, 2, Family(6, 3, {}), Family(5, 2, {})); }), errc::bad_family);
}

TEST(CheckMaximalFlat, Examples) {
  for (verify_engine engine : {verify_engine::dense, verify_engine::sparse}) {
    // A whole level on its own.
    const FlatAntichain level(7, 2, Family::level(7, 3), Family(7, 2, {}));
    const auto r1 = flatac::check_maximal_flat(level, engine);
    EXPECT_TRUE(r1.is_maximal);
    EXPECT_EQ(r1.size, 35);
    EXPECT_FALSE(r1.witness.has_value());

    const Family fixture(6, 3, {S({1, 2, 5}), S({1, 2, 6}), S({3, 4, 5}), S({3, 4, 6})});
    const auto r2 = flatac::check_maximal_flat(flatac::assemble_from_upper(6, 2, fixture), engine);
    EXPECT_TRUE(r2.is_maximal);
    EXPECT_EQ(r2.size, 9);

    FlatAntichain a = flatac::assemble_from_upper(5, 2, Family(5, 3, {S({1, 2, 3})}));
    std::vector<SubsetMask> low(a.lower.begin(), a.lower.end());
    low.erase(std::find(low.begin(), low.end(), S({4, 5})));
    const FlatAntichain cut(5, 2, a.upper, Family(5, 2, low));
    const auto r3 = flatac::check_maximal_flat(cut, engine);
    EXPECT_TRUE(r3.is_antichain);
    EXPECT_FALSE(r3.is_maximal);
    ASSERT_TRUE(r3.witness.has_value());
    EXPECT_EQ(*r3.witness, S({4, 5}));
  }
}

TEST(CheckMaximalFlat, DetectsComparablePair) {
  const FlatAntichain bad(5, 2, Family(5, 3, {S({1, 2, 3})}), Family(5, 2, {S({1, 2})}));
  for (verify_engine engine : {verify_engine::dense, verify_engine::sparse}) {
    const auto r = flatac::check_maximal_flat(bad, engine);
    EXPECT_FALSE(r.is_antichain);
    EXPECT_FALSE(r.is_maximal);
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(CheckMaximalFlat, DenseLimit) {
  const FlatAntichain big(27, 1, Family::level(27, 2), Family(27, 1, {}));
  EXPECT_EQ(error_code([&] { flatac::check_maximal_flat(big, verify_engine::dense); }), errc::level_range);
  EXPECT_TRUE(flatac::check_maximal_flat(big).is_maximal);
}

// Random upper families on small ground sets, checked against a pairwise
// search over all sets of the two levels and of the whole lattice.
TEST(CheckMaximalFlat, AgreesWithBruteForce) {
  std::mt19937_64 rng(7);
  for (int n = 3; n <= 8; ++n) {
    for (int l = 1; l + 1 <= n && l <= 4; ++l) {
      const auto lvl = brute::level(n, l + 1);
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<SubsetMask> pick;
        const auto keep = static_cast<std::uint64_t>(trial % 5 + 1);
        for (SubsetMask s : lvl)
          if (rng() % 6 < keep) pick.push_back(s);
        const FlatAntichain a = flatac::assemble_from_upper(n, l, Family(n, l + 1, pick));
        const auto sets = all_members(a);
        ASSERT_TRUE(brute::is_antichain(sets));
        const auto addable = brute::addable(sets, n, l);

        // The equivalent criterion: every (l+1)-set outside F has a shadow
        // element outside the shadow of F.
        const Family covered = flatac::shadow(a.upper);
        bool criterion = true;
        for (SubsetMask x : lvl) {
          if (a.upper.contains(x)) continue;
          bool escapes = false;
          for (int e : x.elements()) escapes = escapes || !covered.contains(x.without(e));
          criterion = criterion && escapes;
        }

        for (verify_engine engine : {verify_engine::dense, verify_engine::sparse}) {
          const auto r = flatac::check_maximal_flat(a, engine);
          EXPECT_TRUE(r.is_antichain);
          EXPECT_EQ(r.is_maximal, !addable.has_value());
          EXPECT_EQ(r.is_maximal, criterion);
          EXPECT_EQ(r.witness, addable);
          EXPECT_EQ(r.size, static_cast<std::int64_t>(pick.size()) + flatac::binom(n, l) -
                                static_cast<std::int64_t>(covered.size()));
        }
        if (n <= 7 && !addable) {
          EXPECT_TRUE(brute::is_maximal_anywhere(sets, n));
        }
      }
    }
  }
}

}  // namespace
