#pragma once

// Small flat antichains from shadow-disjoint cores with star sets.
//
// Take l-sets A of [t] that pairwise share at most l-2 elements, and give each
// a non-empty set X(A) of elements above t. The (l+1)-sets A + {i}, i in X(A),
// together with every l-set outside their shadow form a maximal antichain of
// size C(n,l) - s - (l-1)*alpha, where s is the number of cores and alpha the
// total number of star elements.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "flatac/antichain.hpp"
#include "flatac/error.hpp"
#include "flatac/setfam.hpp"

namespace flatac {

struct StarPlan {
  int t = 0;
  Family core;                 // l-subsets of [t]
  std::vector<int> star_sizes;  // |X(A)| per core member, in core order; X(A) = {t+1, ..., t+|X(A)|}

  [[nodiscard]] std::int64_t alpha() const {
    std::int64_t a = 0;
    for (int x : star_sizes) a += x;
    return a;
  }
};

/// The largest class of l-subsets of [t] under element sum mod t (smallest
/// residue on ties). Any two members of a class share at most l-2 elements.
inline Family sum_class_family(int t, int l) {
  if (l < 2 || l >= t || t > max_ground) throw error(errc::bad_core, "sum classes need 2 <= l < t <= 64");
  std::vector<std::vector<SubsetMask>> classes(static_cast<std::size_t>(t));
  for_each_subset(t, l, [&](SubsetMask s) {
    int sum = 0;
    for (int e : s.elements()) sum += e;
    classes[static_cast<std::size_t>(sum % t)].push_back(s);
  });
  std::size_t best = 0;
  for (std::size_t r = 1; r < classes.size(); ++r)
    if (classes[r].size() > classes[best].size()) best = r;
  return Family::from_sorted(t, l, std::move(classes[best]));
}

inline bool is_shadow_disjoint(const Family& core) {
  const auto members = core.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (std::popcount(members[i].bits & members[j].bits) > core.card() - 2) return false;
  return true;
}

inline FlatAntichain star_construct(int n, int l, const StarPlan& plan) {
  if (l < 2 || plan.t <= l || plan.t >= n || n > max_ground)
    throw error(errc::bad_plan, "star plans need 2 <= l < t < n <= 64");
  if (plan.core.card() != l || plan.core.empty()) throw error(errc::bad_plan, "core must be a non-empty family of l-sets");
  if (plan.star_sizes.size() != plan.core.size()) throw error(errc::bad_plan, "one star size per core member");
  for (SubsetMask a : plan.core)
    if ((a.bits & ~ground_mask(plan.t)) != 0) throw error(errc::bad_plan, "core member outside [t]");
  if (!is_shadow_disjoint(plan.core)) throw error(errc::bad_plan, "core members share l-1 elements");
  std::vector<SubsetMask> upper;
  upper.reserve(static_cast<std::size_t>(plan.alpha()));
  for (std::size_t i = 0; i < plan.core.size(); ++i) {
    const int x = plan.star_sizes[i];
    if (x < 1 || x > n - plan.t) throw error(errc::bad_plan, "star size outside [1, n-t]");
    for (int j = 1; j <= x; ++j) upper.push_back(plan.core[i].with(plan.t + j));
  }
  return assemble_from_upper(n, l, Family(n, l + 1, std::move(upper)));
}

/// Bounds on x = C(n,l) - m reachable with core size sigma.
struct SmallRange {
  std::int64_t x_lo;
  std::int64_t x_hi;
};

inline SmallRange small_target_range(int n, int l, int t, std::int64_t sigma) {
  return {static_cast<std::int64_t>(l - 1) * (l - 1) + 1,
          (1 + static_cast<std::int64_t>(l - 1) * (n - t)) * (sigma - l + 2)};
}

/// Plan of size exactly m using the sum-class core of [t]. For l = 2 any
/// 2 < t <= n-2 is accepted; otherwise l+3 <= t <= n-l.
inline StarPlan solve_small_target(int n, int l, int t, std::int64_t m) {
  if (l < 2 || n > max_ground) throw error(errc::out_of_small_range, "needs l >= 2 and n <= 64");
  const bool t_ok = l == 2 ? (t > l && t <= n - 2) : (t >= l + 3 && t <= n - l);
  if (!t_ok) throw error(errc::out_of_small_range, "core size t=" + std::to_string(t) + " not allowed");
  Family core = sum_class_family(t, l);
  const auto sigma = static_cast<std::int64_t>(core.size());
  const std::int64_t x = binom(n, l) - m;
  const SmallRange range = small_target_range(n, l, t, sigma);
  if (x < range.x_lo || x > range.x_hi)
    throw error(errc::out_of_small_range, "m=" + std::to_string(m) + " outside [" + std::to_string(binom(n, l) - range.x_hi) +
                                              "," + std::to_string(binom(n, l) - range.x_lo) + "]");
  const std::int64_t step = l - 1;
  std::int64_t s = std::min(x / l, sigma);
  s -= ((s - x) % step + step) % step;  // largest s' <= s with s' == x mod (l-1)
  const std::int64_t alpha = (x - s) / step;
  if (s < 1 || alpha < s || alpha > (n - t) * s)
    throw error(errc::out_of_small_range, "no star distribution for m=" + std::to_string(m));

  std::vector<SubsetMask> chosen(core.begin(), core.begin() + s);
  StarPlan plan{t, Family::from_sorted(t, l, std::move(chosen)), {}};
  plan.star_sizes.assign(static_cast<std::size_t>(s), static_cast<int>(alpha / s));
  for (std::int64_t i = 0; i < alpha % s; ++i) ++plan.star_sizes[static_cast<std::size_t>(i)];
  return plan;
}

}  // namespace flatac
