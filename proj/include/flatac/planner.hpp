#pragma once

// Choosing a construction for a target size.
//
// Planning is pure interval arithmetic and produces a postfix trace: leaf
// steps (base, topRow, star, level12) push an antichain, lift steps pop their
// inputs and push the lifted result. Replaying the trace builds the antichain;
// the public construct_* functions then certify it with check_maximal_flat.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flatac/antichain.hpp"
#include "flatac/base_l2.hpp"
#include "flatac/error.hpp"
#include "flatac/lift.hpp"
#include "flatac/setfam.hpp"
#include "flatac/shadow_disjoint.hpp"

namespace flatac {

struct SizeInterval {
  std::int64_t lo = 1;
  std::int64_t hi = 0;
  int n = 0;
  int l = 0;

  [[nodiscard]] bool empty() const { return lo > hi; }
  [[nodiscard]] bool contains(std::int64_t m) const { return lo <= m && m <= hi; }
  [[nodiscard]] std::int64_t length() const { return empty() ? 0 : hi - lo + 1; }
  friend bool operator==(const SizeInterval&, const SizeInterval&) = default;
};

enum class rule { base, top_row, star, level12, lift1, lift2, lift3 };

constexpr std::string_view to_string(rule r) {
  switch (r) {
    case rule::base: return "base";
    case rule::top_row: return "topRow";
    case rule::star: return "star";
    case rule::level12: return "level12";
    case rule::lift1: return "lift1";
    case rule::lift2: return "lift2";
    case rule::lift3: return "lift3";
  }
  return "?";
}

inline std::optional<rule> rule_from_string(std::string_view s) {
  for (rule r : {rule::base, rule::top_row, rule::star, rule::level12, rule::lift1, rule::lift2, rule::lift3})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

/// One trace step; n, l, size describe the antichain the step leaves on the
/// stack. t is the core size for star steps and the clique size for level12.
struct TraceStep {
  rule kind = rule::base;
  int n = 0;
  int l = 0;
  std::int64_t size = 0;
  int t = 0;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ConstructionTrace {
  std::vector<TraceStep> steps;
  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

struct Construction {
  FlatAntichain antichain;
  ConstructionTrace trace;
};

// ---------------------------------------------------------------- intervals

namespace detail {

inline void check_level(int n, int l) {
  if (n > max_ground || l < 2 || 2 * l + 2 > n)
    throw error(errc::level_range, "need 2 <= l <= (n-2)/2 (n=" + std::to_string(n) + ", l=" + std::to_string(l) + ")");
}

/// C(n,l+1) - (n-l-1) ceil((n-l)/2): the top of every per-level interval.
inline std::int64_t level_right_end(int n, int l) {
  return binom(n, l + 1) - static_cast<std::int64_t>(n - l - 1) * ceil_div(n - l, 2);
}

}  // namespace detail

/// [C(n,l) - 3 - C_l, C(n,l+1) - (n-l-1) ceil((n-l)/2) + f(n-l)].
inline SizeInterval interval_large(int n, int l) {
  detail::check_level(n, l);
  return {binom(n, l) - 3 - catalan_prefix_sum(l), detail::level_right_end(n, l) + overlap_f(n - l), n, l};
}

/// The width of the small-size extension below C(n,l) for l >= 3.
inline std::int64_t flat_gamma(int n, int l) {
  const int k = (n + 1) / 2;
  const std::int64_t packing = ceil_div(binom(k, l), k) - l + 2;
  return std::max(3 + catalan_prefix_sum(l), (1 + static_cast<std::int64_t>(l - 1) * (n - k)) * packing);
}

inline SizeInterval interval_flat(int n, int l) {
  detail::check_level(n, l);
  if (l == 2) return {binom(n, 2) - (n + 1) * (n + 1) / 8, detail::level_right_end(n, 2), n, 2};
  return {binom(n, l) - flat_gamma(n, l), detail::level_right_end(n, l), n, l};
}

/// Hull of the two intervals above (a row of the interval table).
inline SizeInterval interval_table_row(int n, int l) {
  const SizeInterval f = interval_flat(n, l);
  const SizeInterval g = interval_large(n, l);
  return {std::min(f.lo, g.lo), std::max(f.hi, g.hi), n, l};
}

/// Core size used for sizes below the large interval: the even half split
/// for l = 2, k = ceil(n/2) otherwise.
inline int star_core_size(int n, int l) {
  if (l == 2) return n % 4 <= 1 ? n / 2 : (n + 2) / 2;
  return (n + 1) / 2;
}

struct GapFiller {
  int n;
  int l;
  int t;
};

/// Levels whose intervals leave a gap to the previous level at small n.
inline constexpr std::array<GapFiller, 3> gap_fillers{{{9, 3, 6}, {10, 3, 6}, {12, 4, 7}}};

inline SizeInterval star_interval(int n, int l, int t) {
  const auto sigma = static_cast<std::int64_t>(sum_class_family(t, l).size());
  const SmallRange r = small_target_range(n, l, t, sigma);
  return {binom(n, l) - r.x_hi, binom(n, l) - r.x_lo, n, l};
}

inline std::optional<SizeInterval> gap_filler_interval(int n, int l) {
  for (const GapFiller& g : gap_fillers)
    if (g.n == n && g.l == l) return star_interval(n, l, g.t);
  return std::nullopt;
}

/// [C(n,2) - floor((n+1)^2/8), C(n,k) - k ceil((k+1)/2)], k = ceil(n/2).
inline SizeInterval theorem_interval(int n) {
  const int k = (n + 1) / 2;
  return {binom(n, 2) - static_cast<std::int64_t>(n + 1) * (n + 1) / 8,
          binom(n, k) - static_cast<std::int64_t>(k) * ceil_div(k + 1, 2), n, 0};
}

// ----------------------------------------------------------------- planning

namespace detail {

inline void plan_base(int n, std::int64_t m, std::vector<TraceStep>& out) {
  const BaseInterval iv = base_case_interval(n);
  if (n < 6 || m < iv.lo || m > iv.hi)
    throw error(errc::out_of_base_interval, "m=" + std::to_string(m) + " outside the base interval for n=" + std::to_string(n));
  if (n == 6 && m == 9) {
    out.push_back({rule::base, 6, 2, 9, 0});
  } else if (m >= top_row_range(n).lo) {
    out.push_back({rule::top_row, n, 2, m, 0});
  } else {
    plan_base(n - 1, m - (n - 1), out);
    out.push_back({rule::lift1, n, 2, m, 0});
  }
}

inline void plan_large(int n, int l, std::int64_t m, std::vector<TraceStep>& out) {
  const SizeInterval iv = interval_large(n, l);
  if (!iv.contains(m))
    throw error(errc::out_of_large_range, "m=" + std::to_string(m) + " outside [" + std::to_string(iv.lo) + "," +
                                              std::to_string(iv.hi) + "] for (n,l)=(" + std::to_string(n) + "," +
                                              std::to_string(l) + ")");
  if (l == 2) {
    plan_base(n, m, out);
    return;
  }
  if (n == 2 * l + 2) {
    if (m >= binom(n, l) - 3 - catalan_prefix_sum(l - 1)) {
      plan_large(n - 1, l - 1, m - binom(n - 1, l + 1), out);
      out.push_back({rule::lift2, n, l, m, 0});
    } else {
      const std::int64_t mid = m - binom(n - 1, l - 1);
      plan_large(n - 2, l - 1, mid - binom(n - 2, l + 1), out);
      out.push_back({rule::lift2, n - 1, l, mid, 0});
      out.push_back({rule::lift1, n, l, m, 0});
    }
    return;
  }
  const std::int64_t add1 = binom(n - 1, l - 1);
  if (interval_large(n - 1, l).contains(m - add1)) {
    plan_large(n - 1, l, m - add1, out);
    out.push_back({rule::lift1, n, l, m, 0});
    return;
  }
  const std::int64_t add2 = binom(n - 1, l + 1);
  if (interval_large(n - 1, l - 1).contains(m - add2)) {
    plan_large(n - 1, l - 1, m - add2, out);
    out.push_back({rule::lift2, n, l, m, 0});
    return;
  }
  const SizeInterval i3 = interval_large(n - 2, l - 1);
  const std::int64_t r = m - binom(n - 2, l + 1) - binom(n - 2, l - 2);
  if (r < 2 * i3.lo || r > 2 * i3.hi)
    throw error(errc::out_of_large_range, "no recursion covers m=" + std::to_string(m));
  const std::int64_t first = std::min(i3.hi, r - i3.lo);
  plan_large(n - 2, l - 1, first, out);
  plan_large(n - 2, l - 1, r - first, out);
  out.push_back({rule::lift3, n, l, m, 0});
}

/// Sizes below the large interval, built from a core on [ceil(n/2)]; for
/// l >= 3 that needs l <= ceil(n/2) - 3.
inline bool in_star_range(int n, int l, std::int64_t m) {
  if (l >= 3 && l > (n + 1) / 2 - 3) return false;
  const SizeInterval f = interval_flat(n, l);
  const SizeInterval g = interval_large(n, l);
  return m >= f.lo && m < g.lo;
}

inline void plan_in_level(int n, int l, std::int64_t m, std::vector<TraceStep>& out) {
  check_level(n, l);
  if (interval_large(n, l).contains(m)) {
    plan_large(n, l, m, out);
    return;
  }
  if (in_star_range(n, l, m)) {
    out.push_back({rule::star, n, l, m, star_core_size(n, l)});
    return;
  }
  for (const GapFiller& g : gap_fillers) {
    if (g.n == n && g.l == l && star_interval(n, l, g.t).contains(m)) {
      out.push_back({rule::star, n, l, m, g.t});
      return;
    }
  }
  throw error(errc::out_of_level_range, "no construction for m=" + std::to_string(m) + " on levels (" +
                                            std::to_string(l) + "," + std::to_string(l + 1) + ") of [" +
                                            std::to_string(n) + "]");
}

}  // namespace detail

/// True if construct_in_level(n, l, m) has a construction.
inline bool level_covers(int n, int l, std::int64_t m) {
  if (interval_large(n, l).contains(m)) return true;
  if (detail::in_star_range(n, l, m)) return true;
  const auto g = gap_filler_interval(n, l);
  return g && g->contains(m);
}

inline ConstructionTrace plan_large(int n, int l, std::int64_t m) {
  ConstructionTrace tr;
  detail::plan_large(n, l, m, tr.steps);
  return tr;
}

inline ConstructionTrace plan_in_level(int n, int l, std::int64_t m) {
  ConstructionTrace tr;
  detail::plan_in_level(n, l, m, tr.steps);
  return tr;
}

/// Sizes C(t,2) + n - t: t-clique pairs plus the remaining singletons.
inline std::int64_t levels12_size(int n, int t) { return binom(t, 2) + n - t; }

inline FlatAntichain levels12_antichain(int n, int t) {
  if (n < 2 || n > max_ground || t < 2 || t > n) throw error(errc::bad_t, "need 2 <= t <= n <= 64");
  std::vector<SubsetMask> upper;
  upper.reserve(static_cast<std::size_t>(binom(t, 2)));
  for_each_subset(t, 2, [&](SubsetMask s) { upper.push_back(s); });
  std::vector<SubsetMask> lower;
  for (int e = t + 1; e <= n; ++e) lower.push_back(SubsetMask::of({e}));
  return FlatAntichain(n, 1, Family::from_sorted(n, 2, std::move(upper)), Family::from_sorted(n, 1, std::move(lower)));
}

inline ConstructionTrace plan_main(int n, std::int64_t m) {
  if (n < 6 || n > max_ground) throw error(errc::out_of_theorem_range, "supported for 6 <= n <= 64");
  const SizeInterval th = theorem_interval(n);
  if (!th.contains(m)) {
    nearest_sizes near;
    if (m < th.lo) {
      near.above = th.lo;
      for (int t = 2; t <= n; ++t) {
        const std::int64_t s = levels12_size(n, t);
        if (s < m && (!near.below || s > *near.below)) near.below = s;
      }
    } else {
      near.below = th.hi;
    }
    throw error(errc::out_of_theorem_range,
                "m=" + std::to_string(m) + " outside [" + std::to_string(th.lo) + "," + std::to_string(th.hi) + "]",
                near);
  }
  for (int l = 2; 2 * l + 2 <= n; ++l)
    if (level_covers(n, l, m)) return plan_in_level(n, l, m);
  throw error(errc::out_of_level_range, "no level covers m=" + std::to_string(m) + " for n=" + std::to_string(n));
}

// ------------------------------------------------------------------- replay

/// Runs a postfix trace. Each step's (n, l, size) is checked against what it
/// produced; any mismatch or stack misuse raises BadTrace.
inline FlatAntichain replay(const ConstructionTrace& trace) {
  std::vector<FlatAntichain> stack;
  auto pop = [&]() {
    if (stack.empty()) throw error(errc::bad_trace, "lift step with an empty stack");
    FlatAntichain a = std::move(stack.back());
    stack.pop_back();
    return a;
  };
  for (const TraceStep& s : trace.steps) {
    switch (s.kind) {
      case rule::base:
        if (s.n != 6 || s.l != 2 || s.size != 9) throw error(errc::bad_trace, "base step must be (6,2,9)");
        stack.push_back(six_nine_antichain());
        break;
      case rule::top_row: stack.push_back(top_row_construct(s.n, s.size)); break;
      case rule::star: stack.push_back(star_construct(s.n, s.l, solve_small_target(s.n, s.l, s.t, s.size))); break;
      case rule::level12: stack.push_back(levels12_antichain(s.n, s.t)); break;
      case rule::lift1: stack.push_back(lift_add_isolated(pop())); break;
      case rule::lift2: stack.push_back(lift_join_element(pop())); break;
      case rule::lift3: {
        FlatAntichain a2 = pop();
        FlatAntichain a1 = pop();
        stack.push_back(lift_pair(a1, a2));
        break;
      }
    }
    const FlatAntichain& top = stack.back();
    if (top.n != s.n || top.l != s.l || top.size() != s.size)
      throw error(errc::bad_trace, "step " + std::string(to_string(s.kind)) + " produced (" + std::to_string(top.n) + "," +
                                       std::to_string(top.l) + "," + std::to_string(top.size()) + ")");
  }
  if (stack.size() != 1) throw error(errc::bad_trace, "trace must leave exactly one antichain");
  return std::move(stack.back());
}

// ------------------------------------------------------------- construction

/// Replays the plan and certifies the result; VerificationFailed otherwise.
inline Construction certify(ConstructionTrace trace, std::int64_t m) {
  FlatAntichain a = replay(trace);
  const VerifyReport rep = check_maximal_flat(a);
  if (!rep.is_maximal || rep.size != m)
    throw error(errc::verification_failed, "constructed family of size " + std::to_string(rep.size) +
                                               (rep.is_maximal ? "" : " is not a maximal antichain"));
  return {std::move(a), std::move(trace)};
}

inline Construction construct_large(int n, int l, std::int64_t m) { return certify(plan_large(n, l, m), m); }

inline Construction construct_in_level(int n, int l, std::int64_t m) { return certify(plan_in_level(n, l, m), m); }

inline Construction construct_main(int n, std::int64_t m) { return certify(plan_main(n, m), m); }

/// Pairs within [t] and singletons outside it, size C(t,2) + n - t.
inline Construction construct_levels12(int n, int t) {
  if (n < 2 || n > max_ground || t < 2 || t > n) throw error(errc::bad_t, "need 2 <= t <= n <= 64");
  ConstructionTrace tr;
  tr.steps.push_back({rule::level12, n, 1, levels12_size(n, t), t});
  return certify(std::move(tr), levels12_size(n, t));
}

}  // namespace flatac
