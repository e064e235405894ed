#pragma once

// Set-family primitives over the Boolean lattice B_n (n <= 64).
//
// A subset of [n] = {1..n} is a 64-bit mask with element i at bit i-1. For
// masks of equal cardinality the colexicographic (squashed) order coincides
// with unsigned integer order: the largest element of the symmetric
// difference decides, and that is the highest differing bit. Every Family is
// kept sorted in this order and duplicate-free, so equality is structural.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flatac/error.hpp"

namespace flatac {

inline constexpr int max_ground = 64;

namespace detail {

inline constexpr auto binomial_table = [] {
  std::array<std::array<std::int64_t, max_ground + 1>, max_ground + 1> c{};
  for (int n = 0; n <= max_ground; ++n) {
    c[n][0] = 1;
    for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0);
  }
  return c;
}();

}  // namespace detail

/// C(n, k); zero outside 0 <= k <= n. Exact for n <= 64.
constexpr std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > max_ground) throw error(errc::count_out_of_range, "binomial argument above 64");
  return detail::binomial_table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

struct SubsetMask {
  std::uint64_t bits = 0;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t b) : bits(b) {}

  /// Builds a mask from 1-based elements.
  static constexpr SubsetMask of(std::initializer_list<int> elements) {
    std::uint64_t b = 0;
    for (int e : elements) b |= std::uint64_t{1} << (e - 1);
    return SubsetMask{b};
  }

  [[nodiscard]] constexpr int size() const { return std::popcount(bits); }
  [[nodiscard]] constexpr bool contains(int element) const {
    return ((bits >> (element - 1)) & 1U) != 0;
  }
  [[nodiscard]] constexpr bool subset_of(SubsetMask other) const {
    return (bits & ~other.bits) == 0;
  }
  [[nodiscard]] constexpr SubsetMask with(int element) const {
    return SubsetMask{bits | (std::uint64_t{1} << (element - 1))};
  }
  [[nodiscard]] constexpr SubsetMask without(int element) const {
    return SubsetMask{bits & ~(std::uint64_t{1} << (element - 1))};
  }
  /// Highest element, 0 for the empty set.
  [[nodiscard]] constexpr int max_element() const { return 64 - std::countl_zero(bits); }

  [[nodiscard]] std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;
};

/// Mask with the first n elements set.
constexpr std::uint64_t ground_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Next mask with the same popcount in increasing order (Gosper's hack).
constexpr std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t lowest = x & (~x + 1);
  const std::uint64_t ripple = x + lowest;
  if (ripple == 0) return 0;  // wrapped past bit 63
  return ripple | (((x ^ ripple) >> 2) >> std::countr_zero(x));
}

/// Calls fn(SubsetMask) for every card-subset of [n] in colex order.
template <typename Fn>
void for_each_subset(int n, int card, Fn&& fn) {
  if (card < 0 || card > n) return;
  if (card == 0) {
    fn(SubsetMask{0});
    return;
  }
  const std::uint64_t last = ground_mask(n) & ~ground_mask(n - card);
  std::uint64_t x = ground_mask(card);
  while (true) {
    fn(SubsetMask{x});
    if (x == last) break;
    x = next_same_popcount(x);
  }
}

/// A duplicate-free colex-sorted family of equal-cardinality subsets of [n].
class Family {
 public:
  Family() = default;

  /// Sorts and deduplicates; throws BadFamily if a member has the wrong
  /// cardinality or leaves [n].
  Family(int n, int card, std::vector<SubsetMask> members) : n_(n), card_(card) {
    check_shape(n, card);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (SubsetMask s : members) check_member(s);
    members_ = std::move(members);
  }

  Family(int n, int card, std::initializer_list<SubsetMask> members)
      : Family(n, card, std::vector<SubsetMask>(members)) {}

  /// Takes members that are already strictly increasing and of the right
  /// cardinality. Used by constructors that emit members in colex order.
  static Family from_sorted(int n, int card, std::vector<SubsetMask> members) {
    Family f;
    f.n_ = n;
    f.card_ = card;
    f.members_ = std::move(members);
    return f;
  }

  /// The whole level C([n], card).
  static Family level(int n, int card) {
    check_shape(n, card);
    std::vector<SubsetMask> members;
    members.reserve(static_cast<std::size_t>(binom(n, card)));
    for_each_subset(n, card, [&](SubsetMask s) { members.push_back(s); });
    return from_sorted(n, card, std::move(members));
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int card() const { return card_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] std::span<const SubsetMask> members() const { return members_; }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }
  [[nodiscard]] SubsetMask operator[](std::size_t i) const { return members_[i]; }

  [[nodiscard]] bool contains(SubsetMask s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
  }

  /// Releases the member vector (for move-based builders).
  [[nodiscard]] std::vector<SubsetMask> take() && { return std::move(members_); }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  static void check_shape(int n, int card) {
    if (n < 0 || n > max_ground) throw error(errc::bad_family, "ground size outside [0,64]");
    if (card < 0 || card > n) throw error(errc::bad_family, "cardinality outside [0,n]");
  }
  void check_member(SubsetMask s) const {
    if (s.size() != card_ || (s.bits & ~ground_mask(n_)) != 0)
      throw error(errc::bad_family, "member with wrong cardinality or outside [n]");
  }

  int n_ = 0;
  int card_ = 0;
  std::vector<SubsetMask> members_;
};

/// All (card-1)-sets contained in some member.
inline Family shadow(const Family& f) {
  if (f.card() == 0) throw error(errc::empty_cardinality, "shadow of a family of empty sets");
  std::vector<SubsetMask> out;
  out.reserve(f.size() * static_cast<std::size_t>(f.card()));
  for (SubsetMask s : f)
    for (std::uint64_t b = s.bits; b != 0; b &= b - 1)
      out.push_back(SubsetMask{s.bits & ~(b & (~b + 1))});
  return Family(f.n(), f.card() - 1, std::move(out));
}

/// All (card+1)-subsets of [n] containing some member.
inline Family shade(const Family& g) {
  if (g.card() >= g.n()) throw error(errc::full_cardinality, "shade of a family of full sets");
  std::vector<SubsetMask> out;
  out.reserve(g.size() * static_cast<std::size_t>(g.n() - g.card()));
  const std::uint64_t ground = ground_mask(g.n());
  for (SubsetMask s : g)
    for (std::uint64_t b = ground & ~s.bits; b != 0; b &= b - 1)
      out.push_back(SubsetMask{s.bits | (b & (~b + 1))});
  return Family(g.n(), g.card() + 1, std::move(out));
}

/// The first t card-subsets of [n] in colex order.
inline Family colex_prefix(std::int64_t t, int card, int n) {
  if (n < 0 || n > max_ground || card < 0 || card > n)
    throw error(errc::count_out_of_range, "cardinality outside [0,n]");
  if (t < 0 || t > binom(n, card)) throw error(errc::count_out_of_range, "prefix length outside [0, C(n,card)]");
  std::vector<SubsetMask> members;
  members.reserve(static_cast<std::size_t>(t));
  if (t > 0) {
    std::uint64_t x = ground_mask(card);
    for (std::int64_t i = 0; i < t; ++i) {
      members.push_back(SubsetMask{x});
      if (i + 1 < t) x = next_same_popcount(x);
    }
  }
  return Family::from_sorted(n, card, std::move(members));
}

struct CascadeTerm {
  int top;    // a_j
  int index;  // j
  friend bool operator==(const CascadeTerm&, const CascadeTerm&) = default;
};

/// t = sum C(a_j, j) over terms, j running down from the top index.
struct CascadeRep {
  std::vector<CascadeTerm> terms;
  std::int64_t value = 0;

  /// The smallest index r, i.e. the index of the last term.
  [[nodiscard]] int bottom_index() const { return terms.empty() ? 0 : terms.back().index; }
};

/// Greedy cascade of t with top index card: at each index take the largest a
/// with C(a, j) not exceeding the remainder.
inline CascadeRep cascade_representation(std::int64_t t, int card) {
  if (t <= 0) throw error(errc::zero_has_no_cascade, "cascade needs t >= 1");
  if (card < 1) throw error(errc::count_out_of_range, "cascade needs a positive top index");
  CascadeRep rep;
  rep.value = t;
  std::int64_t rest = t;
  for (int j = card; j >= 1 && rest > 0; --j) {
    int a = j;
    while (a + 1 <= max_ground && binom(a + 1, j) <= rest) ++a;
    if (binom(a, j) > rest) throw error(errc::count_out_of_range, "cascade exceeds 64-element range");
    rep.terms.push_back({a, j});
    rest -= binom(a, j);
  }
  if (rest > 0) throw error(errc::count_out_of_range, "cascade exceeds 64-element range");
  return rep;
}

/// Kruskal-Katona: size of the shadow of the first t card-sets in colex order.
inline std::int64_t kk_shadow_size(std::int64_t t, int card) {
  std::int64_t total = 0;
  for (const CascadeTerm& term : cascade_representation(t, card).terms)
    total += binom(term.top, term.index - 1);
  return total;
}

/// Size of the squashed flat antichain on levels (l, l+1) of [n] built from
/// the first t (l+1)-sets in colex order.
inline std::int64_t squashed_size(int n, int l, std::int64_t t) {
  if (l < 0 || l + 1 > n) throw error(errc::count_out_of_range, "levels outside [0,n]");
  if (t < 0 || t > binom(n, l + 1)) throw error(errc::count_out_of_range, "t outside [0, C(n,l+1)]");
  if (t == 0) return binom(n, l);
  return t + binom(n, l) - kk_shadow_size(t, l + 1);
}

/// Sum of the first l Catalan numbers, C_1 + ... + C_l.
inline std::int64_t catalan_prefix_sum(int l) {
  std::int64_t total = 0;
  for (int i = 1; i <= l; ++i) total += binom(2 * i, i) / (i + 1);
  return total;
}

/// Overlap slack used to widen the large-antichain interval to the right.
constexpr std::int64_t overlap_f(std::int64_t t) {
  constexpr std::array<std::int64_t, 11> small{0, 0, 0, 1, 1, 3, 3, 4, 4, 7, 7};
  if (t < 0) return 0;
  if (t <= 10) return small[static_cast<std::size_t>(t)];
  return t - 1;
}

inline std::string to_string(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace flatac
