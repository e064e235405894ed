#pragma once

// Flat antichains on two consecutive levels and their certification.
//
// A flat antichain on levels (l, l+1) is maximal iff
//   lower == C([n], l)   minus shadow(upper)   and
//   upper == C([n], l+1) minus shade(lower).
// check_maximal_flat recomputes both identities from the families alone; it
// never trusts how an antichain was built.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flatac/error.hpp"
#include "flatac/setfam.hpp"

namespace flatac {

struct FlatAntichain {
  int n = 0;
  int l = 0;
  Family upper;  // (l+1)-sets
  Family lower;  // l-sets

  FlatAntichain() = default;

  /// Throws BadFamily unless the families sit on levels l+1 and l of [n] and
  /// 2 <= l+1 <= n.
  FlatAntichain(int n_, int l_, Family upper_, Family lower_)
      : n(n_), l(l_), upper(std::move(upper_)), lower(std::move(lower_)) {
    if (l < 0 || l + 1 < 2 || l + 1 > n) throw error(errc::bad_family, "levels outside 2 <= l+1 <= n");
    if (upper.n() != n || lower.n() != n) throw error(errc::bad_family, "families over a different ground set");
    if (upper.card() != l + 1 || lower.card() != l) throw error(errc::bad_family, "families on the wrong levels");
  }

  [[nodiscard]] std::int64_t size() const {
    return static_cast<std::int64_t>(upper.size() + lower.size());
  }

  friend bool operator==(const FlatAntichain&, const FlatAntichain&) = default;
};

struct VerifyReport {
  bool is_antichain = false;
  bool is_maximal = false;
  std::int64_t size = 0;
  /// Colex-least set on levels l or l+1 that could be added; present iff
  /// is_antichain && !is_maximal.
  std::optional<SubsetMask> witness;
};

/// F together with every l-set outside its shadow.
inline FlatAntichain assemble_from_upper(int n, int l, const Family& upper) {
  if (upper.card() != l + 1 || upper.n() != n)
    throw error(errc::bad_family, "upper family must consist of (l+1)-subsets of [n]");
  if (l < 1 || l + 1 > n) throw error(errc::bad_family, "levels outside 2 <= l+1 <= n");
  const Family covered = shadow(upper);
  std::vector<SubsetMask> lower;
  lower.reserve(static_cast<std::size_t>(binom(n, l)) - covered.size());
  auto it = covered.begin();
  for_each_subset(n, l, [&](SubsetMask s) {
    if (it != covered.end() && *it == s) {
      ++it;
    } else {
      lower.push_back(s);
    }
  });
  return FlatAntichain(n, l, upper, Family::from_sorted(n, l, std::move(lower)));
}

enum class verify_engine { automatic, dense, sparse };

/// Dense bitmaps over all 2^n masks are used up to this ground size.
inline constexpr int dense_verify_limit = 26;

namespace detail {

// Bit j of word w stands for mask 64*w + j.
inline constexpr std::array<std::uint64_t, 6> in_word_bit = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};

// in_word_popcount[r]: bits j in [0,64) with popcount(j) == r.
inline constexpr auto in_word_popcount = [] {
  std::array<std::uint64_t, 7> m{};
  for (int j = 0; j < 64; ++j) m[static_cast<std::size_t>(std::popcount(static_cast<unsigned>(j)))] |= std::uint64_t{1} << j;
  return m;
}();

class MaskBitmap {
 public:
  explicit MaskBitmap(int n) : n_(n), words_(n <= 6 ? 1 : std::size_t{1} << (n - 6), 0) {}

  void set(std::uint64_t mask) { words_[mask >> 6] |= std::uint64_t{1} << (mask & 63); }
  void fill(std::span<const SubsetMask> members) {
    for (SubsetMask s : members) set(s.bits);
  }

  /// this |= { X : X + {i} in src for some i not in X }.
  void or_shadow_of(const MaskBitmap& src) { or_neighbours<true>(src); }

  /// this |= { X + {i} : X in src, i in [n] not in X }.
  void or_shade_of(const MaskBitmap& src) { or_neighbours<false>(src); }

  [[nodiscard]] std::int64_t count() const {
    std::int64_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  [[nodiscard]] bool intersects(const MaskBitmap& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }

  /// Least mask of the given cardinality (within [n]) set in neither a nor b.
  static std::optional<SubsetMask> least_outside(const MaskBitmap& a, const MaskBitmap& b, int card) {
    const std::uint64_t limit = a.n_ >= 6 ? ~std::uint64_t{0} : ground_mask(1 << a.n_);
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      const int need = card - std::popcount(static_cast<std::uint64_t>(w));
      if (need < 0 || need > 6) continue;
      const std::uint64_t free = ~(a.words_[w] | b.words_[w]) & in_word_popcount[static_cast<std::size_t>(need)] & limit;
      if (free != 0) return SubsetMask{(static_cast<std::uint64_t>(w) << 6) | static_cast<std::uint64_t>(std::countr_zero(free))};
    }
    return std::nullopt;
  }

 private:
  // Words are processed in chunks that stay in cache: every element whose
  // bit offset falls inside a chunk is handled there, and only the few top
  // elements take a pass over the whole array.
  static constexpr std::size_t chunk_words = std::size_t{1} << 14;

  template <bool Down>
  void or_neighbours(const MaskBitmap& src) {
    const std::size_t count = words_.size();
    const std::size_t chunk = std::min(count, chunk_words);
    const int in_word = std::min(n_, 6);
    for (std::size_t c0 = 0; c0 < count; c0 += chunk) {
      for (std::size_t w = c0; w < c0 + chunk; ++w) {
        const std::uint64_t x = src.words_[w];
        std::uint64_t acc = 0;
        for (int i = 0; i < in_word; ++i) {
          const std::uint64_t sel = in_word_bit[static_cast<std::size_t>(i)];
          if constexpr (Down) acc |= (x & sel) >> (1 << i);
          else acc |= (x & ~sel) << (1 << i);
        }
        words_[w] |= acc;
      }
      for (std::size_t stride = 1; stride < chunk && 6 + std::countr_zero(stride) < n_; stride <<= 1)
        stride_pass<Down>(src, c0, c0 + chunk, stride);
    }
    for (std::size_t stride = chunk; stride < count; stride <<= 1) stride_pass<Down>(src, 0, count, stride);
  }

  template <bool Down>
  void stride_pass(const MaskBitmap& src, std::size_t from, std::size_t to, std::size_t stride) {
    for (std::size_t base = from; base < to; base += 2 * stride) {
      std::uint64_t* lo = words_.data() + base;
      const std::uint64_t* slo = src.words_.data() + base;
      if constexpr (Down) {
        for (std::size_t w = 0; w < stride; ++w) lo[w] |= slo[w + stride];
      } else {
        for (std::size_t w = 0; w < stride; ++w) lo[w + stride] |= slo[w];
      }
    }
  }

  int n_;
  std::vector<std::uint64_t> words_;
};

inline VerifyReport verify_dense(const FlatAntichain& a) {
  VerifyReport report;
  report.size = a.size();
  MaskBitmap up(a.n), low(a.n);
  up.fill(a.upper.members());
  low.fill(a.lower.members());
  if (up.count() != static_cast<std::int64_t>(a.upper.size()) ||
      low.count() != static_cast<std::int64_t>(a.lower.size()))
    return report;  // duplicate members: not a set family

  MaskBitmap covered(a.n);
  covered.or_shadow_of(up);
  report.is_antichain = !covered.intersects(low);
  if (!report.is_antichain) return report;

  MaskBitmap raised(a.n);
  raised.or_shade_of(low);
  const bool lower_ok = covered.count() + low.count() == binom(a.n, a.l);
  const bool upper_ok = raised.count() + up.count() == binom(a.n, a.l + 1);
  report.is_maximal = lower_ok && upper_ok;
  if (!report.is_maximal) {
    auto x = MaskBitmap::least_outside(low, covered, a.l);
    auto y = MaskBitmap::least_outside(up, raised, a.l + 1);
    if (x && y) report.witness = std::min(*x, *y);
    else report.witness = x ? x : y;
  }
  return report;
}

inline bool strictly_increasing(std::span<const SubsetMask> v) {
  return std::adjacent_find(v.begin(), v.end(), [](SubsetMask p, SubsetMask q) { return !(p < q); }) == v.end();
}

inline VerifyReport verify_sparse(const FlatAntichain& a) {
  VerifyReport report;
  report.size = a.size();
  const auto up = a.upper.members();
  const auto low = a.lower.members();
  if (!strictly_increasing(up) || !strictly_increasing(low)) return report;

  std::vector<SubsetMask> covered;
  covered.reserve(up.size() * static_cast<std::size_t>(a.l + 1));
  for (SubsetMask s : up) {
    for (std::uint64_t b = s.bits; b != 0; b &= b - 1) {
      const SubsetMask x{s.bits & ~(b & (~b + 1))};
      if (std::binary_search(low.begin(), low.end(), x)) return report;
      covered.push_back(x);
    }
  }
  report.is_antichain = true;
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());

  std::optional<SubsetMask> witness;
  // Level l: every l-set is in lower or in the shadow.
  {
    auto li = low.begin();
    auto ci = covered.begin();
    for_each_subset(a.n, a.l, [&](SubsetMask x) {
      bool in_low = li != low.end() && *li == x;
      bool in_cov = ci != covered.end() && *ci == x;
      if (in_low) ++li;
      if (in_cov) ++ci;
      if (!in_low && !in_cov && !witness) witness = x;
    });
  }
  // Level l+1: every (l+1)-set outside upper contains a lower set.
  {
    auto ui = up.begin();
    std::optional<SubsetMask> first_free;
    for_each_subset(a.n, a.l + 1, [&](SubsetMask y) {
      if (first_free) return;
      if (ui != up.end() && *ui == y) {
        ++ui;
        return;
      }
      for (std::uint64_t b = y.bits; b != 0; b &= b - 1)
        if (std::binary_search(low.begin(), low.end(), SubsetMask{y.bits & ~(b & (~b + 1))})) return;
      first_free = y;
    });
    if (first_free && (!witness || *first_free < *witness)) witness = first_free;
  }
  report.is_maximal = !witness.has_value();
  report.witness = witness;
  return report;
}

}  // namespace detail

/// Recomputes antichain and maximality from scratch.
inline VerifyReport check_maximal_flat(const FlatAntichain& a, verify_engine engine = verify_engine::automatic) {
  if (engine == verify_engine::automatic)
    engine = a.n <= dense_verify_limit ? verify_engine::dense : verify_engine::sparse;
  if (engine == verify_engine::dense && a.n > dense_verify_limit)
    throw error(errc::level_range, "dense verification limited to n <= 26");
  return engine == verify_engine::dense ? detail::verify_dense(a) : detail::verify_sparse(a);
}

}  // namespace flatac
