#pragma once

// Exhaustive size spectra for tiny parameters, independent of every
// constructor in the library.
//
// Every maximal antichain on levels (l, l+1) is determined by D = the shadow
// of its upper part: the upper part is then F(D) = {(l+1)-sets whose whole
// shadow lies in D}, and conversely every D gives a maximal antichain
// F(D) + (level l minus shadow F(D)). Sweeping all D therefore visits every
// size in S(n,l).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "flatac/error.hpp"
#include "flatac/setfam.hpp"

namespace flatac {

struct SpectrumResult {
  int n = 0;
  int l = 0;
  std::vector<std::int64_t> sizes;  // ascending, distinct
  std::uint64_t count_explored = 0;
};

inline constexpr int flat_oracle_limit = 24;  // max C(n,l)
inline constexpr int tgraph_oracle_limit = 8;  // max n

namespace detail {

// The sweep over D in [0, 2^bits) is cut into blocks by the top 8 bits of D.
template <typename Sweep>
std::vector<std::int64_t> sweep_blocks(int bits, unsigned threads, Sweep&& sweep) {
  const int block_bits = std::max(0, bits - 8);
  const std::uint64_t blocks = std::uint64_t{1} << (bits - block_bits);
  const std::uint64_t block_len = std::uint64_t{1} << block_bits;
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(blocks)));
  std::vector<std::future<std::vector<bool>>> jobs;
  for (unsigned w = 0; w < threads; ++w) {
    jobs.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async, [&, w] {
      std::vector<bool> hits;
      for (std::uint64_t b = w; b < blocks; b += threads) sweep(b * block_len, (b + 1) * block_len, hits);
      return hits;
    }));
  }
  std::vector<bool> all;
  for (auto& j : jobs) {
    std::vector<bool> hits = j.get();
    if (hits.size() > all.size()) all.resize(hits.size(), false);
    for (std::size_t i = 0; i < hits.size(); ++i)
      if (hits[i]) all[i] = true;
  }
  std::vector<std::int64_t> sizes;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i]) sizes.push_back(static_cast<std::int64_t>(i));
  return sizes;
}

inline void mark(std::vector<bool>& hits, std::int64_t size) {
  const auto i = static_cast<std::size_t>(size);
  if (i >= hits.size()) hits.resize(i + 1, false);
  hits[i] = true;
}

}  // namespace detail

/// S(n,l) by sweeping every subset D of level l. Requires C(n,l) <= 24.
inline SpectrumResult enumerate_flat_spectrum(int n, int l, unsigned threads = std::thread::hardware_concurrency()) {
  if (n < 1 || n > max_ground || l < 0 || l + 1 > n) throw error(errc::level_range, "levels outside [0,n]");
  const std::int64_t lower_count = binom(n, l);
  if (lower_count > flat_oracle_limit)
    throw error(errc::search_too_large, "C(n,l)=" + std::to_string(lower_count) + " exceeds 24");

  // Rank the l-sets, then describe each (l+1)-set by the ranks of its shadow.
  std::vector<std::uint64_t> lower_masks;
  for_each_subset(n, l, [&](SubsetMask s) { lower_masks.push_back(s.bits); });
  std::vector<std::uint32_t> shadow_of;
  for_each_subset(n, l + 1, [&](SubsetMask s) {
    std::uint32_t bits = 0;
    for (std::uint64_t b = s.bits; b != 0; b &= b - 1) {
      const std::uint64_t sub = s.bits & ~(b & (~b + 1));
      const auto it = std::lower_bound(lower_masks.begin(), lower_masks.end(), sub);
      bits |= std::uint32_t{1} << (it - lower_masks.begin());
    }
    shadow_of.push_back(bits);
  });

  const int bits = static_cast<int>(lower_count);
  auto sweep = [&](std::uint64_t from, std::uint64_t to, std::vector<bool>& hits) {
    for (std::uint64_t d = from; d < to; ++d) {
      const auto dd = static_cast<std::uint32_t>(d);
      std::int64_t upper = 0;
      std::uint32_t covered = 0;
      for (std::uint32_t sh : shadow_of) {
        if ((sh & ~dd) == 0) {
          ++upper;
          covered |= sh;
        }
      }
      detail::mark(hits, upper + lower_count - std::popcount(covered));
    }
  };
  SpectrumResult r{n, l, detail::sweep_blocks(bits, threads == 0 ? 1 : threads, sweep), std::uint64_t{1} << bits};
  return r;
}

/// Sizes t(G) + (number of non-edges) over all T-graphs G on [n], n <= 8.
inline SpectrumResult enumerate_tgraph_spectrum(int n, unsigned threads = std::thread::hardware_concurrency()) {
  if (n < 3) throw error(errc::level_range, "T-graph spectra need n >= 3");
  if (n > tgraph_oracle_limit) throw error(errc::search_too_large, "T-graph sweep limited to n <= 8");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  const int bits = static_cast<int>(pairs.size());
  const std::int64_t all_pairs = bits;

  auto sweep = [&](std::uint64_t from, std::uint64_t to, std::vector<bool>& hits) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    for (std::uint64_t g = from; g < to; ++g) {
      std::fill(adj.begin(), adj.end(), 0U);
      for (std::uint64_t b = g; b != 0; b &= b - 1) {
        const auto [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(b))];
        adj[static_cast<std::size_t>(u)] |= 1U << v;
        adj[static_cast<std::size_t>(v)] |= 1U << u;
      }
      bool t_graph = true;
      std::int64_t closed = 0;
      for (std::uint64_t b = g; b != 0 && t_graph; b &= b - 1) {
        const auto [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(b))];
        const int common = std::popcount(adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)]);
        t_graph = common > 0;
        closed += common;
      }
      if (t_graph) detail::mark(hits, closed / 3 + all_pairs - std::popcount(g));
    }
  };
  return {n, 2, detail::sweep_blocks(bits, threads == 0 ? 1 : threads, sweep), std::uint64_t{1} << bits};
}

}  // namespace flatac
