#pragma once

// Maximal antichains on levels (2,3) through graphs.
//
// A graph G on [n] in which every edge lies in a triangle (a T-graph) gives the
// maximal antichain {triangles of G} + {non-edges of G}. Graphs are stored by
// their complement edge list; G itself is never materialised.
//
// Starters are graphs whose complement is a forest with ceil((n-2)/2) edges.
// Deleting the edges {n,n-1}, {n,n-2}, ... from a properly labelled starter
// walks the antichain size down by a known amount per step, which together
// with the isolated-vertex recursion covers the whole l = 2 interval.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "flatac/antichain.hpp"
#include "flatac/error.hpp"
#include "flatac/lift.hpp"
#include "flatac/setfam.hpp"

namespace flatac {

struct ForestComplementGraph {
  int n = 0;
  std::vector<std::pair<int, int>> comp_edges;

  friend bool operator==(const ForestComplementGraph&, const ForestComplementGraph&) = default;
};

struct TGraphStats {
  std::int64_t edges = 0;            // e(G)
  std::int64_t triangles = 0;        // t(G)
  std::int64_t comp_line_edges = 0;  // e(L(complement))
  std::int64_t comp_triangles = 0;   // t(complement)
};

namespace detail {

inline void check_graph(const ForestComplementGraph& g) {
  if (g.n < 1 || g.n > max_ground) throw error(errc::bad_family, "vertex count outside [1,64]");
  std::vector<std::uint64_t> seen(static_cast<std::size_t>(g.n) + 1, 0);
  for (auto [u, v] : g.comp_edges) {
    if (u < 1 || v < 1 || u > g.n || v > g.n || u == v)
      throw error(errc::bad_family, "complement edge {" + std::to_string(u) + "," + std::to_string(v) + "} invalid");
    const std::uint64_t bv = std::uint64_t{1} << (v - 1);
    if ((seen[static_cast<std::size_t>(u)] & bv) != 0)
      throw error(errc::bad_family, "duplicate complement edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    seen[static_cast<std::size_t>(u)] |= bv;
    seen[static_cast<std::size_t>(v)] |= std::uint64_t{1} << (u - 1);
  }
}

/// adj[v] = complement neighbourhood of v as a mask (index 0 unused).
inline std::vector<std::uint64_t> comp_adjacency(const ForestComplementGraph& g) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.n) + 1, 0);
  for (auto [u, v] : g.comp_edges) {
    adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << (v - 1);
    adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << (u - 1);
  }
  return adj;
}

inline bool three_set_is_triangle(SubsetMask s, const std::vector<std::uint64_t>& adj) {
  for (std::uint64_t b = s.bits; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b) + 1;
    if ((adj[static_cast<std::size_t>(v)] & s.bits) != 0) return false;
  }
  return true;
}

}  // namespace detail

inline TGraphStats tgraph_stats(const ForestComplementGraph& g) {
  detail::check_graph(g);
  const auto adj = detail::comp_adjacency(g);
  TGraphStats st;
  st.edges = binom(g.n, 2) - static_cast<std::int64_t>(g.comp_edges.size());
  for_each_subset(g.n, 3, [&](SubsetMask s) {
    if (detail::three_set_is_triangle(s, adj)) ++st.triangles;
  });
  for (int v = 1; v <= g.n; ++v) st.comp_line_edges += binom(std::popcount(adj[static_cast<std::size_t>(v)]), 2);
  std::int64_t closed = 0;
  for (auto [u, v] : g.comp_edges)
    closed += std::popcount(adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)]);
  st.comp_triangles = closed / 3;
  return st;
}

/// C(n,3) - (n-3) e(comp) + e(L(comp)) - t(comp); the antichain size for T-graphs.
inline std::int64_t phi(const ForestComplementGraph& g) {
  const TGraphStats st = tgraph_stats(g);
  const auto e = static_cast<std::int64_t>(g.comp_edges.size());
  return binom(g.n, 3) - (g.n - 3) * e + st.comp_line_edges - st.comp_triangles;
}

inline bool is_forest(const ForestComplementGraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [u, v] : g.comp_edges) {
    const int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[static_cast<std::size_t>(ru)] = rv;
  }
  return true;
}

/// Starter edge count ceil((n-2)/2).
constexpr int starter_edge_count(int n) { return (n - 1) / 2; }

inline bool is_starter(const ForestComplementGraph& g) {
  return static_cast<int>(g.comp_edges.size()) == starter_edge_count(g.n) && is_forest(g);
}

/// Triangles as the upper family, non-edges as the lower family.
/// Throws NotTGraph naming the first edge of G that lies in no triangle.
inline FlatAntichain tgraph_to_antichain(const ForestComplementGraph& g) {
  detail::check_graph(g);
  if (g.n < 3) throw error(errc::level_range, "T-graph antichains need n >= 3");
  const auto adj = detail::comp_adjacency(g);
  const std::uint64_t ground = ground_mask(g.n);
  for (int p = 1; p <= g.n; ++p) {
    for (int q = p + 1; q <= g.n; ++q) {
      const std::uint64_t bq = std::uint64_t{1} << (q - 1);
      if ((adj[static_cast<std::size_t>(p)] & bq) != 0) continue;
      const std::uint64_t blocked = adj[static_cast<std::size_t>(p)] | adj[static_cast<std::size_t>(q)] |
                                    (std::uint64_t{1} << (p - 1)) | bq;
      if ((ground & ~blocked) == 0)
        throw error(errc::not_t_graph, "edge {" + std::to_string(p) + "," + std::to_string(q) + "} lies in no triangle");
    }
  }
  std::vector<SubsetMask> upper;
  upper.reserve(static_cast<std::size_t>(binom(g.n, 3)));
  for_each_subset(g.n, 3, [&](SubsetMask s) {
    if (detail::three_set_is_triangle(s, adj)) upper.push_back(s);
  });
  std::vector<SubsetMask> lower;
  lower.reserve(g.comp_edges.size());
  for (auto [u, v] : g.comp_edges) lower.push_back(SubsetMask::of({u, v}));
  std::sort(lower.begin(), lower.end());
  return FlatAntichain(g.n, 2, Family::from_sorted(g.n, 3, std::move(upper)),
                       Family::from_sorted(g.n, 2, std::move(lower)));
}

/// Constructive lower bound on the longest run 0..i of starter line-graph
/// edge counts, as established case by case for small n.
constexpr int istar_bound(int n) {
  if (n < 3) return -1;
  if (n <= 4) return 0;
  if (n <= 6) return 1;
  if (n <= 8) return 3;
  if (n <= 10) return 4;
  if (n <= 12) return 7;
  return n % 2 == 1 ? n - 2 : n - 3;
}

/// Adds 2t vertices to an n'-starter and joins its smallest leaf to the first
/// t of them; e(L(comp)) grows by C(t+1, 2).
inline ForestComplementGraph leaf_extension(const ForestComplementGraph& g, int t) {
  if (t < 1) throw error(errc::bad_family, "leaf extension needs t >= 1");
  if (g.n + 2 * t > max_ground) throw error(errc::bad_family, "leaf extension leaves the 64-element range");
  const auto adj = detail::comp_adjacency(g);
  int leaf = 0;
  for (int v = 1; v <= g.n && leaf == 0; ++v)
    if (std::popcount(adj[static_cast<std::size_t>(v)]) == 1) leaf = v;
  if (leaf == 0) throw error(errc::bad_family, "complement forest has no leaf");
  ForestComplementGraph out{g.n + 2 * t, g.comp_edges};
  for (int j = 1; j <= t; ++j) out.comp_edges.emplace_back(leaf, g.n + j);
  return out;
}

namespace detail {

inline ForestComplementGraph add_isolated_vertex(ForestComplementGraph g) {
  ++g.n;
  return g;
}

inline ForestComplementGraph add_edge_on_new_pair(ForestComplementGraph g) {
  g.n += 2;
  g.comp_edges.emplace_back(g.n - 1, g.n);
  return g;
}

inline ForestComplementGraph starter_impl(int n, int i) {
  if (n % 2 == 0) return add_isolated_vertex(starter_impl(n - 1, i));
  if (i == 0) {
    ForestComplementGraph g{n, {}};
    for (int j = 1; j <= starter_edge_count(n); ++j) g.comp_edges.emplace_back(n - j, j);
    return g;
  }
  auto mono = [](int m, int k) { return add_edge_on_new_pair(starter_impl(m, k)); };
  auto leaf = [](int t, int m, int k) { return leaf_extension(starter_impl(m, k), t); };
  switch (n) {
    case 5: return leaf(1, 3, 0);
    case 7:
      if (i == 1) return mono(5, 1);
      if (i == 2) return leaf(1, 5, 1);
      return ForestComplementGraph{7, {{1, 2}, {1, 3}, {1, 4}}};
    case 9: return i <= 3 ? mono(7, i) : leaf(1, 7, 3);
    case 11:
      if (i <= 2) return mono(9, i);
      if (i <= 6) return leaf(2, 7, i - 3);
      return ForestComplementGraph{11, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}}};
    case 13:
      if (i <= 5) return mono(11, i);
      if (i <= 9) return leaf(3, 7, i - 6);
      return leaf(4, 5, i - 10);
    case 15: return i <= 9 ? mono(13, i) : leaf(4, 7, i - 10);
    case 17:
      if (i <= 9) return mono(15, i);
      if (i <= 14) return leaf(4, 9, i - 10);
      return leaf(5, 7, i - 15);
    default: return i <= 5 ? mono(n - 2, i) : leaf(3, n - 6, i - 6);
  }
}

}  // namespace detail

/// An n-starter with exactly i adjacent complement-edge pairs, for
/// 0 <= i <= istar_bound(n). Accepts n >= 3 so the recursion can reach its
/// small seeds.
inline ForestComplementGraph build_starter(int n, int i) {
  if (n < 3 || n > max_ground) throw error(errc::starter_index_out_of_range, "starters need 3 <= n <= 64");
  if (i < 0 || i > istar_bound(n))
    throw error(errc::starter_index_out_of_range,
                "i=" + std::to_string(i) + " outside [0," + std::to_string(istar_bound(n)) + "] for n=" + std::to_string(n));
  return detail::starter_impl(n, i);
}

/// Vertex n isolated in the complement, and the complement edges are
/// {n-j, b_j} with b_j < n-j for j = 1..ceil((n-2)/2).
inline bool is_properly_labeled(const ForestComplementGraph& g) {
  const int e = starter_edge_count(g.n);
  if (static_cast<int>(g.comp_edges.size()) != e) return false;
  std::vector<int> partner(static_cast<std::size_t>(g.n) + 1, 0);
  for (auto [u, v] : g.comp_edges) {
    const int hi = std::max(u, v), lo = std::min(u, v);
    if (hi < g.n - e || hi >= g.n || partner[static_cast<std::size_t>(hi)] != 0) return false;
    partner[static_cast<std::size_t>(hi)] = lo;
  }
  return true;
}

/// Relabels a starter by peeling leaves: the j-th peeled leaf becomes n-j and
/// an originally isolated vertex becomes n. Remaining vertices keep their
/// relative order on the low labels. Already proper labellings are kept.
inline ForestComplementGraph properly_label(const ForestComplementGraph& g) {
  detail::check_graph(g);
  if (!is_starter(g)) throw error(errc::bad_family, "properly_label needs a starter");
  if (is_properly_labeled(g)) return g;
  const int n = g.n;
  auto adj = detail::comp_adjacency(g);
  std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);

  int isolated = 0;
  for (int v = n; v >= 1 && isolated == 0; --v)
    if (adj[static_cast<std::size_t>(v)] == 0) isolated = v;
  if (isolated == 0) throw error(errc::bad_family, "starter complement has no isolated vertex");
  label[static_cast<std::size_t>(isolated)] = n;

  const int e = starter_edge_count(n);
  for (int j = 1; j <= e; ++j) {
    int leaf = 0;
    for (int v = n; v >= 1 && leaf == 0; --v)
      if (label[static_cast<std::size_t>(v)] == 0 && std::popcount(adj[static_cast<std::size_t>(v)]) == 1) leaf = v;
    const int other = std::countr_zero(adj[static_cast<std::size_t>(leaf)]) + 1;
    adj[static_cast<std::size_t>(leaf)] = 0;
    adj[static_cast<std::size_t>(other)] &= ~(std::uint64_t{1} << (leaf - 1));
    label[static_cast<std::size_t>(leaf)] = n - j;
  }
  int next = 1;
  for (int v = 1; v <= n; ++v)
    if (label[static_cast<std::size_t>(v)] == 0) label[static_cast<std::size_t>(v)] = next++;

  ForestComplementGraph out{n, {}};
  for (auto [u, v] : g.comp_edges) {
    const int a = label[static_cast<std::size_t>(u)], b = label[static_cast<std::size_t>(v)];
    out.comp_edges.emplace_back(std::max(a, b), std::min(a, b));
  }
  std::sort(out.comp_edges.begin(), out.comp_edges.end(), std::greater<>());
  return out;
}

/// Size drop of the j-th deletion step.
constexpr std::int64_t deletion_alpha(int n, int j) {
  return j <= starter_edge_count(n) ? n - j - 3 : n - j - 2;
}

/// G0 with the edges {n,n-1}, ..., {n,n-t} removed (added to the complement).
inline ForestComplementGraph deletion_sequence(const ForestComplementGraph& g0, int t) {
  if (t < 0 || t > g0.n - 3) throw error(errc::too_many_deletions, "t must lie in [0, n-3]");
  if (!is_properly_labeled(g0)) throw error(errc::not_properly_labeled, "deletion needs a properly labelled starter");
  ForestComplementGraph g = g0;
  for (int j = 1; j <= t; ++j) g.comp_edges.emplace_back(g.n, g.n - j);
  return g;
}

struct TopRowRange {
  std::int64_t lo;
  std::int64_t hi;
};

inline TopRowRange top_row_range(int n) {
  const std::int64_t e = starter_edge_count(n);
  const std::int64_t m0 = binom(n, 3) - (n - 3) * e;
  return {binom(n, 3) - binom(n - 2, 2) - (n - 4) * e, m0 + istar_bound(n)};
}

/// The (starter index, deletion count) chosen for a top-row size; the n = 10,
/// m = 91 size is not of this form and reports {-1, -1}.
struct TopRowChoice {
  int i;
  int t;
};

inline TopRowChoice top_row_choice(int n, std::int64_t m) {
  if (n < 6 || n > max_ground) throw error(errc::out_of_top_row, "top row needs 6 <= n <= 64");
  const TopRowRange r = top_row_range(n);
  if (m < r.lo || m > r.hi)
    throw error(errc::out_of_top_row, "m=" + std::to_string(m) + " outside [" + std::to_string(r.lo) + "," +
                                          std::to_string(r.hi) + "] for n=" + std::to_string(n));
  if (n == 10 && m == 91) return {-1, -1};
  const std::int64_t m0 = binom(n, 3) - (n - 3) * static_cast<std::int64_t>(starter_edge_count(n));
  std::int64_t drop = 0;
  int t = 0;
  while (m0 - drop > m) drop += deletion_alpha(n, ++t);
  return {static_cast<int>(m - m0 + drop), t};
}

inline ForestComplementGraph top_row_graph(int n, std::int64_t m) {
  const TopRowChoice c = top_row_choice(n, m);
  if (c.t < 0) return ForestComplementGraph{10, {{10, 9}, {1, 2}, {1, 3}, {1, 4}, {1, 5}}};
  return deletion_sequence(properly_label(build_starter(n, c.i)), c.t);
}

/// Antichain on levels (2,3) of size m from a starter after t deletions.
inline FlatAntichain top_row_construct(int n, std::int64_t m) {
  return tgraph_to_antichain(top_row_graph(n, m));
}

struct BaseInterval {
  std::int64_t lo;
  std::int64_t hi;
};

inline BaseInterval base_case_interval(int n) {
  return {binom(n, 2) - 6,
          binom(n, 3) - (n - 3) * static_cast<std::int64_t>(starter_edge_count(n)) + overlap_f(n - 2)};
}

/// The explicit size-9 antichain on levels (2,3) of [6].
inline FlatAntichain six_nine_antichain() {
  const Family upper(6, 3, {SubsetMask::of({1, 2, 5}), SubsetMask::of({1, 2, 6}),
                            SubsetMask::of({3, 4, 5}), SubsetMask::of({3, 4, 6})});
  return assemble_from_upper(6, 2, upper);
}

/// Any size in [C(n,2)-6, C(n,3)-(n-3)ceil((n-2)/2)+f(n-2)] on levels (2,3):
/// the top row if it reaches m, otherwise the size m-(n-1) one vertex down,
/// lifted by an isolated vertex.
inline FlatAntichain base_case_construct(int n, std::int64_t m) {
  if (n < 6 || n > max_ground) throw error(errc::out_of_base_interval, "base case needs 6 <= n <= 64");
  const BaseInterval iv = base_case_interval(n);
  if (m < iv.lo || m > iv.hi)
    throw error(errc::out_of_base_interval, "m=" + std::to_string(m) + " outside [" + std::to_string(iv.lo) + "," +
                                                std::to_string(iv.hi) + "] for n=" + std::to_string(n));
  if (n == 6 && m == 9) return six_nine_antichain();
  if (m >= top_row_range(n).lo) return top_row_construct(n, m);
  return lift_add_isolated(base_case_construct(n - 1, m - (n - 1)));
}

}  // namespace flatac
