#include "prolific/prolific.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace prolific {

namespace {

void check_k_range(const Permutation& p, int k) {
  if (k < 1 || k >= p.size())
    throw KOutOfRange("k must satisfy 1 <= k < n (k=" + std::to_string(k) +
                      ", n=" + std::to_string(p.size()) + ")");
}

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

// First/next k-subset of [n] as 1-based ascending positions.
void first_combination(std::vector<int>& idx, int k) {
  idx.resize(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i + 1;
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<size_t>(i)] < n - (k - 1 - i)) {
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j) - 1] + 1;
      return true;
    }
  }
  return false;
}

// Canonical set key for a rank-reduced word: 4 bits per letter when it fits
// in a u64, otherwise one byte per letter.
bool fits_u64_key(int m) { return m <= 15; }

std::uint64_t u64_key(const std::vector<int>& word) {
  std::uint64_t key = 0;
  for (int v : word) key = (key << 4) | static_cast<std::uint64_t>(v);
  return key;
}

std::string string_key(const std::vector<int>& word) {
  std::string key;
  key.reserve(word.size());
  for (int v : word) key.push_back(static_cast<char>(v));
  return key;
}

std::uint64_t run_oracle(const Permutation& p, int k, const OracleLimits& limits) {
  check_k_range(p, k);
  const int n = p.size();
  const std::uint64_t subsets = binomial_capped(n, k, limits.max_subsets);
  if (subsets > limits.max_subsets)
    throw TooLarge("C(" + std::to_string(n) + "," + std::to_string(k) +
                   ") exceeds the oracle guard of " +
                   std::to_string(limits.max_subsets));

  std::vector<int> positions;
  first_combination(positions, k);
  std::vector<int> pattern;
  if (fits_u64_key(n - k)) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<size_t>(subsets) * 2);
    do {
      delete_entries_into(p, positions, pattern);
      seen.insert(u64_key(pattern));
    } while (next_combination(positions, n));
    return seen.size();
  }
  std::unordered_set<std::string> seen;
  seen.reserve(static_cast<size_t>(subsets) * 2);
  do {
    delete_entries_into(p, positions, pattern);
    seen.insert(string_key(pattern));
  } while (next_combination(positions, n));
  return seen.size();
}

}  // namespace

ProlificVerdict is_k_prolific(const Permutation& p, int k) {
  check_k_range(p, k);
  const BreadthResult br = breadth(p);
  ProlificVerdict v;
  v.k = k;
  v.method = Method::Breadth;
  v.breadth = br.value;
  v.max_prolific_index = br.value - 2;
  v.is_prolific = k <= v.max_prolific_index;
  return v;
}

ProlificVerdict is_k_prolific_oracle(const Permutation& p, int k,
                                     const OracleLimits& limits) {
  const std::uint64_t distinct = run_oracle(p, k, limits);
  ProlificVerdict v;
  v.k = k;
  v.method = Method::Oracle;
  v.distinct_patterns = distinct;
  v.max_patterns = binomial_capped(p.size(), k, limits.max_subsets);
  v.is_prolific = distinct == v.max_patterns;
  return v;
}

std::uint64_t distinct_pattern_count(const Permutation& p, int k,
                                     const OracleLimits& limits) {
  return run_oracle(p, k, limits);
}

std::optional<DeletionWitness> find_witness(const Permutation& p, int k) {
  check_k_range(p, k);
  const BreadthResult br = breadth(p);
  if (br.value >= k + 2) return std::nullopt;

  // Breadth-minimal pair (i, j): deleting span+{i} and span+{j} leaves the
  // same pattern; X pads both sets to size k with the smallest free indices.
  const IndexSet s = span(p, br.pair, /*central=*/false);
  std::vector<int> a_idx(s.begin(), s.end());
  std::vector<int> b_idx = a_idx;
  a_idx.push_back(br.pair.i);
  b_idx.push_back(br.pair.j);

  int needed = k - static_cast<int>(s.size()) - 1;
  for (int q = 1; q <= p.size() && needed > 0; ++q) {
    if (q == br.pair.i || q == br.pair.j || s.contains(q)) continue;
    a_idx.push_back(q);
    b_idx.push_back(q);
    --needed;
  }

  DeletionWitness w{IndexSet(std::move(a_idx)), IndexSet(std::move(b_idx)),
                    delete_entries(p, IndexSet{br.pair.i})};
  w.common_pattern = delete_entries(p, w.a);
  if (w.common_pattern != delete_entries(p, w.b))
    throw InternalError("witness construction produced unequal deletions");
  return w;
}

std::optional<DeletionWitness> find_disjoint_witness(const Permutation& p,
                                                     int k,
                                                     const OracleLimits& limits) {
  check_k_range(p, k);
  const int n = p.size();
  if (n > 32) throw TooLarge("disjoint witness search supports n <= 32");
  const std::uint64_t subsets = binomial_capped(n, k, limits.max_subsets);
  if (subsets > limits.max_subsets)
    throw TooLarge("C(n,k) exceeds the oracle guard");

  std::unordered_map<std::string, std::vector<std::uint32_t>> buckets;
  std::vector<int> positions;
  first_combination(positions, k);
  std::vector<int> pattern;
  do {
    delete_entries_into(p, positions, pattern);
    std::uint32_t mask = 0;
    for (int pos : positions) mask |= 1u << (pos - 1);
    auto& bucket = buckets[string_key(pattern)];
    for (std::uint32_t other : bucket) {
      if ((other & mask) == 0) {
        std::vector<int> a_idx, b_idx;
        for (int q = 1; q <= n; ++q) {
          if (other & (1u << (q - 1))) a_idx.push_back(q);
          if (mask & (1u << (q - 1))) b_idx.push_back(q);
        }
        DeletionWitness w{IndexSet(std::move(a_idx)), IndexSet(std::move(b_idx)),
                          Permutation(pattern)};
        return w;
      }
    }
    bucket.push_back(mask);
  } while (next_combination(positions, n));
  return std::nullopt;
}

namespace {

// Whether point q cuts the pair (e1, e2) horizontally/vertically.  A point
// beyond both positions with value strictly between cuts horizontally; the
// transpose cuts vertically; a central-span point cuts both ways.
struct PointCut {
  bool horizontal = false;
  bool vertical = false;
};

PointCut point_cut(const Permutation& p, int e1, int e2, int q) {
  const int plo = std::min(e1, e2), phi = std::max(e1, e2);
  const int vlo = std::min(p(e1), p(e2)), vhi = std::max(p(e1), p(e2));
  const bool pos_between = plo < q && q < phi;
  const bool val_between = vlo < p(q) && p(q) < vhi;
  PointCut c;
  if (pos_between && val_between) {
    c.horizontal = c.vertical = true;
  } else if (pos_between) {
    c.vertical = p(q) < vlo || p(q) > vhi;
  } else if (val_between) {
    c.horizontal = q < plo || q > phi;
  }
  return c;
}

}  // namespace

ChainGraph build_chain_graph(const Permutation& p, const DeletionWitness& w) {
  const int n = p.size();
  const int k = w.a.size();
  if (w.b.size() != k) throw InvalidWitness("witness index sets differ in size");
  if (k < 1 || k >= n) throw KOutOfRange("witness size must satisfy 1 <= k < n");
  if (!w.a.disjoint_with(w.b))
    throw NotDisjoint("chain graphs are defined only for disjoint index sets");
  const Permutation pat_a = delete_entries(p, w.a);
  if (pat_a != delete_entries(p, w.b))
    throw InvalidWitness("deletions of the two index sets disagree");
  if (pat_a != w.common_pattern)
    throw InvalidWitness("common_pattern does not match the deletions");

  ChainGraph g{p, k, {}, {}, {}, {}, {}};
  g.colors.assign(static_cast<size_t>(n), VertexColor::Uncolored);
  for (int pos : w.a) g.colors[static_cast<size_t>(pos) - 1] = VertexColor::Red;
  for (int pos : w.b) g.colors[static_cast<size_t>(pos) - 1] = VertexColor::Blue;

  std::vector<int> rest_a, rest_b;
  rest_a.reserve(static_cast<size_t>(n - k));
  rest_b.reserve(static_cast<size_t>(n - k));
  for (int q = 1; q <= n; ++q) {
    if (!w.a.contains(q)) rest_a.push_back(q);
    if (!w.b.contains(q)) rest_b.push_back(q);
  }
  for (int i = 0; i < n - k; ++i) {
    const int u = rest_a[static_cast<size_t>(i)];
    const int v = rest_b[static_cast<size_t>(i)];
    if (u == v)
      g.fixed_points.push_back(u);
    else
      g.edges.push_back(ChainGraph::Edge{u, v, i + 1});
  }

  g.discrepancy.assign(static_cast<size_t>(n), 0);
  int delta = 0;
  for (int q = 1; q <= n; ++q) {
    g.discrepancy[static_cast<size_t>(q) - 1] = delta;
    if (g.colors[static_cast<size_t>(q) - 1] == VertexColor::Red) ++delta;
    if (g.colors[static_cast<size_t>(q) - 1] == VertexColor::Blue) --delta;
  }

  // Decompose into maximal paths.  Degree is at most 2 by construction (a
  // position occurs at most once per fulfillment role).
  std::vector<std::vector<std::pair<int, size_t>>> adj(static_cast<size_t>(n) + 1);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    adj[static_cast<size_t>(g.edges[e].a_end)].push_back({g.edges[e].b_end, e});
    adj[static_cast<size_t>(g.edges[e].b_end)].push_back({g.edges[e].a_end, e});
  }
  std::vector<char> edge_used(g.edges.size(), 0);
  const auto walk_from = [&](int start) {
    std::vector<int> path{start};
    int cur = start;
    for (;;) {
      int next = -1;
      for (auto [nb, e] : adj[static_cast<size_t>(cur)]) {
        if (!edge_used[e]) {
          edge_used[e] = 1;
          next = nb;
          break;
        }
      }
      if (next < 0) break;
      path.push_back(next);
      cur = next;
    }
    return path;
  };
  const auto add_chain = [&](std::vector<int> path) {
    if (path.size() < 2) return;
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    ChainGraph::Chain c;
    c.positions = std::move(path);
    const int front = c.positions.front(), back = c.positions.back();
    c.trend = p(front) < p(back) ? ChainGraph::Trend::Increasing
                                 : ChainGraph::Trend::Decreasing;
    c.red_end = front;
    c.blue_end = back;
    for (int end : {front, back}) {
      if (g.colors[static_cast<size_t>(end) - 1] == VertexColor::Red) c.red_end = end;
      if (g.colors[static_cast<size_t>(end) - 1] == VertexColor::Blue) c.blue_end = end;
    }
    c.horizontal = c.blue_end < c.red_end
                       ? ChainGraph::HorizontalOrientation::Leftward
                       : ChainGraph::HorizontalOrientation::Rightward;
    c.vertical = p(c.blue_end) > p(c.red_end)
                     ? ChainGraph::VerticalOrientation::Upward
                     : ChainGraph::VerticalOrientation::Downward;
    g.chains.push_back(std::move(c));
  };
  for (int q = 1; q <= n; ++q) {
    if (adj[static_cast<size_t>(q)].size() == 1) {
      bool fresh = true;
      for (auto [nb, e] : adj[static_cast<size_t>(q)]) fresh = fresh && !edge_used[e];
      if (fresh) add_chain(walk_from(q));
    }
  }
  // Leftover components would be cycles; impossible for verified witnesses
  // but walked anyway so that validation can report on them.
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (!edge_used[e]) add_chain(walk_from(g.edges[e].a_end));

  std::sort(g.chains.begin(), g.chains.end(),
            [](const ChainGraph::Chain& x, const ChainGraph::Chain& y) {
              return x.positions.front() < y.positions.front();
            });
  return g;
}

bool ChainGraphReport::all_pass() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

ChainGraphReport validate_chain_graph(const ChainGraph& g) {
  const Permutation& p = g.perm;
  const int n = p.size();
  ChainGraphReport r;
  r.chain_count = static_cast<int>(g.chains.size());
  r.fixed_point_count = static_cast<int>(g.fixed_points.size());
  for (const auto& c : g.chains) {
    if (c.trend == ChainGraph::Trend::Increasing) ++r.increasing_count;
    else ++r.decreasing_count;
  }

  const auto color = [&](int pos) { return g.colors[static_cast<size_t>(pos) - 1]; };

  int reds = 0, blues = 0;
  for (auto c : g.colors) {
    reds += c == VertexColor::Red;
    blues += c == VertexColor::Blue;
  }
  r.checks["red_blue_counts"] = reds == g.k && blues == g.k;
  r.checks["chain_count_equals_k"] = static_cast<int>(g.chains.size()) == g.k;

  std::vector<int> degree(static_cast<size_t>(n) + 1, 0);
  for (const auto& e : g.edges) {
    ++degree[static_cast<size_t>(e.a_end)];
    ++degree[static_cast<size_t>(e.b_end)];
  }
  bool degrees_ok = true;
  for (int q = 1; q <= n; ++q) {
    if (degree[static_cast<size_t>(q)] > 2) degrees_ok = false;
    if (color(q) != VertexColor::Uncolored && degree[static_cast<size_t>(q)] != 1)
      degrees_ok = false;
  }
  for (int q : g.fixed_points)
    if (degree[static_cast<size_t>(q)] != 0) degrees_ok = false;
  r.checks["vertex_degrees"] = degrees_ok;

  // Edge endpoints must fulfill the same pattern index, reconstructed from
  // the colouring.
  {
    std::vector<int> rest_a, rest_b;
    for (int q = 1; q <= n; ++q) {
      if (color(q) != VertexColor::Red) rest_a.push_back(q);
      if (color(q) != VertexColor::Blue) rest_b.push_back(q);
    }
    bool ok = true;
    for (const auto& e : g.edges) {
      const size_t i = static_cast<size_t>(e.pattern_index) - 1;
      ok = ok && i < rest_a.size() && rest_a[i] == e.a_end && rest_b[i] == e.b_end;
    }
    r.checks["edge_pattern_fulfillment"] = ok;
  }

  // Discrepancy profile: +1 after red, -1 after blue, 0 otherwise, ending at 0.
  {
    bool ok = static_cast<int>(g.discrepancy.size()) == n;
    int delta = 0;
    for (int q = 1; ok && q <= n; ++q) {
      ok = g.discrepancy[static_cast<size_t>(q) - 1] == delta;
      if (color(q) == VertexColor::Red) ++delta;
      if (color(q) == VertexColor::Blue) --delta;
    }
    r.checks["discrepancy_steps"] = ok && delta == 0;
  }

  // An uncoloured point is fixed exactly when its discrepancy vanishes.
  {
    bool ok = true;
    std::vector<char> is_fixed(static_cast<size_t>(n) + 1, 0);
    for (int q : g.fixed_points) is_fixed[static_cast<size_t>(q)] = 1;
    for (int q = 1; q <= n; ++q) {
      if (color(q) != VertexColor::Uncolored) continue;
      const bool zero = g.discrepancy[static_cast<size_t>(q) - 1] == 0;
      if (zero != static_cast<bool>(is_fixed[static_cast<size_t>(q)])) ok = false;
    }
    r.checks["fixed_points_iff_zero_discrepancy"] = ok;
  }

  bool monotone_ok = true, ends_ok = true, sign_ok = true;
  for (const auto& c : g.chains) {
    const auto& pos = c.positions;
    bool inc = true, dec = true, ordered = true;
    for (size_t t = 0; t + 1 < pos.size(); ++t) {
      ordered = ordered && pos[t] < pos[t + 1];
      inc = inc && p(pos[t]) < p(pos[t + 1]);
      dec = dec && p(pos[t]) > p(pos[t + 1]);
    }
    monotone_ok = monotone_ok && ordered && (inc || dec);

    const int front = pos.front(), back = pos.back();
    const bool front_red = color(front) == VertexColor::Red;
    const bool one_each =
        (color(front) == VertexColor::Red && color(back) == VertexColor::Blue) ||
        (color(front) == VertexColor::Blue && color(back) == VertexColor::Red);
    bool internal_uncolored = true;
    for (size_t t = 1; t + 1 < pos.size(); ++t)
      internal_uncolored =
          internal_uncolored && color(pos[t]) == VertexColor::Uncolored;
    ends_ok = ends_ok && one_each && internal_uncolored;

    // Red left end: delta >= 0 there and strictly positive through the chain
    // to its right end (over every point of the permutation in between).
    const int d_front = g.discrepancy[static_cast<size_t>(front) - 1];
    if (front_red ? d_front < 0 : d_front > 0) sign_ok = false;
    for (int q = front + 1; q <= back; ++q) {
      const int d = g.discrepancy[static_cast<size_t>(q) - 1];
      if (front_red ? d <= 0 : d >= 0) sign_ok = false;
    }
  }
  r.checks["chains_monotone"] = monotone_ok;
  r.checks["chain_ends_one_red_one_blue"] = ends_ok;
  r.checks["discrepancy_sign_along_chains"] = sign_ok;

  // Per-chain edge lists (consecutive path vertices).
  std::vector<std::vector<std::pair<int, int>>> chain_edges(g.chains.size());
  for (size_t ci = 0; ci < g.chains.size(); ++ci)
    for (size_t t = 0; t + 1 < g.chains[ci].positions.size(); ++t)
      chain_edges[ci].push_back(
          {g.chains[ci].positions[t], g.chains[ci].positions[t + 1]});

  {
    bool ok = true;
    for (size_t ci = 0; ci < g.chains.size(); ++ci) {
      for (auto [u, v] : chain_edges[ci]) {
        for (int q : g.chains[ci].positions) {
          if (q == u || q == v) continue;
          const PointCut cut = point_cut(p, u, v, q);
          if (cut.horizontal || cut.vertical) ok = false;
        }
      }
    }
    r.checks["no_cut_by_own_chain"] = ok;
  }

  {
    bool ok = true;
    for (const auto& edges : chain_edges)
      for (auto [u, v] : edges)
        for (int q : g.fixed_points) {
          const PointCut cut = point_cut(p, u, v, q);
          if (cut.horizontal || cut.vertical) ok = false;
        }
    r.checks["no_cut_by_fixed_point"] = ok;
  }

  {
    bool ok = true;
    for (size_t ci = 0; ci < g.chains.size(); ++ci) {
      for (size_t cj = ci + 1; cj < g.chains.size(); ++cj) {
        const auto& a = g.chains[ci];
        const auto& b = g.chains[cj];
        const int al = a.positions.front(), ar = a.positions.back();
        const int bl = b.positions.front(), br_ = b.positions.back();
        if (al < br_ && bl < ar && a.horizontal != b.horizontal) ok = false;
        const auto [abot, atop] = std::minmax({p(al), p(ar)});
        const auto [bbot, btop] = std::minmax({p(bl), p(br_)});
        if (abot < btop && bbot < atop && a.vertical != b.vertical) ok = false;
      }
    }
    r.checks["consistent_orientation"] = ok;
  }

  {
    bool ok = true;
    for (size_t ci = 0; ci < g.chains.size(); ++ci) {
      for (size_t cj = ci + 1; cj < g.chains.size(); ++cj) {
        for (auto [u1, v1] : chain_edges[ci]) {
          for (auto [u2, v2] : chain_edges[cj]) {
            if ((u1 < u2) != (v1 < v2)) ok = false;
            if ((p(u1) < p(u2)) != (p(v1) < p(v2))) ok = false;
          }
        }
      }
    }
    r.checks["interleaving"] = ok;
  }

  {
    bool ok = true;
    for (size_t ci = 0; ci < g.chains.size(); ++ci) {
      for (auto [u, v] : chain_edges[ci]) {
        for (size_t cj = 0; cj < g.chains.size(); ++cj) {
          if (ci == cj) continue;
          int horiz = 0, vert = 0;
          for (int q : g.chains[cj].positions) {
            const PointCut cut = point_cut(p, u, v, q);
            horiz += cut.horizontal;
            vert += cut.vertical;
          }
          if (horiz > 1 || vert > 1) ok = false;
        }
      }
    }
    r.checks["cut_multiplicity"] = ok;
  }

  return r;
}

bool breadth_after_deletion_check(const Permutation& p) {
  const int n = p.size();
  if (n < 3) throw InvalidArgument("breadth_after_deletion_check needs n >= 3");
  const int br = breadth(p).value;
  for (int i = 1; i <= n; ++i) {
    if (breadth(delete_entries(p, IndexSet{i})).value < br - 1) return false;
  }
  return true;
}

}  // namespace prolific
