#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prolific/errors.hpp"

namespace prolific {

/// A permutation of [n] in one-line notation.  Positions and values are
/// 1-based throughout the public API; `one_line()[i-1]` equals `(*this)(i)`.
/// Instances are immutable after construction and safe to share across
/// threads.
class Permutation {
 public:
  /// Validates that `one_line` is a bijection on [n], n >= 1.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  /// Parses whitespace- or comma-separated positive integers.
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(vals_.size()); }

  /// Value at 1-based position `pos`.
  int operator()(int pos) const { return vals_[static_cast<size_t>(pos) - 1]; }

  const std::vector<int>& one_line() const noexcept { return vals_; }

  /// Space-separated one-line notation, e.g. "2 4 1 3".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Permutation& p);

 private:
  std::vector<int> vals_;
};

/// A sorted set of distinct 1-based indices.  Bounds against a particular
/// permutation size are checked by the operations that take one.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> indices);
  explicit IndexSet(std::vector<int> indices);

  int size() const noexcept { return static_cast<int>(idx_.size()); }
  bool empty() const noexcept { return idx_.empty(); }
  bool contains(int i) const;
  bool disjoint_with(const IndexSet& other) const;
  IndexSet unioned(const IndexSet& other) const;

  const std::vector<int>& indices() const noexcept { return idx_; }
  auto begin() const noexcept { return idx_.begin(); }
  auto end() const noexcept { return idx_.end(); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> idx_;
};

/// A pair of distinct 1-based positions.
struct PointPair {
  int i = 0;
  int j = 0;
  friend bool operator==(const PointPair&, const PointPair&) = default;
};

/// Pattern obtained by deleting the entries at `positions` and rank-reducing
/// the rest.  delete_entries(p, {}) == p.  Throws DeletesEverything when
/// every position is removed.
Permutation delete_entries(const Permutation& p, const IndexSet& positions);

/// Allocation-free variant for hot loops: writes the rank-reduced word into
/// `out`.  `positions` must be sorted, distinct, in range and not cover all
/// of [n]; this is not re-validated here.
void delete_entries_into(const Permutation& p, std::span<const int> positions,
                         std::vector<int>& out);

/// True iff some index subsequence of `p` is order-isomorphic to `pattern`.
bool contains(const Permutation& p, const Permutation& pattern);

/// Lexicographically smallest occurrence of `pattern` in `p` (1-based
/// positions), or nullopt.
std::optional<std::vector<int>> find_occurrence(const Permutation& p,
                                                const Permutation& pattern);

/// L1 distance between the plot points at the two positions.
int distance(const Permutation& p, PointPair pair);

struct BreadthResult {
  int value = 0;
  PointPair pair;  ///< lexicographically smallest minimizing pair
};

/// Minimum L1 distance over all pairs of distinct plot points.  Throws
/// SizeOne for n == 1.
BreadthResult breadth(const Permutation& p);

/// Fast threshold test: true iff every pair of plot points is at L1 distance
/// >= t.  O(n*t) instead of O(n^2).
bool breadth_at_least(const Permutation& p, int t);
bool breadth_at_least(std::span<const int> one_line, int t);

/// Entries whose position lies strictly between the pair's positions OR
/// whose value lies strictly between the pair's values (central = AND).
/// The pair's own positions are excluded.
IndexSet span(const Permutation& p, PointPair pair, bool central = false);

/// How the span points of a pair cut it.  Points beyond both positions cut
/// from the left/right; points beyond both values cut from below/above;
/// central-span points cut once horizontally and once vertically.
struct CutCounts {
  int left = 0;
  int right = 0;
  int below = 0;
  int above = 0;
  int central = 0;
  int horizontal() const { return left + right + central; }
  int vertical() const { return below + above + central; }
  int total() const { return horizontal() + vertical(); }
};

/// Satisfies distance(p, pair) == 2 + count_cuts(p, pair).total().
CutCounts count_cuts(const Permutation& p, PointPair pair);

enum class Symmetry { Reverse, Complement, Inverse };

Permutation apply_symmetry(const Permutation& p, Symmetry s);

/// Applies the symmetries left to right.
Permutation apply_symmetry(const Permutation& p, std::span<const Symmetry> seq);

/// The 8 dihedral images of the plot (identity first).  Images need not be
/// distinct for symmetric permutations.
std::array<Permutation, 8> all_symmetries(const Permutation& p);

}  // namespace prolific
