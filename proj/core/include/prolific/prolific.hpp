#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prolific/permutation.hpp"

namespace prolific {

enum class Method { Breadth, Oracle };

/// Result of a k-prolificity test.  `breadth` and `max_prolific_index` are
/// filled by the breadth test; `distinct_patterns`/`max_patterns` by the
/// brute-force oracle.  max_prolific_index = breadth - 2 is the largest j for
/// which the permutation is j-prolific (0 when it is none).
struct ProlificVerdict {
  int k = 0;
  bool is_prolific = false;
  Method method = Method::Breadth;
  int breadth = 0;
  int max_prolific_index = 0;
  std::uint64_t distinct_patterns = 0;
  std::uint64_t max_patterns = 0;
};

/// Certifies k-prolificity through the breadth characterization:
/// k-prolific iff breadth >= k + 2.  Throws KOutOfRange unless 1 <= k < n.
ProlificVerdict is_k_prolific(const Permutation& p, int k);

struct OracleLimits {
  std::uint64_t max_subsets = 10'000'000;  ///< guard on C(n,k)
};

/// Certifies k-prolificity by enumerating all C(n,k) deletions and counting
/// distinct patterns.  Shares only delete_entries() with the rest of the
/// library; no breadth or geometry code is involved.  Throws TooLarge when
/// C(n,k) exceeds the guard.
ProlificVerdict is_k_prolific_oracle(const Permutation& p, int k,
                                     const OracleLimits& limits = {});

/// Number of distinct size-(n-k) patterns contained in p (at most C(n,k)).
std::uint64_t distinct_pattern_count(const Permutation& p, int k,
                                     const OracleLimits& limits = {});

/// Certificate of non-prolificity: two distinct k-sets of positions whose
/// deletions give the same pattern.
struct DeletionWitness {
  IndexSet a;
  IndexSet b;
  Permutation common_pattern;
};

/// For a non-k-prolific permutation, builds a witness from a breadth-minimal
/// pair (i, j): A = span ∪ {i} ∪ X and B = span ∪ {j} ∪ X, where X pads with
/// the smallest free indices.  Returns nullopt exactly when p is k-prolific.
std::optional<DeletionWitness> find_witness(const Permutation& p, int k);

/// Exhaustively searches for a witness whose index sets are disjoint (the
/// form required by chain graphs).  Subject to the oracle guard; positions
/// are additionally limited to n <= 32.
std::optional<DeletionWitness> find_disjoint_witness(
    const Permutation& p, int k, const OracleLimits& limits = {});

enum class VertexColor { Uncolored, Red, Blue };

/// Plane graph on the plot of a permutation induced by a disjoint witness:
/// position a-sets are red, b-sets blue, and the points fulfilling the same
/// pattern index are joined (or become fixed points when they coincide).
struct ChainGraph {
  enum class Trend { Increasing, Decreasing };
  enum class HorizontalOrientation { Leftward, Rightward };
  enum class VerticalOrientation { Upward, Downward };

  struct Edge {
    int a_end = 0;          ///< position fulfilling the pattern entry after deleting a
    int b_end = 0;          ///< position fulfilling it after deleting b
    int pattern_index = 0;  ///< 1-based index into the common pattern
  };

  /// A maximal path.  `positions` runs left to right.
  struct Chain {
    std::vector<int> positions;
    Trend trend = Trend::Increasing;
    HorizontalOrientation horizontal = HorizontalOrientation::Rightward;
    VerticalOrientation vertical = VerticalOrientation::Upward;
    int red_end = 0;
    int blue_end = 0;
  };

  Permutation perm;
  int k = 0;
  std::vector<VertexColor> colors;  ///< by position, colors[pos-1]
  std::vector<Edge> edges;
  std::vector<Chain> chains;        ///< sorted by leftmost position
  std::vector<int> fixed_points;    ///< positions, ascending
  std::vector<int> discrepancy;     ///< δ(p) = reds strictly left − blues strictly left
};

/// Builds the chain graph of `p` for a disjoint witness.  Throws NotDisjoint
/// when the index sets intersect and InvalidWitness when their deletions
/// disagree.
ChainGraph build_chain_graph(const Permutation& p, const DeletionWitness& w);

/// Structural laws a chain graph of a genuine disjoint witness must satisfy.
/// Failures are report entries, never exceptions.
struct ChainGraphReport {
  int chain_count = 0;
  int increasing_count = 0;
  int decreasing_count = 0;
  int fixed_point_count = 0;
  std::map<std::string, bool> checks;
  bool all_pass() const;
};

ChainGraphReport validate_chain_graph(const ChainGraph& g);

/// True iff deleting any single entry decreases the breadth by at most one.
/// Requires n >= 3.
bool breadth_after_deletion_check(const Permutation& p);

}  // namespace prolific
