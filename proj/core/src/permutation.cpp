#include "prolific/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <sstream>

namespace prolific {

namespace {

void check_pair(const Permutation& p, PointPair pair) {
  const int n = p.size();
  if (pair.i < 1 || pair.i > n || pair.j < 1 || pair.j > n)
    throw InvalidArgument("point pair position out of range");
  if (pair.i == pair.j) throw InvalidArgument("point pair positions must differ");
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : vals_(std::move(one_line)) {
  const int n = static_cast<int>(vals_.size());
  if (n == 0) throw NotAPermutation("a permutation has size at least 1");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : vals_) {
    if (v < 1 || v > n)
      throw NotAPermutation("value " + std::to_string(v) + " outside [1," +
                            std::to_string(n) + "]");
    if (seen[static_cast<size_t>(v) - 1])
      throw NotAPermutation("duplicate value " + std::to_string(v));
    seen[static_cast<size_t>(v) - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw NotAPermutation("a permutation has size at least 1");
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> vals;
  size_t pos = 0;
  const auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
  };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view tok = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw MalformedInput("not an integer: '" + std::string(tok) + "'");
    if (value < 1)
      throw MalformedInput("expected a positive integer, got '" +
                           std::string(tok) + "'");
    vals.push_back(value);
    pos = end;
  }
  if (vals.empty()) throw MalformedInput("empty permutation text");
  return Permutation(std::move(vals));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < vals_.size(); ++i) {
    if (i) os << ' ';
    os << vals_[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}

IndexSet::IndexSet(std::initializer_list<int> indices)
    : IndexSet(std::vector<int>(indices)) {}

IndexSet::IndexSet(std::vector<int> indices) : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  for (size_t i = 0; i < idx_.size(); ++i) {
    if (idx_[i] < 1) throw InvalidArgument("index must be >= 1");
    if (i > 0 && idx_[i] == idx_[i - 1])
      throw InvalidArgument("duplicate index " + std::to_string(idx_[i]));
  }
}

bool IndexSet::contains(int i) const {
  return std::binary_search(idx_.begin(), idx_.end(), i);
}

bool IndexSet::disjoint_with(const IndexSet& other) const {
  auto a = idx_.begin();
  auto b = other.idx_.begin();
  while (a != idx_.end() && b != other.idx_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

IndexSet IndexSet::unioned(const IndexSet& other) const {
  std::vector<int> merged;
  merged.reserve(idx_.size() + other.idx_.size());
  std::set_union(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                 std::back_inserter(merged));
  IndexSet out;
  out.idx_ = std::move(merged);
  return out;
}

void delete_entries_into(const Permutation& p, std::span<const int> positions,
                         std::vector<int>& out) {
  const int n = p.size();
  // Sorted values being removed; the rank drop of a kept value v is the
  // number of removed values below v.
  thread_local std::vector<int> removed_values;
  removed_values.clear();
  removed_values.reserve(positions.size());
  for (int pos : positions) removed_values.push_back(p(pos));
  std::sort(removed_values.begin(), removed_values.end());

  out.clear();
  out.reserve(static_cast<size_t>(n) - positions.size());
  size_t next_del = 0;
  for (int pos = 1; pos <= n; ++pos) {
    if (next_del < positions.size() && positions[next_del] == pos) {
      ++next_del;
      continue;
    }
    const int v = p(pos);
    const auto below = std::lower_bound(removed_values.begin(),
                                        removed_values.end(), v) -
                       removed_values.begin();
    out.push_back(v - static_cast<int>(below));
  }
}

Permutation delete_entries(const Permutation& p, const IndexSet& positions) {
  const int n = p.size();
  for (int i : positions)
    if (i > n) throw InvalidArgument("deletion index " + std::to_string(i) +
                                     " exceeds size " + std::to_string(n));
  if (positions.size() == n)
    throw DeletesEverything("cannot delete all " + std::to_string(n) +
                            " entries");
  if (positions.empty()) return p;
  std::vector<int> out;
  delete_entries_into(p, positions.indices(), out);
  return Permutation(std::move(out));
}

namespace {

// Occurrence search: choose positions left to right; the candidate value must
// lie strictly between the already-chosen values that neighbour the next
// pattern value in rank.
struct OccurrenceSearch {
  const std::vector<int>& word;
  const std::vector<int>& pat;
  std::vector<int> lower_src;  // index t<j of tightest pattern value below pat[j], or -1
  std::vector<int> upper_src;
  std::vector<int> chosen;  // 0-based positions in word

  OccurrenceSearch(const std::vector<int>& w, const std::vector<int>& q)
      : word(w), pat(q), lower_src(q.size(), -1), upper_src(q.size(), -1) {
    for (size_t j = 0; j < pat.size(); ++j) {
      for (size_t t = 0; t < j; ++t) {
        if (pat[t] < pat[j]) {
          if (lower_src[j] < 0 || pat[t] > pat[static_cast<size_t>(lower_src[j])])
            lower_src[j] = static_cast<int>(t);
        } else {
          if (upper_src[j] < 0 || pat[t] < pat[static_cast<size_t>(upper_src[j])])
            upper_src[j] = static_cast<int>(t);
        }
      }
    }
  }

  bool search(size_t j, size_t from) {
    if (j == pat.size()) return true;
    const size_t remaining = pat.size() - j;
    int lo = lower_src[j] >= 0 ? word[static_cast<size_t>(chosen[static_cast<size_t>(lower_src[j])])] : INT_MIN;
    int hi = upper_src[j] >= 0 ? word[static_cast<size_t>(chosen[static_cast<size_t>(upper_src[j])])] : INT_MAX;
    for (size_t i = from; i + remaining <= word.size(); ++i) {
      const int v = word[i];
      if (v <= lo || v >= hi) continue;
      chosen.push_back(static_cast<int>(i));
      if (search(j + 1, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_occurrence(const Permutation& p,
                                                const Permutation& pattern) {
  if (pattern.size() > p.size()) return std::nullopt;
  OccurrenceSearch s(p.one_line(), pattern.one_line());
  if (!s.search(0, 0)) return std::nullopt;
  std::vector<int> out;
  out.reserve(s.chosen.size());
  for (int i : s.chosen) out.push_back(i + 1);
  return out;
}

bool contains(const Permutation& p, const Permutation& pattern) {
  return find_occurrence(p, pattern).has_value();
}

int distance(const Permutation& p, PointPair pair) {
  check_pair(p, pair);
  return std::abs(pair.i - pair.j) + std::abs(p(pair.i) - p(pair.j));
}

BreadthResult breadth(const Permutation& p) {
  const int n = p.size();
  if (n < 2) throw SizeOne("breadth is undefined for size-1 permutations");
  // Pairs further apart than the current minimum in position alone cannot
  // improve it, so only a shrinking window of following positions is scanned.
  int best = INT_MAX;
  PointPair best_pair{1, 2};
  const auto& v = p.one_line();
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j < n && (j - i) < best; ++j) {
      const int d = (j - i) + std::abs(v[static_cast<size_t>(i)] -
                                       v[static_cast<size_t>(j)]);
      if (d < best) {
        best = d;
        best_pair = PointPair{i + 1, j + 1};
      }
    }
  }
  return BreadthResult{best, best_pair};
}

bool breadth_at_least(std::span<const int> one_line, int t) {
  const int n = static_cast<int>(one_line.size());
  for (int i = 0; i < n; ++i) {
    const int jmax = std::min(n - 1, i + t - 1);
    for (int j = i + 1; j <= jmax; ++j) {
      if ((j - i) + std::abs(one_line[static_cast<size_t>(i)] -
                             one_line[static_cast<size_t>(j)]) < t)
        return false;
    }
  }
  return true;
}

bool breadth_at_least(const Permutation& p, int t) {
  return breadth_at_least(std::span<const int>(p.one_line()), t);
}

IndexSet span(const Permutation& p, PointPair pair, bool central) {
  check_pair(p, pair);
  const int plo = std::min(pair.i, pair.j), phi = std::max(pair.i, pair.j);
  const int vlo = std::min(p(pair.i), p(pair.j)), vhi = std::max(p(pair.i), p(pair.j));
  std::vector<int> out;
  for (int q = 1; q <= p.size(); ++q) {
    if (q == pair.i || q == pair.j) continue;
    const bool pos_between = plo < q && q < phi;
    const bool val_between = vlo < p(q) && p(q) < vhi;
    if (central ? (pos_between && val_between) : (pos_between || val_between))
      out.push_back(q);
  }
  return IndexSet(std::move(out));
}

CutCounts count_cuts(const Permutation& p, PointPair pair) {
  check_pair(p, pair);
  const int plo = std::min(pair.i, pair.j), phi = std::max(pair.i, pair.j);
  const int vlo = std::min(p(pair.i), p(pair.j)), vhi = std::max(p(pair.i), p(pair.j));
  CutCounts c;
  for (int q = 1; q <= p.size(); ++q) {
    if (q == pair.i || q == pair.j) continue;
    const bool pos_between = plo < q && q < phi;
    const bool val_between = vlo < p(q) && p(q) < vhi;
    if (pos_between && val_between) {
      ++c.central;
    } else if (pos_between) {
      if (p(q) < vlo) ++c.below;
      else if (p(q) > vhi) ++c.above;
    } else if (val_between) {
      if (q < plo) ++c.left;
      else if (q > phi) ++c.right;
    }
  }
  return c;
}

Permutation apply_symmetry(const Permutation& p, Symmetry s) {
  const int n = p.size();
  std::vector<int> out(static_cast<size_t>(n));
  switch (s) {
    case Symmetry::Reverse:
      for (int i = 1; i <= n; ++i) out[static_cast<size_t>(i) - 1] = p(n + 1 - i);
      break;
    case Symmetry::Complement:
      for (int i = 1; i <= n; ++i) out[static_cast<size_t>(i) - 1] = n + 1 - p(i);
      break;
    case Symmetry::Inverse:
      for (int i = 1; i <= n; ++i) out[static_cast<size_t>(p(i)) - 1] = i;
      break;
  }
  return Permutation(std::move(out));
}

Permutation apply_symmetry(const Permutation& p, std::span<const Symmetry> seq) {
  Permutation out = p;
  for (Symmetry s : seq) out = apply_symmetry(out, s);
  return out;
}

std::array<Permutation, 8> all_symmetries(const Permutation& p) {
  using enum Symmetry;
  const Permutation r = apply_symmetry(p, Reverse);
  const Permutation c = apply_symmetry(p, Complement);
  const Permutation rc = apply_symmetry(r, Complement);
  const Permutation inv = apply_symmetry(p, Inverse);
  return {p,
          r,
          c,
          rc,
          inv,
          apply_symmetry(r, Inverse),
          apply_symmetry(c, Inverse),
          apply_symmetry(rc, Inverse)};
}

}  // namespace prolific
