#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace quiverchar {

/// Integer partitions stored as weakly decreasing vectors without
/// trailing zeros.
using Partition = std::vector<int>;

inline Partition normalize_partition(Partition p) {
  if (!std::is_sorted(p.rbegin(), p.rend()))
    throw std::invalid_argument("partition entries must be weakly decreasing");
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (!p.empty() && p.back() < 0)
    throw std::invalid_argument("partition entries must be non-negative");
  return p;
}

inline int part(const Partition& p, size_t i) {
  return i < p.size() ? p[i] : 0;
}

inline long weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0L);
}

inline Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  c.resize(static_cast<size_t>(p[0]), 0);
  for (int x : p)
    for (int j = 0; j < x; ++j) ++c[static_cast<size_t>(j)];
  return c;
}

// true if a dominates b (both partitions of the same weight)
inline bool dominates(const Partition& a, const Partition& b) {
  long sa = 0, sb = 0;
  size_t len = std::max(a.size(), b.size());
  for (size_t i = 0; i < len; ++i) {
    sa += part(a, i);
    sb += part(b, i);
    if (sa < sb) return false;
  }
  return sa == sb;
}

// all partitions of m with at most maxlen parts, each part at most maxpart
inline std::vector<Partition> partitions_of(int m, int maxlen,
                                            int maxpart = -1) {
  std::vector<Partition> out;
  if (maxpart < 0 || maxpart > m) maxpart = m;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int bound) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= maxlen) return;
    for (int x = std::min(bound, rem); x >= 1; --x) {
      cur.push_back(x);
      rec(rem - x, x);
      cur.pop_back();
    }
  };
  rec(m, maxpart);
  return out;
}

// n(mu) = sum_i (i-1) mu_i
inline long partition_n_stat(const Partition& p) {
  long s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += static_cast<long>(i) * p[i];
  return s;
}

}  // namespace quiverchar
