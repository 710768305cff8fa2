#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quiverchar/partition.hpp"

namespace quiverchar {

inline long floordiv(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

/// Vacuum tail rule: beyond the stored prefix the row continues as
/// entries[j] = -k * floor((j-1-r)/n), 1-based.
struct Tail {
  int n = 1, k = 1, r = 0;
  long at(long j) const { return -static_cast<long>(k) * floordiv(j - 1 - r, n); }
  bool operator==(const Tail& o) const {
    return n == o.n && k == o.k && r == o.r;
  }
};

/// A weakly decreasing integer row, finite or semi-infinite. Finite rows
/// read as 0 beyond their length; semi-infinite rows follow the tail rule.
struct WeightRow {
  std::vector<int> entries;
  std::optional<Tail> tail;

  WeightRow() = default;
  WeightRow(std::vector<int> e) : entries(std::move(e)) { validate(); }
  WeightRow(std::vector<int> e, Tail t) : entries(std::move(e)), tail(t) {
    canonicalize();
    validate();
  }

  bool semi_infinite() const { return tail.has_value(); }
  long size() const { return static_cast<long>(entries.size()); }

  // 1-based lookup
  long at(long j) const {
    if (j >= 1 && j <= size()) return entries[static_cast<size_t>(j - 1)];
    if (tail) return tail->at(j);
    return 0;
  }

  // drop prefix entries that already agree with the tail
  void canonicalize() {
    if (!tail) return;
    while (!entries.empty() &&
           entries.back() == tail->at(static_cast<long>(entries.size())))
      entries.pop_back();
  }

  void validate() const {
    for (size_t i = 0; i + 1 < entries.size(); ++i)
      if (entries[i] < entries[i + 1])
        throw std::invalid_argument("WeightRow: not weakly decreasing");
    if (tail && !entries.empty() &&
        entries.back() < tail->at(static_cast<long>(entries.size()) + 1))
      throw std::invalid_argument("WeightRow: decreases across tail boundary");
  }

  bool operator==(const WeightRow& o) const {
    return entries == o.entries && tail == o.tail;
  }
  bool operator!=(const WeightRow& o) const { return !(*this == o); }
  bool operator<(const WeightRow& o) const { return entries < o.entries; }
};

/// Entrywise shift by +-k. Shifting a semi-infinite row re-indexes the
/// tail charge by -+n so the tail rule still holds exactly.
inline WeightRow shift(const WeightRow& row, int k, bool down) {
  WeightRow out;
  out.entries = row.entries;
  int delta = down ? -k : k;
  for (int& x : out.entries) x += delta;
  if (row.tail) {
    Tail t = *row.tail;
    if (t.k != k)
      throw std::invalid_argument("shift: tail coupling mismatch");
    t.r += down ? -t.n : t.n;
    out.tail = t;
  }
  return out;
}

/// lambda interlaces mu at depth m: lambda_i >= mu_i >= lambda_{i+m}.
inline bool interlace(const WeightRow& lam, const WeightRow& mu, int m) {
  long span = std::max(lam.size(), mu.size()) + m;
  if (lam.semi_infinite() || mu.semi_infinite()) {
    if (!(lam.semi_infinite() && mu.semi_infinite())) return false;
    span += 2 * lam.tail->n;  // one full tail period past both prefixes
  }
  for (long i = 1; i <= span; ++i)
    if (lam.at(i) < mu.at(i) || mu.at(i) < lam.at(i + m)) return false;
  return true;
}

inline bool is_admissible(const WeightRow& lam, int N, int n, int k) {
  if (lam.size() != N || lam.semi_infinite()) return false;
  for (long i = 1; i < N; ++i)
    if (lam.at(i) < lam.at(i + 1)) return false;
  if (lam.at(N) < k) return false;
  for (long i = 1; i + n <= N; ++i)
    if (lam.at(i) < lam.at(i + n) + k) return false;
  return true;
}

inline bool is_cuttable(const WeightRow& lam, int N, int n, int k) {
  if (N < n) return false;
  return is_admissible(lam, N, n, k) && lam.at(N - n + 1) == k;
}

inline WeightRow cut(const WeightRow& lam, int N, int n, int k) {
  if (!is_cuttable(lam, N, n, k))
    throw std::invalid_argument("cut: row is not cuttable");
  WeightRow out;
  out.entries.assign(lam.entries.begin(), lam.entries.end() - n);
  return out;
}

/// A semi-infinite top row is valid when it is weakly decreasing, matches
/// its tail eventually (by construction), and lambda_i >= lambda_{i+n} + k
/// for every i.
inline bool is_valid_semiinf_top(const WeightRow& lam) {
  if (!lam.semi_infinite()) return false;
  const Tail& t = *lam.tail;
  long span = lam.size() + 2 * t.n;
  for (long i = 1; i <= span; ++i) {
    if (lam.at(i) < lam.at(i + 1)) return false;
    if (lam.at(i) < lam.at(i + t.n) + t.k) return false;
  }
  return true;
}

// -------------------------------------------------------------------------
// Skew diagrams

/// Boxes (i,j) with gamma_i < j <= beta_i. For semi-infinite rows only a
/// finite window of columns is materialized; every column left of
/// complete_from has full height n by the tail rule.
struct SkewBoxSet {
  std::set<std::pair<long, long>> boxes;
  bool semi_infinite = false;
  long window_min = 0;  // columns >= window_min have exact heights recorded
  int height_cap = 0;   // n for semi-infinite diagrams
};

inline SkewBoxSet skew_diagram(const WeightRow& beta, const WeightRow& gamma) {
  SkewBoxSet s;
  if (beta.semi_infinite() != gamma.semi_infinite())
    throw std::invalid_argument("skew_diagram: mixed finite/semi-infinite");
  long rows;
  if (beta.semi_infinite()) {
    s.semi_infinite = true;
    s.height_cap = beta.tail->n;
    long p = std::max(beta.size(), gamma.size()) + 2 * beta.tail->n;
    s.window_min = gamma.at(p) + 1;
    // include every row that can reach the window
    rows = p;
    while (beta.at(rows + 1) >= s.window_min) ++rows;
  } else {
    rows = std::max(beta.size(), gamma.size());
  }
  for (long i = 1; i <= rows; ++i) {
    if (gamma.at(i) > beta.at(i))
      throw std::invalid_argument("skew_diagram: gamma exceeds beta");
    for (long j = gamma.at(i) + 1; j <= beta.at(i); ++j)
      if (!s.semi_infinite || j >= s.window_min) s.boxes.emplace(i, j);
  }
  return s;
}

/// Boxes (i,j) such that column j has height exactly m and (i-1,j) is not
/// in the set (the top box of its column).
inline std::set<std::pair<long, long>> top_boxes_of_height(const SkewBoxSet& s,
                                                           int m) {
  std::map<long, std::pair<long, long>> col;  // j -> (height, top row)
  for (const auto& [i, j] : s.boxes) {
    auto it = col.find(j);
    if (it == col.end())
      col.emplace(j, std::make_pair(1L, i));
    else {
      ++it->second.first;
      it->second.second = std::min(it->second.second, i);
    }
  }
  // columns left of the window all have height == height_cap (tail rule)
  // and are omitted; they can never match m < height_cap.
  if (s.semi_infinite && m >= s.height_cap)
    throw std::invalid_argument(
        "top_boxes_of_height: full-height columns of a semi-infinite "
        "diagram form an infinite set");
  std::set<std::pair<long, long>> out;
  for (const auto& [j, hc] : col)
    if (hc.first == m) out.emplace(hc.second, j);
  return out;
}

// -------------------------------------------------------------------------
// Gelfand-Tsetlin patterns

/// Rows Lambda_1 .. Lambda_{n+1} with Lambda_{i} interlacing
/// Lambda_{i+1} at depth 1 and Lambda_{n+1} = Lambda_1 shifted down by k.
struct GTPattern {
  std::vector<WeightRow> rows;

  int height() const { return static_cast<int>(rows.size()) - 1; }
  bool semi_infinite() const {
    return !rows.empty() && rows.front().semi_infinite();
  }
  bool operator==(const GTPattern& o) const { return rows == o.rows; }
  bool operator<(const GTPattern& o) const { return rows < o.rows; }

  void validate(int k) const {
    int n = height();
    if (n < 1) throw std::invalid_argument("GTPattern: too few rows");
    for (int i = 0; i < n; ++i)
      if (!interlace(rows[static_cast<size_t>(i)], rows[static_cast<size_t>(i + 1)], 1))
        throw std::invalid_argument("GTPattern: interlacing fails");
    if (rows.back() != shift(rows.front(), k, true))
      throw std::invalid_argument("GTPattern: bottom row is not top - k");
  }
};

/// All finite patterns with the given top row, in lexicographic order of
/// the concatenated rows.
inline std::vector<GTPattern> enumerate_gt(int N, int n, int k,
                                           const WeightRow& top) {
  std::vector<GTPattern> out;
  if (!is_admissible(top, N, n, k)) return out;
  std::vector<std::vector<int>> rows(static_cast<size_t>(n) + 1);
  rows[0] = top.entries;
  rows[0].resize(static_cast<size_t>(N), 0);
  std::vector<int> bottom = rows[0];
  for (int& x : bottom) x -= k;
  rows[static_cast<size_t>(n)] = bottom;

  std::function<void(int, int)> place = [&](int ri, int j) {
    if (ri == n) {
      GTPattern p;
      for (auto& r : rows) p.rows.emplace_back(WeightRow(r));
      out.push_back(std::move(p));
      return;
    }
    if (j == N) {
      // completed row ri; it must still sit above the forced bottom row
      place(ri + 1, ri + 1 == n ? N : 0);
      return;
    }
    const auto& prev = rows[static_cast<size_t>(ri - 1)];
    auto& cur = rows[static_cast<size_t>(ri)];
    if (static_cast<int>(cur.size()) != N) cur.assign(static_cast<size_t>(N), 0);
    int hi = prev[static_cast<size_t>(j)];
    if (j > 0) hi = std::min(hi, cur[static_cast<size_t>(j - 1)]);
    int lo = (j + 1 < N) ? prev[static_cast<size_t>(j + 1)] : 0;
    lo = std::max(lo, bottom[static_cast<size_t>(j)]);
    // the forced bottom row must interlace from below as well
    if (j > 0) {
      // bottom[j-1] >= cur[j] is required when ri == n-1? handled below
    }
    for (int v = lo; v <= hi; ++v) {
      cur[static_cast<size_t>(j)] = v;
      if (ri == n - 1 && j > 0 && bottom[static_cast<size_t>(j - 1)] < v) continue;
      place(ri, j + 1);
    }
  };
  place(1, 0);
  return out;
}

/// Highest-weight pattern of an admissible lambda:
/// Lambda0_{i,j} = lambda_j - k when j + i > N + 1, else
/// max(lambda_j - k, lambda_{j+i-1}).
inline GTPattern highest_weight_pattern(const WeightRow& lam, int N, int n,
                                        int k) {
  if (!is_admissible(lam, N, n, k))
    throw std::invalid_argument("highest_weight_pattern: not admissible");
  GTPattern p;
  for (int i = 1; i <= n + 1; ++i) {
    std::vector<int> row(static_cast<size_t>(N));
    for (long j = 1; j <= N; ++j)
      row[static_cast<size_t>(j - 1)] =
          (j + i > N + 1)
              ? static_cast<int>(lam.at(j)) - k
              : std::max(static_cast<int>(lam.at(j)) - k,
                         static_cast<int>(lam.at(j + i - 1)));
    p.rows.emplace_back(WeightRow(std::move(row)));
  }
  return p;
}

/// Semi-infinite highest-weight pattern: the same max formula with the
/// finite cutoff removed; row i inherits tail charge r - (i-1).
inline GTPattern highest_weight_pattern_semiinf(const WeightRow& lam) {
  if (!is_valid_semiinf_top(lam))
    throw std::invalid_argument("highest_weight_pattern_semiinf: invalid top");
  Tail t = *lam.tail;
  GTPattern p;
  long P = lam.size() + 2 * t.n;
  for (int i = 1; i <= t.n + 1; ++i) {
    std::vector<int> row(static_cast<size_t>(P));
    for (long j = 1; j <= P; ++j)
      row[static_cast<size_t>(j - 1)] =
          static_cast<int>(std::max(lam.at(j) - t.k, lam.at(j + i - 1)));
    Tail ti{t.n, t.k, t.r - (i - 1)};
    p.rows.emplace_back(WeightRow(std::move(row), ti));
  }
  return p;
}

/// Transition: defined when the top row is cuttable; every row loses its
/// last n entries and is shifted down by k.
inline std::optional<GTPattern> pattern_transition(const GTPattern& lam, int n,
                                                   int k) {
  int len = static_cast<int>(lam.rows.front().size());
  int N = len - n;
  if (N < 0 || !is_cuttable(lam.rows.front(), len, n, k)) return std::nullopt;
  GTPattern out;
  for (const auto& row : lam.rows) {
    std::vector<int> e(row.entries.begin(), row.entries.end());
    e.resize(static_cast<size_t>(len), 0);
    e.resize(static_cast<size_t>(N));
    for (int& x : e) x -= k;
    out.rows.emplace_back(WeightRow(std::move(e)));
  }
  return out;
}

// degree bookkeeping -------------------------------------------------------

// plain excitation degree sum(lambda_i - k)
inline long degree_plain(const WeightRow& lam, int k) {
  long d = 0;
  for (long j = 1; j <= lam.size(); ++j) d += lam.at(j) - k;
  return d;
}

// shifted degree sum(lambda_j - lambda_min_j), lambda_min_j = k floor((N+n-j)/n)
inline long degree_shifted(const WeightRow& lam, int N, int n, int k) {
  long d = 0;
  for (long j = 1; j <= N; ++j) d += lam.at(j) - k * floordiv(N + n - j, n);
  return d;
}

// semi-infinite degree sum_j (lambda_j - vacuum_j); finite by the tail rule
inline long degree_semiinf(const WeightRow& lam) {
  if (!lam.semi_infinite())
    throw std::invalid_argument("degree_semiinf: tail spec required");
  long d = 0;
  for (long j = 1; j <= lam.size(); ++j) d += lam.at(j) - lam.tail->at(j);
  return d;
}

/// Truncation f_L: a semi-infinite pattern becomes the finite pattern of
/// length nL + r with every entry raised by kL.
inline GTPattern truncate_pattern(const GTPattern& p, int L) {
  if (!p.semi_infinite())
    throw std::invalid_argument("truncate_pattern: finite pattern");
  Tail t = *p.rows.front().tail;
  int N = t.n * L + t.r;
  GTPattern out;
  for (const auto& row : p.rows) {
    std::vector<int> e(static_cast<size_t>(N));
    for (long j = 1; j <= N; ++j)
      e[static_cast<size_t>(j - 1)] = static_cast<int>(row.at(j)) + t.k * L;
    out.rows.emplace_back(WeightRow(std::move(e)));
  }
  return out;
}

/// Flavor weight of a finite pattern: a_m carries exponent
/// |Lambda_m| - |Lambda_{m+1}| (row sums).
inline std::vector<int> pattern_weight(const GTPattern& p) {
  int n = p.height();
  int N = static_cast<int>(p.rows.front().size());
  std::vector<long> sums(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i)
    for (long j = 1; j <= N; ++j) sums[static_cast<size_t>(i)] += p.rows[static_cast<size_t>(i)].at(j);
  std::vector<int> w(static_cast<size_t>(n));
  for (int m = 0; m < n; ++m)
    w[static_cast<size_t>(m)] = static_cast<int>(sums[static_cast<size_t>(m)] - sums[static_cast<size_t>(m + 1)]);
  return w;
}

/// All semi-infinite patterns of top-row degree d at charge r. Enumerated
/// through the finite truncation at L = d + 3 and converted back; a
/// truncated pattern whose rows fail the tail rule would signal a
/// stabilization failure and raises.
inline std::vector<GTPattern> enumerate_semiinf(int r, int n, int k, int d) {
  if (r < 0 || r >= n || d < 0)
    throw std::invalid_argument("enumerate_semiinf: bad arguments");
  Tail t{n, k, r};
  // top rows: deviations dev_j >= 0 from the vacuum with sum d,
  // dev_j >= dev_{j+n} (admissibility) and weak decrease of the row
  long Jmax = static_cast<long>(n) * d + n;
  std::vector<int> dev(static_cast<size_t>(Jmax), 0);
  std::vector<WeightRow> tops;
  std::function<void(long, int)> rec = [&](long j, int rem) {
    if (j > Jmax) {
      if (rem != 0) return;
      std::vector<int> e(static_cast<size_t>(Jmax));
      for (long i = 1; i <= Jmax; ++i)
        e[static_cast<size_t>(i - 1)] =
            static_cast<int>(t.at(i)) + dev[static_cast<size_t>(i - 1)];
      tops.emplace_back(WeightRow(std::move(e), t));
      return;
    }
    int hi = rem;
    if (j > n) hi = std::min(hi, dev[static_cast<size_t>(j - n - 1)]);
    if (j > 1)
      hi = std::min(hi, static_cast<int>(t.at(j - 1) - t.at(j)) +
                            dev[static_cast<size_t>(j - 2)]);
    for (int v = 0; v <= hi; ++v) {
      dev[static_cast<size_t>(j - 1)] = v;
      rec(j + 1, rem - v);
      dev[static_cast<size_t>(j - 1)] = 0;
    }
  };
  rec(1, d);

  int L = d + 3;
  int N = n * L + r;
  std::vector<GTPattern> out;
  for (const auto& top : tops) {
    if (!is_valid_semiinf_top(top)) continue;
    if (degree_semiinf(top) != d) continue;
    std::vector<int> e(static_cast<size_t>(N));
    for (long j = 1; j <= N; ++j)
      e[static_cast<size_t>(j - 1)] = static_cast<int>(top.at(j)) + k * L;
    for (const auto& fin : enumerate_gt(N, n, k, WeightRow(e))) {
      GTPattern p;
      for (int i = 0; i <= n; ++i) {
        std::vector<int> row = fin.rows[static_cast<size_t>(i)].entries;
        row.resize(static_cast<size_t>(N), 0);
        for (int& x : row) x -= k * L;
        Tail ti{n, k, r - i};
        WeightRow wr(std::move(row), ti);
        // the conversion is only valid if the row genuinely matches its tail
        if (wr.size() > N - n)
          throw std::runtime_error(
              "enumerate_semiinf: row fails the tail rule; truncation level "
              "too small");
        p.rows.push_back(std::move(wr));
      }
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace quiverchar
