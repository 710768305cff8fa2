#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quiverchar/diagrams.hpp"
#include "quiverchar/wavefunc.hpp"

namespace quiverchar {

/// One fermion letter psi^a_m, stored as (mode m, color a).
using FockLetter = std::pair<int, int>;
/// A wedge word: letters in canonical order (decreasing mode, then
/// increasing color), no repeats.
using FockWord = std::vector<FockLetter>;

/// Letter precedence in a canonical word.
inline bool letter_precedes(const FockLetter& u, const FockLetter& v) {
  if (u.first != v.first) return u.first > v.first;
  return u.second < v.second;
}

/// Sort a raw word into canonical order, tracking the wedge sign; a
/// repeated letter collapses to zero (nullopt).
inline std::optional<std::pair<int, FockWord>> normalize_wedge(FockWord w) {
  int sign = 1;
  for (size_t i = 1; i < w.size(); ++i)
    for (size_t j = i; j > 0 && letter_precedes(w[j], w[j - 1]); --j) {
      std::swap(w[j], w[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return std::nullopt;
  return std::make_pair(sign, std::move(w));
}

/// Integer combination of canonical wedge words.
struct WedgeState {
  std::map<FockWord, mpz_class> terms;

  void add(const FockWord& w, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  static WedgeState basis(const FockWord& raw) {
    WedgeState s;
    auto norm = normalize_wedge(raw);
    if (norm) s.add(norm->second, norm->first);
    return s;
  }
  bool is_zero() const { return terms.empty(); }
  bool operator==(const WedgeState& o) const { return terms == o.terms; }
  bool operator!=(const WedgeState& o) const { return !(*this == o); }
  WedgeState& operator+=(const WedgeState& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
  }
  WedgeState& operator-=(const WedgeState& o) {
    for (const auto& [w, c] : o.terms) add(w, -c);
    return *this;
  }
  friend WedgeState operator+(WedgeState a, const WedgeState& b) { return a += b; }
  friend WedgeState operator-(WedgeState a, const WedgeState& b) { return a -= b; }
  WedgeState mul_scalar(const mpz_class& c) const {
    WedgeState out;
    if (c == 0) return out;
    for (const auto& [w, cc] : terms) out.terms.emplace(w, cc * c);
    return out;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms) {
      if (!s.empty()) s += " + ";
      std::string word;
      for (const auto& [m, a] : w) {
        if (!word.empty()) word += "^";
        word += "psi[" + std::to_string(a) + "," + std::to_string(m) + "]";
      }
      if (word.empty()) word = "|0>";
      s += c.get_str() + " * " + word;
    }
    return s;
  }
};

namespace detail {

// remove the letter at position p from w (sign (-1)^p), returning the sign
inline int remove_at(FockWord& w, size_t p) {
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(p));
  return (p % 2 == 0) ? 1 : -1;
}

// left-wedge a letter onto a canonical word: returns 0 if present, else
// the insertion sign (-1)^{index}
inline int insert_letter(FockWord& w, const FockLetter& l) {
  size_t q = 0;
  while (q < w.size() && letter_precedes(w[q], l)) ++q;
  if (q < w.size() && w[q] == l) return 0;
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(q), l);
  return (q % 2 == 0) ? 1 : -1;
}

inline std::optional<size_t> find_letter(const FockWord& w, const FockLetter& l) {
  for (size_t p = 0; p < w.size(); ++p)
    if (w[p] == l) return p;
  return std::nullopt;
}

}  // namespace detail

/// Graded gl_n[z] action on the shifted wedge space of length N (mode floor
/// -L, L = floor(N/n)):
///   E^a_b z^m = sum_{l >= max(-L,-m)} psi^a_{l+m} d/dpsi^b_l
///             - sum_{-L <= l < -m} d/dpsi^b_l psi^a_{l+m}.
inline WedgeState gl_action(int a, int b, int m, const WedgeState& s, int N,
                            int n) {
  if (m < 0) throw std::invalid_argument("gl_action: negative mode");
  int L = N / n;
  WedgeState out;
  for (const auto& [w, c] : s.terms) {
    if (w.size() != static_cast<size_t>(N))
      throw std::invalid_argument("gl_action: word length mismatch");
    // normally ordered part: contract psi^b_l first, l >= max(-L,-m)
    for (size_t p = 0; p < w.size(); ++p) {
      int l = w[p].first;
      if (w[p].second != b || l < std::max(-L, -m)) continue;
      FockWord ww = w;
      int s1 = detail::remove_at(ww, p);
      int s2 = detail::insert_letter(ww, {l + m, a});
      if (s2 != 0) out.add(ww, c * s1 * s2);
    }
    // anti-normally ordered part: create psi^a_{l+m} first, -L <= l < -m
    for (int l = -L; l < -m; ++l) {
      FockWord ww = w;
      int s1 = detail::insert_letter(ww, {l + m, a});
      if (s1 == 0) continue;
      auto p = detail::find_letter(ww, {l, b});
      if (!p) continue;
      int s2 = detail::remove_at(ww, *p);
      out.add(ww, -c * s1 * s2);
    }
  }
  return out;
}

/// Energy degree of a length-N shifted wedge word: nL(L+1)/2 + sum of modes.
inline long wedge_degree(const FockWord& w, int n) {
  long N = static_cast<long>(w.size());
  long L = N / n;
  long d = n * L * (L + 1) / 2;
  for (const auto& [m, a] : w) {
    (void)a;
    d += m;
  }
  return d;
}

/// All canonical shifted wedge words of length N and energy degree d.
inline std::vector<FockWord> enumerate_wedge(int N, int n, long d) {
  int L = N / n;
  long target = d - static_cast<long>(n) * L * (L + 1) / 2;  // sum of modes
  // smallest mode sum achievable by `count` distinct letters strictly after
  // `bound` in canonical order (fill slots upward from the mode floor)
  auto min_tail = [&](FockLetter bound, int count) -> std::optional<long> {
    long sum = 0;
    int mm = -L, cc = 1;
    while (count > 0) {
      if (mm > bound.first) return std::nullopt;  // ran out of slots
      if (letter_precedes(bound, FockLetter{mm, cc})) {
        sum += mm;
        --count;
      }
      if (++cc > n) {
        cc = 1;
        ++mm;
      }
    }
    return sum;
  };
  std::vector<FockWord> out;
  FockWord cur;
  // choose letters in canonical order (largest first); each candidate is
  // feasible iff the remaining letters can still reach the remaining sum
  auto rec = [&](auto&& self, long rem, int count) -> void {
    if (count == 0) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    // lowest count-1 slots overall bound any tail sum from below, giving a
    // mode ceiling for this position
    long floor_sum = 0;
    {
      int need = count - 1, mm = -L;
      while (need > 0) {
        floor_sum += static_cast<long>(mm) * std::min(need, n);
        need -= std::min(need, n);
        ++mm;
      }
    }
    int mode_max = static_cast<int>(rem - floor_sum);
    if (!cur.empty()) mode_max = std::min(mode_max, cur.back().first);
    for (int mode = mode_max; mode >= -L; --mode)
      for (int color = 1; color <= n; ++color) {
        FockLetter cand{mode, color};
        if (!cur.empty() && !letter_precedes(cur.back(), cand)) continue;
        auto rest = min_tail(cand, count - 1);
        if (!rest || mode + *rest > rem) continue;
        cur.push_back(cand);
        self(self, rem - mode, count - 1);
        cur.pop_back();
      }
  };
  rec(rec, target, N);
  return out;
}

/// Transition map on the shifted wedge spaces: keeps only words whose n
/// lowest letters are all colors at mode -L-1 (with L = floor(N/n)) and
/// drops those letters.
inline WedgeState fock_transition(const WedgeState& s, int N, int n) {
  int L = N / n;
  WedgeState out;
  for (const auto& [w, c] : s.terms) {
    if (w.size() != static_cast<size_t>(N + n))
      throw std::invalid_argument("fock_transition: word length mismatch");
    bool keep = true;
    for (int t = 0; t < n; ++t)
      if (w[static_cast<size_t>(N + t)] != FockLetter{-L - 1, t + 1}) keep = false;
    if (!keep) continue;
    FockWord ww(w.begin(), w.begin() + N);
    out.add(ww, c);
  }
  return out;
}

/// Wave-function image of a wedge state: the sum of Slater determinants
/// det(x_i^{m_j + L} y^{a_j}_i) (L = 0 for the unshifted model).
inline WavePoly to_wave(const WedgeState& s, int N, int n, int L = 0) {
  WavePoly out(N, n);
  for (const auto& [w, c] : s.terms) {
    if (w.size() != static_cast<size_t>(N))
      throw std::invalid_argument("to_wave: word length mismatch");
    std::vector<int> modes, colors;
    for (const auto& [m, a] : w) {
      modes.push_back(m + L);
      colors.push_back(a);
    }
    out += slater(modes, colors, N, n).mul_scalar(mpq_class(c));
  }
  return out;
}

// semi-infinite model ------------------------------------------------------

/// The j-th (1-based) letter of the charge-r vacuum.
inline FockLetter vacuum_letter(int r, int n, long j) {
  int mode = static_cast<int>(floordiv(r - j, n));
  int color = j <= r ? static_cast<int>(j)
                     : static_cast<int>((j - r - 1) % n) + 1;
  return {mode, color};
}

/// Canonical storage of a semi-infinite word: drop the trailing letters
/// that already sit in their vacuum positions.
inline FockWord trim_semiinf(FockWord w, int r, int n) {
  while (!w.empty() &&
         w.back() == vacuum_letter(r, n, static_cast<long>(w.size())))
    w.pop_back();
  return w;
}

/// Extend the stored prefix of a semi-infinite word to J letters.
inline FockWord materialize_semiinf(const FockWord& w, int r, int n, long J) {
  FockWord out = w;
  for (long j = static_cast<long>(w.size()) + 1; j <= J; ++j)
    out.push_back(vacuum_letter(r, n, j));
  return out;
}

/// The charge-r vacuum state.
inline WedgeState vacuum_state(int r, int n) {
  (void)r;
  (void)n;
  WedgeState s;
  s.add(FockWord{}, 1);
  return s;
}

/// Energy degree of a semi-infinite word at charge r.
inline long semiinf_degree(const FockWord& w, int r, int n) {
  long d = 0;
  for (size_t j = 0; j < w.size(); ++j)
    d += w[j].first - vacuum_letter(r, n, static_cast<long>(j) + 1).first;
  return d;
}

/// The affine generator J^a_{b,m} (any integer m) on the charge-r
/// semi-infinite wedge space:
///   J^a_{b,m} = sum_{l >= 0} psi^a_l d/dpsi^b_{l+m}
///             - sum_{l < 0} d/dpsi^b_{l+m} psi^a_l.
inline WedgeState affine_act(int a, int b, int m, const WedgeState& s, int r,
                             int n) {
  WedgeState out;
  for (const auto& [prefix, c] : s.terms) {
    // materialize deep enough that every hole and every touched letter is
    // explicit, and everything below is a full sea (hence inert)
    int mu = 0;
    for (const auto& [mode, col] : prefix) {
      (void)col;
      mu = std::min(mu, mode);
    }
    long levels = static_cast<long>(-mu) + std::abs(m) + 2;
    long prefix_levels = floordiv(static_cast<long>(prefix.size()) - r + n - 1, n);
    levels = std::max(levels, prefix_levels + std::abs(m) + 2);
    long J = n * levels + r;
    FockWord w = materialize_semiinf(prefix, r, n, J);
    int mode_floor = static_cast<int>(-levels);

    // contributions indexed by the removed letter (l+m, b)
    for (size_t p = 0; p < w.size(); ++p) {
      if (w[p].second != b) continue;
      int l = w[p].first - m;
      if (l >= 0) {
        // + psi^a_l d/dpsi^b_{l+m}
        FockWord ww = w;
        int s1 = detail::remove_at(ww, p);
        int s2 = detail::insert_letter(ww, {l, a});
        if (s2 != 0) out.add(trim_semiinf(ww, r, n), c * s1 * s2);
      } else {
        // - d/dpsi^b_{l+m} psi^a_l with (l, a) a hole; slots below the
        // materialized floor belong to the untouched sea and are occupied
        if (l < mode_floor) continue;
        FockWord ww = w;
        int s1 = detail::insert_letter(ww, {l, a});
        if (s1 == 0) continue;
        auto pp = detail::find_letter(ww, {l + m, b});
        int s2 = detail::remove_at(ww, *pp);
        out.add(trim_semiinf(ww, r, n), -c * s1 * s2);
      }
    }
    if (m == 0 && a == b) {
      // the pure hole contributions - d/dpsi^a_l psi^a_l on absent letters
      for (int l = -1; l >= mode_floor; --l)
        if (!detail::find_letter(w, {l, a})) out.add(trim_semiinf(w, r, n), -c);
    }
  }
  return out;
}

/// Annihilation half of the affine action (m > 0): lowers degree by m.
inline WedgeState affine_annihilate(int a, int b, int m, const WedgeState& s,
                                    int r, int n) {
  if (m <= 0) throw std::invalid_argument("affine_annihilate: need m > 0");
  return affine_act(a, b, m, s, r, n);
}

/// Truncate a semi-infinite state to the finite shifted model of length
/// nL + r (letters are taken verbatim; valid once L clears the excitation
/// depth).
inline WedgeState truncate_wedge(const WedgeState& s, int L, int r, int n) {
  WedgeState out;
  for (const auto& [w, c] : s.terms) {
    FockWord f = materialize_semiinf(w, r, n, static_cast<long>(n) * L + r);
    if (f.size() != static_cast<size_t>(n) * static_cast<size_t>(L) + static_cast<size_t>(r) ||
        (!f.empty() && f.back().first < -L))
      throw std::invalid_argument("truncate_wedge: truncation level too low");
    out.add(f, c);
  }
  return out;
}

}  // namespace quiverchar
