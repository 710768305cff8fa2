#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "quiverchar/mpoly.hpp"
#include "quiverchar/partition.hpp"
#include "quiverchar/qpoly.hpp"
#include "quiverchar/sympoly.hpp"

namespace quiverchar {

/// Skew Schur polynomial s_{lambda/mu}(a_1..a_n) by direct enumeration of
/// semistandard skew tableaux: rows weakly increase, columns strictly
/// increase, entries in 1..n.
inline SymPoly skew_schur(const Partition& lambda, const Partition& mu,
                          int n) {
  for (size_t i = 0; i < lambda.size(); ++i)
    if (part(mu, i) > lambda[i])
      throw std::invalid_argument("skew_schur: mu not contained in lambda");
  MPoly acc(n);
  size_t rows = lambda.size();
  // values of the previous row, indexed by column (1-based columns)
  std::vector<int> prev_val, cur_val;
  Expo counts(static_cast<size_t>(n), 0);
  std::function<void(size_t)> fill_row = [&](size_t i) {
    if (i == rows) {
      acc.add_term(counts, QPoly(1));
      return;
    }
    int lo = part(mu, i), hi = lambda[i];
    cur_val.assign(static_cast<size_t>(std::max(hi, 0)), 0);
    std::function<void(int, int)> fill_box = [&](int j, int minval) {
      if (j > hi) {
        std::vector<int> saved_prev = prev_val;
        std::vector<int> saved_cur = cur_val;
        prev_val = cur_val;
        fill_row(i + 1);
        prev_val = saved_prev;
        cur_val = saved_cur;
        return;
      }
      int floor_col = 0;
      if (i > 0 && j <= part(lambda, i - 1) && j > part(mu, i - 1))
        floor_col = prev_val[static_cast<size_t>(j - 1)] + 1;
      for (int v = std::max(minval, floor_col); v <= n; ++v) {
        cur_val[static_cast<size_t>(j - 1)] = v;
        ++counts[static_cast<size_t>(v - 1)];
        fill_box(j + 1, v);
        --counts[static_cast<size_t>(v - 1)];
      }
    };
    fill_box(lo + 1, 1);
  };
  fill_row(0);
  return SymPoly::from_expanded(acc);
}

inline SymPoly schur(const Partition& lambda, int n) {
  return skew_schur(lambda, Partition{}, n);
}

inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

namespace detail {

inline int part_multiplicity(const Partition& lam, int j) {
  int c = 0;
  for (int x : lam)
    if (x == j) ++c;
  return c;
}

/// Expanded Hall-Littlewood P_lambda by the one-variable branching rule:
/// P_lambda(a_1..a_n) = sum over horizontal strips lambda/mu of
/// psi_{lambda/mu}(q) P_mu(a_1..a_{n-1}) a_n^{|lambda|-|mu|}, where
/// psi_{lambda/mu} = prod_{j: m_j(mu) = m_j(lambda)+1} (1 - q^{m_j(mu)}).
inline const MPoly& hall_littlewood_expanded(const Partition& lambda, int n) {
  static std::map<std::pair<int, Partition>, MPoly> memo;
  auto key = std::make_pair(n, lambda);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  MPoly out(n);
  if (static_cast<int>(lambda.size()) <= n) {
    if (n == 0) {
      out = MPoly::constant(0, QPoly(1));
    } else {
      size_t len = lambda.size();
      Partition mu(len);
      std::function<void(size_t)> rec = [&](size_t i) {
        if (i < len) {
          int lo = (i + 1 < len) ? lambda[i + 1] : 0;
          for (int v = lo; v <= lambda[i]; ++v) {
            mu[i] = v;
            rec(i + 1);
          }
          return;
        }
        Partition m2 = mu;
        while (!m2.empty() && m2.back() == 0) m2.pop_back();
        QPoly psi(1);
        long d = 0;
        for (size_t t = 0; t < len; ++t) d += lambda[t] - mu[t];
        for (int j = 1; j <= (lambda.empty() ? 0 : lambda[0]); ++j)
          if (part_multiplicity(m2, j) == part_multiplicity(lambda, j) + 1) {
            QPoly f(1);
            f -= QPoly::q_power(part_multiplicity(m2, j));
            psi *= f;
          }
        for (const auto& [e, c] : hall_littlewood_expanded(m2, n - 1).terms()) {
          Expo e2 = e;
          e2.push_back(static_cast<int>(d));
          out.add_term(e2, c * psi);
        }
      };
      rec(0);
    }
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace detail

/// Hall-Littlewood polynomial P_lambda(a_1..a_n; q), built recursively by
/// peeling the last variable along horizontal strips (monic in m_lambda).
inline SymPoly hall_littlewood_P(const Partition& lambda, int n) {
  if (static_cast<int>(lambda.size()) > n)
    throw std::invalid_argument("hall_littlewood_P: more parts than variables");
  return SymPoly::from_expanded(detail::hall_littlewood_expanded(lambda, n));
}

/// Jing vertex operator S^q_m acting on a symmetric polynomial:
///   (S^q_m f)(a; q) = sum_i f(a_1,..,q a_i,..,a_n) a_i^m
///                              / prod_{j != i} (1 - a_j/a_i).
/// Evaluated over the common denominator prod_{i<j} (a_i - a_j) with an
/// exact-division check. A non-negative qcap truncates q-degrees.
inline SymPoly jing(const SymPoly& f, int m, int qcap = -1) {
  int n = f.nvars();
  if (m + n - 1 < 0) throw std::invalid_argument("jing: mode too negative");
  MPoly F = f.expand();
  MPoly num(n);
  for (int i = 0; i < n; ++i) {
    MPoly t = F.scale_var_by_q(i, qcap);
    Expo mono(static_cast<size_t>(n), 0);
    mono[static_cast<size_t>(i)] = m + n - 1;
    t = t.mul_monomial(mono);
    for (int j = 0; j < n; ++j)
      for (int l = j + 1; l < n; ++l)
        if (j != i && l != i) t = t.mul(MPoly::binomial(n, j, l, QPoly(1)), qcap);
    if (i % 2 == 0)
      num += t;
    else
      num -= t;
  }
  return SymPoly::from_expanded(MPoly::div_exact(num, vandermonde(n)));
}

/// Transformed Hall-Littlewood polynomial H_mu = S^q_{mu_1} ... S^q_{mu_l} 1.
inline SymPoly transformed_hl(const Partition& mu, int n, int qcap = -1) {
  SymPoly f = SymPoly::constant(n, QPoly(1));
  for (size_t i = mu.size(); i-- > 0;) f = jing(f, mu[i], qcap);
  return f;
}

/// Expand a symmetric polynomial with non-negative exponents in the Schur
/// basis by peeling the lexicographically greatest orbit.
inline std::map<Partition, QPoly> schur_expand(SymPoly f) {
  std::map<Partition, QPoly> out;
  int n = f.nvars();
  while (!f.is_zero()) {
    const auto& [key, c] = *f.orbits().rbegin();
    Partition lam = key;
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    if (!lam.empty() && lam.back() < 0)
      throw std::runtime_error("schur_expand: negative exponent");
    QPoly coeff = c;
    out.emplace(lam, coeff);
    f -= schur(lam, n).mul_scalar(coeff);
  }
  return out;
}

/// Kostka-Foulkes polynomials K_{lambda mu}(q) for all lambda, obtained by
/// the triangular change of basis: expand s_lambda in the Hall-Littlewood
/// P basis by repeatedly peeling the dominance-greatest monomial orbit.
inline std::map<Partition, QPoly> kostka_foulkes_row(const Partition& lambda,
                                                     int nvars = -1) {
  int n = nvars > 0 ? nvars : static_cast<int>(weight(lambda));
  if (n == 0) n = 1;
  static std::map<std::pair<int, Partition>, SymPoly> hl_cache;
  std::map<Partition, QPoly> out;
  SymPoly f = schur(lambda, n);
  while (!f.is_zero()) {
    const auto& [key, c] = *f.orbits().rbegin();
    Partition mu = key;
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    QPoly coeff = c;
    auto ck = std::make_pair(n, mu);
    auto it = hl_cache.find(ck);
    if (it == hl_cache.end())
      it = hl_cache.emplace(ck, hall_littlewood_P(mu, n)).first;
    out.emplace(mu, coeff);
    f -= it->second.mul_scalar(coeff);
  }
  return out;
}

inline QPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
  if (weight(lambda) != weight(mu)) return QPoly();
  auto row = kostka_foulkes_row(lambda);
  auto it = row.find(normalize_partition(mu));
  return it == row.end() ? QPoly() : it->second;
}

}  // namespace quiverchar
