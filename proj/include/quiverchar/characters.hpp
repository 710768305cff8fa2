#pragma once

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiverchar/symfunc.hpp"
#include "quiverchar/sympoly.hpp"

namespace quiverchar {

/// Parameters of the unitary-matrix model: N particles, n colors,
/// coupling (level) k.
struct ModelParams {
  int N = 1;
  int n = 1;
  int k = 1;

  ModelParams(int N_, int n_, int k_) : N(N_), n(n_), k(k_) {
    if (N < 1 || n < 1 || k < 1)
      throw std::invalid_argument("ModelParams: N, n, k must be positive");
  }
  int L() const { return N / n; }
  int r() const { return N % n; }
  // energy of the lowest state
  long E0() const {
    long Lv = L();
    return k * Lv * (Lv - 1) * n / 2 + static_cast<long>(k) * r() * Lv;
  }
};

/// Truncated power series in q whose coefficients are symmetric Laurent
/// polynomials in a_1..a_n (q-free).
struct SymSeries {
  int n = 0;
  std::vector<SymPoly> coeffs;  // coeffs[d] multiplies q^d

  SymSeries(int n_, int D) : n(n_), coeffs(static_cast<size_t>(D) + 1, SymPoly(n_)) {}
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const SymSeries& o) const {
    return n == o.n && coeffs == o.coeffs;
  }
  bool operator!=(const SymSeries& o) const { return !(*this == o); }
};

// partition generating function prod_{i=1}^{maxpart} 1/(1-q^i), to order D
inline QPoly partition_gen(int maxpart, int D) {
  std::vector<mpz_class> dp(static_cast<size_t>(D) + 1, 0);
  dp[0] = 1;
  for (int i = 1; i <= maxpart; ++i)
    for (int d = i; d <= D; ++d) dp[static_cast<size_t>(d)] += dp[static_cast<size_t>(d - i)];
  QPoly g;
  for (int d = 0; d <= D; ++d) g += QPoly::q_power(d, dp[static_cast<size_t>(d)]);
  return g;
}

/// Graded character of the Hilbert space:
///   ch = H_{(k^N)}(a; q) * prod_{i=1}^N 1/(1 - q^i), through q^D.
inline SymSeries hilbert_character(const ModelParams& p, int D) {
  Partition mu(static_cast<size_t>(p.N), p.k);
  SymPoly h = transformed_hl(mu, p.n, D);
  QPoly gen = partition_gen(p.N, D);
  SymSeries out(p.n, D);
  std::vector<SymPoly> slices;
  for (int d = 0; d <= D; ++d) slices.push_back(h.q_slice(d));
  for (int d = 0; d <= D; ++d)
    for (int dp_ = 0; dp_ <= d; ++dp_) {
      mpz_class c = gen.coeff(d - dp_);
      if (c != 0) out.coeffs[static_cast<size_t>(d)] += slices[static_cast<size_t>(dp_)].mul_scalar(QPoly(c));
    }
  return out;
}

/// k = 1 closed form: sum over compositions N_1 + ... + N_n = N of
///   prod_l a_l^{N_l} q^{N_l(N_l-1)/2} prod_{i<=N_l} 1/(1-q^i).
inline SymSeries character_k1(int N, int n, int D) {
  std::vector<MPoly> acc(static_cast<size_t>(D) + 1, MPoly(n));
  std::vector<int> comp(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n) {
      if (rem != 0) return;
      long e = 0;
      QPoly g(1);
      for (int v : comp) {
        e += static_cast<long>(v) * (v - 1) / 2;
        if (e > D) return;
        g *= partition_gen(v, D);
        g = g.truncated(D);
      }
      g = g.shifted(static_cast<int>(e)).truncated(D);
      Expo mono(comp.begin(), comp.end());
      for (int d = 0; d <= D; ++d) {
        mpz_class c = g.coeff(d);
        if (c != 0) acc[static_cast<size_t>(d)].add_term(mono, QPoly(c));
      }
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      comp[static_cast<size_t>(pos)] = v;
      rec(pos + 1, rem - v);
    }
  };
  rec(0, N);
  SymSeries out(n, D);
  for (int d = 0; d <= D; ++d)
    out.coeffs[static_cast<size_t>(d)] = SymPoly::from_expanded(acc[static_cast<size_t>(d)]);
  return out;
}

/// A weight lambda (length N, weakly decreasing) is admissible when
/// lambda_N >= k and lambda_i >= lambda_{i+n} + k for all i <= N - n.
inline bool is_admissible_weight(const std::vector<int>& lam,
                                 const ModelParams& p) {
  if (static_cast<int>(lam.size()) != p.N) return false;
  for (size_t i = 0; i + 1 < lam.size(); ++i)
    if (lam[i] < lam[i + 1]) return false;
  if (!lam.empty() && lam.back() < p.k) return false;
  for (size_t i = 0; i + static_cast<size_t>(p.n) < lam.size(); ++i)
    if (lam[i] < lam[i + static_cast<size_t>(p.n)] + p.k) return false;
  return true;
}

// all admissible weights with excitation energy sum(lambda_i - k) <= D
inline std::vector<std::vector<int>> admissible_weights(const ModelParams& p,
                                                        int D) {
  std::vector<std::vector<int>> out;
  std::vector<int> lam(static_cast<size_t>(p.N), 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == p.N) {
      out.push_back(lam);
      return;
    }
    int hi = p.k + rem;
    if (i > 0) hi = std::min(hi, lam[static_cast<size_t>(i - 1)]);
    if (i >= p.n) hi = std::min(hi, lam[static_cast<size_t>(i - p.n)] - p.k);
    for (int v = p.k; v <= hi; ++v) {
      lam[static_cast<size_t>(i)] = v;
      rec(i + 1, rem - (v - p.k));
    }
  };
  rec(0, D);
  return out;
}

/// Character assembled from the eigenspace decomposition:
///   sum over admissible lambda of q^{sum(lambda_i - k)}
///   s_{lambda / (lambda - k)}(a_1..a_n).
inline SymSeries character_via_decomposition(const ModelParams& p, int D) {
  SymSeries out(p.n, D);
  for (const auto& lam : admissible_weights(p, D)) {
    long d = 0;
    for (int v : lam) d += v - p.k;
    Partition lower(lam.size());
    for (size_t i = 0; i < lam.size(); ++i) lower[i] = lam[i] - p.k;
    Partition upper(lam.begin(), lam.end());
    out.coeffs[static_cast<size_t>(d)] +=
        skew_schur(normalize_partition(upper), normalize_partition(lower), p.n);
  }
  return out;
}

/// Lowest-energy component: (a_1...a_n)^{kL} s_{k varpi_r}(a) q^{E0}.
inline std::pair<SymPoly, long> ground_state_character(const ModelParams& p) {
  Partition kwr(static_cast<size_t>(p.r()), p.k);
  SymPoly g = schur(kwr, p.n).mul_power_of_det(p.k * p.L());
  return {g, p.E0()};
}

/// Character of the shifted model: the full character divided by
/// q^{E0} (a_1...a_n)^{kL}, through q^D.
inline SymSeries shifted_character(const ModelParams& p, int D) {
  long e0 = p.E0();
  SymSeries full = hilbert_character(p, static_cast<int>(e0) + D);
  SymSeries out(p.n, D);
  int shift = -p.k * p.L();
  for (int d = 0; d <= D; ++d)
    out.coeffs[static_cast<size_t>(d)] =
        full.coeffs[static_cast<size_t>(e0 + d)].mul_power_of_det(shift);
  return out;
}

/// Stable large-N limit of the shifted character at fixed charge
/// r = N mod n. Each degree-d coefficient is accepted once two
/// consecutive truncation levels L agree; L is capped at d + 2 by
/// default (override with the QUIVERCHAR_LCAP environment variable).
inline SymSeries limit_character(int r, int n, int k, int D) {
  if (r < 0 || r >= n) throw std::invalid_argument("limit_character: bad r");
  int cap_override = 0;
  if (const char* env = std::getenv("QUIVERCHAR_LCAP"))
    cap_override = std::atoi(env);
  auto cap = [&](int d) { return cap_override > 0 ? cap_override : d + 2; };
  int capmax = cap(D);
  SymSeries out(n, D);
  std::vector<bool> frozen(static_cast<size_t>(D) + 1, false);
  SymSeries prev(n, D);
  bool have_prev = false;
  for (int L = 1; L <= capmax; ++L) {
    int N = n * L + r;
    if (N < 1) continue;
    SymSeries cur = shifted_character(ModelParams(N, n, k), D);
    if (have_prev) {
      for (int d = 0; d <= D; ++d)
        if (!frozen[static_cast<size_t>(d)] &&
            cur.coeffs[static_cast<size_t>(d)] == prev.coeffs[static_cast<size_t>(d)]) {
          out.coeffs[static_cast<size_t>(d)] = cur.coeffs[static_cast<size_t>(d)];
          frozen[static_cast<size_t>(d)] = true;
        }
    }
    bool all = true;
    for (int d = 0; d <= D; ++d) {
      if (!frozen[static_cast<size_t>(d)] && L >= cap(d))
        throw std::runtime_error(
            "limit_character: degree " + std::to_string(d) +
            " did not stabilize by L = " + std::to_string(cap(d)));
      all = all && frozen[static_cast<size_t>(d)];
    }
    if (all) break;
    prev = cur;
    have_prev = true;
  }
  return out;
}

// energy carried by a single bosonic orbit content mu
inline long orbit_energy(const Partition& mu) {
  long e = 0;
  for (int v : mu) e += static_cast<long>(v) * (v - 1) / 2;
  return e;
}

}  // namespace quiverchar
