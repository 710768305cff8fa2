#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quiverchar {

/// Polynomial in x_1..x_N and the spin variables y^a_i (a = 1..n, i = 1..N)
/// with rational coefficients. Exponent layout: x_1..x_N first, then the
/// y-block of site i at offset N + (i-1)n with colors in order.
class WavePoly {
public:
  WavePoly() = default;
  WavePoly(int N, int n) : N_(N), n_(n) {
    if (N < 0 || n < 1) throw std::invalid_argument("WavePoly: bad sizes");
  }

  int sites() const { return N_; }
  int colors() const { return n_; }
  const std::map<std::vector<int>, mpq_class>& terms() const { return terms_; }

  static WavePoly monomial(int N, int n, const std::vector<int>& expo,
                           const mpq_class& c) {
    WavePoly p(N, n);
    if (expo.size() != p.width())
      throw std::invalid_argument("WavePoly: exponent width mismatch");
    p.add_term(expo, c);
    return p;
  }
  static WavePoly constant(int N, int n, const mpq_class& c) {
    return monomial(N, n, std::vector<int>(static_cast<size_t>(N) + static_cast<size_t>(N) * static_cast<size_t>(n), 0), c);
  }

  size_t width() const { return static_cast<size_t>(N_) + static_cast<size_t>(N_) * static_cast<size_t>(n_); }
  size_t x_index(int i) const {
    check_site(i);
    return static_cast<size_t>(i - 1);
  }
  size_t y_index(int a, int i) const {
    check_site(i);
    if (a < 1 || a > n_) throw std::invalid_argument("WavePoly: bad color");
    return static_cast<size_t>(N_) + static_cast<size_t>(i - 1) * static_cast<size_t>(n_) + static_cast<size_t>(a - 1);
  }

  void add_term(const std::vector<int>& expo, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
      terms_.emplace(expo, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const WavePoly& o) const {
    return N_ == o.N_ && n_ == o.n_ && terms_ == o.terms_;
  }
  bool operator!=(const WavePoly& o) const { return !(*this == o); }

  WavePoly& operator+=(const WavePoly& o) {
    check_shape(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  WavePoly& operator-=(const WavePoly& o) {
    check_shape(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend WavePoly operator+(WavePoly a, const WavePoly& b) { return a += b; }
  friend WavePoly operator-(WavePoly a, const WavePoly& b) { return a -= b; }

  WavePoly operator*(const WavePoly& o) const {
    check_shape(o);
    WavePoly out(N_, n_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        std::vector<int> e = e1;
        for (size_t t = 0; t < e.size(); ++t) e[t] += e2[t];
        out.add_term(e, c1 * c2);
      }
    return out;
  }
  WavePoly mul_scalar(const mpq_class& c) const {
    WavePoly out(N_, n_);
    if (c == 0) return out;
    for (const auto& [e, cc] : terms_) out.terms_.emplace(e, cc * c);
    return out;
  }

  // multiply by a single variable power
  WavePoly shifted(size_t idx, int power) const {
    WavePoly out(N_, n_);
    for (const auto& [e, c] : terms_) {
      std::vector<int> ee = e;
      ee[idx] += power;
      if (ee[idx] < 0) throw std::invalid_argument("WavePoly: negative exponent");
      out.terms_.emplace(std::move(ee), c);
    }
    return out;
  }

  // partial derivative with respect to the variable at idx
  WavePoly derivative(size_t idx) const {
    WavePoly out(N_, n_);
    for (const auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      std::vector<int> ee = e;
      int p = ee[idx]--;
      out.add_term(ee, c * p);
    }
    return out;
  }

  long x_degree_of(const std::vector<int>& e) const {
    long d = 0;
    for (int i = 0; i < N_; ++i) d += e[static_cast<size_t>(i)];
    return d;
  }
  // the homogeneous x-degree-d part
  WavePoly x_slice(long d) const {
    WavePoly out(N_, n_);
    for (const auto& [e, c] : terms_)
      if (x_degree_of(e) == d) out.terms_.emplace(e, c);
    return out;
  }
  long max_x_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
      (void)c;
      d = std::max(d, x_degree_of(e));
    }
    return d;
  }
  bool x_homogeneous() const {
    long d = -2;
    for (const auto& [e, c] : terms_) {
      (void)c;
      if (d == -2)
        d = x_degree_of(e);
      else if (d != x_degree_of(e))
        return false;
    }
    return true;
  }
  bool integer_coefficients() const {
    for (const auto& [e, c] : terms_) {
      (void)e;
      if (c.get_den() != 1) return false;
    }
    return true;
  }

  // exact division by (x_i - x_j); throws on inexact input
  WavePoly div_exact_xdiff(int i, int j) const {
    size_t xi = x_index(i), xj = x_index(j);
    WavePoly rem = *this, quot(N_, n_);
    while (!rem.terms_.empty()) {
      // leading term: maximal x_i exponent, ties broken by key order
      auto lead = rem.terms_.begin();
      for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
        if (it->first[xi] > lead->first[xi]) lead = it;
      if (lead->first[xi] == 0)
        throw std::runtime_error("WavePoly: inexact division by (x_i - x_j)");
      std::vector<int> e = lead->first;
      mpq_class c = lead->second;
      --e[xi];
      quot.add_term(e, c);
      // remainder -= c * x^e * (x_i - x_j)
      rem.terms_.erase(lead);
      std::vector<int> ej = e;
      ++ej[xj];
      rem.add_term(ej, c);
    }
    return quot;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.get_str() + " * " + monomial_str(e);
    }
    return s;
  }

private:
  int N_ = 0, n_ = 1;
  std::map<std::vector<int>, mpq_class> terms_;

  void check_site(int i) const {
    if (i < 1 || i > N_) throw std::invalid_argument("WavePoly: bad site");
  }
  void check_shape(const WavePoly& o) const {
    if (N_ != o.N_ || n_ != o.n_)
      throw std::invalid_argument("WavePoly: shape mismatch");
  }
  std::string monomial_str(const std::vector<int>& e) const {
    std::string s;
    auto piece = [&](const std::string& var, int p) {
      if (p == 0) return;
      if (!s.empty()) s += "*";
      s += var;
      if (p != 1) s += "^" + std::to_string(p);
    };
    for (int i = 1; i <= N_; ++i) piece("x" + std::to_string(i), e[x_index(i)]);
    for (int i = 1; i <= N_; ++i)
      for (int a = 1; a <= n_; ++a)
        piece("y[" + std::to_string(a) + "," + std::to_string(i) + "]",
              e[y_index(a, i)]);
    if (s.empty()) s = "1";
    return s;
  }
};

/// Slater determinant det(x_i^{m_j} y^{a_j}_i).
inline WavePoly slater(const std::vector<int>& modes,
                       const std::vector<int>& colors, int N, int n) {
  if (modes.size() != static_cast<size_t>(N) || colors.size() != static_cast<size_t>(N))
    throw std::invalid_argument("slater: length mismatch");
  WavePoly out(N, n);
  std::vector<int> perm(static_cast<size_t>(N));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inv = 0;
    for (size_t p = 0; p < perm.size(); ++p)
      for (size_t q = p + 1; q < perm.size(); ++q)
        if (perm[p] > perm[q]) ++inv;
    std::vector<int> e(out.width(), 0);
    bool ok = true;
    for (int j = 0; j < N; ++j) {
      int i = perm[static_cast<size_t>(j)] + 1;  // site for column j
      int m = modes[static_cast<size_t>(j)];
      if (m < 0) {
        ok = false;
        break;
      }
      e[out.x_index(i)] += m;
      e[out.y_index(colors[static_cast<size_t>(j)], i)] += 1;
    }
    if (!ok) throw std::invalid_argument("slater: negative mode");
    out.add_term(e, (inv % 2 == 0) ? mpq_class(1) : mpq_class(-1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Ground state for a color word: the k-th power of the Slater determinant
/// with mode ladder floor((j-1)/n).
inline WavePoly ground_state(const std::vector<int>& colors, int N, int n,
                             int k) {
  std::vector<int> modes(static_cast<size_t>(N));
  for (int j = 1; j <= N; ++j) modes[static_cast<size_t>(j - 1)] = (j - 1) / n;
  WavePoly s = slater(modes, colors, N, n);
  WavePoly out = WavePoly::constant(N, n, 1);
  for (int t = 0; t < k; ++t) out = out * s;
  return out;
}

/// Product of Slater determinants, one per wedge word; words are lists of
/// (mode, color) letters. A word of the wrong length collapses the whole
/// product to zero (the empty sector of the level-rank map).
inline WavePoly product_state(
    const std::vector<std::vector<std::pair<int, int>>>& words, int N, int n) {
  WavePoly out = WavePoly::constant(N, n, 1);
  for (const auto& w : words) {
    if (w.size() != static_cast<size_t>(N)) return WavePoly(N, n);
    std::vector<int> modes, colors;
    for (const auto& [m, a] : w) {
      modes.push_back(m);
      colors.push_back(a);
    }
    out = out * slater(modes, colors, N, n);
  }
  return out;
}

/// The loop generator E^a_b z^m as sum_i x_i^m y^a_i d/dy^b_i.
inline WavePoly apply_glnz(int a, int b, int m, const WavePoly& phi) {
  if (m < 0) throw std::invalid_argument("apply_glnz: negative mode");
  WavePoly out(phi.sites(), phi.colors());
  for (int i = 1; i <= phi.sites(); ++i)
    out += phi.derivative(phi.y_index(b, i))
               .shifted(phi.y_index(a, i), 1)
               .shifted(phi.x_index(i), m);
  return out;
}

/// The exchange operator Omega_ij = sum_{a,b} E^a_{b,i} E^b_{a,j}.
inline WavePoly apply_omega(const WavePoly& phi, int i, int j) {
  WavePoly out(phi.sites(), phi.colors());
  for (int a = 1; a <= phi.colors(); ++a)
    for (int b = 1; b <= phi.colors(); ++b)
      out += phi.derivative(phi.y_index(a, j))
                 .shifted(phi.y_index(b, j), 1)
                 .derivative(phi.y_index(b, i))
                 .shifted(phi.y_index(a, i), 1);
  return out;
}

/// Denominator-cleared flatness residual of the KZ connection at site i:
///   (k+n) d_i(phi) prod_{j != i}(x_i - x_j)
///     - sum_{j != i} (Omega_ij + k) phi prod_{l != i,j}(x_i - x_l).
/// Vanishes identically iff phi is flat for nabla_i.
inline WavePoly kz_residual(const WavePoly& phi, int i, int n, int k) {
  int N = phi.sites();
  if (n != phi.colors()) throw std::invalid_argument("kz_residual: bad n");
  if (i < 1 || i > N) throw std::invalid_argument("kz_residual: bad site");
  auto xdiff = [&](int p, int q) {
    WavePoly d(N, n);
    std::vector<int> e(phi.width(), 0);
    e[phi.x_index(p)] = 1;
    d.add_term(e, 1);
    e[phi.x_index(p)] = 0;
    e[phi.x_index(q)] = 1;
    d.add_term(e, -1);
    return d;
  };
  WavePoly out = phi.derivative(phi.x_index(i)).mul_scalar(k + n);
  for (int j = 1; j <= N; ++j)
    if (j != i) out = out * xdiff(i, j);
  for (int j = 1; j <= N; ++j) {
    if (j == i) continue;
    WavePoly piece = apply_omega(phi, i, j) + phi.mul_scalar(k);
    for (int l = 1; l <= N; ++l)
      if (l != i && l != j) piece = piece * xdiff(i, l);
    out -= piece;
  }
  return out;
}

namespace detail {
inline WavePoly xdiff_poly(const WavePoly& shape, int p, int q) {
  WavePoly d(shape.sites(), shape.colors());
  std::vector<int> e(shape.width(), 0);
  e[shape.x_index(p)] = 1;
  d.add_term(e, 1);
  e[shape.x_index(p)] = 0;
  e[shape.x_index(q)] = 1;
  d.add_term(e, -1);
  return d;
}
}  // namespace detail

/// Calogero-Sutherland Hamiltonian
///   sum_i Delta^{-1} (x_i d_i)^2 Delta
///     - 2 sum_{i<j} x_i x_j (Omega_ij + k)/(x_i - x_j)^2
///     - (N-1) sum_i x_i d_i - N(N-1)(2N-1)/6,
/// evaluated over the common denominator Delta^2 with exact division.
inline WavePoly apply_hcs(const WavePoly& phi, int N, int n, int k) {
  if (N != phi.sites() || n != phi.colors())
    throw std::invalid_argument("apply_hcs: shape mismatch");
  WavePoly delta = WavePoly::constant(N, n, 1);
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) delta = delta * detail::xdiff_poly(phi, i, j);
  auto euler = [&](const WavePoly& f, int i) {
    return f.derivative(f.x_index(i)).shifted(f.x_index(i), 1);
  };
  WavePoly big(N, n);
  WavePoly dphi = delta * phi;
  for (int i = 1; i <= N; ++i) big += euler(euler(dphi, i), i);
  WavePoly num = delta * big;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      WavePoly piece = (apply_omega(phi, i, j) + phi.mul_scalar(k))
                           .shifted(phi.x_index(i), 1)
                           .shifted(phi.x_index(j), 1)
                           .mul_scalar(2);
      for (int p = 1; p <= N; ++p)
        for (int q = p + 1; q <= N; ++q)
          if (!(p == i && q == j)) {
            WavePoly d = detail::xdiff_poly(phi, p, q);
            piece = piece * d * d;
          }
      num -= piece;
    }
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      num = num.div_exact_xdiff(i, j);
      num = num.div_exact_xdiff(i, j);
    }
  WavePoly out = num;
  for (int i = 1; i <= N; ++i) out -= euler(phi, i).mul_scalar(N - 1);
  long c = static_cast<long>(N) * (N - 1) * (2L * N - 1) / 6;
  out -= phi.mul_scalar(c);
  return out;
}

/// Rational Calogero-Moser Hamiltonian
///   sum_i Delta^{-1} d_i^2 Delta - 2 sum_{i<j} (Omega_ij + k)/(x_i - x_j)^2,
/// under the same denominator-clearing scheme.
inline WavePoly apply_t20(const WavePoly& phi, int N, int n, int k) {
  if (N != phi.sites() || n != phi.colors())
    throw std::invalid_argument("apply_t20: shape mismatch");
  WavePoly delta = WavePoly::constant(N, n, 1);
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) delta = delta * detail::xdiff_poly(phi, i, j);
  WavePoly big(N, n);
  WavePoly dphi = delta * phi;
  for (int i = 1; i <= N; ++i)
    big += dphi.derivative(phi.x_index(i)).derivative(phi.x_index(i));
  WavePoly num = delta * big;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      WavePoly piece =
          (apply_omega(phi, i, j) + phi.mul_scalar(k)).mul_scalar(2);
      for (int p = 1; p <= N; ++p)
        for (int q = p + 1; q <= N; ++q)
          if (!(p == i && q == j)) {
            WavePoly d = detail::xdiff_poly(phi, p, q);
            piece = piece * d * d;
          }
      num -= piece;
    }
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      num = num.div_exact_xdiff(i, j);
      num = num.div_exact_xdiff(i, j);
    }
  return num;
}

/// Rank of the x-degree-d homogeneous slices of the given states, by exact
/// Gaussian elimination over the rationals.
inline long span_rank(const std::vector<WavePoly>& states, long d) {
  std::map<std::vector<int>, size_t> columns;
  std::vector<std::map<size_t, mpq_class>> rows;
  for (const auto& s : states) {
    std::map<size_t, mpq_class> row;
    for (const auto& [e, c] : s.terms()) {
      if (s.x_degree_of(e) != d) continue;
      auto [it, fresh] = columns.emplace(e, columns.size());
      (void)fresh;
      row[it->second] = c;
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  long rank = 0;
  for (auto rit = rows.begin(); rit != rows.end(); ++rit) {
    auto& row = *rit;
    for (auto pit = rows.begin(); pit != rit; ++pit) {
      if (pit->empty() || row.empty()) continue;
      auto lead = pit->begin();
      auto hit = row.find(lead->first);
      if (hit == row.end()) continue;
      mpq_class f = hit->second / lead->second;
      for (const auto& [col, c] : *pit) {
        auto it = row.find(col);
        mpq_class v = (it == row.end() ? mpq_class(0) : it->second) - f * c;
        if (v == 0) {
          if (it != row.end()) row.erase(it);
        } else {
          row[col] = v;
        }
      }
    }
    if (!row.empty()) ++rank;
  }
  return rank;
}

}  // namespace quiverchar
