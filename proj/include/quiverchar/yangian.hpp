#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiverchar/diagrams.hpp"

namespace quiverchar {

/// Rational function of u of the form
///   scalar * prod_i (u - r_i) / prod_j (u - s_j),
/// kept as factor multisets with eager cancellation, so equality is exact
/// multiset equality.
class LinearRational {
public:
  LinearRational() = default;
  explicit LinearRational(mpq_class scalar) : scalar_(std::move(scalar)) {
    if (scalar_ == 0)
      throw std::invalid_argument("LinearRational: zero scalar");
  }

  const mpq_class& scalar() const { return scalar_; }
  const std::map<mpq_class, int>& numerator_roots() const { return num_; }
  const std::map<mpq_class, int>& denominator_roots() const { return den_; }

  void mul_num_root(const mpq_class& r, int mult = 1) { push(r, mult); }
  void mul_den_root(const mpq_class& r, int mult = 1) { push(r, -mult); }
  void mul_scalar(const mpq_class& c) {
    if (c == 0) throw std::invalid_argument("LinearRational: zero scalar");
    scalar_ *= c;
  }

  LinearRational& operator*=(const LinearRational& o) {
    scalar_ *= o.scalar_;
    for (const auto& [r, m] : o.num_) push(r, m);
    for (const auto& [r, m] : o.den_) push(r, -m);
    return *this;
  }
  friend LinearRational operator*(LinearRational a, const LinearRational& b) {
    a *= b;
    return a;
  }
  LinearRational inverse() const {
    LinearRational r;
    r.scalar_ = 1 / scalar_;
    r.num_ = den_;
    r.den_ = num_;
    return r;
  }
  friend LinearRational operator/(LinearRational a, const LinearRational& b) {
    a *= b.inverse();
    return a;
  }

  // substitute u -> u - c (every root moves up by c)
  LinearRational shifted_u(const mpq_class& c) const {
    LinearRational r;
    r.scalar_ = scalar_;
    for (const auto& [root, m] : num_) r.num_.emplace(root + c, m);
    for (const auto& [root, m] : den_) r.den_.emplace(root + c, m);
    return r;
  }

  bool is_one() const { return scalar_ == 1 && num_.empty() && den_.empty(); }
  bool all_integer_roots() const {
    for (const auto& [r, m] : num_) {
      (void)m;
      if (r.get_den() != 1) return false;
    }
    for (const auto& [r, m] : den_) {
      (void)m;
      if (r.get_den() != 1) return false;
    }
    return true;
  }

  bool operator==(const LinearRational& o) const {
    return scalar_ == o.scalar_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const LinearRational& o) const { return !(*this == o); }
  bool operator<(const LinearRational& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    if (den_ != o.den_) return den_ < o.den_;
    return scalar_ < o.scalar_;
  }

  std::string str() const {
    std::string s = scalar_.get_str();
    for (const auto& [r, m] : num_)
      for (int i = 0; i < m; ++i) s += " * (u - " + r.get_str() + ")";
    for (const auto& [r, m] : den_)
      for (int i = 0; i < m; ++i) s += " / (u - " + r.get_str() + ")";
    return s;
  }

private:
  mpq_class scalar_ = 1;
  std::map<mpq_class, int> num_, den_;  // root -> multiplicity, disjoint

  // positive mult goes to the numerator, cancelling against the denominator
  void push(const mpq_class& r, int mult) {
    if (mult == 0) return;
    auto bump = [&](std::map<mpq_class, int>& grow,
                    std::map<mpq_class, int>& shrink, int m) {
      auto it = shrink.find(r);
      if (it != shrink.end()) {
        int c = std::min(m, it->second);
        it->second -= c;
        if (it->second == 0) shrink.erase(it);
        m -= c;
      }
      if (m > 0) grow[r] += m;
    };
    if (mult > 0)
      bump(num_, den_, mult);
    else
      bump(den_, num_, -mult);
  }
};

/// Capelli determinant eigenvalue on the gl_{n+N-m} irrep of highest
/// weight mu: prod_{i=1}^{n+N-m} (u - mu_i + i + m - n - N).
inline LinearRational capelli_eigenvalue(const WeightRow& mu, int m, int n,
                                         int N) {
  if (mu.size() != n + N - m)
    throw std::invalid_argument("capelli_eigenvalue: length mismatch");
  LinearRational out;
  for (long i = 1; i <= mu.size(); ++i)
    out.mul_num_root(mpq_class(mu.at(i) - i - m + n + N));
  return out;
}

/// Quantum minor A_m(u) eigenvalue on the GT basis vector of a finite
/// pattern: prod_i (u - Lambda_{m+1,i} - N + i) / (u - Lambda_{1,i} - N + i).
inline LinearRational minor_eigenvalue(const GTPattern& p, int m) {
  int n = p.height();
  if (m < 1 || m > n) throw std::invalid_argument("minor_eigenvalue: bad m");
  long N = p.rows.front().size();
  LinearRational out;
  for (long i = 1; i <= N; ++i) {
    out.mul_num_root(mpq_class(p.rows[static_cast<size_t>(m)].at(i) + N - i));
    out.mul_den_root(mpq_class(p.rows[0].at(i) + N - i));
  }
  return out;
}

/// Twisted minor eigenvalue on a finite pattern of length N = nL + r: the
/// plain formula with rows lowered by kL and charge shift r, times the
/// vacuum normalization
///   prod_{i=r+1}^{nL+r} (u - r - vac_{1,i} + i) / (u - r - vac_{m+1,i} + i),
/// which expands to the Pochhammer ratio
///   prod_{j<m} (1+(u-j-k)/(n+k))_L / (1+(u-j)/(n+k))_L.
/// (This is the unique normalization for which the eigenvalues are stable
/// under the transition map and converge to the semi-infinite spectrum.)
inline LinearRational minor_eigenvalue_twisted(const GTPattern& p, int m,
                                               int L, int r, int n, int k) {
  long N = p.rows.front().size();
  if (N != static_cast<long>(n) * L + r)
    throw std::invalid_argument("minor_eigenvalue_twisted: N != nL + r");
  LinearRational out;
  for (long i = 1; i <= N; ++i) {
    out.mul_num_root(mpq_class(r + p.rows[static_cast<size_t>(m)].at(i) - k * L - i));
    out.mul_den_root(mpq_class(r + p.rows[0].at(i) - k * L - i));
  }
  Tail vac_top{n, k, r}, vac_row{n, k, r - m};
  for (long i = r + 1; i <= N; ++i) {
    out.mul_num_root(mpq_class(r + vac_top.at(i) - i));
    out.mul_den_root(mpq_class(r + vac_row.at(i) - i));
  }
  return out;
}

/// Semi-infinite eigenvalue: the charge-r product regularized against the
/// vacuum pattern; all but finitely many factors cancel.
inline LinearRational minor_eigenvalue_semiinf(const GTPattern& p, int m,
                                               int r) {
  if (!p.semi_infinite())
    throw std::invalid_argument("minor_eigenvalue_semiinf: finite pattern");
  const Tail& t = *p.rows.front().tail;
  if (t.r != r)
    throw std::invalid_argument("minor_eigenvalue_semiinf: charge mismatch");
  const WeightRow& top = p.rows[0];
  const WeightRow& row = p.rows[static_cast<size_t>(m)];
  if (!row.tail || row.tail->r != r - m)
    throw std::runtime_error("minor_eigenvalue_semiinf: tail never matches");
  LinearRational out;
  long span = std::max(top.size(), row.size());
  for (long i = 1; i <= std::max<long>(r, span); ++i) {
    out.mul_num_root(mpq_class(r + row.at(i) - i));
    out.mul_den_root(mpq_class(r + top.at(i) - i));
    if (i > r) {
      // regularizing vacuum factors
      out.mul_den_root(mpq_class(r + row.tail->at(i) - i));
      out.mul_num_root(mpq_class(r + top.tail->at(i) - i));
    }
  }
  return out;
}

/// Drinfeld polynomials P_1..P_{n-1} of the Yangian module attached to a
/// semi-infinite top row: P_m(u) = prod (u - r + i - j) over top boxes
/// (i,j) of the height-m columns of the skew diagram lambda/lambda-down.
inline std::vector<LinearRational> drinfeld_polynomials(const WeightRow& lam,
                                                        int r, int n, int k) {
  if (!is_valid_semiinf_top(lam) || lam.tail->n != n || lam.tail->k != k ||
      lam.tail->r != r)
    throw std::invalid_argument("drinfeld_polynomials: invalid top row");
  SkewBoxSet syd = skew_diagram(lam, shift(lam, k, true));
  std::vector<LinearRational> out;
  for (int m = 1; m < n; ++m) {
    LinearRational pm;
    for (const auto& [i, j] : top_boxes_of_height(syd, m))
      pm.mul_num_root(mpq_class(r - i + j));
    out.push_back(std::move(pm));
  }
  return out;
}

/// Transition compatibility: on a pattern of length N + n the twisted
/// eigenvalue at level L+1 must equal the twisted eigenvalue at level L of
/// the transitioned pattern; non-cuttable tops map to zero and pass
/// vacuously.
inline bool verify_transition(const GTPattern& p, int m, int n, int k) {
  long len = p.rows.front().size();
  int N = static_cast<int>(len) - n;
  if (N < 0) throw std::invalid_argument("verify_transition: pattern too short");
  int L = N / n, r = N % n;
  auto moved = pattern_transition(p, n, k);
  if (!moved) return true;
  LinearRational lhs = minor_eigenvalue_twisted(p, m, L + 1, r, n, k);
  LinearRational rhs = minor_eigenvalue_twisted(*moved, m, L, r, n, k);
  return lhs == rhs;
}

}  // namespace quiverchar
