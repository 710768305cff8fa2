#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "quiverchar/qpoly.hpp"

namespace quiverchar {

using Expo = std::vector<int>;  // exponent vector, one entry per a-variable

/// Sparse Laurent polynomial in the variables a_1..a_n with QPoly
/// coefficients. std::map with lexicographic key order doubles as a
/// monomial order for the exact-division routine.
class MPoly {
public:
  explicit MPoly(int n = 0) : n_(n) {}

  static MPoly constant(int n, QPoly c) {
    MPoly p(n);
    if (!c.is_zero()) p.terms_.emplace(Expo(n, 0), std::move(c));
    return p;
  }
  static MPoly monomial(int n, Expo e, QPoly c = QPoly(1)) {
    MPoly p(n);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
  }
  // a_i - c * a_j (0-based variable indices)
  static MPoly binomial(int n, int i, int j, QPoly c) {
    MPoly p(n);
    Expo ei(n, 0), ej(n, 0);
    ei[i] = 1;
    ej[j] = 1;
    p.terms_.emplace(std::move(ei), QPoly(1));
    if (!c.is_zero()) p.terms_.emplace(std::move(ej), -c);
    return p;
  }

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, QPoly>& terms() const { return terms_; }

  void add_term(const Expo& e, const QPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
  friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }

  // qcap >= 0 truncates coefficient q-degrees during accumulation
  MPoly mul(const MPoly& o, int qcap = -1) const {
    check(o);
    MPoly r(n_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        QPoly c = (c1 * c2).truncated(qcap);
        if (c.is_zero()) continue;
        Expo e(n_);
        for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c);
      }
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) { return a.mul(b); }

  MPoly mul_monomial(const Expo& e, const QPoly& c = QPoly(1)) const {
    MPoly r(n_);
    for (const auto& [e1, c1] : terms_) {
      Expo e2(n_);
      for (int i = 0; i < n_; ++i) e2[i] = e1[i] + e[i];
      r.add_term(e2, c1 * c);
    }
    return r;
  }

  MPoly mul_scalar(const QPoly& c) const {
    MPoly r(n_);
    for (const auto& [e, c1] : terms_) r.add_term(e, c1 * c);
    return r;
  }

  // substitute a_i -> q * a_i, truncating at qcap if qcap >= 0
  MPoly scale_var_by_q(int i, int qcap = -1) const {
    MPoly r(n_);
    for (const auto& [e, c] : terms_) {
      if (e[i] < 0)
        throw std::invalid_argument("MPoly: q-scaling a negative exponent");
      QPoly c2 = c.shifted(e[i]).truncated(qcap);
      if (!c2.is_zero()) r.terms_.emplace(e, std::move(c2));
    }
    return r;
  }

  // permute variables: new exponent of variable perm[i] is old exponent of i
  MPoly permuted(const std::vector<int>& perm) const {
    MPoly r(n_);
    for (const auto& [e, c] : terms_) {
      Expo e2(n_);
      for (int i = 0; i < n_; ++i) e2[perm[static_cast<size_t>(i)]] = e[i];
      r.add_term(e2, c);
    }
    return r;
  }

  MPoly truncated_q(int qcap) const {
    MPoly r(n_);
    for (const auto& [e, c] : terms_) {
      QPoly c2 = c.truncated(qcap);
      if (!c2.is_zero()) r.terms_.emplace(e, std::move(c2));
    }
    return r;
  }

  // exact division via leading-term elimination; both operands must have
  // non-negative exponents. Throws if the division is not exact.
  static MPoly div_exact(MPoly num, const MPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("MPoly: division by zero");
    const int n = num.n_;
    MPoly quot(n);
    const auto& [de, dc] = *den.terms_.rbegin();
    while (!num.is_zero()) {
      const auto& [ne, nc] = *num.terms_.rbegin();
      Expo e(n);
      for (int i = 0; i < n; ++i) {
        e[i] = ne[i] - de[i];
        if (e[i] < 0) throw std::runtime_error("MPoly: inexact division");
      }
      QPoly c = QPoly::div_exact(nc, dc);
      quot.add_term(e, c);
      num -= den.mul_monomial(e, c);
    }
    return quot;
  }

  // divide every coefficient by a q-polynomial, exactly
  MPoly div_scalar_exact(const QPoly& d) const {
    MPoly r(n_);
    for (const auto& [e, c] : terms_)
      r.terms_.emplace(e, QPoly::div_exact(c, d));
    return r;
  }

  bool operator==(const MPoly& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

private:
  int n_;
  std::map<Expo, QPoly> terms_;

  void check(const MPoly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("MPoly: variable mismatch");
  }
};

// Vandermonde determinant prod_{i<j} (a_i - a_j)
inline MPoly vandermonde(int n) {
  MPoly v = MPoly::constant(n, QPoly(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v = v * MPoly::binomial(n, i, j, QPoly(1));
  return v;
}

}  // namespace quiverchar
