#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace quiverchar {

/// Dense polynomial in the grading variable q with arbitrary-precision
/// integer coefficients. Coefficients of characters and Kostka-Foulkes
/// polynomials grow quickly, so everything is mpz from the start.
class QPoly {
public:
  QPoly() = default;
  QPoly(long v) { if (v != 0) coeffs_.assign(1, mpz_class(v)); }
  QPoly(mpz_class v) { if (v != 0) coeffs_.assign(1, std::move(v)); }

  static QPoly q_power(int e, mpz_class c = 1) {
    QPoly p;
    if (c != 0) {
      p.coeffs_.assign(static_cast<size_t>(e) + 1, mpz_class(0));
      p.coeffs_.back() = std::move(c);
    }
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  mpz_class coeff(int e) const {
    if (e < 0 || e >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(e)];
  }

  QPoly& operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
  friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
  }
  QPoly& operator*=(const QPoly& o) { *this = *this * o; return *this; }
  QPoly& operator*=(const mpz_class& c) {
    if (c == 0) { coeffs_.clear(); return *this; }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  QPoly operator-() const {
    QPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
  }

  // multiply by q^e
  QPoly shifted(int e) const {
    if (is_zero() || e == 0) return *this;
    if (e < 0) throw std::invalid_argument("QPoly::shifted: negative shift");
    QPoly r;
    r.coeffs_.assign(coeffs_.size() + static_cast<size_t>(e), mpz_class(0));
    std::copy(coeffs_.begin(), coeffs_.end(),
              r.coeffs_.begin() + static_cast<size_t>(e));
    return r;
  }

  // drop all terms with q-degree > cap (cap < 0 means no truncation)
  QPoly truncated(int cap) const {
    if (cap < 0 || degree() <= cap) return *this;
    QPoly r = *this;
    r.coeffs_.resize(static_cast<size_t>(cap) + 1);
    r.trim();
    return r;
  }

  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  // exact division; throws if the remainder is nonzero
  static QPoly div_exact(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("QPoly: division by zero");
    QPoly rem = num, quot;
    int dd = den.degree();
    const mpz_class& lead = den.coeffs_.back();
    while (!rem.is_zero()) {
      int rd = rem.degree();
      if (rd < dd) throw std::runtime_error("QPoly: inexact division");
      mpz_class qc, r;
      mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(),
                  rem.coeffs_.back().get_mpz_t(), lead.get_mpz_t());
      if (r != 0) throw std::runtime_error("QPoly: inexact division");
      quot += QPoly::q_power(rd - dd, qc);
      rem -= den * QPoly::q_power(rd - dd, qc);
    }
    return quot;
  }

  mpz_class eval(const mpz_class& q) const {
    mpz_class v = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) v = v * q + coeffs_[i];
    return v;
  }

  bool nonneg_coeffs() const {
    for (const auto& c : coeffs_)
      if (c < 0) return false;
    return true;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      mpz_class c = coeffs_[i];
      if (!s.empty()) {
        s += (c < 0) ? " - " : " + ";
        if (c < 0) c = -c;
      } else if (c < 0) {
        s += "-";
        c = -c;
      }
      if (i == 0) {
        s += c.get_str();
      } else {
        if (c != 1) s += c.get_str() + "*";
        s += (i == 1) ? "q" : "q^" + std::to_string(i);
      }
    }
    return s;
  }

private:
  std::vector<mpz_class> coeffs_;  // coeffs_[e] is the coefficient of q^e

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
};

// [n]_q = 1 + q + ... + q^{n-1}
inline QPoly q_int(int n) {
  QPoly p;
  for (int i = 0; i < n; ++i) p += QPoly::q_power(i);
  return p;
}

// [n]_q! = [n]_q [n-1]_q ... [1]_q
inline QPoly q_factorial(int n) {
  QPoly p(1);
  for (int i = 2; i <= n; ++i) p *= q_int(i);
  return p;
}

}  // namespace quiverchar
