#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "quiverchar/mpoly.hpp"
#include "quiverchar/qpoly.hpp"

namespace quiverchar {

/// Symmetric Laurent polynomial in a_1..a_n with QPoly coefficients.
/// One term per S_n-orbit: the key is the exponent vector sorted in
/// weakly decreasing order, and the stored coefficient is shared by the
/// whole orbit.
class SymPoly {
public:
  explicit SymPoly(int n = 0) : n_(n) {}

  static SymPoly constant(int n, QPoly c) {
    SymPoly p(n);
    if (!c.is_zero()) p.orbits_.emplace(Expo(n, 0), std::move(c));
    return p;
  }

  // orbit of the exponent vector e (any order), coefficient c
  static SymPoly orbit(int n, Expo e, QPoly c = QPoly(1)) {
    if (static_cast<int>(e.size()) > n)
      throw std::invalid_argument("SymPoly::orbit: exponent too long");
    e.resize(static_cast<size_t>(n), 0);
    std::sort(e.rbegin(), e.rend());
    SymPoly p(n);
    if (!c.is_zero()) p.orbits_.emplace(std::move(e), std::move(c));
    return p;
  }

  int nvars() const { return n_; }
  bool is_zero() const { return orbits_.empty(); }
  const std::map<Expo, QPoly>& orbits() const { return orbits_; }

  QPoly coeff(Expo e) const {
    e.resize(static_cast<size_t>(n_), 0);
    std::sort(e.rbegin(), e.rend());
    auto it = orbits_.find(e);
    return it == orbits_.end() ? QPoly() : it->second;
  }

  void add_orbit(Expo e, const QPoly& c) {
    if (c.is_zero()) return;
    std::sort(e.rbegin(), e.rend());
    auto it = orbits_.find(e);
    if (it == orbits_.end()) {
      orbits_.emplace(std::move(e), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) orbits_.erase(it);
    }
  }

  SymPoly& operator+=(const SymPoly& o) {
    check(o);
    for (const auto& [e, c] : o.orbits_) add_orbit(e, c);
    return *this;
  }
  SymPoly& operator-=(const SymPoly& o) {
    check(o);
    for (const auto& [e, c] : o.orbits_) add_orbit(e, -c);
    return *this;
  }
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { a += b; return a; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { a -= b; return a; }

  SymPoly mul(const SymPoly& o, int qcap = -1) const {
    check(o);
    MPoly prod = expand().mul(o.expand(), qcap);
    return from_expanded(prod);
  }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    return a.mul(b);
  }

  SymPoly mul_scalar(const QPoly& c) const {
    SymPoly r(n_);
    for (const auto& [e, c1] : orbits_) {
      QPoly c2 = c1 * c;
      if (!c2.is_zero()) r.orbits_.emplace(e, std::move(c2));
    }
    return r;
  }
  SymPoly operator-() const { return mul_scalar(QPoly(-1)); }

  // multiply by (a_1 ... a_n)^s; s may be negative
  SymPoly mul_power_of_det(int s) const {
    SymPoly r(n_);
    for (const auto& [e, c] : orbits_) {
      Expo e2 = e;
      for (int& x : e2) x += s;
      r.orbits_.emplace(std::move(e2), c);
    }
    return r;
  }

  SymPoly truncated_q(int qcap) const {
    SymPoly r(n_);
    for (const auto& [e, c] : orbits_) {
      QPoly c2 = c.truncated(qcap);
      if (!c2.is_zero()) r.orbits_.emplace(e, std::move(c2));
    }
    return r;
  }

  // keep only the q^d slice, as a q-free polynomial
  SymPoly q_slice(int d) const {
    SymPoly r(n_);
    for (const auto& [e, c] : orbits_) {
      mpz_class v = c.coeff(d);
      if (v != 0) r.orbits_.emplace(e, QPoly(v));
    }
    return r;
  }

  SymPoly eval_q(const mpz_class& q) const {
    SymPoly r(n_);
    for (const auto& [e, c] : orbits_) {
      mpz_class v = c.eval(q);
      if (v != 0) r.orbits_.emplace(e, QPoly(v));
    }
    return r;
  }

  // evaluate a_1 = ... = a_n = 1, leaving a polynomial in q
  QPoly eval_at_one() const {
    QPoly r;
    for (const auto& [e, c] : orbits_) {
      QPoly t = c;
      t *= mpz_class(orbit_size(e));
      r += t;
    }
    return r;
  }

  MPoly expand() const {
    MPoly r(n_);
    for (const auto& [e, c] : orbits_) {
      Expo p = e;
      std::sort(p.begin(), p.end());
      do {
        r.add_term(p, c);
      } while (std::next_permutation(p.begin(), p.end()));
    }
    return r;
  }

  // collect the orbit representatives of an expanded symmetric polynomial
  static SymPoly from_expanded(const MPoly& m) {
    SymPoly r(m.nvars());
    for (const auto& [e, c] : m.terms())
      if (std::is_sorted(e.rbegin(), e.rend())) r.orbits_.emplace(e, c);
    return r;
  }

  bool operator==(const SymPoly& o) const {
    return n_ == o.n_ && orbits_ == o.orbits_;
  }
  bool operator!=(const SymPoly& o) const { return !(*this == o); }

  // e is sorted; orbit size = len! / prod over values of multiplicity!
  static long orbit_size(const Expo& e) {
    long total = 1, run = 1;
    for (size_t i = 0; i < e.size(); ++i) {
      total *= static_cast<long>(i + 1);
      run = (i > 0 && e[i] == e[i - 1]) ? run + 1 : 1;
      total /= run;
    }
    return total;
  }

private:
  int n_;
  std::map<Expo, QPoly> orbits_;

  void check(const SymPoly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("SymPoly: variable mismatch");
  }
};

}  // namespace quiverchar
