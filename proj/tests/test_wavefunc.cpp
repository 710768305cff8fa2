#include <catch2/catch_amalgamated.hpp>

#include "quiverchar/characters.hpp"
#include "quiverchar/wavefunc.hpp"

using namespace quiverchar;

namespace {

WavePoly wmono(int N, int n, const std::vector<std::pair<size_t, int>>& vars,
               const mpq_class& c) {
  WavePoly shape(N, n);
  std::vector<int> e(shape.width(), 0);
  for (const auto& [idx, p] : vars) e[idx] += p;
  return WavePoly::monomial(N, n, e, c);
}

// all color words of length N over 1..n
std::vector<std::vector<int>> color_words(int N, int n) {
  std::vector<std::vector<int>> out(1);
  for (int j = 0; j < N; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out)
      for (int a = 1; a <= n; ++a) {
        auto ww = w;
        ww.push_back(a);
        next.push_back(ww);
      }
    out = std::move(next);
  }
  return out;
}

// all wedge words (strictly increasing (mode, color) letters, modes >= 0)
// of length N with mode sum exactly d
std::vector<std::vector<std::pair<int, int>>> plain_words(int N, int n,
                                                          int d) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self, int rem, int count) -> void {
    if (count == 0) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (int m = cur.empty() ? 0 : cur.back().first; m <= rem; ++m)
      for (int a = 1; a <= n; ++a) {
        if (!cur.empty() &&
            !(m > cur.back().first ||
              (m == cur.back().first && a > cur.back().second)))
          continue;
        cur.emplace_back(m, a);
        self(self, rem - m, count - 1);
        cur.pop_back();
      }
  };
  rec(rec, d, N);
  return out;
}

long cs_eigenvalue(const std::vector<int>& lam, int N, int k) {
  long e = 0;
  for (int i = 1; i <= N; ++i) {
    long t = lam[static_cast<size_t>(i - 1)] - k;
    e += t * (t + N + 1 - 2 * i);
  }
  return e;
}

}  // namespace

TEST_CASE("slater determinants") {
  WavePoly s = slater({0, 1}, {1, 2}, 2, 2);
  WavePoly expect = wmono(2, 2,
                          {{s.x_index(2), 1}, {s.y_index(1, 1), 1}, {s.y_index(2, 2), 1}},
                          1) -
                    wmono(2, 2,
                          {{s.x_index(1), 1}, {s.y_index(2, 1), 1}, {s.y_index(1, 2), 1}},
                          1);
  REQUIRE(s == expect);

  // repeated column collapses to zero
  REQUIRE(slater({1, 1}, {2, 2}, 2, 2).is_zero());

  // x-degree = sum of modes
  WavePoly t = slater({0, 2, 3}, {1, 2, 1}, 3, 2);
  REQUIRE(t.x_homogeneous());
  REQUIRE(t.max_x_degree() == 5);

  REQUIRE_THROWS(slater({-1, 0}, {1, 1}, 2, 1));
}

TEST_CASE("ground states") {
  REQUIRE(ground_state({1, 2}, 2, 2, 1) == slater({0, 0}, {1, 2}, 2, 2));

  // one full layer: det(y)^k, x-free
  WavePoly full = ground_state({1, 2}, 2, 2, 2);
  REQUIRE(full.max_x_degree() == 0);
  REQUIRE(full == slater({0, 0}, {1, 2}, 2, 2) * slater({0, 0}, {1, 2}, 2, 2));

  // x-degree = k * sum floor((j-1)/n)
  for (int k = 1; k <= 2; ++k) {
    WavePoly g = ground_state({1, 2, 1}, 3, 2, k);
    REQUIRE_FALSE(g.is_zero());
    REQUIRE(g.x_homogeneous());
    REQUIRE(g.max_x_degree() == k);
    REQUIRE(g.integer_coefficients());
  }

  // color word with a repeated color inside one layer vanishes
  REQUIRE(ground_state({1, 1}, 2, 2, 1).is_zero());
}

TEST_CASE("product states") {
  WavePoly p = product_state({{{2, 1}}, {{3, 1}}}, 1, 1);
  WavePoly shape(1, 1);
  REQUIRE(p == wmono(1, 1, {{shape.x_index(1), 5}, {shape.y_index(1, 1), 2}}, 1));

  // wrong word length collapses to zero
  REQUIRE(product_state({{{0, 1}, {1, 2}}, {{0, 1}}}, 2, 2).is_zero());

  // k = 1 reduces to a single Slater determinant
  REQUIRE(product_state({{{0, 1}, {1, 2}}}, 2, 2) == slater({0, 1}, {1, 2}, 2, 2));
}

TEST_CASE("loop operators") {
  // single site: E^1_1 z on y^1_1
  WavePoly shape(1, 1);
  WavePoly y = wmono(1, 1, {{shape.y_index(1, 1), 1}}, 1);
  REQUIRE(apply_glnz(1, 1, 1, y) ==
          wmono(1, 1, {{shape.x_index(1), 1}, {shape.y_index(1, 1), 1}}, 1));

  // Leibniz over sites: E^1_2 z^0 on y^2_1 y^2_2
  WavePoly s2(2, 2);
  WavePoly yy = wmono(2, 2, {{s2.y_index(2, 1), 1}, {s2.y_index(2, 2), 1}}, 1);
  WavePoly want =
      wmono(2, 2, {{s2.y_index(1, 1), 1}, {s2.y_index(2, 2), 1}}, 1) +
      wmono(2, 2, {{s2.y_index(2, 1), 1}, {s2.y_index(1, 2), 1}}, 1);
  REQUIRE(apply_glnz(1, 2, 0, yy) == want);

  // x-degree raised by exactly m
  WavePoly g = ground_state({1, 2, 1}, 3, 2, 1);
  for (int m = 0; m <= 2; ++m) {
    WavePoly out = apply_glnz(2, 1, m, g);
    REQUIRE_FALSE(out.is_zero());
    REQUIRE(out.x_homogeneous());
    REQUIRE(out.max_x_degree() == g.max_x_degree() + m);
  }

  // loop-algebra bracket on a spanning sample
  std::vector<WavePoly> sample = {ground_state({1, 2}, 2, 2, 1),
                                  ground_state({1, 2, 1}, 3, 2, 2),
                                  slater({0, 2}, {2, 2}, 2, 2)};
  for (const auto& phi : sample)
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (int c = 1; c <= 2; ++c)
          for (int d = 1; d <= 2; ++d)
            for (int m = 0; m <= 2; ++m)
              for (int mp = 0; mp + m <= 3; ++mp) {
                WavePoly lhs = apply_glnz(a, b, m, apply_glnz(c, d, mp, phi)) -
                               apply_glnz(c, d, mp, apply_glnz(a, b, m, phi));
                WavePoly rhs(phi.sites(), phi.colors());
                if (b == c) rhs += apply_glnz(a, d, m + mp, phi);
                if (a == d) rhs -= apply_glnz(c, b, m + mp, phi);
                REQUIRE(lhs == rhs);
              }
}

TEST_CASE("kz flatness on ground states") {
  for (int N = 2; N <= 3; ++N)
    for (int n = 1; n <= 2; ++n)
      for (int k = 1; k <= 2; ++k)
        for (const auto& colors : color_words(N, n)) {
          WavePoly g = ground_state(colors, N, n, k);
          if (g.is_zero()) continue;
          for (int i = 1; i <= N; ++i)
            REQUIRE(kz_residual(g, i, n, k).is_zero());
        }

  // negative control: an excited state fails KZ, homogeneously
  WavePoly g = ground_state({1, 2, 1}, 3, 2, 1);
  WavePoly excited = g.shifted(g.x_index(1), 1);
  WavePoly res = kz_residual(excited, 1, 2, 1);
  REQUIRE_FALSE(res.is_zero());
  REQUIRE(res.x_homogeneous());
  REQUIRE(res.max_x_degree() == excited.max_x_degree() + 3 - 2);
}

TEST_CASE("calogero-sutherland hamiltonian") {
  // N = 1: pure (x d/dx)^2
  WavePoly shape(1, 1);
  WavePoly x3 = wmono(1, 1, {{shape.x_index(1), 3}, {shape.y_index(1, 1), 1}}, 1);
  REQUIRE(apply_hcs(x3, 1, 1, 1) == x3.mul_scalar(9));

  // ground-state eigenvalues Sum (lambda_i - k)(lambda_i - k + N + 1 - 2i)
  struct Case {
    std::vector<int> colors;
    int N, n, k;
    std::vector<int> lam;
  };
  std::vector<Case> cases = {
      {{1, 2}, 2, 2, 1, {1, 1}},
      {{1, 2, 1}, 3, 2, 1, {2, 1, 1}},
      {{1, 2, 1}, 3, 2, 2, {4, 2, 2}},
      {{1, 1}, 2, 1, 1, {2, 1}},
  };
  for (const auto& c : cases) {
    WavePoly g = ground_state(c.colors, c.N, c.n, c.k);
    REQUIRE_FALSE(g.is_zero());
    long e = cs_eigenvalue(c.lam, c.N, c.k);
    REQUIRE(apply_hcs(g, c.N, c.n, c.k) == g.mul_scalar(e));
  }
  REQUIRE(cs_eigenvalue({1, 1}, 2, 1) == 0);
  REQUIRE(cs_eigenvalue({2, 1, 1}, 3, 1) == 3);

  // a non-state input makes the interaction division inexact
  WavePoly bad = wmono(2, 1, {{WavePoly(2, 1).x_index(1), 1}}, 1);
  REQUIRE_THROWS(apply_hcs(bad, 2, 1, 1));

  // rational Calogero operator annihilates the lowest state
  WavePoly low = ground_state({1, 1}, 2, 1, 1);
  REQUIRE(apply_t20(low, 2, 1, 1).is_zero());
}

TEST_CASE("span rank") {
  WavePoly g = ground_state({1, 2, 1}, 3, 2, 1);
  REQUIRE(span_rank({g}, g.max_x_degree()) == 1);
  REQUIRE(span_rank({g}, g.max_x_degree() + 1) == 0);
  REQUIRE(span_rank({g, g, g.mul_scalar(5)}, g.max_x_degree()) == 1);
  REQUIRE(span_rank({g, g.shifted(g.x_index(1), 1)}, g.max_x_degree()) == 1);

  // rank of k-fold Slater products matches the character dimensions
  const int D = 4;
  for (int N = 1; N <= 3; ++N)
    for (int n = 1; n <= 2; ++n)
      for (int k = 1; k <= 2; ++k) {
        SymSeries ch = hilbert_character(ModelParams(N, n, k), D);
        for (int d = 0; d <= D; ++d) {
          // all k-tuples of wedge words with total mode sum d
          std::vector<WavePoly> states;
          std::vector<std::vector<std::pair<int, int>>> tuple;
          auto rec = [&](auto&& self, int rem, int slots) -> void {
            if (slots == 0) {
              if (rem == 0) {
                WavePoly s = product_state(tuple, N, n);
                if (!s.is_zero()) states.push_back(std::move(s));
              }
              return;
            }
            for (int e = 0; e <= rem; ++e)
              for (const auto& w : plain_words(N, n, e)) {
                tuple.push_back(w);
                self(self, rem - e, slots - 1);
                tuple.pop_back();
              }
          };
          rec(rec, d, k);
          mpz_class dim = ch.coeffs[static_cast<size_t>(d)].eval_at_one().eval(1);
          REQUIRE(mpz_class(span_rank(states, d)) == dim);
        }
      }
}
