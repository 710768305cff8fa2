#include <catch2/catch_amalgamated.hpp>

#include "quiverchar/characters.hpp"

using namespace quiverchar;

TEST_CASE("model parameters") {
  ModelParams p(5, 2, 1);
  REQUIRE(p.L() == 2);
  REQUIRE(p.r() == 1);
  REQUIRE(p.E0() == 1 * 2 * 1 * 2 / 2 + 1 * 1 * 2);
  REQUIRE_THROWS(ModelParams(0, 1, 1));
  REQUIRE_THROWS(ModelParams(1, 1, 0));
}

TEST_CASE("hilbert character, one color") {
  // N=2, n=1, k=1: ch = q a1^2 / ((1-q)(1-q^2))
  SymSeries ch = hilbert_character(ModelParams(2, 1, 1), 3);
  REQUIRE(ch.coeffs[0].is_zero());
  REQUIRE(ch.coeffs[1].coeff({2}) == QPoly(1));
  REQUIRE(ch.coeffs[2].coeff({2}) == QPoly(1));
  REQUIRE(ch.coeffs[3].coeff({2}) == QPoly(2));
}

TEST_CASE("triple character identity at k=1") {
  for (int N = 1; N <= 3; ++N)
    for (int n = 1; n <= 3; ++n) {
      ModelParams p(N, n, 1);
      SymSeries a = hilbert_character(p, 5);
      SymSeries b = character_k1(N, n, 5);
      SymSeries c = character_via_decomposition(p, 5);
      REQUIRE(a == b);
      REQUIRE(a == c);
    }
}

TEST_CASE("decomposition matches hilbert character at k=2") {
  for (int N = 1; N <= 3; ++N)
    for (int n = 1; n <= 2; ++n) {
      ModelParams p(N, n, 2);
      REQUIRE(hilbert_character(p, 5) == character_via_decomposition(p, 5));
    }
}

TEST_CASE("ground state character") {
  auto [g0, e0] = ground_state_character(ModelParams(2, 2, 1));
  REQUIRE(e0 == 0);
  REQUIRE(g0 == SymPoly::orbit(2, {1, 1}));

  auto [g1, e1] = ground_state_character(ModelParams(3, 2, 1));
  REQUIRE(e1 == 1);
  REQUIRE(g1 == SymPoly::orbit(2, {2, 1}));

  // lowest nonzero coefficient of the character is the ground state
  for (int N = 1; N <= 3; ++N)
    for (int n = 1; n <= 2; ++n)
      for (int k = 1; k <= 2; ++k) {
        ModelParams p(N, n, k);
        auto [g, e0g] = ground_state_character(p);
        SymSeries ch = hilbert_character(p, static_cast<int>(e0g));
        for (int d = 0; d < e0g; ++d) REQUIRE(ch.coeffs[size_t(d)].is_zero());
        REQUIRE(ch.coeffs[size_t(e0g)] == g);
      }
}

TEST_CASE("shifted character starts at the gl_n ground multiplet") {
  for (int N = 2; N <= 4; ++N)
    for (int k = 1; k <= 2; ++k) {
      ModelParams p(N, 2, k);
      SymSeries sh = shifted_character(p, 2);
      Partition kwr(static_cast<size_t>(p.r()), p.k);
      REQUIRE(sh.coeffs[0] == schur(kwr, 2));
    }
}

TEST_CASE("limit character stabilizes") {
  SymSeries lim = limit_character(1, 2, 1, 3);
  REQUIRE(lim.coeffs[0] == schur({1}, 2));
  // degree-1 coefficient of the stable charge-1, n=2, k=1 character
  SymSeries sh = shifted_character(ModelParams(7, 2, 1), 3);
  REQUIRE(lim.coeffs[1] == sh.coeffs[1]);

  // the cap can be forced too low
  setenv("QUIVERCHAR_LCAP", "1", 1);
  REQUIRE_THROWS(limit_character(1, 2, 1, 2));
  unsetenv("QUIVERCHAR_LCAP");
}

TEST_CASE("orbit energy") {
  REQUIRE(orbit_energy({3, 2}) == 4);
  REQUIRE(orbit_energy({1, 1, 1}) == 0);
  REQUIRE(orbit_energy({}) == 0);
}
