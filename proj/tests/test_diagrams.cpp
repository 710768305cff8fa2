#include <catch2/catch_amalgamated.hpp>

#include "quiverchar/characters.hpp"
#include "quiverchar/diagrams.hpp"

using namespace quiverchar;

TEST_CASE("weight row shift and tails") {
  REQUIRE(shift(WeightRow({3, 1}), 1, true) == WeightRow({2, 0}));
  REQUIRE(shift(WeightRow({0, 0}), 2, true) == WeightRow({-2, -2}));
  WeightRow lam({4, 2, 1});
  REQUIRE(shift(shift(lam, 2, true), 2, false) == lam);

  // vacuum row of charge r: prefix fully absorbed by the tail
  Tail t{2, 1, 1};
  WeightRow vac({1, 0, 0, -1}, t);
  REQUIRE(vac.entries.empty());
  REQUIRE(vac.at(1) == 1);
  REQUIRE(vac.at(2) == 0);
  REQUIRE(vac.at(3) == 0);
  REQUIRE(vac.at(4) == -1);
  REQUIRE(shift(vac, 1, true).at(1) == 0);
  REQUIRE(shift(vac, 1, true).tail->r == -1);
}

TEST_CASE("interlacing") {
  REQUIRE(interlace(WeightRow({2, 1}), WeightRow({1, 1}), 1));
  REQUIRE_FALSE(interlace(WeightRow({2, 1}), WeightRow({2, 2}), 1));
  // additivity: lambda \ mu at p and mu \ nu at q gives lambda \ nu at p+q
  WeightRow a({3, 2, 1}), b({2, 2, 0}), c({2, 1, 0});
  REQUIRE(interlace(a, b, 1));
  REQUIRE(interlace(b, c, 1));
  REQUIRE(interlace(a, c, 2));
}

TEST_CASE("admissible, cuttable, cut") {
  WeightRow lam({2, 2, 1, 1});
  REQUIRE(is_admissible(lam, 4, 2, 1));
  REQUIRE(is_cuttable(lam, 4, 2, 1));
  REQUIRE(cut(lam, 4, 2, 1) == WeightRow({2, 2}));
  REQUIRE_FALSE(is_admissible(WeightRow({2, 1, 1, 1}), 4, 2, 1));
  // (k,...,k) is admissible whenever N <= n (for N > n the depth-n
  // inequality k >= 2k fails)
  REQUIRE(is_admissible(WeightRow({2, 2}), 2, 2, 2));
  REQUIRE_FALSE(is_admissible(WeightRow({2, 2, 2}), 3, 2, 2));
  REQUIRE_THROWS(cut(WeightRow({3, 3, 2, 2}), 4, 2, 1));
}

TEST_CASE("skew diagrams and top boxes") {
  // finite: (2,1)/(1) has boxes (1,2) and (2,1)
  SkewBoxSet s = skew_diagram(WeightRow({2, 1}), WeightRow({1, 0}));
  REQUIRE(s.boxes == std::set<std::pair<long, long>>{{1, 2}, {2, 1}});
  REQUIRE(top_boxes_of_height(s, 1) ==
          std::set<std::pair<long, long>>{{1, 2}, {2, 1}});

  // beta = gamma gives the empty set
  REQUIRE(skew_diagram(WeightRow({2, 1}), WeightRow({2, 1})).boxes.empty());

  // semi-infinite vacuum at r=1, n=2, k=1: single height-1 column at j=1
  WeightRow vac({}, Tail{2, 1, 1});
  SkewBoxSet sv = skew_diagram(vac, shift(vac, 1, true));
  REQUIRE(top_boxes_of_height(sv, 1) ==
          std::set<std::pair<long, long>>{{1, 1}});
  REQUIRE_THROWS(top_boxes_of_height(sv, 2));

  // charge-0 vacuum: every column has height 2
  WeightRow vac0({}, Tail{2, 1, 0});
  REQUIRE(top_boxes_of_height(skew_diagram(vac0, shift(vac0, 1, true)), 1)
              .empty());
}

TEST_CASE("gt pattern enumeration") {
  REQUIRE(enumerate_gt(1, 3, 2, WeightRow({2})).size() == 6);
  auto single = enumerate_gt(2, 2, 1, WeightRow({1, 1}));
  REQUIRE(single.size() == 1);
  REQUIRE(single[0].rows[0] == WeightRow({1, 1}));
  REQUIRE(single[0].rows[1] == WeightRow({1, 0}));
  REQUIRE(single[0].rows[2] == WeightRow({0, 0}));
  REQUIRE(enumerate_gt(4, 2, 1, WeightRow({2, 1, 1, 1})).empty());

  // oracle: counts equal skew-SSYT counts, and all invariants hold
  for (int N = 1; N <= 3; ++N)
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 2; ++k) {
        ModelParams p(N, n, k);
        for (const auto& lam : admissible_weights(p, 4)) {
          Partition upper(lam.begin(), lam.end());
          Partition lower(lam.size());
          for (size_t i = 0; i < lam.size(); ++i) lower[i] = lam[i] - k;
          auto pats = enumerate_gt(N, n, k, WeightRow(lam));
          mpz_class count =
              skew_schur(normalize_partition(upper), normalize_partition(lower), n)
                  .eval_at_one()
                  .eval(1);
          REQUIRE(mpz_class(static_cast<long>(pats.size())) == count);
          for (const auto& pat : pats) pat.validate(k);
        }
      }
}

TEST_CASE("character via patterns with the GT weight rule") {
  const int D = 4;
  for (int N = 1; N <= 3; ++N)
    for (int n = 1; n <= 2; ++n)
      for (int k = 1; k <= 2; ++k) {
        ModelParams p(N, n, k);
        std::vector<MPoly> acc(static_cast<size_t>(D) + 1, MPoly(n));
        for (const auto& lam : admissible_weights(p, D)) {
          long d = degree_plain(WeightRow(lam), k);
          for (const auto& pat : enumerate_gt(N, n, k, WeightRow(lam)))
            acc[static_cast<size_t>(d)].add_term(pattern_weight(pat), QPoly(1));
        }
        SymSeries viaGT(n, D);
        for (int d = 0; d <= D; ++d)
          viaGT.coeffs[static_cast<size_t>(d)] =
              SymPoly::from_expanded(acc[static_cast<size_t>(d)]);
        REQUIRE(viaGT == hilbert_character(p, D));
      }
}

TEST_CASE("highest weight patterns") {
  GTPattern p = highest_weight_pattern(WeightRow({2, 2}), 2, 2, 1);
  REQUIRE(p.rows[0] == WeightRow({2, 2}));
  REQUIRE(p.rows[1] == WeightRow({2, 1}));
  REQUIRE(p.rows[2] == WeightRow({1, 1}));
  p.validate(1);

  GTPattern q = highest_weight_pattern(WeightRow({2}), 1, 3, 2);
  REQUIRE(q.rows[0] == WeightRow({2}));
  for (int i = 1; i <= 3; ++i) REQUIRE(q.rows[static_cast<size_t>(i)] == WeightRow({0}));
  REQUIRE_THROWS(highest_weight_pattern(WeightRow({2, 1, 1, 1}), 4, 2, 1));

  // every enumerated admissible top yields a valid pattern with top row lambda
  for (int k = 1; k <= 2; ++k)
    for (const auto& lam : admissible_weights(ModelParams(3, 2, k), 3)) {
      GTPattern h = highest_weight_pattern(WeightRow(lam), 3, 2, k);
      h.validate(k);
      REQUIRE(h.rows[0] == WeightRow(lam));
    }
}

TEST_CASE("pattern transition") {
  GTPattern lam;
  lam.rows = {WeightRow({2, 2, 1, 1}), WeightRow({2, 1, 1, 0}),
              WeightRow({1, 1, 0, 0})};
  auto out = pattern_transition(lam, 2, 1);
  REQUIRE(out.has_value());
  REQUIRE(out->rows[0] == WeightRow({1, 1}));
  REQUIRE(out->rows[1] == WeightRow({1, 0}));
  REQUIRE(out->rows[2] == WeightRow({0, 0}));

  GTPattern bad;
  bad.rows = {WeightRow({3, 3, 2, 2}), WeightRow({3, 2, 2, 1}),
              WeightRow({2, 2, 1, 1})};
  REQUIRE_FALSE(pattern_transition(bad, 2, 1).has_value());

  // bijection onto admissible tops of length N: the unique preimage of mu
  // is (mu + k, k^n)
  int N = 2, n = 2, k = 2;
  for (const auto& mu : admissible_weights(ModelParams(N, n, k), 4)) {
    std::vector<int> pre;
    for (int v : mu) pre.push_back(v + k);
    for (int i = 0; i < n; ++i) pre.push_back(k);
    REQUIRE(is_cuttable(WeightRow(pre), N + n, n, k));
    GTPattern h = highest_weight_pattern(WeightRow(pre), N + n, n, k);
    auto t = pattern_transition(h, n, k);
    REQUIRE(t.has_value());
    REQUIRE(t->rows[0] == WeightRow(mu));
    // transition commutes with taking highest-weight patterns
    REQUIRE(*t == highest_weight_pattern(WeightRow(mu), N, n, k));
  }
}

TEST_CASE("degrees") {
  REQUIRE(degree_plain(WeightRow({1, 1}), 1) == 0);
  REQUIRE(degree_plain(WeightRow({2, 1}), 1) == 1);
  WeightRow vac({}, Tail{2, 1, 0});
  REQUIRE(degree_semiinf(vac) == 0);
  REQUIRE_THROWS(degree_semiinf(WeightRow({2, 1})));
  // shifted degree of the finite vacuum is zero
  REQUIRE(degree_shifted(WeightRow({2, 1, 1}), 3, 2, 1) == 0);
}

TEST_CASE("semi-infinite enumeration") {
  // degree 0: exactly the vacuum-top patterns
  auto ground = enumerate_semiinf(0, 2, 1, 0);
  REQUIRE(ground.size() == 1);
  REQUIRE(ground[0].rows[0] == WeightRow({}, Tail{2, 1, 0}));

  REQUIRE(enumerate_semiinf(0, 2, 1, 1).size() == 4);

  // counts at a = 1 match the stable character
  for (int r = 0; r < 2; ++r)
    for (int k = 1; k <= 2; ++k) {
      SymSeries lim = limit_character(r, 2, k, 3);
      for (int d = 0; d <= 3; ++d) {
        auto pats = enumerate_semiinf(r, 2, k, d);
        mpz_class dim = lim.coeffs[static_cast<size_t>(d)].eval_at_one().eval(1);
        REQUIRE(mpz_class(static_cast<long>(pats.size())) == dim);
      }
    }

  // truncations are valid finite patterns
  for (const auto& p : enumerate_semiinf(1, 2, 1, 2))
    truncate_pattern(p, 6).validate(1);
}
