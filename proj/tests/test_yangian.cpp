#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "quiverchar/characters.hpp"
#include "quiverchar/yangian.hpp"

using namespace quiverchar;

namespace {

// zero-pad a pattern row to the given length
WeightRow pad_row(const WeightRow& row, long len) {
  std::vector<int> e(static_cast<size_t>(len));
  for (long j = 1; j <= len; ++j) e[static_cast<size_t>(j - 1)] = static_cast<int>(row.at(j));
  return WeightRow(std::move(e));
}

// the rising factorial (u - m + 1)_m as a polynomial with roots 0..m-1
LinearRational rising(int m) {
  LinearRational out;
  for (int t = 0; t < m; ++t) out.mul_num_root(mpq_class(t));
  return out;
}

long factor_count(const std::map<mpq_class, int>& roots) {
  long c = 0;
  for (const auto& [r, mult] : roots) {
    (void)r;
    c += mult;
  }
  return c;
}

}  // namespace

TEST_CASE("linear rationals") {
  LinearRational a;
  REQUIRE(a.is_one());
  a.mul_num_root(mpq_class(0));
  a.mul_den_root(mpq_class(1));
  REQUIRE(a.str() == "1 * (u - 0) / (u - 1)");

  // cancellation is eager
  LinearRational b = a;
  b.mul_den_root(mpq_class(0));
  b.mul_num_root(mpq_class(1));
  REQUIRE(b.is_one());

  REQUIRE((a * a.inverse()).is_one());
  REQUIRE((a / a).is_one());

  // u -> u - 1 moves every root up by one
  LinearRational c = a.shifted_u(mpq_class(1));
  REQUIRE(c.numerator_roots().count(mpq_class(1)) == 1);
  REQUIRE(c.denominator_roots().count(mpq_class(2)) == 1);

  REQUIRE_THROWS(LinearRational(mpq_class(0)));
}

TEST_CASE("capelli eigenvalues") {
  // mu = (1,0), m=0, n=1, N=1: (u-2) u
  LinearRational c = capelli_eigenvalue(WeightRow({1, 0}), 0, 1, 1);
  REQUIRE(c.numerator_roots() == std::map<mpq_class, int>{{mpq_class(2), 1}, {mpq_class(0), 1}});
  REQUIRE(c.denominator_roots().empty());

  // mu = (1,0,0), m=0, n=2, N=1: (u-3)(u-1) u
  LinearRational d = capelli_eigenvalue(WeightRow({1, 0, 0}), 0, 2, 1);
  REQUIRE(d.numerator_roots() ==
          std::map<mpq_class, int>{{mpq_class(3), 1}, {mpq_class(1), 1}, {mpq_class(0), 1}});

  // zero weight: roots n+N-m-i for i = 1..n+N-m
  LinearRational z = capelli_eigenvalue(WeightRow({0, 0, 0}), 1, 2, 2);
  REQUIRE(z.numerator_roots() ==
          std::map<mpq_class, int>{{mpq_class(2), 1}, {mpq_class(1), 1}, {mpq_class(0), 1}});

  REQUIRE_THROWS(capelli_eigenvalue(WeightRow({1, 0}), 0, 2, 1));
}

TEST_CASE("minor eigenvalues") {
  GTPattern p;
  p.rows = {WeightRow({1}), WeightRow({0}), WeightRow({0})};
  LinearRational e = minor_eigenvalue(p, 1);
  REQUIRE(e.str() == "1 * (u - 0) / (u - 1)");

  GTPattern q;
  q.rows = {WeightRow({1}), WeightRow({1}), WeightRow({0})};
  REQUIRE(minor_eigenvalue(q, 1).is_one());

  // the quantum determinant m = n only sees the top row
  REQUIRE(minor_eigenvalue(p, 2) == e);
  REQUIRE(minor_eigenvalue(q, 2) == e);
}

TEST_CASE("capelli determinant expresses the quantum minors") {
  // A_m(u - n) = C_m(u - m) (u - m + 1)_m / C_0(u) on every pattern vector
  for (int N = 1; N <= 3; ++N)
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 2; ++k)
        for (const auto& lam : admissible_weights(ModelParams(N, n, k), 3))
          for (const auto& p : enumerate_gt(N, n, k, WeightRow(lam))) {
            LinearRational c0 =
                capelli_eigenvalue(pad_row(p.rows[0], n + N), 0, n, N);
            for (int m = 1; m <= n; ++m) {
              LinearRational cm = capelli_eigenvalue(
                  pad_row(p.rows[static_cast<size_t>(m)], n + N - m), m, n, N);
              LinearRational rhs = cm.shifted_u(mpq_class(m)) * rising(m) / c0;
              REQUIRE(minor_eigenvalue(p, m).shifted_u(mpq_class(n)) == rhs);
            }
          }
}

TEST_CASE("centrality and simple spectrum") {
  for (int N = 1; N <= 3; ++N)
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 2; ++k)
        for (const auto& lam : admissible_weights(ModelParams(N, n, k), 3)) {
          auto pats = enumerate_gt(N, n, k, WeightRow(lam));
          std::set<std::vector<LinearRational>> tuples;
          for (const auto& p : pats) {
            std::vector<LinearRational> tup;
            for (int m = 1; m <= n; ++m) {
              tup.push_back(minor_eigenvalue(p, m));
              REQUIRE(tup.back().all_integer_roots());
            }
            // quantum determinant depends only on the top row
            REQUIRE(tup.back() == minor_eigenvalue(pats.front(), n));
            tuples.insert(std::move(tup));
          }
          REQUIRE(tuples.size() == pats.size());
        }
}

TEST_CASE("twisted eigenvalues") {
  // L = 0 reduces to the plain eigenvalue
  for (int k = 1; k <= 2; ++k)
    for (const auto& lam : admissible_weights(ModelParams(1, 2, k), 3))
      for (const auto& p : enumerate_gt(1, 2, k, WeightRow(lam)))
        for (int m = 1; m <= 2; ++m)
          REQUIRE(minor_eigenvalue_twisted(p, m, 0, 1, 2, k) ==
                  minor_eigenvalue(p, m));

  // the truncated vacuum at n=2, k=1, L=1, r=0 collapses completely
  GTPattern v;
  v.rows = {WeightRow({1, 1}), WeightRow({1, 0}), WeightRow({0, 0})};
  REQUIRE(minor_eigenvalue_twisted(v, 1, 1, 0, 2, 1).is_one());

  // equal factor counts: the eigenvalue tends to 1 at u -> infinity
  for (const auto& lam : admissible_weights(ModelParams(4, 2, 1), 4))
    for (const auto& p : enumerate_gt(4, 2, 1, WeightRow(lam)))
      for (int m = 1; m <= 2; ++m) {
        LinearRational e = minor_eigenvalue_twisted(p, m, 2, 0, 2, 1);
        REQUIRE(factor_count(e.numerator_roots()) ==
                factor_count(e.denominator_roots()));
      }

  GTPattern bad;
  bad.rows = {WeightRow({1}), WeightRow({0}), WeightRow({0})};
  REQUIRE_THROWS(minor_eigenvalue_twisted(bad, 1, 1, 0, 2, 1));
}

TEST_CASE("semi-infinite eigenvalues") {
  // charge-0 vacuum: every factor cancels
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) {
      GTPattern vac = highest_weight_pattern_semiinf(WeightRow({}, Tail{n, k, 0}));
      for (int m = 1; m <= n; ++m)
        REQUIRE(minor_eigenvalue_semiinf(vac, m, 0).is_one());
    }

  // charged vacuum keeps the bare charge factors: r=1, n=2, k=1 gives u/(u-1)
  GTPattern vac1 = highest_weight_pattern_semiinf(WeightRow({}, Tail{2, 1, 1}));
  REQUIRE(minor_eigenvalue_semiinf(vac1, 1, 1).str() == "1 * (u - 0) / (u - 1)");
  REQUIRE(minor_eigenvalue_semiinf(vac1, 2, 1).str() == "1 * (u - 0) / (u - 1)");

  // stabilization: truncations reproduce the semi-infinite value exactly
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k)
      for (int r = 0; r < n; ++r)
        for (int d = 0; d <= 2; ++d)
          for (const auto& p : enumerate_semiinf(r, n, k, d)) {
            int L = d + 3;
            for (int m = 1; m <= n; ++m) {
              LinearRational stable = minor_eigenvalue_semiinf(p, m, r);
              REQUIRE(factor_count(stable.numerator_roots()) ==
                      factor_count(stable.denominator_roots()));
              REQUIRE(minor_eigenvalue_twisted(truncate_pattern(p, L), m, L, r,
                                               n, k) == stable);
              REQUIRE(minor_eigenvalue_twisted(truncate_pattern(p, L + 1), m,
                                               L + 1, r, n, k) == stable);
            }
          }

  REQUIRE_THROWS(minor_eigenvalue_semiinf(vac1, 1, 0));
}

TEST_CASE("drinfeld polynomials") {
  // charge-0 vacuum at n=2: all skew columns have height 2
  REQUIRE(drinfeld_polynomials(WeightRow({}, Tail{2, 1, 0}), 0, 2, 1)[0].is_one());
  REQUIRE(drinfeld_polynomials(WeightRow({}, Tail{2, 2, 0}), 0, 2, 2)[0].is_one());

  // charge-1 vacuum at n=2, k=1: single height-1 column with top box (1,1)
  auto p1 = drinfeld_polynomials(WeightRow({}, Tail{2, 1, 1}), 1, 2, 1);
  REQUIRE(p1.size() == 1);
  REQUIRE(p1[0].str() == "1 * (u - 1)");

  REQUIRE_THROWS(drinfeld_polynomials(WeightRow({2, 1}), 0, 2, 1));
}

TEST_CASE("drinfeld ratio identity on highest-weight patterns") {
  // A~_{m-1}(u-1) A~_{m+1}(u) / (A~_m(u-1) A~_m(u)) = P_m(u-1)/P_m(u)
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k)
      for (int r = 0; r < n; ++r) {
        std::set<WeightRow> tops;
        for (int d = 0; d <= 2; ++d)
          for (const auto& p : enumerate_semiinf(r, n, k, d))
            tops.insert(p.rows[0]);
        for (const auto& lam : tops) {
          GTPattern hw = highest_weight_pattern_semiinf(lam);
          auto drin = drinfeld_polynomials(lam, r, n, k);
          std::vector<LinearRational> a(static_cast<size_t>(n) + 1);
          for (int m = 1; m <= n; ++m)
            a[static_cast<size_t>(m)] = minor_eigenvalue_semiinf(hw, m, r);
          for (int m = 1; m < n; ++m) {
            LinearRational lhs =
                a[static_cast<size_t>(m - 1)].shifted_u(mpq_class(1)) *
                a[static_cast<size_t>(m + 1)] /
                (a[static_cast<size_t>(m)].shifted_u(mpq_class(1)) *
                 a[static_cast<size_t>(m)]);
            const LinearRational& pm = drin[static_cast<size_t>(m - 1)];
            REQUIRE(lhs == pm.shifted_u(mpq_class(1)) / pm);
          }
        }
      }
}

TEST_CASE("transition compatibility") {
  GTPattern lam;
  lam.rows = {WeightRow({2, 2, 1, 1}), WeightRow({2, 1, 1, 0}),
              WeightRow({1, 1, 0, 0})};
  REQUIRE(verify_transition(lam, 1, 2, 1));
  REQUIRE(verify_transition(lam, 2, 2, 1));

  // a non-cuttable top passes vacuously
  GTPattern bad;
  bad.rows = {WeightRow({3, 3, 2, 2}), WeightRow({3, 2, 2, 1}),
              WeightRow({2, 2, 1, 1})};
  REQUIRE(verify_transition(bad, 1, 2, 1));

  // exhaustive over N + n <= 4, n <= 2, k <= 2
  for (int n = 1; n <= 2; ++n)
    for (int N = 0; N + n <= 4; ++N)
      for (int k = 1; k <= 2; ++k)
        for (const auto& top :
             admissible_weights(ModelParams(N + n, n, k), 6))
          for (const auto& p : enumerate_gt(N + n, n, k, WeightRow(top)))
            for (int m = 1; m <= n; ++m)
              REQUIRE(verify_transition(p, m, n, k));
}
