// Exact symbolic layer tests. The matrix entries are checked against a
// second, independently coded evaluation of the binomial formulas (Pascal
// recursion instead of factorial quotients), and against the printed k=6,
// k=3, k=8 displays.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tuplesieve/asymptotics.hpp"

using namespace tuplesieve;
using namespace tuplesieve::asymptotics;

namespace {

Rational rat(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// second bookkeeping route: Pascal-triangle binomials, iterative factorial
Rational binom2(int n, int k) {
  if (k < 0 || k > n) return rat(0);
  std::vector<std::vector<long>> tri(n + 1);
  for (int i = 0; i <= n; ++i) {
    tri[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) tri[i][j] = tri[i - 1][j - 1] + tri[i - 1][j];
  }
  return rat(tri[n][k]);
}

Rational fact2(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= rat(i);
  return f;
}

RationalPoly m_poly2(int k, int l1, int l2) {
  // same quantity, assembled differently: m = A*theta + B with
  // A = C(l1+l2,l1) k (l1+l2+1)(l1+l2+2) / (2 (k+l1+l2+1)! (l1+1)(l2+1))
  //   ... using (k+s+1)! = (k+s+1)(k+s)!
  int s = l1 + l2;
  Rational A = binom2(s, l1) * rat(k) * rat(s + 1) * rat(s + 2);
  A /= rat(2) * fact2(k + s) * rat(k + s + 1) * rat(l1 + 1) * rat(l2 + 1);
  Rational B = rat(-1) * binom2(s, l1) / fact2(k + s);
  return RationalPoly({B, A});
}

RationalPoly m2_poly2(int k, int l1, int l2) {
  int s = l1 + l2;
  Rational a1 = binom2(s + 2, l1 + 1) * rat(k) / (fact2(k + s + 1) * rat(2));
  Rational a2 = (binom2(s + 2, l1 + 1) - binom2(s + 3, l1 + 1) - binom2(s + 3, l2 + 1)) *
                rat(k) / (fact2(k + s + 2) * rat(2));
  Rational a0 = binom2(s, l1) / (fact2(k + s) * rat(2));
  return RationalPoly({-a0, a1, a2});
}

// tiny exact arithmetic in Q(sqrt(root)) for the radical endpoint check
struct QuadExt {
  Rational a, b;  // a + b sqrt(root)
  long root;
};
QuadExt mul(const QuadExt& x, const QuadExt& y) {
  return {x.a * y.a + x.b * y.b * Rational(x.root), x.a * y.b + x.b * y.a, x.root};
}

}  // namespace

TEST_CASE("rational poly basics") {
  RationalPoly p({rat(48), rat(-64), rat(15)});  // 15 t^2 - 64 t + 48
  CHECK(p.degree() == 2);
  CHECK(p.eval(rat(1)) == rat(-1));
  CHECK(p.eval(rat(0)) == rat(48));
  CHECK(p.str() == "15*theta^2 - 64*theta + 48");
  RationalPoly z({rat(0)});
  CHECK(z.is_zero());
  RationalPoly q = p * rat(2);
  CHECK(q.eval(rat(1)) == rat(-2));
  CHECK((p - p).is_zero());
  CHECK((p * p).degree() == 4);
}

TEST_CASE("k=6 prime matrix reproduces the printed display") {
  // 8! M = [[48 t - 56, 9 t - 8], [9 t - 8, 2 t - 2]]
  Rational f8 = factorial_rat(8);
  CHECK((m_poly(6, 0, 0) * f8) == RationalPoly({rat(-56), rat(48)}));
  CHECK((m_poly(6, 0, 1) * f8) == RationalPoly({rat(-8), rat(9)}));
  CHECK((m_poly(6, 1, 0) * f8) == RationalPoly({rat(-8), rat(9)}));
  CHECK((m_poly(6, 1, 1) * f8) == RationalPoly({rat(-2), rat(2)}));

  auto M = build_matrix(6, 1, FormKind::prime);
  auto det = determinant(M) * (f8 * f8);
  CHECK(det == RationalPoly({rat(48), rat(-64), rat(15)}));
}

TEST_CASE("k=3 two-prime matrix reproduces the printed display") {
  // 480 M2 = [[-24 t^2 + 60 t - 40, -7 t^2 + 18 t - 10],
  //           [-7 t^2 + 18 t - 10, -2 t^2 + 6 t - 4]]
  Rational s = rat(480);
  CHECK((m2_poly(3, 0, 0) * s) == RationalPoly({rat(-40), rat(60), rat(-24)}));
  CHECK((m2_poly(3, 0, 1) * s) == RationalPoly({rat(-10), rat(18), rat(-7)}));
  CHECK((m2_poly(3, 1, 1) * s) == RationalPoly({rat(-4), rat(6), rat(-2)}));
}

TEST_CASE("k=8 two-prime matrix at theta = 1/2 matches the printed integers") {
  Rational half = rat(1, 2);
  Rational f14 = factorial_rat(14);
  long expect[3][3] = {{-216216, 8736, 3458}, {8736, -364, 14}, {3458, 14, -36}};
  auto M = build_matrix(8, 2, FormKind::e2);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      CHECK(M.at(i, j).eval(half) * f14 == rat(expect[i][j]));
}

TEST_CASE("double-entry bookkeeping: independent reassembly of m and m2") {
  for (int k = 1; k <= 8; ++k)
    for (int l1 = 0; l1 <= std::min(k, 2); ++l1)
      for (int l2 = 0; l2 <= std::min(k, 2); ++l2) {
        CHECK(m_poly(k, l1, l2) == m_poly2(k, l1, l2));
        CHECK(m2_poly(k, l1, l2) == m2_poly2(k, l1, l2));
      }
}

TEST_CASE("matrix symmetry") {
  for (auto kind : {FormKind::prime, FormKind::e2}) {
    auto M = build_matrix(5, 2, kind);
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j) CHECK(M.at(i, j) == M.at(j, i));
  }
}

TEST_CASE("T coefficients") {
  CHECK(t_coeff(0, 0) == rat(-4));
  CHECK(t_coeff(1, 1) == rat(-14));  // -C(5,2)-C(5,2)+C(4,2)
  for (int l1 = 0; l1 <= 3; ++l1)
    for (int l2 = 0; l2 <= 3; ++l2) CHECK(t_coeff(l1, l2) == t_coeff(l2, l1));
}

TEST_CASE("quad form values") {
  auto M2 = build_matrix(3, 1, FormKind::e2);
  std::vector<long> b{1, 4};
  auto qf = quad_form(M2, b);
  // -7 t^2/30 + 5 t/8 - 23/60
  CHECK(qf == RationalPoly({rat(-23, 60), rat(5, 8), rat(-7, 30)}));

  auto M28 = build_matrix(8, 2, FormKind::e2);
  std::vector<long> b8{1, 16, 16};
  CHECK(quad_form(M28, b8).eval(rat(1, 2)) * factorial_rat(14) == rat(78760));

  std::vector<long> zero{0, 0};
  CHECK(quad_form(M2, zero).is_zero());
  std::vector<long> wrong{1};
  CHECK_THROWS_AS(quad_form(M2, wrong), std::invalid_argument);
}

TEST_CASE("positivity thresholds with the printed digits") {
  SUBCASE("det of 8! M(6,1): root 4(8-sqrt(19))/15") {
    RationalPoly det({rat(48), rat(-64), rat(15)});
    auto pos = positivity_threshold(det);
    REQUIRE(pos.roots_in_range.size() == 1);
    double root = pos.roots_in_range[0];
    CHECK(std::abs(root - 0.97096) <= 1e-5);
    CHECK(std::abs(root - 4.0 * (8.0 - std::sqrt(19.0)) / 15.0) <= 1e-12);
    // positive (det > 0, i.e. negative definite side) below the root
    REQUIRE(pos.intervals.size() == 1);
    CHECK(pos.intervals[0].first == doctest::Approx(0.5));
    CHECK(pos.intervals[0].second == doctest::Approx(root));
  }
  SUBCASE("quad form of M2(3,1) with b=(1,4): threshold (75-sqrt(473))/56") {
    RationalPoly qf({rat(-23, 60), rat(5, 8), rat(-7, 30)});
    auto pos = positivity_threshold(qf);
    REQUIRE(pos.roots_in_range.size() == 1);
    double root = pos.roots_in_range[0];
    CHECK(std::abs(root - 0.950918) <= 1e-6);
    REQUIRE(pos.intervals.size() == 1);
    CHECK(pos.intervals[0].first == doctest::Approx(root));
    CHECK(pos.intervals[0].second == doctest::Approx(1.0));
  }
  SUBCASE("det of the k=3 two-prime matrix vanishes near 0.943635") {
    auto M2 = build_matrix(3, 1, FormKind::e2);
    auto det = determinant(M2);
    auto roots = roots_by_bisection(det, 0.5, 1.0);
    REQUIRE(!roots.empty());
    bool hit = false;
    for (double r : roots) hit = hit || std::abs(r - 0.943635) <= 1e-5;
    CHECK(hit);
  }
  SUBCASE("degenerate inputs") {
    auto z = positivity_threshold(RationalPoly());
    CHECK(z.identically_zero);
    CHECK_THROWS_AS(positivity_threshold(RationalPoly({rat(1), rat(1), rat(1), rat(1)})),
                    std::invalid_argument);
  }
}

TEST_CASE("radical endpoint satisfies the quadratic symbolically") {
  // theta0 = (75 - sqrt(473))/56 must kill -7 t^2/30 + 5 t/8 - 23/60 exactly
  QuadExt theta{rat(75, 56), rat(-1, 56), 473};
  QuadExt t2 = mul(theta, theta);
  // -7/30 t^2 + 5/8 t - 23/60
  Rational ra = t2.a * rat(-7, 30) + theta.a * rat(5, 8) + rat(-23, 60);
  Rational rb = t2.b * rat(-7, 30) + theta.b * rat(5, 8);
  CHECK(ra == rat(0));
  CHECK(rb == rat(0));
}

TEST_CASE("positive eigenvalue decisions with certificates") {
  auto M = build_matrix(6, 1, FormKind::prime);
  SUBCASE("theta = 1: indefinite, witness verifies") {
    auto res = positive_eigen_exists(M, rat(1));
    CHECK(res.has_positive);
    std::vector<Rational> b;
    for (const auto& x : res.witness) b.emplace_back(x);
    CHECK(quad_form(M, b).eval(rat(1)) > 0);
  }
  SUBCASE("theta = 1/2: negative definite") {
    auto res = positive_eigen_exists(M, rat(1, 2));
    CHECK(!res.has_positive);
  }
  SUBCASE("k=8 two-prime matrix at 1/2 has a positive direction") {
    auto M28 = build_matrix(8, 2, FormKind::e2);
    auto res = positive_eigen_exists(M28, rat(1, 2));
    CHECK(res.has_positive);
    std::vector<Rational> b;
    for (const auto& x : res.witness) b.emplace_back(x);
    CHECK(quad_form(M28, b).eval(rat(1, 2)) > 0);
    // and the printed certificate (1,16,16) also works
    std::vector<long> bp{1, 16, 16};
    CHECK(quad_form(M28, bp).eval(rat(1, 2)) > 0);
  }
}

TEST_CASE("single-l model and the 20/21 boundary") {
  CHECK(m_single(7, 1, rat(20, 21)) == rat(0));
  CHECK(m_single(7, 1, rat(1)) > 0);
  CHECK(m_single(7, 1, rat(19, 21)) < 0);
  // matches the general formula on the diagonal
  for (int k = 2; k <= 8; ++k)
    for (int l = 0; l <= 2; ++l)
      CHECK(m_single(k, l, rat(3, 4)) == m_poly(k, l, l).eval(rat(3, 4)));
}

TEST_CASE("s1_star_model agrees with quad_form on random inputs") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<long> bs(-20, 20), ks(2, 8), Ls(0, 2), th(1, 16);
  for (int rep = 0; rep < 100; ++rep) {
    int k = static_cast<int>(ks(rng));
    int L = std::min<int>(k, static_cast<int>(Ls(rng)));
    Rational theta = rat(th(rng), 16);
    std::vector<Rational> b;
    for (int i = 0; i <= L; ++i) b.push_back(rat(bs(rng)));
    auto M = build_matrix(k, L, FormKind::prime);
    CHECK(s1_star_model(k, L, b, theta) == quad_form(M, b).eval(theta));
    // b = e_l reduces to the diagonal entry
    for (int l = 0; l <= L; ++l) {
      std::vector<Rational> e(L + 1, rat(0));
      e[l] = rat(1);
      CHECK(s1_star_model(k, L, e, theta) == m_poly(k, l, l).eval(theta));
    }
  }
}

TEST_CASE("two-prime threshold function") {
  CHECK(b1_tilde_threshold(100, 10, rat(0)) == rat(562, 2662));
  CHECK(b1_tilde_threshold(100, 0, rat(0)) == rat(102, 202));  // (k+2)/(2(k+1))
  for (int k : {5, 20, 77}) CHECK(b1_tilde_threshold(k, 0, rat(0)) == rat(k + 2, 2 * (k + 1)));
  // with l ~ sqrt(k) the threshold decreases and drops under 0.1
  Rational t100 = b1_tilde_threshold(100, 10, rat(0));
  Rational t400 = b1_tilde_threshold(400, 20, rat(0));
  Rational t2500 = b1_tilde_threshold(2500, 50, rat(0));
  CHECK(t400 < t100);
  CHECK(t2500 < t400);
  CHECK(t2500 < rat(1, 10));
  // epsilon enters linearly through 4 eps (k + 2kl)
  CHECK(b1_tilde_threshold(10, 2, rat(1, 100)) >
        b1_tilde_threshold(10, 2, rat(0)));
}
