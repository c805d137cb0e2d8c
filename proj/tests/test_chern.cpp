#include <doctest.h>

#include <random>

#include "fano/chern.hpp"
#include "fano/error.hpp"
#include "generators.hpp"

using namespace fano;

namespace {

// Power-series synthetic division over the integers: coefficients of
// (1+h)^(N+1) / prod (1 + d h) through h^n. Independent of MultiPoly.
std::vector<long long> ci_series(int N, const std::vector<int>& degrees, int n) {
  std::vector<long long> s(static_cast<std::size_t>(n + 1), 0);
  long long binom = 1;
  for (int k = 0; k <= n; ++k) {
    s[static_cast<std::size_t>(k)] = binom;
    binom = binom * (N + 1 - k) / (k + 1);
  }
  for (int d : degrees) {
    // q (1 + d h) = s  =>  q_k = s_k - d q_{k-1}
    std::vector<long long> q(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) q[k] = s[k] - (k ? d * q[k - 1] : 0);
    s = q;
  }
  return s;
}

long long euler_oracle(int N, const std::vector<int>& degrees) {
  const int n = N - static_cast<int>(degrees.size());
  long long deg = 1;
  for (int d : degrees) deg *= d;
  return ci_series(N, degrees, n)[static_cast<std::size_t>(n)] * deg;
}

ChernSeries dual(const ChernSeries& c) {
  std::vector<MultiPoly> comps = c.components();
  for (std::size_t i = 1; i < comps.size(); i += 2) comps[i] = -comps[i];
  return ChernSeries(c.model(), c.rank(), comps);
}

ChernSeries random_series(std::mt19937& rng, const ModelPtr& m, int rank) {
  std::vector<MultiPoly> comps{m->one()};
  for (int i = 1; i <= m->dimension; ++i) {
    MultiPoly ci(m->nvars());
    for (const auto& e : m->monomials_of_degree(i)) ci.add_term(e, fano::testing::random_rational(rng, 5));
    comps.push_back(ci);
  }
  return ChernSeries(m, rank, comps);
}

}  // namespace

TEST_CASE("whitney product") {
  auto q5 = complete_intersection_model(6, {2});
  auto h = q5->generator(0);
  auto a = ChernSeries::line_bundle(q5, h);
  auto b = ChernSeries::line_bundle(q5, -h);
  auto ab = whitney_product(a, b);
  CHECK(ab.rank() == 2);
  CHECK(ab.c(1).is_zero());
  CHECK(ab.c(2) == -(h * h));
  CHECK(whitney_product(a, ChernSeries::trivial(q5, 3)) == ChernSeries(q5, 4, a.components()));

  ChernSeries restricted = ChernSeries::trivial(q5, 0);
  for (int i = 0; i < 7; ++i) restricted = whitney_product(restricted, a);
  CHECK(restricted.total() == (q5->one() + h).pow(7).truncated(5));

  auto p3 = complete_intersection_model(3, {});
  CHECK_THROWS_AS(whitney_product(a, ChernSeries::line_bundle(p3, p3->generator(0))), PreconditionError);
}

TEST_CASE("whitney quotient") {
  auto q5 = complete_intersection_model(6, {2});
  auto h = q5->generator(0);
  ChernSeries total = ChernSeries::from_total(q5, 7, (q5->one() + h).pow(7));
  ChernSeries sub = ChernSeries::line_bundle(q5, Rational(2) * h);
  auto tq = whitney_quotient(total, sub);
  CHECK(tq.rank() == 6);
  CHECK(tq.c(5) == Rational(3) * h.pow(5));
  CHECK(whitney_quotient(total, total) == ChernSeries::trivial(q5, 0));

  auto quartic = complete_intersection_model(4, {4});
  auto H = quartic->generator(0);
  auto t = whitney_quotient(ChernSeries::from_total(quartic, 5, (quartic->one() + H).pow(5)),
                            ChernSeries::line_bundle(quartic, Rational(4) * H));
  // 10 - 4*10 + 16*5 - 64 = -14
  CHECK(t.c(3) == Rational(-14) * H.pow(3));
  CHECK(integrate(*quartic, t.c(3)) == -56);
}

TEST_CASE("quotient then product is the identity") {
  std::mt19937 rng(5);
  const std::vector<ModelPtr> models{complete_intersection_model(6, {2}), complete_intersection_model(4, {4}),
                                     k3_model(22)};
  for (int trial = 0; trial < 100; ++trial) {
    const auto& m = models[static_cast<std::size_t>(trial) % models.size()];
    auto total = random_series(rng, m, 5);
    auto sub = random_series(rng, m, 2);
    CHECK(whitney_product(whitney_quotient(total, sub), sub) == total);
  }
}

TEST_CASE("complete intersection tangent classes") {
  auto [q5, tq] = chern_tangent_ci(6, {2});
  CHECK(q5->dimension == 5);
  CHECK(tq.c(5) == Rational(3) * q5->generator(0).pow(5));
  CHECK(integrate(*q5, tq.c(5)) == 6);
  CHECK(integrate(*q5, q5->generator(0).pow(5)) == 2);

  auto [p3, tp] = chern_tangent_ci(3, {});
  CHECK(integrate(*p3, tp.c(3)) == 4);
  CHECK(integrate(*p3, p3->generator(0).pow(3)) == 1);

  CHECK(integrate(*chern_tangent_ci(4, {4}).first, chern_tangent_ci(4, {4}).second.c(3)) == -56);

  CHECK_THROWS_AS(chern_tangent_ci(2, {2, 2}), PreconditionError);
  CHECK_THROWS_AS(chern_tangent_ci(4, {0}), PreconditionError);
}

TEST_CASE("Euler numbers of complete intersections agree with series division") {
  // Textbook values first, then a sweep.
  CHECK(euler_oracle(4, {3}) == -6);
  CHECK(euler_oracle(3, {4}) == 24);
  CHECK(euler_oracle(5, {2, 2}) == 0);
  CHECK(euler_oracle(4, {2}) == 4);

  std::vector<std::vector<int>> degree_lists;
  for (int a = 1; a <= 5; ++a) {
    degree_lists.push_back({a});
    for (int b = a; b <= 4; ++b) {
      degree_lists.push_back({a, b});
      for (int c = b; c <= 3; ++c) degree_lists.push_back({a, b, c});
    }
  }
  degree_lists.push_back({});
  int checked = 0;
  for (int N = 2; N <= 8; ++N) {
    for (const auto& degs : degree_lists) {
      const int n = N - static_cast<int>(degs.size());
      if (n < 1 || n > 5) continue;
      auto [m, t] = chern_tangent_ci(N, degs);
      CHECK(integrate(*m, t.c(n)) == Rational(euler_oracle(N, degs)));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("integrate") {
  auto q5 = complete_intersection_model(6, {2});
  CHECK(integrate(*q5, MultiPoly(1)) == 0);
  CHECK_THROWS_AS(integrate(*q5, q5->generator(0).pow(4)), PreconditionError);
  auto k3 = k3_model(22);
  CHECK(integrate(*k3, k3->parse("3 L^2 - p")) == 65);
}

TEST_CASE("chern character and todd class") {
  auto k3 = k3_model(22);
  auto triv = chern_character_and_todd(ChernSeries::trivial(k3, 1));
  CHECK(triv.ch[0] == k3->one());
  CHECK(triv.ch[1].is_zero());
  CHECK(triv.ch[2].is_zero());
  CHECK(triv.td[1].is_zero());

  auto L = k3->generator(0);
  auto line = chern_character_and_todd(ChernSeries::line_bundle(k3, L));
  CHECK(line.ch[2] == Rational(1, 2) * L * L);

  // ch(Omega^1) = 2 + c1 + (c1^2 - 2 c2)/2 = 2 - 24 p by hand.
  auto omega = dual(tangent_series(k3));
  auto cc = chern_character_and_todd(omega);
  CHECK(cc.ch[0] == Rational(2) * k3->one());
  CHECK(cc.ch[1].is_zero());
  CHECK(cc.ch[2] == k3->parse("-24 p"));
  CHECK(cc.td[2] == k3->parse("2 p"));

  CHECK_THROWS_AS(chern_character_and_todd(tangent_series(complete_intersection_model(6, {2}))), UnsupportedError);
}

TEST_CASE("Riemann-Roch on K3") {
  auto k3 = k3_model(22);
  auto L = k3->generator(0);
  auto omega = dual(tangent_series(k3));
  CHECK(hrr_chi(k3, ChernSeries::trivial(k3, 1)) == 2);
  CHECK(hrr_chi(k3, twist_chern(omega, L)) == 2);
  CHECK(hrr_chi(k3, ChernSeries::line_bundle(k3, L)) == 13);
  for (int l2 = 2; l2 <= 30; l2 += 2) {
    auto k = k3_model(l2);
    auto om = dual(tangent_series(k));
    CHECK(hrr_chi(k, twist_chern(om, k->generator(0))) == l2 - 20);
    CHECK(hrr_chi(k, ChernSeries::line_bundle(k, k->generator(0))) == Rational(l2, 2) + 2);
  }
}

TEST_CASE("Riemann-Roch on projective space") {
  auto p3 = complete_intersection_model(3, {});
  auto h = p3->generator(0);
  CHECK(hrr_chi(p3, ChernSeries::trivial(p3, 1)) == 1);
  for (int k = -4; k <= 6; ++k) {
    long long expected = (long long)(k + 1) * (k + 2) * (k + 3) / 6;
    CHECK(hrr_chi(p3, ChernSeries::line_bundle(p3, Rational(k) * h)) == Rational(expected));
  }
  // Bott: h^0(P^3, Omega^1(2)) = 6 with no higher cohomology.
  CHECK(hrr_chi(p3, twist_chern(dual(tangent_series(p3)), Rational(2) * h)) == 6);
  auto p1 = complete_intersection_model(1, {});
  CHECK(hrr_chi(p1, ChernSeries::trivial(p1, 1)) == 1);
}

TEST_CASE("Riemann-Roch is additive") {
  std::mt19937 rng(17);
  const std::vector<ModelPtr> models{complete_intersection_model(3, {}), complete_intersection_model(4, {3}),
                                     k3_model(10), complete_intersection_model(2, {})};
  for (int trial = 0; trial < 60; ++trial) {
    const auto& m = models[static_cast<std::size_t>(trial) % models.size()];
    auto e = random_series(rng, m, 1 + trial % 3);
    auto f = random_series(rng, m, 1 + trial % 2);
    CHECK(hrr_chi(m, whitney_product(e, f)) == hrr_chi(m, e) + hrr_chi(m, f));
  }
}

TEST_CASE("twisting") {
  auto k3 = k3_model(22);
  auto L = k3->generator(0);
  auto tw = twist_chern(ChernSeries::line_bundle(k3, L), L);
  CHECK(tw.c(1) == Rational(2) * L);
  auto t2 = twist_chern(ChernSeries::trivial(k3, 2), L);
  CHECK(t2.c(1) == Rational(2) * L);
  CHECK(t2.c(2) == L * L);

  auto om = twist_chern(dual(tangent_series(k3)), L);
  CHECK(om.c(1) == Rational(2) * L);
  CHECK(om.c(2) == k3->parse("24 p + L^2"));

  // Splitting principle: twisting a sum of line bundles twists each one.
  auto p3 = complete_intersection_model(3, {});
  auto h = p3->generator(0);
  auto split = whitney_product(whitney_product(ChernSeries::line_bundle(p3, h), ChernSeries::line_bundle(p3, -h)),
                               ChernSeries::line_bundle(p3, Rational(3) * h));
  auto expected = whitney_product(whitney_product(ChernSeries::line_bundle(p3, Rational(2) * h),
                                                  ChernSeries::trivial(p3, 1)),
                                  ChernSeries::line_bundle(p3, Rational(4) * h));
  CHECK(twist_chern(split, h) == expected);

  CHECK_THROWS_AS(twist_chern(ChernSeries::trivial(k3, 4), L), UnsupportedError);
  CHECK_THROWS_AS(twist_chern(ChernSeries::trivial(k3, 2), k3->generator(1)), PreconditionError);
}
