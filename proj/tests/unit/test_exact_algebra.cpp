#include "doctest.h"

#include "gwpairs/algebra/series.hpp"

#include <random>

using namespace gwpairs;

namespace {

GaussianRational gq(long n, long d = 1) { return GaussianRational::fraction(n, d); }
GaussianRational gi(long n, long d = 1) { return {mpq_class(0), mpq_class(n, d)}; }

SymPoly random_poly(std::mt19937& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> e(0, max_deg);
  std::uniform_int_distribution<int> c(-3, 3);
  SymPoly p;
  for (int k = 0; k < terms; ++k) {
    p += SymPoly::monomial({e(rng), e(rng), e(rng)}, GaussianRational(mpq_class(c(rng)), mpq_class(c(rng))));
  }
  return p;
}

SymRatFunc random_rat(std::mt19937& rng) {
  SymPoly den = random_poly(rng, 1, 2);
  if (den.is_zero()) den = SymPoly(1);
  return {random_poly(rng, 2, 3), den};
}

UPoly random_upoly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> c(-4, 4);
  std::vector<GaussianRational> v;
  for (int k = 0; k <= deg; ++k) v.emplace_back(mpq_class(c(rng)), mpq_class(c(rng) % 2));
  return UPoly(std::move(v));
}

/// Independent oracle: the u-series of (1 + e^{iu}) / (1 - e^{iu}) by long
/// division of plain coefficient vectors, after cancelling one factor of u.
std::vector<GaussianRational> cot_oracle(int terms) {
  const int n = terms + 2;
  std::vector<GaussianRational> ex(static_cast<size_t>(n));
  GaussianRational t(1);
  for (int k = 0; k < n; ++k) {
    ex[static_cast<size_t>(k)] = t;
    t = t * GaussianRational::i() / GaussianRational(k + 1);
  }
  std::vector<GaussianRational> a(static_cast<size_t>(n)), b(static_cast<size_t>(n - 1));
  for (int k = 0; k < n; ++k) a[static_cast<size_t>(k)] = (k == 0 ? GaussianRational(1) : GaussianRational(0)) + ex[static_cast<size_t>(k)];
  for (int k = 1; k < n; ++k) b[static_cast<size_t>(k - 1)] = -ex[static_cast<size_t>(k)];
  std::vector<GaussianRational> q(static_cast<size_t>(terms));
  for (int k = 0; k < terms; ++k) {
    GaussianRational r = a[static_cast<size_t>(k)];
    for (int j = 1; j <= k; ++j) r -= b[static_cast<size_t>(j)] * q[static_cast<size_t>(k - j)];
    q[static_cast<size_t>(k)] = r / b[0];
  }
  return q;  // coefficients of u^{-1}, u^0, u^1, ...
}

}  // namespace

TEST_SUITE("exact_algebra") {
  TEST_CASE("gaussian rationals") {
    CHECK(GaussianRational(mpq_class(1), mpq_class(1)) * GaussianRational(mpq_class(1), mpq_class(-1)) == gq(2));
    CHECK(GaussianRational::i() * GaussianRational::i() == gq(-1));
    CHECK(gq(2, 4) == gq(1, 2));
    CHECK(gi(3).inverse() == gi(-1, 3));
    CHECK(parse_rational("-6/4") == mpq_class(-3, 2));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(gq(0).inverse());
  }

  TEST_CASE("polynomial gcd and canonical form") {
    const SymRatFunc s1 = SymRatFunc::s1();
    const SymRatFunc s2 = SymRatFunc::s2();
    const SymRatFunc s3 = SymRatFunc::s3();
    CHECK((s1 * s1 - s2 * s2) / (s1 - s2) == s1 + s2);
    const SymRatFunc r = (s1 + s2) / (s1 * s2);
    CHECK(r + SymRatFunc() == r);
    CHECK(r.to_string() == "(s1 + s2)/s1*s2");
    const SymPoly a = ((s1 + s2 * s3) * (s1 - s3 + 2)).num();
    const SymPoly b = ((s1 + s2 * s3) * (s2 * s2 + s1)).num();
    CHECK(gcd(a, b) == (s1 + s2 * s3).num());
    CHECK(((s1 + s2) * SymRatFunc(gq(2)) / (s1 * SymRatFunc(gq(4)) + s2 * SymRatFunc(gq(4)))).is_constant());
    CHECK_THROWS_AS(SymRatFunc().inverse(), std::domain_error);
  }

  TEST_CASE("elementary symmetric rewriting") {
    const SymRatFunc s1 = SymRatFunc::s1();
    const SymRatFunc s2 = SymRatFunc::s2();
    const SymRatFunc s3 = SymRatFunc::s3();
    const SymPoly p = (s1 * s1 + s2 * s2 + s3 * s3).num();
    auto c = to_elementary_symmetric(p);
    REQUIRE(c.has_value());
    CHECK(c->to_string(kCVars) == "c1^2 - 2*c2");
    CHECK(from_elementary_symmetric(*c) == p);
    CHECK_FALSE(to_elementary_symmetric((s1 + s1 * s2).num()).has_value());
  }

  TEST_CASE("ring axioms on random rational functions") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      const SymRatFunc a = random_rat(rng);
      const SymRatFunc b = random_rat(rng);
      const SymRatFunc c = random_rat(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == SymRatFunc());
      if (!a.is_zero()) CHECK(a * a.inverse() == SymRatFunc(1));
      const auto perm = variable_permutations()[static_cast<size_t>(trial % 6)];
      CHECK((a * b).permuted(perm) == a.permuted(perm) * b.permuted(perm));
    }
  }

  TEST_CASE("gcd recovers planted common factors") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const SymPoly f = random_poly(rng, 1, 3);
      const SymPoly g = random_poly(rng, 2, 3);
      const SymPoly h = random_poly(rng, 2, 3);
      if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
      const SymPoly d = gcd(f * g, f * h);
      CHECK(SymPoly::try_divide(d, f.monic()).has_value());
      CHECK(SymPoly::try_divide(f * g, d).has_value());
      CHECK(SymPoly::try_divide(f * h, d).has_value());
    }
  }

  TEST_CASE("q rational functions") {
    const QRatFunc q = QRatFunc::q();
    const QRatFunc f = (QRatFunc(1) - q) / (QRatFunc(1) + q);
    CHECK(f.evaluate_t(gq(0)) == gq(1));
    CHECK((q * q - QRatFunc(1)) / (q - QRatFunc(1)) == q + QRatFunc(1));
    CHECK(QRatFunc::t_power(-2) * q * q == QRatFunc(1));
    CHECK_THROWS(QRatFunc::q(1) + QRatFunc::q(2));
    CHECK(q.lift() == QRatFunc::t_power(2, 2));
  }

  TEST_CASE("expand_q_to_u fixed values") {
    const QRatFunc q = QRatFunc::q();
    const ULaurent eq = expand_q_to_u(q, 3);
    CHECK(eq.truncation() == 3);
    CHECK(eq.coeff(0) == SymRatFunc(gq(-1)));
    CHECK(eq.coeff(1) == SymRatFunc(gi(-1)));
    CHECK(eq.coeff(2) == SymRatFunc(gq(1, 2)));
    CHECK(eq.coeff(3) == SymRatFunc(gi(1, 6)));

    const ULaurent cot = expand_q_to_u((QRatFunc(1) - q) / (QRatFunc(1) + q), 3);
    CHECK(cot.valuation() == -1);
    CHECK(cot.coeff(-1) == SymRatFunc(gi(2)));
    CHECK(cot.coeff(0) == SymRatFunc());
    CHECK(cot.coeff(1) == SymRatFunc(gi(-1, 6)));
    CHECK(cot.coeff(2) == SymRatFunc());
    CHECK(cot.coeff(3) == SymRatFunc(gi(-1, 360)));

    const auto oracle = cot_oracle(16);
    const ULaurent deep = expand_q_to_u((QRatFunc(1) - q) / (QRatFunc(1) + q), 14);
    for (int k = 0; k < 16; ++k) CHECK(deep.coeff(k - 1) == SymRatFunc(oracle[static_cast<size_t>(k)]));

    CHECK(expand_q_to_u(QRatFunc(1), 5) == ULaurent(1));
    CHECK_THROWS_AS(expand_q_to_u(QRatFunc(1) / (QRatFunc(1) + q).pow(9), 3), std::domain_error);
    CHECK_NOTHROW(expand_q_to_u(QRatFunc(1) / (QRatFunc(1) + q).pow(8), 3));
  }

  TEST_CASE("expand_q_to_u is multiplicative") {
    std::mt19937 rng(11);
    const QRatFunc q = QRatFunc::q();
    const int order = 12;
    for (int trial = 0; trial < 12; ++trial) {
      QRatFunc f(random_upoly(rng, 3), UPoly(1) + UPoly::monomial(1, gq(2)) * random_upoly(rng, 1));
      QRatFunc g(random_upoly(rng, 2), random_upoly(rng, 2));
      if (f.is_zero() || g.is_zero()) continue;
      if (trial % 3 == 0) g = g / (QRatFunc(1) + q);
      const ULaurent ef = expand_q_to_u(f, order + 4);
      const ULaurent eg = expand_q_to_u(g, order + 4);
      CHECK(expand_q_to_u(f * g, order).equal_through(ef * eg, order));
      CHECK(expand_q_to_u(f + g, order).equal_through(ef + eg, order));
    }
    const ULaurent round = expand_q_to_u(q, order) * expand_q_to_u(q.inverse(), order);
    CHECK(round.equal_through(ULaurent(1), order));
  }

  TEST_CASE("series_pow and derivative") {
    const ULaurent f = half_u_over_sin_half_u(4);
    const ULaurent p1 = series_pow(f, SymRatFunc(1), 4);
    CHECK(p1.coeff(0) == SymRatFunc(1));
    CHECK(p1.coeff(1) == SymRatFunc());
    CHECK(p1.coeff(2) == SymRatFunc(gq(1, 24)));
    CHECK(p1.coeff(4) == SymRatFunc(gq(7, 5760)));
    CHECK(series_pow(f, SymRatFunc(), 6) == ULaurent(1).truncated(4));
    CHECK(series_pow(ULaurent(1).truncated(9), SymRatFunc::s1(), 9) == ULaurent(1).truncated(9));

    const int order = 12;
    const ULaurent g = half_u_over_sin_half_u(order);
    const SymRatFunc x1 = SymRatFunc::s1() / SymRatFunc::s3();
    const SymRatFunc x2 = SymRatFunc::s2() + SymRatFunc(gq(1, 3));
    CHECK(series_pow(g, x1 + x2, order).equal_through(series_pow(g, x1, order) * series_pow(g, x2, order), order));
    CHECK_THROWS(series_pow(ULaurent(2).truncated(3), SymRatFunc(1), 3));

    CHECK(derivative_u(ULaurent::monomial(-2)) == ULaurent::monomial(-3, SymRatFunc(-2)));
    CHECK(derivative_u(ULaurent(5)).is_zero());
    CHECK(derivative_u(ULaurent::monomial(2, SymRatFunc(gq(1, 24)))) == ULaurent::monomial(1, SymRatFunc(gq(1, 12))));
    CHECK(derivative_u(g).truncation() == order - 1);
  }

  TEST_CASE("laurent truncation semantics") {
    const ULaurent a(0, {SymRatFunc(1), SymRatFunc(1)}, 3);
    const ULaurent b = ULaurent::monomial(-1);
    CHECK((a * b).truncation() == 2);
    CHECK((a + b).truncation() == 3);
    const ULaurent inv = a.inverse();
    CHECK(inv.truncation() == 3);
    CHECK((a * inv).equal_through(ULaurent(1), 3));
    CHECK_THROWS(ULaurent(0, {SymRatFunc(1), SymRatFunc(1)}, kExact).inverse());
    CHECK_THROWS((ULaurent::zero(5)).inverse());
    CHECK_THROWS(a.coeff(4));
  }
}
