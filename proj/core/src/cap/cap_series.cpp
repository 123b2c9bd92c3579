#include "gwpairs/cap/cap_series.hpp"

#include "gwpairs/algebra/series.hpp"
#include "gwpairs/symfunc/characters.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace gwpairs {

namespace {

mpz_class zpow(long base, unsigned long e) {
  mpz_class r;
  mpz_class b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

/// d^k for a possibly negative k.
mpq_class qpow(long d, int k) {
  if (k >= 0) return mpq_class(zpow(d, static_cast<unsigned long>(k)));
  mpq_class r(mpz_class(1), zpow(d, static_cast<unsigned long>(-k)));
  r.canonicalize();
  return r;
}

QRatFunc q_monomial(int k, const mpq_class& c) { return QRatFunc::t_power(k, 1, GaussianRational(c)); }

mpq_class inverse_aut_factorials(const Partition& gamma) {
  mpz_class den = aut_order(gamma);
  for (int g : gamma.parts()) den *= factorial(static_cast<unsigned>(g));
  mpq_class r(mpz_class(1), den);
  r.canonicalize();
  return r;
}

void require_one_free(const Partition& gamma, const char* what) {
  if (gamma.multiplicity(1) != 0) throw std::invalid_argument(std::string(what) + " needs a partition without parts 1");
}

/// Calls f on each composition of r into positive parts (the empty one for r = 0).
void for_each_composition(int r, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      f(parts);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      parts.push_back(p);
      rec(left - p);
      parts.pop_back();
    }
  };
  rec(r);
}

}  // namespace

CapSeriesP::CapSeriesP(SymRatFunc pre, QRatFunc v) : prefactor(std::move(pre)), value(std::move(v)) {
  if (value.is_zero() || prefactor.is_zero()) {
    prefactor = SymRatFunc(1);
    value = QRatFunc(GaussianRational(0), value.kappa());
  } else if (prefactor.is_constant()) {
    value *= QRatFunc(prefactor.constant_value(), value.kappa());
    prefactor = SymRatFunc(1);
  }
}

std::string CapSeriesP::to_string() const {
  if (prefactor.is_one()) return value.to_string();
  return "(" + prefactor.to_string() + ")*(" + value.to_string() + ")";
}

CapSeriesP pt_cap_pure(const Partition& gamma) {
  require_one_free(gamma, "pt_cap_pure");
  return q_monomial(gamma.size(), inverse_aut_factorials(gamma));
}

CapSeriesGW gw_cap_pure(const Partition& gamma) {
  require_one_free(gamma, "gw_cap_pure");
  return CapSeriesGW::monomial(-2 * gamma.length(), SymRatFunc(GaussianRational(inverse_aut_factorials(gamma))));
}

namespace {

mpq_class maxdeg_coefficient(const Partition& alpha, int d) {
  if (alpha.size() == 0) throw std::invalid_argument("cap_maxdeg needs a partition of positive size");
  if (d - 1 != alpha.size() - alpha.length()) {
    throw std::invalid_argument("cap_maxdeg needs d - 1 = |alpha| - l(alpha); got d = " + std::to_string(d) +
                                " for alpha = " + alpha.to_display());
  }
  mpq_class c = qpow(d, alpha.length() - 2);
  for (int a : alpha.parts()) c /= mpq_class(factorial(static_cast<unsigned>(a - 1)));
  return c;
}

}  // namespace

CapSeriesP pt_cap_maxdeg(const Partition& alpha, int d) { return q_monomial(d, maxdeg_coefficient(alpha, d)); }

CapSeriesGW gw_cap_maxdeg(const Partition& alpha, int d) {
  return CapSeriesGW::monomial(-2, SymRatFunc(GaussianRational(maxdeg_coefficient(alpha, d))));
}

CapSeriesP pt_cap_maxdeg_oracle(const Partition& alpha) {
  if (alpha.size() == 0) throw std::invalid_argument("pt_cap_maxdeg_oracle needs a partition of positive size");
  const int l = alpha.length();
  const int d = alpha.size() - l + 1;
  mpz_class sum = 0;
  for (int a = 0; a <= d - 1; ++a) {
    const int b = d - 1 - a;
    mpz_class p = 1;
    for (int part : alpha.parts()) {
      const auto k = static_cast<unsigned long>(part + 1);
      p *= -zpow(-b - 1, k) + zpow(-b, k) + zpow(a, k) - zpow(a + 1, k);
    }
    const mpz_class term = mpz_class(binomial(d - 1, a)) * p;
    sum += (a % 2 == 0) ? term : mpz_class(-term);
  }
  mpz_class den = mpz_class(d) * factorial(static_cast<unsigned>(d));
  for (int part : alpha.parts()) den *= factorial(static_cast<unsigned>(part + 1));
  mpq_class c(sum, den);
  c.canonicalize();
  if ((d + l - 1) % 2 != 0) c = -c;
  return q_monomial(d, c);
}

SymRatFunc pt_tube_ones(int e) {
  if (e < 0) throw std::invalid_argument("pt_tube_ones needs e >= 0");
  const SymRatFunc s12 = SymRatFunc::s1() * SymRatFunc::s2();
  return (s12.pow(e) * SymRatFunc(GaussianRational(mpq_class(factorial(static_cast<unsigned>(e)))))).inverse();
}

CapSeriesP cap_tube_closed_pt(const Partition& gamma) {
  if (gamma.size() == 0) throw std::invalid_argument("cap tube sum needs a partition of positive size");
  mpq_class c(mpz_class(1), factorial(static_cast<unsigned>(gamma.size())) * aut_order(gamma));
  c.canonicalize();
  if ((gamma.length() - 1) % 2 != 0) c = -c;
  return q_monomial(gamma.size(), c);
}

CapSeriesGW cap_tube_closed_gw(const Partition& gamma) {
  if (gamma.size() == 0) throw std::invalid_argument("cap tube sum needs a partition of positive size");
  mpq_class c(mpz_class(1), factorial(static_cast<unsigned>(gamma.size())) * aut_order(gamma));
  c.canonicalize();
  return CapSeriesGW::monomial(-2, SymRatFunc(GaussianRational(c)));
}

CapSeriesP cap_tube_sum_pt(const Partition& gamma, TubeConvention tube) {
  if (gamma.size() == 0) throw std::invalid_argument("cap tube sum needs a partition of positive size");
  const Partition mu = gamma.without_ones();
  const int m = gamma.multiplicity(1);
  const int a = gamma.size() + gamma.length() - 1;
  const bool negative = (gamma.length() - 1) % 2 != 0;

  // Reduction mod s1 + s2.
  const SymRatFunc s1 = SymRatFunc::s1();
  const std::array<SymRatFunc, kNumVars> mod_s12{s1, -s1, SymRatFunc::s3()};
  auto reduce = [&](const SymRatFunc& f) { return f.substitute(mod_s12); };
  const SymRatFunc s12 = reduce(SymRatFunc::s1() * SymRatFunc::s2());

  const auto weight = [a](int c) {
    const auto k = static_cast<unsigned long>(a + 1);
    return mpq_class(zpow(c - 1, k) - 2 * zpow(c, k) + zpow(c + 1, k));
  };

  std::map<int, SymRatFunc> by_q_power;
  for (int e0 = 0; e0 <= m; ++e0) {
    const int n0 = mu.size() + e0;
    if (n0 == 0) continue;  // empty boundary: the character sum is over sigma |- 0 with no boxes
    const mpq_class chars = charsum_lhs<mpq_class>(mu, e0, weight);
    if (sgn(chars) == 0) continue;
    mpq_class cap = chars / mpq_class(factorial(static_cast<unsigned>(a + 1)) * factorial(static_cast<unsigned>(n0)) *
                                      factorial(static_cast<unsigned>(e0)) * z_factor(mu));
    if (negative) cap = -cap;
    const int r = m - e0;
    for_each_composition(r, [&](const std::vector<int>& parts) {
      SymRatFunc term = SymRatFunc(GaussianRational(cap)) * s12.pow(r);
      int q_power = n0;
      for (int e : parts) {
        term *= reduce(pt_tube_ones(e));
        if (tube == TubeConvention::with_q_power) q_power += e;
      }
      if (parts.size() % 2 != 0) term = -term;
      by_q_power[q_power] += term;
    });
  }

  QRatFunc value(GaussianRational(0));
  for (const auto& [k, c] : by_q_power) {
    if (c.is_zero()) continue;
    if (!c.is_constant()) {
      throw std::runtime_error("cap tube sum for " + gamma.to_display() + " keeps s1 dependence mod s1+s2: " + c.to_string());
    }
    value += QRatFunc::t_power(k, 1, c.constant_value());
  }
  return value;
}

CapSeriesP pt_cap_tau2_point() {
  const SymRatFunc half_s12 = (SymRatFunc::s1() + SymRatFunc::s2()) * SymRatFunc(GaussianRational::fraction(1, 2));
  const QRatFunc shape(UPoly(std::vector<GaussianRational>{0, -1, 1}), UPoly(std::vector<GaussianRational>{1, 1}));
  return {half_s12, shape};
}

namespace {

/// d/du(s3 f^{-x}) f^x through u^order, with f = (u/2)/sin(u/2) and x = (s1+s2)/s3.
ULaurent dilaton_vertex_term(int order) {
  const SymRatFunc s3 = SymRatFunc::s3();
  const SymRatFunc x = (SymRatFunc::s1() + SymRatFunc::s2()) / s3;
  const ULaurent f = half_u_over_sin_half_u(order + 1);
  const ULaurent vertex = series_pow(f, -x, order + 1) * s3;
  return (derivative_u(vertex) * series_pow(f, x, order + 1)).truncated(order);
}

}  // namespace

CapSeriesGW gw_cap_tau2_point(int order) {
  const ULaurent lead = ULaurent::monomial(-2, -SymRatFunc::s3());
  return (lead + dilaton_vertex_term(order + 1).shifted(-1)).truncated(order);
}

CapSeriesGW gw_cap_tau1_point() { return ULaurent::monomial(-2); }

DegreeOneExampleReport check_degree_one_descendent(int order) {
  if (order < 4) throw std::invalid_argument("check_degree_one_descendent needs order >= 4");
  DegreeOneExampleReport r;
  r.order = order;
  const SymRatFunc s12 = SymRatFunc::s1() + SymRatFunc::s2();
  const SymRatFunc i = SymRatFunc(GaussianRational::i());
  const ULaurent inv_iu = ULaurent::monomial(-1, -i);  // 1/(iu) = -i u^{-1}

  const QRatFunc ratio(UPoly(std::vector<GaussianRational>{1, -1}), UPoly(std::vector<GaussianRational>{1, 1}));
  r.pt_side = expand_q_to_u(ratio, order) * (s12 * SymRatFunc(GaussianRational::fraction(1, 2)));

  const ULaurent inner = ULaurent(s12) + dilaton_vertex_term(order + 1).shifted(1);
  r.gw_side = (-(inv_iu * inner)).truncated(order);
  r.equal = r.pt_side.equal_through(r.gw_side, order);
  r.first_difference = r.pt_side.first_difference(r.gw_side, order);
  r.gw_side_s3_free = true;
  for (const auto& c : r.gw_side.coeffs()) {
    if (c.depends_on(2)) r.gw_side_s3_free = false;
  }

  // (-q)^{-1} Z_P = K22 (-iu)^2 Z_GW(tau_2) + K21 (-iu)^2 Z_GW(tau_1), with (-iu)^2 = -u^2.
  const ULaurent minus_u2 = ULaurent::monomial(2, SymRatFunc(-1));
  const ULaurent known = inv_iu * minus_u2 * gw_cap_tau2_point(order + 1);
  const ULaurent tau1 = minus_u2 * gw_cap_tau1_point();
  r.recovered_k21 = ULaurent::divide(r.pt_side - known, tau1, order);
  const ULaurent expected = inv_iu * ULaurent(s12 + SymRatFunc::s3());
  r.k21_matches = r.recovered_k21.equal_through(expected, order);
  return r;
}

}  // namespace gwpairs
