#include "gwpairs/algebra/series.hpp"

#include <stdexcept>

namespace gwpairs {

namespace {

/// P(-e^{iu}) through u^order; the u^n coefficient is sum_k p_k (-1)^k (ik)^n / n!.
ULaurent polynomial_at_minus_exp(const UPoly& p, int order) {
  std::vector<SymRatFunc> out;
  out.reserve(static_cast<size_t>(order) + 1);
  const GaussianRational i = GaussianRational::i();
  for (int n = 0; n <= order; ++n) {
    GaussianRational acc;
    for (int k = 0; k <= p.degree(); ++k) {
      const GaussianRational& c = p.coeffs()[static_cast<size_t>(k)];
      if (c.is_zero()) continue;
      GaussianRational term = c * (i * GaussianRational(k)).pow(static_cast<unsigned>(n));
      if (k % 2 != 0) term = -term;
      acc += term;
    }
    out.emplace_back(acc / GaussianRational(mpq_class(factorial(static_cast<unsigned>(n)))));
  }
  return ULaurent(0, std::move(out), order);
}

}  // namespace

ULaurent exp_series(const GaussianRational& c, int order) {
  std::vector<SymRatFunc> out;
  GaussianRational term(1);
  for (int n = 0; n <= order; ++n) {
    out.emplace_back(term);
    term = term * c / GaussianRational(n + 1);
  }
  return ULaurent(0, std::move(out), order);
}

ULaurent expand_q_to_u(const QRatFunc& f, int order, int pole_limit) {
  if (f.kappa() != 1) throw std::invalid_argument("expand_q_to_u applies only to rational functions of q");
  if (order < 0) throw std::invalid_argument("expansion order must be nonnegative");
  if (f.is_zero()) return ULaurent::zero(order);

  const UPoly one_plus_q({GaussianRational(1), GaussianRational(1)});
  UPoly den = f.den();
  int m = 0;
  while (den.evaluate(GaussianRational(-1)).is_zero()) {
    den = UPoly::divmod(den, one_plus_q).first;
    if (++m > pole_limit) {
      throw std::domain_error("pole at q = -1 of order exceeding the limit " + std::to_string(pole_limit));
    }
  }

  const int work = order + m;
  const ULaurent num_s = polynomial_at_minus_exp(f.num(), work);
  const ULaurent den_s = polynomial_at_minus_exp(den, work);
  ULaurent regular = num_s * den_s.inverse(work);
  if (m > 0) {
    // E(u) = (e^{iu} - 1)/(iu): shift the exponential series down by one.
    std::vector<SymRatFunc> e;
    const GaussianRational i = GaussianRational::i();
    GaussianRational term(1);  // i^n / (n+1)!
    for (int n = 0; n <= work; ++n) {
      e.emplace_back(term);
      term = term * i / GaussianRational(n + 2);
    }
    const ULaurent e_series(0, std::move(e), work);
    regular = regular * e_series.inverse(work).pow(static_cast<unsigned>(m));
    const GaussianRational minus_i_inv_m = (-i).inverse().pow(static_cast<unsigned>(m));
    regular = (SymRatFunc(minus_i_inv_m) * regular).shifted(-m);
  }
  return regular.truncated(order);
}

ULaurent series_pow(const ULaurent& f, const SymRatFunc& x, int order) {
  if (f.is_zero() || f.valuation() != 0 || !f.coeff(0).is_one()) {
    throw std::domain_error("series_pow needs a series with constant term 1");
  }
  const int n_max = std::min(order, f.truncation());
  std::vector<SymRatFunc> g(static_cast<size_t>(n_max) + 1);
  g[0] = SymRatFunc(1);
  const SymRatFunc x1 = x + SymRatFunc(1);
  for (int n = 1; n <= n_max; ++n) {
    SymRatFunc acc;
    for (int k = 1; k <= n; ++k) {
      const SymRatFunc fk = f.coeff(k);
      if (fk.is_zero()) continue;
      acc += (x1 * SymRatFunc(k) - SymRatFunc(n)) * fk * g[static_cast<size_t>(n - k)];
    }
    g[static_cast<size_t>(n)] = acc / SymRatFunc(n);
  }
  return ULaurent(0, std::move(g), n_max);
}

ULaurent half_u_over_sin_half_u(int order) {
  // sin(u/2)/(u/2) = sum_n (-1)^n (u/2)^{2n} / (2n+1)!.
  std::vector<SymRatFunc> s(static_cast<size_t>(order) + 1);
  for (int n = 0; 2 * n <= order; ++n) {
    mpq_class c(1, 1);
    c /= mpq_class(factorial(static_cast<unsigned>(2 * n + 1)));
    c /= mpq_class(mpz_class(1) << static_cast<unsigned>(2 * n));
    if (n % 2 != 0) c = -c;
    s[static_cast<size_t>(2 * n)] = SymRatFunc(GaussianRational(c));
  }
  return ULaurent(0, std::move(s), order).inverse(order);
}

}  // namespace gwpairs
