#include "gwpairs/assembly/pt_series.hpp"

#include "gwpairs/algebra/series.hpp"

#include <sstream>
#include <stdexcept>

namespace gwpairs {

namespace {

QLaurent to_laurent(const UPoly& p) {
  std::vector<SymRatFunc> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return QLaurent(0, std::move(c), kExact);
}

/// p(t) -> p(t^2).
UPoly square_variable(const UPoly& p) {
  std::vector<GaussianRational> c(p.coeffs().empty() ? 0 : 2 * p.coeffs().size() - 1);
  for (size_t k = 0; k < p.coeffs().size(); ++k) c[2 * k] = p.coeffs()[k];
  return UPoly(std::move(c));
}

QLaurent square_variable(const QLaurent& p) {
  if (p.is_zero()) return p;
  std::vector<SymRatFunc> c(2 * p.coeffs().size() - 1);
  for (size_t k = 0; k < p.coeffs().size(); ++k) c[2 * k] = p.coeffs()[k];
  return QLaurent(2 * p.min_pow(), std::move(c), kExact);
}

bool only_even_powers(const UPoly& p) {
  for (size_t k = 1; k < p.coeffs().size(); k += 2) {
    if (!p.coeffs()[k].is_zero()) return false;
  }
  return true;
}

bool only_even_powers(const QLaurent& p) {
  for (size_t k = 0; k < p.coeffs().size(); ++k) {
    if (!p.coeffs()[k].is_zero() && (p.min_pow() + static_cast<int>(k)) % 2 != 0) return false;
  }
  return true;
}

}  // namespace

PTSeries::PTSeries(const CapSeriesP& c) : den_(c.value.den()), kappa_(c.value.kappa()) {
  num_ = to_laurent(c.value.num()) * QLaurent(c.prefactor);
  normalize();
}

PTSeries::PTSeries(SymRatFunc c) : num_(std::move(c)), den_(1) { normalize(); }

PTSeries PTSeries::q_power(int k, SymRatFunc c) {
  PTSeries r;
  r.num_ = QLaurent::monomial(k, std::move(c));
  r.normalize();
  return r;
}

PTSeries PTSeries::operator-() const {
  PTSeries r = *this;
  r.num_ = -r.num_;
  return r;
}

PTSeries PTSeries::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  const SymRatFunc& c = num_.coeffs().front();
  std::vector<GaussianRational> p;
  for (const auto& x : num_.coeffs()) {
    const SymRatFunc r = x / c;
    if (!r.is_constant()) throw std::domain_error("cannot invert a numerator mixing s and q: " + to_string());
    p.push_back(r.constant_value());
  }
  PTSeries r;
  r.kappa_ = kappa_;
  r.num_ = (to_laurent(den_) * QLaurent(c.inverse())).shifted(-num_.min_pow());
  r.den_ = UPoly(std::move(p));
  r.normalize();
  return r;
}

PTSeries PTSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  PTSeries r(1L);
  PTSeries b = *this;
  for (unsigned k = static_cast<unsigned>(e); k > 0; k >>= 1) {
    if (k & 1U) r = r * b;
    b = b * b;
  }
  return r;
}

bool PTSeries::is_q_free() const {
  return is_zero() || (den_.is_one() && num_.coeffs().size() == 1 && num_.min_pow() == 0);
}

PTSeries PTSeries::lifted() const {
  if (kappa_ == 2) return *this;
  PTSeries r;
  r.kappa_ = 2;
  r.num_ = square_variable(num_);
  r.den_ = square_variable(den_);
  return r;
}

PTSeries operator+(const PTSeries& a0, const PTSeries& b0) {
  if (a0.is_zero()) return b0;
  if (b0.is_zero()) return a0;
  const bool lift = a0.kappa_ != b0.kappa_;
  const PTSeries a = lift ? a0.lifted() : a0;
  const PTSeries b = lift ? b0.lifted() : b0;
  PTSeries r;
  r.kappa_ = a.kappa_;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
  } else {
    const UPoly g = gcd(a.den_, b.den_);
    const UPoly fa = UPoly::divmod(b.den_, g).first;
    const UPoly fb = UPoly::divmod(a.den_, g).first;
    r.num_ = a.num_ * to_laurent(fa) + b.num_ * to_laurent(fb);
    r.den_ = a.den_ * fa;
  }
  r.normalize();
  return r;
}

PTSeries operator*(const PTSeries& a0, const PTSeries& b0) {
  if (a0.is_zero() || b0.is_zero()) return PTSeries();
  const bool lift = a0.kappa_ != b0.kappa_;
  const PTSeries a = lift ? a0.lifted() : a0;
  const PTSeries b = lift ? b0.lifted() : b0;
  PTSeries r;
  r.kappa_ = a.kappa_;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

bool operator==(const PTSeries& a0, const PTSeries& b0) {
  if (a0.is_zero() || b0.is_zero()) return a0.is_zero() && b0.is_zero();
  const bool lift = a0.kappa_ != b0.kappa_;
  const PTSeries a = lift ? a0.lifted() : a0;
  const PTSeries b = lift ? b0.lifted() : b0;
  return a.num_ * to_laurent(b.den_) == b.num_ * to_laurent(a.den_);
}

void PTSeries::normalize() {
  if (num_.is_zero()) {
    num_ = QLaurent::zero();
    den_ = UPoly(1);
    kappa_ = 1;
    return;
  }
  if (den_.is_zero()) throw std::domain_error("PTSeries with zero denominator");
  if (const int k = den_.low_degree(); k > 0) {
    den_ = UPoly::divmod(den_, UPoly::monomial(k)).first;
    num_ = num_.shifted(-k);
  }
  const GaussianRational lc = den_.leading_coeff();
  if (!lc.is_one()) {
    den_ = den_.monic();
    num_ = num_ * QLaurent(SymRatFunc(lc.inverse()));
  }
  if (kappa_ == 2 && only_even_powers(den_) && only_even_powers(num_)) {
    std::vector<GaussianRational> d;
    for (size_t k = 0; k < den_.coeffs().size(); k += 2) d.push_back(den_.coeffs()[k]);
    den_ = UPoly(std::move(d));
    std::vector<SymRatFunc> n;
    for (size_t k = 0; k < num_.coeffs().size(); k += 2) n.push_back(num_.coeffs()[k]);
    num_ = QLaurent(num_.min_pow() / 2, std::move(n), kExact);
    kappa_ = 1;
  }
}

ULaurent PTSeries::expand_u(int order) const {
  if (kappa_ != 1) throw std::domain_error("expand_u needs integer powers of q");
  ULaurent out = ULaurent::zero(order);
  const QRatFunc inv_den(UPoly(1), den_);
  for (size_t k = 0; k < num_.coeffs().size(); ++k) {
    const SymRatFunc& c = num_.coeffs()[k];
    if (c.is_zero()) continue;
    const int p = num_.min_pow() + static_cast<int>(k);
    out += ULaurent(c) * expand_q_to_u(inv_den * QRatFunc::t_power(p), order);
  }
  return out.truncated(order);
}

std::string PTSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < num_.coeffs().size(); ++k) {
    const SymRatFunc& c = num_.coeffs()[k];
    if (c.is_zero()) continue;
    const int p = num_.min_pow() + static_cast<int>(k);
    if (!first) os << " + ";
    first = false;
    const std::string cs = c.to_string();
    const bool simple = c.is_polynomial() && c.num().is_monomial();
    if (p == 0) {
      os << (simple ? cs : "(" + cs + ")");
      continue;
    }
    if (cs != "1") os << (simple ? cs : "(" + cs + ")") << "*";
    os << "q";
    if (kappa_ == 2 && p % 2 != 0) {
      os << "^(" << p << "/2)";
    } else if (p / kappa_ != 1) {
      const int e = p / kappa_;
      os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
  }
  if (first) return "0";
  if (den_.is_one()) return os.str();
  const QRatFunc d(den_, UPoly(1), kappa_);
  return "(" + os.str() + ")/(" + d.to_string() + ")";
}

}  // namespace gwpairs
