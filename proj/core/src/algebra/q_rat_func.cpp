#include "gwpairs/algebra/q_rat_func.hpp"

#include <stdexcept>

namespace gwpairs {

namespace {

void check_kappa(int kappa) {
  if (kappa != 1 && kappa != 2) throw std::invalid_argument("kappa must be 1 or 2");
}

std::string t_name(int kappa) { return kappa == 1 ? "q" : "q^(1/2)"; }

}  // namespace

QRatFunc::QRatFunc(GaussianRational c, int kappa) : num_(std::move(c)), den_(1), kappa_(kappa) {
  check_kappa(kappa);
}

QRatFunc::QRatFunc(UPoly num, UPoly den, int kappa) : num_(std::move(num)), den_(std::move(den)), kappa_(kappa) {
  check_kappa(kappa);
  if (den_.is_zero()) throw std::domain_error("q-rational function with zero denominator");
  canonicalize();
}

QRatFunc QRatFunc::q(int kappa) { return t_power(kappa, kappa); }

QRatFunc QRatFunc::t_power(int k, int kappa, GaussianRational c) {
  if (k >= 0) return {UPoly::monomial(k, std::move(c)), UPoly(1), kappa};
  return {UPoly(std::move(c)), UPoly::monomial(-k), kappa};
}

void QRatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    const UPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = UPoly::divmod(num_, g).first;
      den_ = UPoly::divmod(den_, g).first;
    }
  }
  const GaussianRational lc = den_.leading_coeff();
  if (!lc.is_one()) {
    const GaussianRational inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

int QRatFunc::common_kappa(const QRatFunc& a, const QRatFunc& b) {
  if (a.kappa_ == b.kappa_) return a.kappa_;
  if (a.is_constant()) return b.kappa_;
  if (b.is_constant()) return a.kappa_;
  throw std::invalid_argument("mixing q and q^(1/2) rational functions");
}

QRatFunc QRatFunc::operator-() const {
  QRatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

QRatFunc QRatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("division by zero q-rational function");
  return {den_, num_, kappa_};
}

QRatFunc operator+(const QRatFunc& a, const QRatFunc& b) {
  const int kappa = QRatFunc::common_kappa(a, b);
  if (a.is_zero()) return {b.num_, b.den_, kappa};
  if (b.is_zero()) return {a.num_, a.den_, kappa};
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_, kappa};
  const UPoly g = gcd(a.den_, b.den_);
  const UPoly ad = UPoly::divmod(a.den_, g).first;
  const UPoly bd = UPoly::divmod(b.den_, g).first;
  return {a.num_ * bd + b.num_ * ad, a.den_ * bd, kappa};
}

QRatFunc operator*(const QRatFunc& a, const QRatFunc& b) {
  const int kappa = QRatFunc::common_kappa(a, b);
  if (a.is_zero() || b.is_zero()) return QRatFunc(GaussianRational(0), kappa);
  return {a.num_ * b.num_, a.den_ * b.den_, kappa};
}

QRatFunc QRatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QRatFunc r = *this;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

GaussianRational QRatFunc::evaluate_t(const GaussianRational& t) const {
  const GaussianRational d = den_.evaluate(t);
  if (d.is_zero()) throw std::domain_error("evaluation at a pole of " + to_string());
  return num_.evaluate(t) / d;
}

QRatFunc QRatFunc::lift() const {
  if (kappa_ == 2) return *this;
  auto spread = [](const UPoly& p) {
    std::vector<GaussianRational> c(p.is_zero() ? 0 : static_cast<size_t>(2 * p.degree() + 1));
    for (int k = 0; k <= p.degree(); ++k) c[static_cast<size_t>(2 * k)] = p.coeff(k);
    return UPoly(std::move(c));
  };
  return {spread(num_), spread(den_), 2};
}

std::string QRatFunc::to_string() const {
  const std::string var = t_name(kappa_);
  if (den_.is_one()) return num_.to_string(var);
  std::string n = num_.to_string(var);
  std::string d = den_.to_string(var);
  if (num_.coeffs().size() > 1) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

}  // namespace gwpairs
