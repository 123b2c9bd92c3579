#include "gwpairs/algebra/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace gwpairs {

UPoly::UPoly(GaussianRational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int k, GaussianRational c) {
  if (k < 0) throw std::domain_error("negative exponent in polynomial monomial");
  UPoly p;
  if (c.is_zero()) return p;
  p.c_.resize(static_cast<size_t>(k) + 1);
  p.c_[static_cast<size_t>(k)] = std::move(c);
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return c_[static_cast<size_t>(k)];
}

const GaussianRational& UPoly::leading_coeff() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

int UPoly::low_degree() const {
  for (size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k].is_zero()) return static_cast<int>(k);
  }
  return -1;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const GaussianRational& c) {
  for (auto& v : c_) v *= c;
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result(1);
  UPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  r *= leading_coeff().inverse();
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  UPoly r = a;
  if (a.degree() < b.degree()) return {UPoly(), r};
  std::vector<GaussianRational> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const GaussianRational lb = b.leading_coeff().inverse();
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    const GaussianRational factor = r.leading_coeff() * lb;
    q[static_cast<size_t>(shift)] = factor;
    for (int k = 0; k <= db; ++k) r.c_[static_cast<size_t>(k + shift)] -= factor * b.c_[static_cast<size_t>(k)];
    r.trim();
  }
  return {UPoly(std::move(q)), r};
}

GaussianRational UPoly::evaluate(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const GaussianRational& c = c_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    const std::string coeff = negative ? (-c).to_string() : c.to_string();
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << coeff;
      continue;
    }
    if (coeff != "1") os << coeff << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = UPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace gwpairs
