#include "gwpairs/algebra/sym_rat_func.hpp"

#include <stdexcept>

namespace gwpairs {

SymRatFunc::SymRatFunc(SymPoly num) : num_(std::move(num)), den_(1) {}

SymRatFunc::SymRatFunc(SymPoly num, SymPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

void SymRatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = SymPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    const SymPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = SymPoly::divide_exact(num_, g);
      den_ = SymPoly::divide_exact(den_, g);
    }
  }
  const GaussianRational lc = den_.leading_coeff();
  if (!lc.is_one()) {
    const GaussianRational inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

GaussianRational SymRatFunc::constant_value() const {
  if (!is_constant()) throw std::domain_error("rational function is not constant: " + to_string());
  return num_.constant_value() / den_.constant_value();
}

std::optional<int> SymRatFunc::homogeneous_degree() const {
  auto dn = num_.homogeneous_degree();
  auto dd = den_.homogeneous_degree();
  if (!dn || !dd) return std::nullopt;
  return *dn - *dd;
}

SymRatFunc SymRatFunc::operator-() const { return {-num_, den_, Canonical{}}; }

SymRatFunc SymRatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("division by zero rational function");
  return {den_, num_};
}

SymRatFunc operator+(const SymRatFunc& a, const SymRatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return {a.num_ + b.num_, SymPoly(1), SymRatFunc::Canonical{}};
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  const SymPoly g = gcd(a.den_, b.den_);
  const SymPoly bd = SymPoly::divide_exact(b.den_, g);
  const SymPoly ad = SymPoly::divide_exact(a.den_, g);
  return {a.num_ * bd + b.num_ * ad, a.den_ * bd};
}

SymRatFunc operator*(const SymRatFunc& a, const SymRatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) return {a.num_ * b.num_, SymPoly(1), SymRatFunc::Canonical{}};
  const SymPoly g1 = gcd(a.num_, b.den_);
  const SymPoly g2 = gcd(b.num_, a.den_);
  SymPoly num = SymPoly::divide_exact(a.num_, g1) * SymPoly::divide_exact(b.num_, g2);
  SymPoly den = SymPoly::divide_exact(a.den_, g2) * SymPoly::divide_exact(b.den_, g1);
  // Both input denominators are monic and the gcds are monic, so den is monic.
  return {std::move(num), std::move(den), SymRatFunc::Canonical{}};
}

SymRatFunc SymRatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return {num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Canonical{}};
}

SymRatFunc SymRatFunc::permuted(const std::array<int, kNumVars>& perm) const {
  return {num_.permuted(perm), den_.permuted(perm)};
}

SymRatFunc SymRatFunc::substitute(const std::array<SymRatFunc, kNumVars>& values) const {
  auto eval = [&](const SymPoly& p) {
    SymRatFunc acc;
    for (const auto& [e, c] : p.terms()) {
      SymRatFunc term(c);
      for (int k = 0; k < kNumVars; ++k) {
        if (e[k] != 0) term *= values[k].pow(e[k]);
      }
      acc += term;
    }
    return acc;
  };
  return eval(num_) / eval(den_);
}

std::string SymRatFunc::to_string(const VarNames& names) const {
  if (den_.is_one()) return num_.to_string(names);
  std::string n = num_.to_string(names);
  std::string d = den_.to_string(names);
  if (!num_.is_monomial()) n = "(" + n + ")";
  if (!den_.is_monomial() || (den_.leading_coeff() != GaussianRational(1))) d = "(" + d + ")";
  return n + "/" + d;
}

SymRatFunc elementary_c1() { return SymRatFunc::s1() + SymRatFunc::s2() + SymRatFunc::s3(); }
SymRatFunc elementary_c2() {
  return SymRatFunc::s1() * SymRatFunc::s2() + SymRatFunc::s1() * SymRatFunc::s3() +
         SymRatFunc::s2() * SymRatFunc::s3();
}
SymRatFunc elementary_c3() { return SymRatFunc::s1() * SymRatFunc::s2() * SymRatFunc::s3(); }

std::optional<SymPoly> to_elementary_symmetric(const SymPoly& p) {
  const SymPoly e1 = elementary_c1().num();
  const SymPoly e2 = elementary_c2().num();
  const SymPoly e3 = elementary_c3().num();
  SymPoly remainder = p;
  SymPoly result;
  while (!remainder.is_zero()) {
    const Exponents e = remainder.leading_exponents();
    if (e[0] < e[1] || e[1] < e[2]) return std::nullopt;
    const GaussianRational c = remainder.leading_coeff();
    const Exponents ce{e[0] - e[1], e[1] - e[2], e[2]};
    result += SymPoly::monomial(ce, c);
    SymPoly expanded = e1.pow(static_cast<unsigned>(ce[0])) * e2.pow(static_cast<unsigned>(ce[1])) *
                       e3.pow(static_cast<unsigned>(ce[2]));
    expanded *= c;
    remainder -= expanded;
  }
  return result;
}

SymPoly from_elementary_symmetric(const SymPoly& p_in_c) {
  const SymPoly e[3] = {elementary_c1().num(), elementary_c2().num(), elementary_c3().num()};
  SymPoly out;
  for (const auto& [ex, c] : p_in_c.terms()) {
    SymPoly term(c);
    for (int k = 0; k < kNumVars; ++k) term *= e[k].pow(static_cast<unsigned>(ex[k]));
    out += term;
  }
  return out;
}

const std::array<std::array<int, kNumVars>, 6>& variable_permutations() {
  static const std::array<std::array<int, kNumVars>, 6> perms{{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return perms;
}

}  // namespace gwpairs
