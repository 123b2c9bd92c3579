#pragma once

#include "gwpairs/algebra/gaussian_rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gwpairs {

/// Dense univariate polynomial over Q[i], coefficients stored from degree 0
/// upwards with no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(GaussianRational c);  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<GaussianRational> coeffs);

  /// c * t^k.
  static UPoly monomial(int k, GaussianRational c = GaussianRational(1));

  const std::vector<GaussianRational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  GaussianRational coeff(int k) const;
  const GaussianRational& leading_coeff() const;
  /// Largest k with t^k dividing the polynomial; -1 for zero.
  int low_degree() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const GaussianRational& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly pow(unsigned e) const;
  UPoly monic() const;
  /// Quotient and remainder.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  GaussianRational evaluate(const GaussianRational& x) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

}  // namespace gwpairs
