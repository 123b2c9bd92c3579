#pragma once

#include "gwpairs/algebra/upoly.hpp"

#include <string>

namespace gwpairs {

/// Rational function over Q[i] in t = q^{1/kappa}, kappa in {1, 2}. Canonical
/// form: coprime numerator and denominator, denominator monic. Nonconstant
/// values with different kappa never mix (constants adopt the other operand's
/// kappa); use lift() to move a kappa = 1 value to kappa = 2.
class QRatFunc {
 public:
  QRatFunc() : den_(1) {}
  QRatFunc(GaussianRational c, int kappa = 1);  // NOLINT(google-explicit-constructor)
  QRatFunc(long c) : QRatFunc(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  QRatFunc(UPoly num, UPoly den, int kappa = 1);

  /// q^1 in the given kappa.
  static QRatFunc q(int kappa = 1);
  /// c * t^k, i.e. c * q^{k/kappa}; k may be negative.
  static QRatFunc t_power(int k, int kappa = 1, GaussianRational c = GaussianRational(1));

  int kappa() const { return kappa_; }
  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  QRatFunc operator-() const;
  QRatFunc inverse() const;
  QRatFunc& operator+=(const QRatFunc& o) { return *this = *this + o; }
  QRatFunc& operator-=(const QRatFunc& o) { return *this = *this - o; }
  QRatFunc& operator*=(const QRatFunc& o) { return *this = *this * o; }
  QRatFunc& operator/=(const QRatFunc& o) { return *this = *this / o; }
  friend QRatFunc operator+(const QRatFunc& a, const QRatFunc& b);
  friend QRatFunc operator-(const QRatFunc& a, const QRatFunc& b) { return a + (-b); }
  friend QRatFunc operator*(const QRatFunc& a, const QRatFunc& b);
  friend QRatFunc operator/(const QRatFunc& a, const QRatFunc& b) { return a * b.inverse(); }
  friend bool operator==(const QRatFunc& a, const QRatFunc& b) {
    return (a.kappa_ == b.kappa_ || a.is_constant()) && a.num_ == b.num_ && a.den_ == b.den_;
  }

  QRatFunc pow(int e) const;
  /// Value at q (kappa = 1) or at q^{1/2} (kappa = 2); throws at a pole.
  GaussianRational evaluate_t(const GaussianRational& t) const;
  /// Re-express a kappa = 1 function in t = q^{1/2}.
  QRatFunc lift() const;

  /// Rendering in q, with q^(k/2) for odd powers of t.
  std::string to_string() const;

 private:
  void canonicalize();
  static int common_kappa(const QRatFunc& a, const QRatFunc& b);

  UPoly num_;
  UPoly den_;
  int kappa_ = 1;
};

}  // namespace gwpairs
