#pragma once

#include "gwpairs/algebra/laurent.hpp"
#include "gwpairs/algebra/upoly.hpp"
#include "gwpairs/cap/cap_series.hpp"

#include <string>

namespace gwpairs {

/// Exact stable pairs series N(s, t) / D(t) with t = q^{1/kappa}: the
/// numerator is a Laurent polynomial in t with SymRatFunc coefficients, the
/// denominator a monic polynomial over Q[i] with nonzero constant term. Closed
/// under sums and products, so sums of cap values with different s-prefactors
/// stay exact.
class PTSeries {
 public:
  PTSeries() : den_(1) {}
  PTSeries(const CapSeriesP& c);  // NOLINT(google-explicit-constructor)
  PTSeries(SymRatFunc c);  // NOLINT(google-explicit-constructor)
  PTSeries(long c) : PTSeries(SymRatFunc(c)) {}  // NOLINT(google-explicit-constructor)

  /// c q^k.
  static PTSeries q_power(int k, SymRatFunc c = SymRatFunc(1));

  int kappa() const { return kappa_; }
  /// Numerator in t (printed with the letter q).
  const QLaurent& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  PTSeries operator-() const;
  /// Inverse of a value whose numerator is c(s) P(t) with P over Q[i]; throws
  /// std::domain_error for zero or for numerators mixing s and q otherwise.
  PTSeries inverse() const;
  PTSeries pow(int e) const;
  /// True when the value does not depend on q.
  bool is_q_free() const;
  PTSeries& operator+=(const PTSeries& o) { return *this = *this + o; }
  PTSeries& operator*=(const PTSeries& o) { return *this = *this * o; }
  friend PTSeries operator+(const PTSeries& a, const PTSeries& b);
  friend PTSeries operator-(const PTSeries& a, const PTSeries& b) { return a + (-b); }
  friend PTSeries operator*(const PTSeries& a, const PTSeries& b);
  friend PTSeries operator/(const PTSeries& a, const PTSeries& b) { return a * b.inverse(); }
  friend bool operator==(const PTSeries& a, const PTSeries& b);

  /// Expansion under -q = e^{iu} through u^order; kappa must be 1.
  ULaurent expand_u(int order) const;

  std::string to_string() const;

 private:
  PTSeries lifted() const;
  void normalize();

  QLaurent num_;
  UPoly den_;
  int kappa_ = 1;
};

}  // namespace gwpairs
