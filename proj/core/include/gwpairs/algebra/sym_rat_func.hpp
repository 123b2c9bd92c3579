#pragma once

#include "gwpairs/algebra/sym_poly.hpp"

#include <array>
#include <optional>
#include <string>

namespace gwpairs {

/// Rational function in s1, s2, s3 over Q[i], kept in canonical form:
/// gcd(num, den) = 1 and the denominator is monic in graded-lex order, so two
/// values are equal exactly when their representations coincide.
class SymRatFunc {
 public:
  SymRatFunc() : den_(1) {}
  SymRatFunc(SymPoly num);  // NOLINT(google-explicit-constructor)
  SymRatFunc(GaussianRational c) : SymRatFunc(SymPoly(std::move(c))) {}  // NOLINT
  SymRatFunc(long c) : SymRatFunc(SymPoly(c)) {}  // NOLINT
  SymRatFunc(SymPoly num, SymPoly den);

  static SymRatFunc s(int index) { return SymRatFunc(SymPoly::var(index)); }
  static SymRatFunc s1() { return s(0); }
  static SymRatFunc s2() { return s(1); }
  static SymRatFunc s3() { return s(2); }

  const SymPoly& num() const { return num_; }
  const SymPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  GaussianRational constant_value() const;
  bool depends_on(int v) const { return num_.depends_on(v) || den_.depends_on(v); }
  /// deg(num) - deg(den) when both are homogeneous; zero has no degree.
  std::optional<int> homogeneous_degree() const;

  SymRatFunc operator-() const;
  SymRatFunc inverse() const;
  SymRatFunc& operator+=(const SymRatFunc& o) { return *this = *this + o; }
  SymRatFunc& operator-=(const SymRatFunc& o) { return *this = *this - o; }
  SymRatFunc& operator*=(const SymRatFunc& o) { return *this = *this * o; }
  SymRatFunc& operator/=(const SymRatFunc& o) { return *this = *this / o; }
  friend SymRatFunc operator+(const SymRatFunc& a, const SymRatFunc& b);
  friend SymRatFunc operator-(const SymRatFunc& a, const SymRatFunc& b) { return a + (-b); }
  friend SymRatFunc operator*(const SymRatFunc& a, const SymRatFunc& b);
  friend SymRatFunc operator/(const SymRatFunc& a, const SymRatFunc& b) { return a * b.inverse(); }
  friend bool operator==(const SymRatFunc& a, const SymRatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  SymRatFunc pow(int e) const;
  /// Image under s_k -> s_{perm[k]}.
  SymRatFunc permuted(const std::array<int, kNumVars>& perm) const;
  /// Simultaneous substitution s_k -> values[k].
  SymRatFunc substitute(const std::array<SymRatFunc, kNumVars>& values) const;

  std::string to_string(const VarNames& names = kSVars) const;

 private:
  struct Canonical {};
  SymRatFunc(SymPoly num, SymPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  SymPoly num_;
  SymPoly den_;
};

/// Elementary symmetric polynomials of s1, s2, s3.
SymRatFunc elementary_c1();
SymRatFunc elementary_c2();
SymRatFunc elementary_c3();

/// Rewrites a symmetric polynomial in s1, s2, s3 as a polynomial in the
/// elementary symmetric functions (returned with variables named c1, c2, c3).
/// Returns nullopt when p is not symmetric.
std::optional<SymPoly> to_elementary_symmetric(const SymPoly& p);
/// Inverse map: substitute c_k by the elementary symmetric polynomials.
SymPoly from_elementary_symmetric(const SymPoly& p_in_c);

/// All six permutations of the variable indices.
const std::array<std::array<int, kNumVars>, 6>& variable_permutations();

}  // namespace gwpairs
