#pragma once

#include "gwpairs/algebra/gaussian_rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gwpairs {

inline constexpr int kNumVars = 3;

/// Exponent vector of a monomial s1^a s2^b s3^c.
using Exponents = std::array<int, kNumVars>;

/// Graded-lexicographic order, descending: the first element of a map keyed
/// with this comparator is the leading monomial.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = a[0] + a[1] + a[2];
    const int db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    return a > b;
  }
};

/// Names used when printing; the same polynomial type also carries the
/// elementary symmetric variables c1, c2, c3.
using VarNames = std::array<const char*, kNumVars>;
inline constexpr VarNames kSVars{"s1", "s2", "s3"};
inline constexpr VarNames kCVars{"c1", "c2", "c3"};

/// Sparse polynomial in three variables over Q[i].
class SymPoly {
 public:
  using TermMap = std::map<Exponents, GaussianRational, GrlexGreater>;

  SymPoly() = default;
  SymPoly(GaussianRational c);  // NOLINT(google-explicit-constructor)
  SymPoly(long c) : SymPoly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

  static SymPoly var(int index);
  static SymPoly monomial(const Exponents& e, GaussianRational c = GaussianRational(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term value; throws if not constant.
  GaussianRational constant_value() const;

  const Exponents& leading_exponents() const;
  const GaussianRational& leading_coeff() const;
  int total_degree() const;
  int degree_in(int v) const;
  /// Degree if every term has the same total degree.
  std::optional<int> homogeneous_degree() const;
  bool depends_on(int v) const { return degree_in(v) > 0; }

  SymPoly operator-() const;
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }
  SymPoly& operator*=(const GaussianRational& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

  SymPoly pow(unsigned e) const;
  /// Exact quotient a / b; nullopt when b does not divide a.
  static std::optional<SymPoly> try_divide(const SymPoly& a, const SymPoly& b);
  /// Exact quotient; throws std::domain_error on a nonzero remainder.
  static SymPoly divide_exact(const SymPoly& a, const SymPoly& b);
  /// Scale so the leading coefficient is 1 (zero stays zero).
  SymPoly monic() const;

  SymPoly permuted(const std::array<int, kNumVars>& perm) const;
  /// Replace variable v by a constant.
  SymPoly evaluate_var(int v, const GaussianRational& value) const;
  /// Replace variable v by a polynomial.
  SymPoly substitute_var(int v, const SymPoly& value) const;

  std::string to_string(const VarNames& names = kSVars) const;

 private:
  void add_term(const Exponents& e, const GaussianRational& c);
  TermMap terms_;
};

/// Monic greatest common divisor over Q[i]; gcd(0, 0) = 0.
SymPoly gcd(const SymPoly& a, const SymPoly& b);

}  // namespace gwpairs
