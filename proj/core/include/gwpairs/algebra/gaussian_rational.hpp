#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace gwpairs {

/// Element of Q[i]: an exact rational real part and an exact rational
/// coefficient of i. Both parts are kept in canonical (reduced) form by GMP.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(mpz_class re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  static GaussianRational fraction(long num, long den) { return {mpq_class(num, den)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 as a rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Total order (real part first) used only for canonical sorting.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

  GaussianRational pow(unsigned e) const;

  /// "a/b", "a/b*i", or "(a/b+c/d*i)" style rendering.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Exact rational parse of "a", "a/b" or "-a/b".
mpq_class parse_rational(const std::string& text);
std::string rational_to_string(const mpq_class& q);

mpz_class factorial(unsigned n);
mpz_class binomial(long n, long k);

}  // namespace gwpairs
