#pragma once

#include "gwpairs/algebra/sym_rat_func.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwpairs {

/// Truncation value used for series that are exact (finite Laurent polynomials).
inline constexpr int kExact = INT_MAX / 4;

struct UVar {
  static constexpr const char* name = "u";
};
struct QVar {
  static constexpr const char* name = "q";
};

/// Truncated Laurent series with SymRatFunc coefficients. Coefficients of
/// powers up to and including truncation() are known; beyond that they are
/// unknown, not zero. Exact values carry truncation() == kExact.
template <class Var>
class Laurent {
 public:
  Laurent() = default;
  Laurent(SymRatFunc c) { *this = monomial(0, std::move(c)); }  // NOLINT(google-explicit-constructor)
  Laurent(long c) : Laurent(SymRatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  Laurent(GaussianRational c) : Laurent(SymRatFunc(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  Laurent(int min_pow, std::vector<SymRatFunc> coeffs, int truncation)
      : min_pow_(min_pow), coeffs_(std::move(coeffs)), trunc_(truncation) {
    normalize();
  }

  static Laurent monomial(int power, SymRatFunc c = SymRatFunc(1), int truncation = kExact) {
    return Laurent(power, {std::move(c)}, truncation);
  }
  static Laurent zero(int truncation = kExact) { return Laurent(0, {}, truncation); }

  bool is_exact() const { return trunc_ >= kExact; }
  int truncation() const { return trunc_; }
  /// Lowest stored power; meaningless for zero.
  int min_pow() const { return min_pow_; }
  int max_pow() const { return min_pow_ + static_cast<int>(coeffs_.size()) - 1; }
  /// True when every known coefficient vanishes.
  bool is_zero() const { return coeffs_.empty(); }
  /// Valuation; a truncated zero series reports truncation() + 1.
  int valuation() const {
    if (coeffs_.empty()) return is_exact() ? kExact : trunc_ + 1;
    return min_pow_;
  }
  const std::vector<SymRatFunc>& coeffs() const { return coeffs_; }

  SymRatFunc coeff(int power) const {
    if (power > trunc_) {
      throw std::out_of_range("coefficient of " + std::string(Var::name) + "^" + std::to_string(power) +
                              " beyond truncation order " + std::to_string(trunc_));
    }
    if (coeffs_.empty() || power < min_pow_ || power > max_pow()) return {};
    return coeffs_[static_cast<size_t>(power - min_pow_)];
  }

  Laurent truncated(int order) const {
    Laurent r = *this;
    r.trunc_ = std::min(trunc_, order);
    r.normalize();
    return r;
  }

  /// Multiply by Var^k.
  Laurent shifted(int k) const {
    Laurent r = *this;
    r.min_pow_ += k;
    if (!is_exact()) r.trunc_ += k;
    return r;
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    const int t = std::min(a.trunc_, b.trunc_);
    if (a.is_zero()) return b.truncated(t);
    if (b.is_zero()) return a.truncated(t);
    const int lo = std::min(a.min_pow_, b.min_pow_);
    const int hi = std::min(std::max(a.max_pow(), b.max_pow()), t);
    if (hi < lo) return zero(t);
    std::vector<SymRatFunc> c(static_cast<size_t>(hi - lo + 1));
    for (int p = lo; p <= hi; ++p) c[static_cast<size_t>(p - lo)] = a.raw(p) + b.raw(p);
    return Laurent(lo, std::move(c), t);
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    const int t = product_truncation(a, b);
    if (a.is_zero() || b.is_zero()) return zero(t);
    const int lo = a.min_pow_ + b.min_pow_;
    const int hi = std::min(a.max_pow() + b.max_pow(), t);
    if (hi < lo) return zero(t);
    std::vector<SymRatFunc> c(static_cast<size_t>(hi - lo + 1));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (size_t j = 0; j < b.coeffs_.size() && static_cast<int>(i + j) + lo <= hi; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Laurent(lo, std::move(c), t);
  }

  friend Laurent operator*(const SymRatFunc& s, const Laurent& a) {
    if (s.is_zero()) return zero(a.trunc_);
    Laurent r = a;
    for (auto& c : r.coeffs_) c *= s;
    r.normalize();
    return r;
  }
  friend Laurent operator*(const Laurent& a, const SymRatFunc& s) { return s * a; }

  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  /// Multiplicative inverse. Exact non-monomial inputs need an explicit order
  /// because the inverse is an infinite series.
  Laurent inverse(std::optional<int> order = std::nullopt) const {
    if (is_zero()) {
      throw std::domain_error(std::string("inverse of a ") + Var::name +
                              "-series whose coefficients vanish through the truncation window");
    }
    const int v = min_pow_;
    if (coeffs_.size() == 1 && is_exact()) {
      Laurent r = monomial(-v, coeffs_[0].inverse());
      return order ? r.truncated(*order) : r;
    }
    int t = is_exact() ? kExact : trunc_ - 2 * v;
    if (order) t = std::min(t, *order);
    if (t >= kExact) throw std::invalid_argument("inverse of an exact series needs a truncation order");
    const int n = t + v;  // number of correction terms beyond the leading one
    const SymRatFunc inv0 = coeffs_[0].inverse();
    std::vector<SymRatFunc> g(static_cast<size_t>(std::max(n + 1, 0)));
    for (int k = 0; k <= n; ++k) {
      if (k == 0) {
        g[0] = inv0;
        continue;
      }
      SymRatFunc acc;
      for (int j = 1; j <= k && j < static_cast<int>(coeffs_.size()); ++j) {
        if (coeffs_[static_cast<size_t>(j)].is_zero()) continue;
        acc += coeffs_[static_cast<size_t>(j)] * g[static_cast<size_t>(k - j)];
      }
      g[static_cast<size_t>(k)] = -(acc * inv0);
    }
    return Laurent(-v, std::move(g), t);
  }

  friend Laurent operator/(const Laurent& a, const Laurent& b) {
    if (b.is_zero() || (b.is_exact() && b.coeffs_.size() == 1)) return a * b.inverse();
    if (a.is_zero() && a.is_exact()) return a;
    if (!b.is_exact()) return a * b.inverse();
    if (a.is_exact()) throw std::invalid_argument("quotient of exact series needs a truncation order");
    // Inverse precision chosen so that only a's truncation limits the product.
    return a * b.inverse(a.trunc_ - b.min_pow_ - a.valuation());
  }
  Laurent& operator/=(const Laurent& o) { return *this = *this / o; }

  /// Quotient computed through the given order.
  static Laurent divide(const Laurent& a, const Laurent& b, int order) {
    const int va = a.is_zero() ? 0 : a.min_pow_;
    return (a * b.inverse(order - va)).truncated(order);
  }

  Laurent pow(unsigned e) const {
    Laurent result(1);
    Laurent base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  /// Term-by-term derivative; the truncation order drops by one.
  Laurent derivative() const {
    std::vector<SymRatFunc> c;
    c.reserve(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) {
      const long p = min_pow_ + static_cast<long>(k);
      c.push_back(coeffs_[k] * SymRatFunc(p));
    }
    return Laurent(min_pow_ - 1, std::move(c), is_exact() ? kExact : trunc_ - 1);
  }

  Laurent map_coeffs(const std::function<SymRatFunc(const SymRatFunc&)>& f) const {
    Laurent r = *this;
    for (auto& c : r.coeffs_) c = f(c);
    r.normalize();
    return r;
  }

  /// Equality of all coefficients through the given order.
  bool equal_through(const Laurent& o, int order) const {
    if (order > trunc_ || order > o.trunc_) return false;
    const int lo = std::min(valuation(), o.valuation());
    for (int p = lo; p <= order; ++p) {
      if (!(raw(p) == o.raw(p))) return false;
    }
    return true;
  }
  /// First power through the given order where the two series differ.
  std::optional<int> first_difference(const Laurent& o, int order) const {
    const int lo = std::min(valuation(), o.valuation());
    for (int p = lo; p <= order; ++p) {
      if (!(raw(p) == o.raw(p))) return p;
    }
    return std::nullopt;
  }

  /// Equality through the common truncation order.
  friend bool operator==(const Laurent& a, const Laurent& b) {
    const int t = std::min(a.trunc_, b.trunc_);
    if (t >= kExact) return a.min_pow_ == b.min_pow_ && a.coeffs_ == b.coeffs_;
    return a.equal_through(b, t);
  }

  std::string to_string(const VarNames& names = kSVars) const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
      const SymRatFunc& c = coeffs_[k];
      if (c.is_zero()) continue;
      const int p = min_pow_ + static_cast<int>(k);
      if (!first) os << " + ";
      first = false;
      const std::string cs = c.to_string(names);
      const bool simple = c.is_polynomial() && c.num().is_monomial();
      if (p == 0) {
        os << (simple ? cs : "(" + cs + ")");
        continue;
      }
      if (cs != "1") os << (simple ? cs : "(" + cs + ")") << "*";
      os << Var::name;
      if (p != 1) os << "^" << (p < 0 ? "(" + std::to_string(p) + ")" : std::to_string(p));
    }
    if (first) os << "0";
    if (!is_exact()) os << " + O(" << Var::name << "^" << trunc_ + 1 << ")";
    return os.str();
  }

 private:
  SymRatFunc raw(int p) const {
    if (coeffs_.empty() || p < min_pow_ || p > max_pow()) return {};
    return coeffs_[static_cast<size_t>(p - min_pow_)];
  }

  static int product_truncation(const Laurent& a, const Laurent& b) {
    const long long ta = a.trunc_;
    const long long tb = b.trunc_;
    const long long va = a.valuation();
    const long long vb = b.valuation();
    long long t = std::min(ta + vb, tb + va);
    if (a.is_exact() && b.is_exact()) t = kExact;
    return static_cast<int>(std::clamp<long long>(t, INT_MIN / 4, kExact));
  }

  void normalize() {
    if (trunc_ > kExact) trunc_ = kExact;
    // Drop coefficients beyond the truncation order, then strip zero ends.
    if (!coeffs_.empty() && max_pow() > trunc_) {
      const long keep = static_cast<long>(trunc_) - min_pow_ + 1;
      coeffs_.resize(static_cast<size_t>(std::max(keep, 0L)));
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      min_pow_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) min_pow_ = 0;
  }

  int min_pow_ = 0;
  std::vector<SymRatFunc> coeffs_;
  int trunc_ = kExact;
};

using ULaurent = Laurent<UVar>;
using QLaurent = Laurent<QVar>;

}  // namespace gwpairs
