#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace gwpairs {

/// Laurent polynomial in X^{1/2} with rational coefficients. Keys are twice
/// the exponent of X.
class XLaurent {
 public:
  using TermMap = std::map<int, mpq_class>;

  XLaurent() = default;
  XLaurent(long c) { add(0, c); }  // NOLINT(google-explicit-constructor)
  /// c * X^{half/2}.
  static XLaurent half_power(int half, mpq_class c = 1) {
    XLaurent r;
    r.add(half, std::move(c));
    return r;
  }
  /// c * X^k.
  static XLaurent power(int k, mpq_class c = 1) { return half_power(2 * k, std::move(c)); }
  /// xi = X^{1/2} - X^{-1/2}.
  static XLaurent xi() { return half_power(1) - half_power(-1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  XLaurent& operator+=(const XLaurent& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  XLaurent& operator-=(const XLaurent& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  XLaurent& operator*=(const mpq_class& c) {
    if (sgn(c) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend XLaurent operator+(XLaurent a, const XLaurent& b) { return a += b; }
  friend XLaurent operator-(XLaurent a, const XLaurent& b) { return a -= b; }
  friend XLaurent operator*(const XLaurent& a, const XLaurent& b) {
    XLaurent r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) r.add(ka + kb, ca * cb);
    }
    return r;
  }
  friend XLaurent operator*(XLaurent a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const XLaurent& a, const XLaurent& b) { return a.terms_ == b.terms_; }

  XLaurent pow(unsigned e) const {
    XLaurent r(1);
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, c] = *it;
      if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
      else if (sgn(c) < 0) out += "-";
      const mpq_class a = abs(c);
      const bool unit = (a == 1);
      if (k == 0) {
        out += a.get_str();
        continue;
      }
      if (!unit) out += a.get_str() + "*";
      out += "X";
      if (k != 2) out += "^(" + (k % 2 == 0 ? std::to_string(k / 2) : std::to_string(k) + "/2") + ")";
    }
    return out;
  }

 private:
  void add(int k, const mpq_class& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  TermMap terms_;
};

}  // namespace gwpairs
