#pragma once

#include "gwpairs/algebra/laurent.hpp"
#include "gwpairs/corr/corr_matrix_k.hpp"
#include "gwpairs/partitions/partition.hpp"

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gwpairs {

/// Point tags for the two-point algebra; plain monomials use kBullet.
inline constexpr int kBullet = 0;
inline constexpr int kStar = 1;

/// Product of descendent symbols tau_k, each carrying a point tag. Factors are
/// kept sorted as (tag, k) pairs.
class TauMonomial {
 public:
  TauMonomial() = default;
  explicit TauMonomial(std::vector<std::pair<int, int>> factors);
  /// tau_{a_1 - 1} ... tau_{a_l - 1} at the given tag.
  static TauMonomial from_partition(const Partition& alpha, int tag = kBullet);
  static TauMonomial tau(int k, int tag = kBullet) { return TauMonomial({{tag, k}}); }

  const std::vector<std::pair<int, int>>& factors() const { return factors_; }
  int degree() const { return static_cast<int>(factors_.size()); }
  /// The partition (k_1 + 1, ..., k_l + 1) of the factors with the given tag.
  Partition partition(int tag = kBullet) const;
  bool has_tag(int tag) const;

  friend TauMonomial operator*(const TauMonomial& a, const TauMonomial& b);
  friend auto operator<=>(const TauMonomial&, const TauMonomial&) = default;
  friend bool operator==(const TauMonomial&, const TauMonomial&) = default;

  std::string to_string() const;

 private:
  std::vector<std::pair<int, int>> factors_;
};

/// Polynomial in descendent symbols with ULaurent coefficients; zero
/// coefficients are never stored.
class DescendentPoly {
 public:
  using TermMap = std::map<TauMonomial, ULaurent>;

  DescendentPoly() = default;
  DescendentPoly(ULaurent c);  // NOLINT(google-explicit-constructor)
  DescendentPoly(long c) : DescendentPoly(ULaurent(c)) {}  // NOLINT(google-explicit-constructor)
  static DescendentPoly monomial(TauMonomial m, ULaurent c = ULaurent(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ULaurent coeff(const TauMonomial& m) const;
  void add_term(const TauMonomial& m, const ULaurent& c);

  DescendentPoly operator-() const;
  DescendentPoly& operator+=(const DescendentPoly& o);
  DescendentPoly& operator-=(const DescendentPoly& o) { return *this += -o; }
  friend DescendentPoly operator+(DescendentPoly a, const DescendentPoly& b) { return a += b; }
  friend DescendentPoly operator-(DescendentPoly a, const DescendentPoly& b) { return a -= b; }
  friend DescendentPoly operator*(const DescendentPoly& a, const DescendentPoly& b);
  friend DescendentPoly operator*(const ULaurent& c, const DescendentPoly& p);
  friend bool operator==(const DescendentPoly& a, const DescendentPoly& b) { return a.terms_ == b.terms_; }

  DescendentPoly map_coeffs(const std::function<ULaurent(const ULaurent&)>& f) const;
  /// Drops every monomial containing a factor with the given tag.
  DescendentPoly without_tag(int tag) const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Phi(tau_{k_1} ... tau_{k_r}) = sum_j tau_{k_j - 1} prod_{i != j} tau_{k_i}, omitting k_j = 0.
DescendentPoly phi(const DescendentPoly& p);

/// tau-hat_alpha = sum K_{alpha, alpha_hat} tau_alpha_hat at the given tag; 1 for the empty partition.
DescendentPoly hat(const Partition& alpha, const CorrMatrixK& K, int tag = kBullet);

/// tau-hat_{(1)+alpha} = tau_0 tau-hat_alpha - s1 s2 s3 Phi(tau-hat_alpha).
DescendentPoly add_part_one(const Partition& alpha, const CorrMatrixK& K);

/// sum over set partitions P of (-1)^{|P|-1} (|P|-1)! prod_{S in P} tau-hat_{sigma_S}.
DescendentPoly tilde(const Partition& sigma, const CorrMatrixK& K, int tag = kBullet);

/// Coefficient of tau_{sigma_hat} in tilde(sigma) divided by (s1 s2 s3)^{l(sigma)-1},
/// in the variables s1, s2, s3. Throws std::domain_error when the division
/// leaves a remainder.
ULaurent ktilde_s(const Partition& sigma, const Partition& sigma_hat, const CorrMatrixK& K);
/// ktilde_s rewritten in the elementary symmetric c1, c2, c3 (print with kCVars).
/// Throws std::domain_error when a coefficient is not symmetric.
ULaurent ktilde(const Partition& sigma, const Partition& sigma_hat, const CorrMatrixK& K);

/// sum over set partitions of {1..k} of prod_S (-1)^{|S|-1} (|S|-1)!.
mpz_class fundamental_identity(int k);

enum class CheckStatus { passed, failed, skipped };
std::string to_string(CheckStatus s);

struct BasidReport {
  Partition sigma;
  /// Both sides expanded in independent tau-hat symbols indexed by subsets.
  bool formal = false;
  /// The star := 0 specialization: sum_Q prod tilde = hat, formally.
  bool inversion_formal = false;
  /// The same two checks with tau-hat replaced by K rows.
  CheckStatus concrete = CheckStatus::skipped;
  CheckStatus inversion_concrete = CheckStatus::skipped;
  std::string note;
};

/// The two-point identity behind the divisibility of tilde(sigma).
BasidReport basid_check(const Partition& sigma, const CorrMatrixK& K, int max_length = 3);

/// Free graded commutative ring on named even classes. Products of basis
/// monomials are formal unless a rule reduces a pair of generators; classes
/// above the real dimension bound vanish.
class SymbolicRing {
 public:
  /// Basis monomial: sorted generator names; the empty key is the unit.
  using Key = std::vector<std::string>;
  using Element = std::map<Key, GaussianRational>;

  explicit SymbolicRing(int real_dimension = 6) : real_dimension_(real_dimension) {}

  /// Declares a generator of the given real degree; odd degrees are rejected.
  void add_class(const std::string& name, int degree);
  /// a * b := value for generators a and b.
  void set_product(const std::string& a, const std::string& b, Element value);
  /// Chern classes c1, c2, c3 of the tangent bundle.
  void set_chern(std::array<Element, 3> chern) { chern_ = std::move(chern); }

  Element generator(const std::string& name) const;
  static Element unit() { return {{Key{}, GaussianRational(1)}}; }
  Element multiply(const Element& a, const Element& b) const;
  Element scale(const Element& a, const GaussianRational& c) const;
  /// Evaluates a polynomial in c1, c2, c3 at the stored Chern classes.
  Element evaluate_chern_polynomial(const SymPoly& p) const;
  int degree(const Key& k) const;

  static std::string to_string(const Element& e);

 private:
  Element multiply_keys(const Key& a, const Key& b) const;
  Element reduce(const Key& k, int depth) const;

  int real_dimension_;
  std::map<std::string, int> degrees_;
  std::map<std::pair<std::string, std::string>, Element> products_;
  std::array<Element, 3> chern_{};
};

/// One factor tau_{alpha_hat}(argument) with a u-series argument of ring elements.
struct BarFactor {
  Partition alpha_hat;
  std::map<int, SymbolicRing::Element> argument;  // u-power -> class
};
using BarTerm = std::vector<BarFactor>;

/// sum_P prod_{S in P} sum_{alpha_hat} tau_{alpha_hat}(K-tilde_{alpha_S, alpha_hat} gamma_S),
/// expanded into products of factors; the diagonal splitting of each
/// tau_{alpha_hat}(.) is left symbolic.
std::vector<BarTerm> bar_transform(const Partition& alpha, const std::vector<SymbolicRing::Element>& gammas,
                                   const SymbolicRing& ring, const CorrMatrixK& K);
std::string to_string(const BarTerm& term);

}  // namespace gwpairs
