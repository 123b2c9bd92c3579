#include "gwpairs/algebra/sym_poly.hpp"

#include "gwpairs/algebra/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gwpairs {

SymPoly::SymPoly(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace(Exponents{0, 0, 0}, std::move(c));
}

SymPoly SymPoly::var(int index) {
  if (index < 0 || index >= kNumVars) throw std::out_of_range("variable index out of range");
  Exponents e{0, 0, 0};
  e[index] = 1;
  return monomial(e);
}

SymPoly SymPoly::monomial(const Exponents& e, GaussianRational c) {
  SymPoly p;
  if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
  return p;
}

bool SymPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

bool SymPoly::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second.is_one(); }

GaussianRational SymPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string());
  return terms_.empty() ? GaussianRational(0) : terms_.begin()->second;
}

const Exponents& SymPoly::leading_exponents() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const GaussianRational& SymPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

int SymPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return e[0] + e[1] + e[2];
}

int SymPoly::degree_in(int v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

std::optional<int> SymPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = total_degree();
  for (const auto& [e, c] : terms_) {
    if (e[0] + e[1] + e[2] != d) return std::nullopt;
  }
  return d;
}

void SymPoly::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly SymPoly::operator-() const {
  SymPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return r;
}

SymPoly SymPoly::pow(unsigned e) const {
  SymPoly result(1);
  SymPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

std::optional<SymPoly> SymPoly::try_divide(const SymPoly& a, const SymPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (b.is_constant()) {
    SymPoly q = a;
    q *= b.constant_value().inverse();
    return q;
  }
  SymPoly q;
  SymPoly r = a;
  const Exponents& lb = b.leading_exponents();
  const GaussianRational lbinv = b.leading_coeff().inverse();
  while (!r.is_zero()) {
    const Exponents lr = r.leading_exponents();
    Exponents shift{};
    for (int k = 0; k < kNumVars; ++k) {
      shift[k] = lr[k] - lb[k];
      if (shift[k] < 0) return std::nullopt;
    }
    SymPoly t = monomial(shift, r.leading_coeff() * lbinv);
    q += t;
    r -= t * b;
  }
  return q;
}

SymPoly SymPoly::divide_exact(const SymPoly& a, const SymPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw std::domain_error("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return *std::move(q);
}

SymPoly SymPoly::monic() const {
  if (is_zero()) return *this;
  SymPoly r = *this;
  r *= leading_coeff().inverse();
  return r;
}

SymPoly SymPoly::permuted(const std::array<int, kNumVars>& perm) const {
  SymPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents ne{};
    for (int k = 0; k < kNumVars; ++k) ne[perm[k]] = e[k];
    r.add_term(ne, c);
  }
  return r;
}

SymPoly SymPoly::evaluate_var(int v, const GaussianRational& value) const {
  SymPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne[v] = 0;
    r.add_term(ne, c * value.pow(static_cast<unsigned>(e[v])));
  }
  return r;
}

SymPoly SymPoly::substitute_var(int v, const SymPoly& value) const {
  std::map<int, SymPoly> powers;
  SymPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne[v] = 0;
    auto it = powers.find(e[v]);
    if (it == powers.end()) it = powers.emplace(e[v], value.pow(static_cast<unsigned>(e[v]))).first;
    r += monomial(ne, c) * it->second;
  }
  return r;
}

std::string SymPoly::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool unit_monomial = (e == Exponents{0, 0, 0});
    std::string coeff = c.to_string();
    bool negative = false;
    if (c.is_real() && sgn(c.re()) < 0) {
      negative = true;
      coeff = (-c).to_string();
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (int k = 0; k < kNumVars; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (unit_monomial) {
      os << coeff;
    } else if (coeff == "1") {
      os << mono;
    } else {
      os << coeff << "*" << mono;
    }
  }
  return os.str();
}

namespace {

int main_variable(const SymPoly& a, const SymPoly& b) {
  for (int v = kNumVars - 1; v >= 0; --v) {
    if (a.depends_on(v) || b.depends_on(v)) return v;
  }
  return -1;
}

/// Coefficients of p viewed as a polynomial in variable v.
std::map<int, SymPoly> coefficients_in(const SymPoly& p, int v) {
  std::map<int, SymPoly> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents ne = e;
    ne[v] = 0;
    out[e[v]] += SymPoly::monomial(ne, c);
  }
  return out;
}

SymPoly content_in(const SymPoly& p, int v) {
  SymPoly g;
  for (const auto& [deg, coeff] : coefficients_in(p, v)) {
    g = gcd(g, coeff);
    if (g.is_one()) break;
  }
  return g;
}

SymPoly var_power(int v, int k) {
  Exponents e{0, 0, 0};
  e[v] = k;
  return SymPoly::monomial(e);
}

/// Sparse pseudo-remainder of a by b with respect to variable v. Steps whose
/// leading coefficient divides exactly are plain division steps, which keeps
/// the univariate case from multiplying through by constants.
SymPoly pseudo_remainder(SymPoly a, const SymPoly& b, int v) {
  const int db = b.degree_in(v);
  const SymPoly lb = coefficients_in(b, v).at(db);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    const SymPoly la = coefficients_in(a, v).at(da);
    if (auto q = SymPoly::try_divide(la, lb)) {
      a -= *q * var_power(v, da - db) * b;
    } else {
      a = lb * a - la * var_power(v, da - db) * b;
    }
  }
  return a;
}

SymPoly monomial_gcd(const SymPoly& mono, const SymPoly& other) {
  Exponents e = mono.leading_exponents();
  for (const auto& [oe, c] : other.terms()) {
    for (int k = 0; k < kNumVars; ++k) e[k] = std::min(e[k], oe[k]);
  }
  return SymPoly::monomial(e);
}

/// Image of p in Q[i][s_v] after fixing the other variables at point.
UPoly univariate_image(const SymPoly& p, int v, const std::array<GaussianRational, kNumVars>& point) {
  std::vector<GaussianRational> c(static_cast<size_t>(p.degree_in(v)) + 1);
  for (const auto& [e, coeff] : p.terms()) {
    GaussianRational t = coeff;
    for (int k = 0; k < kNumVars; ++k) {
      if (k != v && e[k] != 0) t *= point[k].pow(static_cast<unsigned>(e[k]));
    }
    c[static_cast<size_t>(e[v])] += t;
  }
  return UPoly(std::move(c));
}

/// Proves gcd(a, b) = 1 by specialization: if for every variable v some
/// evaluation of the other variables keeps both degrees in v and gives
/// coprime univariate images, the gcd cannot depend on v. A false return only
/// means the test was inconclusive.
bool provably_coprime(const SymPoly& a, const SymPoly& b) {
  static const long kPoints[][kNumVars] = {{3, 5, 7}, {-2, 11, 4}, {13, -6, 17}};
  for (int v = 0; v < kNumVars; ++v) {
    const int da = a.degree_in(v);
    const int db = b.degree_in(v);
    if (da == 0 || db == 0) continue;
    bool settled = false;
    for (const auto& pt : kPoints) {
      const std::array<GaussianRational, kNumVars> point{GaussianRational(pt[0]), GaussianRational(pt[1]),
                                                         GaussianRational(pt[2])};
      const UPoly ia = univariate_image(a, v, point);
      const UPoly ib = univariate_image(b, v, point);
      if (ia.degree() != da || ib.degree() != db) continue;
      settled = gcd(ia, ib).is_one();
      break;
    }
    if (!settled) return false;
  }
  return true;
}

}  // namespace

SymPoly gcd(const SymPoly& a, const SymPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return SymPoly(1);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a == b) return a.monic();
  if (provably_coprime(a, b)) return SymPoly(1);

  const int v = main_variable(a, b);
  if (!a.depends_on(v)) return gcd(a, content_in(b, v));
  if (!b.depends_on(v)) return gcd(content_in(a, v), b);

  const SymPoly ca = content_in(a, v);
  const SymPoly cb = content_in(b, v);
  SymPoly pa = SymPoly::divide_exact(a, ca).monic();
  SymPoly pb = SymPoly::divide_exact(b, cb).monic();
  const SymPoly c = gcd(ca, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

  while (true) {
    SymPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (!r.depends_on(v)) {
      pb = SymPoly(1);
      break;
    }
    pa = std::move(pb);
    pb = SymPoly::divide_exact(r, content_in(r, v)).monic();
  }
  return (c * pb).monic();
}

}  // namespace gwpairs
