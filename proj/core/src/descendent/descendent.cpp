#include "gwpairs/descendent/descendent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gwpairs {

// TauMonomial

TauMonomial::TauMonomial(std::vector<std::pair<int, int>> factors) : factors_(std::move(factors)) {
  for (const auto& [tag, k] : factors_) {
    if (k < 0) throw std::invalid_argument("descendent index must be nonnegative");
    if (tag != kBullet && tag != kStar) throw std::invalid_argument("unknown point tag " + std::to_string(tag));
  }
  std::sort(factors_.begin(), factors_.end());
}

TauMonomial TauMonomial::from_partition(const Partition& alpha, int tag) {
  std::vector<std::pair<int, int>> f;
  for (int a : alpha.parts()) f.emplace_back(tag, a - 1);
  return TauMonomial(std::move(f));
}

Partition TauMonomial::partition(int tag) const {
  std::vector<int> parts;
  for (const auto& [t, k] : factors_) {
    if (t == tag) parts.push_back(k + 1);
  }
  return Partition(std::move(parts));
}

bool TauMonomial::has_tag(int tag) const {
  return std::any_of(factors_.begin(), factors_.end(), [tag](const auto& f) { return f.first == tag; });
}

TauMonomial operator*(const TauMonomial& a, const TauMonomial& b) {
  std::vector<std::pair<int, int>> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return TauMonomial(std::move(f));
}

std::string TauMonomial::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size();) {
    size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (i != 0) os << "*";
    os << "tau_" << factors_[i].second;
    if (factors_[i].first == kStar) os << "[star]";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

// DescendentPoly

DescendentPoly::DescendentPoly(ULaurent c) { add_term(TauMonomial(), c); }

DescendentPoly DescendentPoly::monomial(TauMonomial m, ULaurent c) {
  DescendentPoly p;
  p.add_term(m, c);
  return p;
}

ULaurent DescendentPoly::coeff(const TauMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ULaurent::zero() : it->second;
}

void DescendentPoly::add_term(const TauMonomial& m, const ULaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DescendentPoly DescendentPoly::operator-() const {
  DescendentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

DescendentPoly& DescendentPoly::operator+=(const DescendentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DescendentPoly operator*(const DescendentPoly& a, const DescendentPoly& b) {
  DescendentPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

DescendentPoly operator*(const ULaurent& c, const DescendentPoly& p) {
  DescendentPoly r;
  for (const auto& [m, v] : p.terms_) r.add_term(m, c * v);
  return r;
}

DescendentPoly DescendentPoly::map_coeffs(const std::function<ULaurent(const ULaurent&)>& f) const {
  DescendentPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m, f(c));
  return r;
}

DescendentPoly DescendentPoly::without_tag(int tag) const {
  DescendentPoly r;
  for (const auto& [m, c] : terms_) {
    if (!m.has_tag(tag)) r.add_term(m, c);
  }
  return r;
}

std::string DescendentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const std::string c = it->second.to_string();
    if (it->first.degree() == 0) {
      out += "(" + c + ")";
    } else if (c == "1") {
      out += it->first.to_string();
    } else {
      out += "(" + c + ")*" + it->first.to_string();
    }
  }
  return out;
}

// Transforms

DescendentPoly phi(const DescendentPoly& p) {
  DescendentPoly r;
  for (const auto& [m, c] : p.terms()) {
    const auto& f = m.factors();
    for (size_t j = 0; j < f.size(); ++j) {
      if (f[j].second == 0) continue;
      auto g = f;
      g[j].second -= 1;
      r.add_term(TauMonomial(std::move(g)), c);
    }
  }
  return r;
}

DescendentPoly hat(const Partition& alpha, const CorrMatrixK& K, int tag) {
  if (alpha.size() == 0) return DescendentPoly(1);
  if (!K.has_row(alpha)) {
    throw std::out_of_range("K has no row for " + alpha.to_display() + "; extend K before taking hats");
  }
  DescendentPoly r;
  for (const auto& [alpha_hat, e] : K.row(alpha)) r.add_term(TauMonomial::from_partition(alpha_hat, tag), e.coeff);
  return r;
}

DescendentPoly add_part_one(const Partition& alpha, const CorrMatrixK& K) {
  const DescendentPoly h = hat(alpha, K);
  const ULaurent s123(SymRatFunc::s1() * SymRatFunc::s2() * SymRatFunc::s3());
  return DescendentPoly::monomial(TauMonomial::tau(0)) * h - s123 * phi(h);
}

namespace {

/// (-1)^{n-1} (n-1)!
mpz_class mobius_weight(size_t n) {
  mpz_class w = factorial(static_cast<unsigned>(n - 1));
  return (n % 2 == 0) ? mpz_class(-w) : w;
}

Partition select_block(const Partition& sigma, const std::vector<int>& block) { return sigma.select(block); }

}  // namespace

DescendentPoly tilde(const Partition& sigma, const CorrMatrixK& K, int tag) {
  if (sigma.size() == 0) throw std::invalid_argument("tilde needs a nonempty partition");
  DescendentPoly r;
  for (const SetPartition& P : set_partitions(sigma.length())) {
    DescendentPoly prod(1);
    for (const auto& block : P.blocks) prod = prod * hat(select_block(sigma, block), K, tag);
    r += ULaurent(GaussianRational(mobius_weight(P.blocks.size()))) * prod;
  }
  return r;
}

ULaurent ktilde_s(const Partition& sigma, const Partition& sigma_hat, const CorrMatrixK& K) {
  const ULaurent c = tilde(sigma, K).coeff(TauMonomial::from_partition(sigma_hat));
  const SymPoly divisor = (SymPoly::var(0) * SymPoly::var(1) * SymPoly::var(2)).pow(static_cast<unsigned>(sigma.length() - 1));
  return c.map_coeffs([&](const SymRatFunc& x) {
    if (!x.is_polynomial()) {
      throw std::domain_error("K-tilde coefficient for " + sigma.to_display() + "," + sigma_hat.to_display() +
                              " is not polynomial: " + x.to_string());
    }
    auto q = SymPoly::try_divide(x.num(), divisor);
    if (!q) {
      throw std::domain_error("coefficient of tau" + sigma_hat.to_display() + " in tilde" + sigma.to_display() +
                              " is not divisible by (s1 s2 s3)^" + std::to_string(sigma.length() - 1) + ": " +
                              x.to_string());
    }
    return SymRatFunc(*q);
  });
}

ULaurent ktilde(const Partition& sigma, const Partition& sigma_hat, const CorrMatrixK& K) {
  return ktilde_s(sigma, sigma_hat, K).map_coeffs([&](const SymRatFunc& x) {
    auto c = to_elementary_symmetric(x.num());
    if (!c) {
      throw std::domain_error("K-tilde coefficient for " + sigma.to_display() + "," + sigma_hat.to_display() +
                              " is not symmetric: " + x.to_string());
    }
    return SymRatFunc(*c);
  });
}

mpz_class fundamental_identity(int k) {
  if (k < 0) throw std::invalid_argument("fundamental_identity needs k >= 0");
  mpz_class sum = 0;
  for (const SetPartition& P : set_partitions(k)) {
    mpz_class term = 1;
    for (const auto& block : P.blocks) term *= mobius_weight(block.size());
    sum += term;
  }
  return sum;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed:
      return "passed";
    case CheckStatus::failed:
      return "failed";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

namespace {

/// Polynomials in independent symbols H(tag, S) for subsets S of {0..l-1}.
using FormalMonomial = std::vector<std::pair<int, unsigned>>;
using FormalPoly = std::map<FormalMonomial, mpz_class>;

FormalPoly formal_mul(const FormalPoly& a, const FormalPoly& b) {
  FormalPoly r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      FormalMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      r[m] += ca * cb;
    }
  }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

void formal_add(FormalPoly& a, const FormalPoly& b, const mpz_class& scale = 1) {
  for (const auto& [m, c] : b) a[m] += scale * c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
}

unsigned mask_of(const std::vector<int>& elems) {
  unsigned m = 0;
  for (int e : elems) m |= 1U << static_cast<unsigned>(e);
  return m;
}

/// Formal tilde over the elements of `elems`, each block becoming H(tag, block).
FormalPoly formal_tilde(const std::vector<int>& elems, int tag) {
  FormalPoly r;
  for (const SetPartition& P : set_partitions(static_cast<int>(elems.size()))) {
    FormalMonomial m;
    for (const auto& block : P.blocks) {
      std::vector<int> mapped;
      for (int b : block) mapped.push_back(elems[static_cast<size_t>(b)]);
      m.emplace_back(tag, mask_of(mapped));
    }
    std::sort(m.begin(), m.end());
    r[m] += mobius_weight(P.blocks.size());
  }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

std::vector<int> elements_of(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask >> static_cast<unsigned>(i); ++i) {
    if (mask & (1U << static_cast<unsigned>(i))) out.push_back(i);
  }
  return out;
}

}  // namespace

BasidReport basid_check(const Partition& sigma, const CorrMatrixK& K, int max_length) {
  if (sigma.size() == 0) throw std::invalid_argument("basid_check needs a nonempty partition");
  const int l = sigma.length();
  if (l > max_length) {
    throw std::invalid_argument("basid_check: length " + std::to_string(l) + " exceeds the bound " +
                                std::to_string(max_length));
  }
  BasidReport rep;
  rep.sigma = sigma;
  const auto partitions = set_partitions(l);

  // Formal sides.
  FormalPoly lhs;
  FormalPoly inversion;
  for (const SetPartition& Q : partitions) {
    FormalPoly term = formal_tilde(Q.blocks[0], kBullet);
    FormalPoly plain = term;
    for (size_t j = 1; j < Q.blocks.size(); ++j) {
      FormalPoly factor = formal_tilde(Q.blocks[j], kBullet);
      formal_add(factor, formal_tilde(Q.blocks[j], kStar), Q.blocks[j].size() % 2 == 0 ? 1 : -1);
      term = formal_mul(term, factor);
      plain = formal_mul(plain, formal_tilde(Q.blocks[j], kBullet));
    }
    formal_add(lhs, term);
    formal_add(inversion, plain);
  }
  FormalPoly rhs;
  const unsigned full = (1U << static_cast<unsigned>(l)) - 1;
  for (unsigned b = 0; b <= full; b += 2) {  // subsets of {1..l-1}; element 0 stays at the bullet
    const unsigned a = full & ~b;
    FormalMonomial m{{kBullet, a}};
    if (b != 0) m.emplace_back(kStar, b);
    std::sort(m.begin(), m.end());
    rhs[m] += (__builtin_popcount(b) % 2 == 0) ? 1 : -1;
  }
  rep.formal = (lhs == rhs);
  rep.inversion_formal = (inversion == FormalPoly{{FormalMonomial{{kBullet, full}}, mpz_class(1)}});

  // Concrete sides need a K row for every subpartition.
  std::vector<std::string> missing;
  for (unsigned s = 1; s <= full; ++s) {
    const Partition sub = sigma.select(elements_of(s));
    if (!K.has_row(sub)) {
      const std::string d = sub.to_display();
      if (std::find(missing.begin(), missing.end(), d) == missing.end()) missing.push_back(d);
    }
  }
  if (!missing.empty()) {
    rep.note = "K rows unavailable:";
    for (const auto& d : missing) rep.note += " " + d;
    return rep;
  }

  auto tilde_of = [&](const std::vector<int>& block, int tag) { return tilde(sigma.select(block), K, tag); };
  DescendentPoly clhs;
  DescendentPoly cinv;
  for (const SetPartition& Q : partitions) {
    DescendentPoly term = tilde_of(Q.blocks[0], kBullet);
    DescendentPoly plain = term;
    for (size_t j = 1; j < Q.blocks.size(); ++j) {
      const DescendentPoly tb = tilde_of(Q.blocks[j], kBullet);
      const DescendentPoly ts = tilde_of(Q.blocks[j], kStar);
      term = term * (Q.blocks[j].size() % 2 == 0 ? tb + ts : tb - ts);
      plain = plain * tb;
    }
    clhs += term;
    cinv += plain;
  }
  DescendentPoly crhs;
  for (unsigned b = 0; b <= full; b += 2) {
    const unsigned a = full & ~b;
    DescendentPoly term = hat(sigma.select(elements_of(a)), K, kBullet) * hat(sigma.select(elements_of(b)), K, kStar);
    crhs += (__builtin_popcount(b) % 2 == 0) ? term : -term;
  }
  rep.concrete = (clhs == crhs) ? CheckStatus::passed : CheckStatus::failed;
  rep.inversion_concrete = (cinv == hat(sigma, K)) ? CheckStatus::passed : CheckStatus::failed;
  return rep;
}

// SymbolicRing

void SymbolicRing::add_class(const std::string& name, int degree) {
  if (degree < 0) throw std::invalid_argument("class degree must be nonnegative");
  if (degree % 2 != 0) throw std::invalid_argument("odd cohomology class '" + name + "' is not supported");
  if (name.empty()) throw std::invalid_argument("class name must be nonempty");
  degrees_[name] = degree;
}

void SymbolicRing::set_product(const std::string& a, const std::string& b, Element value) {
  if (!degrees_.count(a) || !degrees_.count(b)) throw std::invalid_argument("product rule on undeclared classes");
  products_[std::minmax(a, b)] = std::move(value);
}

SymbolicRing::Element SymbolicRing::generator(const std::string& name) const {
  if (!degrees_.count(name)) throw std::invalid_argument("unknown class '" + name + "'");
  return {{Key{name}, GaussianRational(1)}};
}

int SymbolicRing::degree(const Key& k) const {
  int d = 0;
  for (const auto& g : k) d += degrees_.at(g);
  return d;
}

SymbolicRing::Element SymbolicRing::reduce(const Key& k, int depth) const {
  if (depth > 64) throw std::runtime_error("product rules of the symbolic ring do not terminate");
  if (degree(k) > real_dimension_) return {};
  for (size_t i = 0; i < k.size(); ++i) {
    for (size_t j = i + 1; j < k.size(); ++j) {
      auto it = products_.find(std::minmax(k[i], k[j]));
      if (it == products_.end()) continue;
      Key rest;
      for (size_t t = 0; t < k.size(); ++t) {
        if (t != i && t != j) rest.push_back(k[t]);
      }
      Element out;
      for (const auto& [rk, rc] : it->second) {
        Key merged = rest;
        merged.insert(merged.end(), rk.begin(), rk.end());
        std::sort(merged.begin(), merged.end());
        for (const auto& [fk, fc] : reduce(merged, depth + 1)) out[fk] += rc * fc;
      }
      std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
      return out;
    }
  }
  return {{k, GaussianRational(1)}};
}

SymbolicRing::Element SymbolicRing::multiply_keys(const Key& a, const Key& b) const {
  Key merged = a;
  merged.insert(merged.end(), b.begin(), b.end());
  std::sort(merged.begin(), merged.end());
  return reduce(merged, 0);
}

SymbolicRing::Element SymbolicRing::multiply(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      for (const auto& [k, c] : multiply_keys(ka, kb)) out[k] += ca * cb * c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

SymbolicRing::Element SymbolicRing::scale(const Element& a, const GaussianRational& c) const {
  Element out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : a) out[k] = v * c;
  return out;
}

SymbolicRing::Element SymbolicRing::evaluate_chern_polynomial(const SymPoly& p) const {
  Element out;
  for (const auto& [e, c] : p.terms()) {
    Element term = unit();
    for (int v = 0; v < kNumVars; ++v) {
      for (int k = 0; k < e[static_cast<size_t>(v)]; ++k) term = multiply(term, chern_[static_cast<size_t>(v)]);
    }
    for (const auto& [k, x] : scale(term, c)) out[k] += x;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::string SymbolicRing::to_string(const Element& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : e) {
    if (!out.empty()) out += " + ";
    std::string key;
    for (const auto& g : k) key += (key.empty() ? "" : "*") + g;
    if (key.empty()) {
      out += c.to_string();
    } else if (c == GaussianRational(1)) {
      out += key;
    } else {
      out += "(" + c.to_string() + ")*" + key;
    }
  }
  return out;
}

std::vector<BarTerm> bar_transform(const Partition& alpha, const std::vector<SymbolicRing::Element>& gammas,
                                   const SymbolicRing& ring, const CorrMatrixK& K) {
  if (alpha.size() == 0) throw std::invalid_argument("bar_transform needs a nonempty partition");
  if (static_cast<int>(gammas.size()) != alpha.length()) {
    throw std::invalid_argument("bar_transform needs one class per part of alpha");
  }
  std::map<std::pair<Partition, Partition>, ULaurent> kt_cache;
  auto kt = [&](const Partition& s, const Partition& h) -> const ULaurent& {
    auto key = std::make_pair(s, h);
    auto it = kt_cache.find(key);
    if (it == kt_cache.end()) it = kt_cache.emplace(key, ktilde(s, h, K)).first;
    return it->second;
  };

  std::vector<BarTerm> out;
  for (const SetPartition& P : set_partitions(alpha.length())) {
    std::vector<std::vector<BarFactor>> choices;
    for (const auto& block : P.blocks) {
      const Partition sub = alpha.select(block);
      SymbolicRing::Element gamma_s = SymbolicRing::unit();
      for (int i : block) gamma_s = ring.multiply(gamma_s, gammas[static_cast<size_t>(i)]);
      std::vector<BarFactor> options;
      for (const auto& h : partitions_up_to(sub.size())) {
        const ULaurent& c = kt(sub, h);
        BarFactor f{h, {}};
        for (size_t k = 0; k < c.coeffs().size(); ++k) {
          const SymRatFunc& x = c.coeffs()[k];
          if (x.is_zero()) continue;
          auto arg = ring.multiply(ring.evaluate_chern_polynomial(x.num()), gamma_s);
          if (!arg.empty()) f.argument[c.min_pow() + static_cast<int>(k)] = std::move(arg);
        }
        if (!f.argument.empty()) options.push_back(std::move(f));
      }
      choices.push_back(std::move(options));
    }
    // Cartesian product of the per-block choices.
    std::vector<BarTerm> partial{BarTerm{}};
    for (const auto& options : choices) {
      std::vector<BarTerm> next;
      for (const auto& t : partial) {
        for (const auto& f : options) {
          BarTerm n = t;
          n.push_back(f);
          next.push_back(std::move(n));
        }
      }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return out;
}

std::string to_string(const BarTerm& term) {
  std::string out;
  for (const auto& f : term) {
    if (!out.empty()) out += " * ";
    out += "tau" + f.alpha_hat.to_display() + "(";
    bool first = true;
    for (const auto& [p, e] : f.argument) {
      if (!first) out += " + ";
      first = false;
      out += "(" + SymbolicRing::to_string(e) + ")";
      if (p != 0) out += "*u^" + (p < 0 ? "(" + std::to_string(p) + ")" : std::to_string(p));
    }
    out += ")";
  }
  return out;
}

}  // namespace gwpairs
