#include "gwpairs/symfunc/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace gwpairs {

namespace {

struct CharacterMemo {
  std::shared_mutex mutex;
  std::map<std::pair<Partition, Partition>, long> values;
};

CharacterMemo& memo() {
  static CharacterMemo m;
  return m;
}

long mn_uncached(const Partition& sigma, const Partition& mu);

long mn_lookup(const Partition& sigma, const Partition& mu) {
  if (sigma.size() == 0) return 1;
  auto& m = memo();
  const auto key = std::make_pair(sigma, mu);
  {
    std::shared_lock lock(m.mutex);
    auto it = m.values.find(key);
    if (it != m.values.end()) return it->second;
  }
  const long v = mn_uncached(sigma, mu);
  std::unique_lock lock(m.mutex);
  m.values.emplace(key, v);
  return v;
}

/// Removes border strips of length mu_1 via the beta-set of sigma.
long mn_uncached(const Partition& sigma, const Partition& mu) {
  const int r = mu.largest();
  const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  const int l = sigma.length();
  std::vector<int> beta(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) beta[static_cast<size_t>(i)] = sigma[static_cast<size_t>(i)] + (l - 1 - i);

  long total = 0;
  for (int i = 0; i < l; ++i) {
    const int from = beta[static_cast<size_t>(i)];
    const int to = from - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    const long between = std::count_if(beta.begin(), beta.end(), [&](int b) { return b > to && b < from; });
    std::vector<int> nb = beta;
    nb[static_cast<size_t>(i)] = to;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts;
    for (int k = 0; k < l; ++k) {
      const int part = nb[static_cast<size_t>(k)] - (l - 1 - k);
      if (part > 0) parts.push_back(part);
    }
    const long sign = (between % 2 == 0) ? 1 : -1;
    total += sign * mn_lookup(Partition(std::move(parts)), rest);
  }
  return total;
}

}  // namespace

long mn_character(const Partition& sigma, const Partition& mu) {
  if (sigma.size() != mu.size()) {
    throw std::invalid_argument("character size mismatch: " + sigma.to_display() + " vs " + mu.to_display());
  }
  return mn_lookup(sigma, mu);
}

std::vector<int> contents(const Partition& sigma) {
  std::vector<int> c;
  c.reserve(static_cast<size_t>(sigma.size()));
  for (int row = 0; row < sigma.length(); ++row) {
    for (int col = 0; col < sigma[static_cast<size_t>(row)]; ++col) c.push_back(col - row);
  }
  return c;
}

void check_charsum_input(const Partition& mu, int e) {
  if (mu.multiplicity(1) != 0) throw std::invalid_argument("character sum needs mu without parts equal to 1");
  if (e < 0) throw std::invalid_argument("character sum needs e >= 0");
  if (mu.size() + e < 1) throw std::invalid_argument("character sum needs |mu| + e >= 1");
}

XLaurent charsum_lhs_x(const Partition& mu, int e) {
  return charsum_lhs<XLaurent>(mu, e, [](int c) { return XLaurent::power(c); });
}

XLaurent charsum_rhs(const Partition& mu, int e) {
  check_charsum_input(mu, e);
  const int n = mu.size() + e;
  const XLaurent xi = XLaurent::xi();
  XLaurent sum;
  for (int i = 0; i <= e; ++i) {
    const int xi_exp = mu.size() + 2 * e - 2 * i - 2;
    if (xi_exp < 0) continue;
    const mpz_class c = factorial(static_cast<unsigned>(i)) * binomial(e, i) * binomial(n, i);
    sum += xi.pow(static_cast<unsigned>(xi_exp)) * mpq_class(c);
  }
  for (int part : mu.parts()) sum = sum * (XLaurent::half_power(part) - XLaurent::half_power(-part));
  return sum;
}

namespace {

/// Lexicographic rank of a permutation of {0..n-1}.
size_t perm_rank(const std::vector<int>& p) {
  size_t rank = 0;
  const size_t n = p.size();
  for (size_t i = 0; i < n; ++i) {
    size_t smaller = 0;
    for (size_t j = i + 1; j < n; ++j) {
      if (p[j] < p[i]) ++smaller;
    }
    size_t f = 1;
    for (size_t k = 2; k <= n - 1 - i; ++k) f *= k;
    rank += smaller * f;
  }
  return rank;
}

}  // namespace

mpz_class jm_trace_oracle(const Partition& mu, int e, int r, int max_n) {
  if (e < 0 || r < 0) throw std::invalid_argument("jm_trace_oracle needs e >= 0 and r >= 0");
  const int n = mu.size() + e;
  if (n < 1) throw std::invalid_argument("jm_trace_oracle needs |mu| + e >= 1");
  if (n > max_n) throw std::invalid_argument("group order too large: n = " + std::to_string(n));

  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const size_t order = perms.size();

  // right[g][t] = index of g composed with the transposition t = (a b).
  std::vector<std::pair<int, int>> transpositions;
  for (int b = 1; b < n; ++b) {
    for (int a = 0; a < b; ++a) transpositions.emplace_back(a, b);
  }
  std::vector<std::vector<size_t>> right(order, std::vector<size_t>(transpositions.size()));
  for (size_t g = 0; g < order; ++g) {
    for (size_t t = 0; t < transpositions.size(); ++t) {
      std::vector<int> h = perms[g];
      std::swap(h[static_cast<size_t>(transpositions[t].first)], h[static_cast<size_t>(transpositions[t].second)]);
      right[g][t] = perm_rank(h);
    }
  }

  std::vector<mpz_class> total(order);
  for (int i = 0; i < n; ++i) {
    std::vector<mpz_class> power(order);
    power[0] = 1;  // rank 0 is the identity
    for (int step = 0; step < r; ++step) {
      std::vector<mpz_class> next(order);
      for (size_t g = 0; g < order; ++g) {
        if (power[g] == 0) continue;
        for (size_t t = 0; t < transpositions.size(); ++t) {
          if (transpositions[t].second != i) continue;
          next[right[g][t]] += power[g];
        }
      }
      power = std::move(next);
    }
    for (size_t g = 0; g < order; ++g) total[g] += power[g];
  }

  // tau: consecutive cycles of lengths mu_1, mu_2, ..., then fixed points.
  std::vector<int> tau(static_cast<size_t>(n));
  std::iota(tau.begin(), tau.end(), 0);
  int start = 0;
  for (int len : mu.parts()) {
    for (int k = 0; k < len; ++k) tau[static_cast<size_t>(start + k)] = start + (k + 1) % len;
    start += len;
  }
  return total[perm_rank(tau)] * mpz_class(factorial(static_cast<unsigned>(n)));
}

}  // namespace gwpairs
