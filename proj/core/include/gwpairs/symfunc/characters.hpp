#pragma once

#include "gwpairs/partitions/partition.hpp"
#include "gwpairs/symfunc/xlaurent.hpp"

#include <vector>

namespace gwpairs {

/// chi_sigma(mu) by the Murnaghan-Nakayama rule; memoized and thread-safe.
long mn_character(const Partition& sigma, const Partition& mu);

/// Contents column - row (0-based) of the boxes of sigma, row by row.
std::vector<int> contents(const Partition& sigma);

/// Sum over the boxes of sigma of weight(c(box)).
template <class R, class W>
R content_sum(const Partition& sigma, W&& weight) {
  R acc{};
  for (int c : contents(sigma)) acc += weight(c);
  return acc;
}

/// Throws unless mu has no part 1, e >= 0 and |mu| + e >= 1.
void check_charsum_input(const Partition& mu, int e);

/// sum_{sigma |- n} chi_sigma(1^n) chi_sigma(mu + 1^e) sum_box weight(c), with
/// n = |mu| + e. Throws when mu has a part equal to 1.
template <class R, class W>
R charsum_lhs(const Partition& mu, int e, W&& weight) {
  check_charsum_input(mu, e);
  const int n = mu.size() + e;
  const Partition rho = mu + Partition::ones(e);
  const Partition id = Partition::ones(n);
  R acc{};
  for (const Partition& sigma : partitions_of(n)) {
    const long coeff = mn_character(sigma, id) * mn_character(sigma, rho);
    if (coeff == 0) continue;
    acc += content_sum<R>(sigma, weight) * mpq_class(coeff);
  }
  return acc;
}

/// Left side with weights X^c.
XLaurent charsum_lhs_x(const Partition& mu, int e);
/// Closed right side; i-terms with negative xi exponent are omitted.
XLaurent charsum_rhs(const Partition& mu, int e);

/// Trace of tau^{-1}(L_1^r + ... + L_n^r) on the regular representation of
/// S_n, n = |mu| + e, with tau of cycle type mu + 1^e and L_i the
/// Jucys-Murphy elements, computed by multiplication in the group algebra.
mpz_class jm_trace_oracle(const Partition& mu, int e, int r, int max_n = 6);

}  // namespace gwpairs
