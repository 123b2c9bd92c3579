#include "gwpairs/corr/corr_matrix_k.hpp"

#include <stdexcept>

namespace gwpairs {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::tabulated:
      return "tabulated";
    case Provenance::derived_rule:
      return "derived-rule";
    case Provenance::solved:
      return "solved";
  }
  return "unknown";
}

Provenance parse_provenance(const std::string& s) {
  if (s == "tabulated") return Provenance::tabulated;
  if (s == "derived-rule") return Provenance::derived_rule;
  if (s == "solved") return Provenance::solved;
  throw std::invalid_argument("unknown provenance '" + s + "'");
}

const CorrMatrixK::Row& CorrMatrixK::row(const Partition& alpha) const {
  auto it = rows_.find(alpha);
  if (it == rows_.end()) throw std::out_of_range("K has no row for " + alpha.to_display());
  return it->second;
}

void CorrMatrixK::set_entry(const Partition& alpha, const Partition& alpha_hat, ULaurent coeff, Provenance provenance) {
  if (alpha_hat.size() > alpha.size()) {
    if (!coeff.is_zero()) {
      throw std::invalid_argument("K entry " + alpha.to_display() + "," + alpha_hat.to_display() +
                                  " must vanish since |alpha| < |alpha_hat|");
    }
    rows_[alpha];
    return;
  }
  rows_[alpha][alpha_hat] = KEntry{std::move(coeff), provenance};
}

ULaurent CorrMatrixK::entry(const Partition& alpha, const Partition& alpha_hat) const {
  if (alpha_hat.size() > alpha.size()) return ULaurent::zero();
  const Row& r = row(alpha);
  auto it = r.find(alpha_hat);
  return it == r.end() ? ULaurent::zero() : it->second.coeff;
}

std::optional<Provenance> CorrMatrixK::provenance(const Partition& alpha, const Partition& alpha_hat) const {
  auto rit = rows_.find(alpha);
  if (rit == rows_.end()) return std::nullopt;
  auto it = rit->second.find(alpha_hat);
  if (it == rit->second.end()) return std::nullopt;
  return it->second.provenance;
}

int CorrMatrixK::max_degree() const {
  int d = 0;
  for (const auto& [alpha, r] : rows_) d = std::max(d, alpha.size());
  return d;
}

}  // namespace gwpairs
