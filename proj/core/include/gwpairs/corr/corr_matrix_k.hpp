#pragma once

#include "gwpairs/algebra/laurent.hpp"
#include "gwpairs/partitions/partition.hpp"

#include <map>
#include <optional>
#include <string>

namespace gwpairs {

enum class Provenance { tabulated, derived_rule, solved };

std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& s);

struct KEntry {
  ULaurent coeff;
  Provenance provenance = Provenance::tabulated;
};

/// Sparse correspondence matrix K_{alpha, alpha_hat} with one provenance tag
/// per stored entry. A stored row is complete: absent columns are zero.
class CorrMatrixK {
 public:
  using Row = std::map<Partition, KEntry>;

  bool has_row(const Partition& alpha) const { return rows_.count(alpha) != 0; }
  const std::map<Partition, Row>& rows() const { return rows_; }
  const Row& row(const Partition& alpha) const;

  /// Declares a row (possibly empty) so that absent columns read as zero.
  void ensure_row(const Partition& alpha) { rows_[alpha]; }
  void set_entry(const Partition& alpha, const Partition& alpha_hat, ULaurent coeff, Provenance provenance);

  /// K_{alpha, alpha_hat}; zero when |alpha| < |alpha_hat| or the column is
  /// absent from a stored row. Throws std::out_of_range for a missing row.
  ULaurent entry(const Partition& alpha, const Partition& alpha_hat) const;
  std::optional<Provenance> provenance(const Partition& alpha, const Partition& alpha_hat) const;

  int max_degree() const;

 private:
  std::map<Partition, Row> rows_;
};

}  // namespace gwpairs
