#pragma once

#include "gwpairs/cap/cap_series.hpp"
#include "gwpairs/corr/corr_matrix_k.hpp"

#include <map>
#include <string>
#include <vector>

namespace gwpairs {

/// Rows (1) and (2) as computed by hand in the degree one example.
CorrMatrixK tabulated_entries();

/// Adds rows (1)+alpha, (1,1)+alpha, ... up to size max_degree for every
/// stored row alpha, reading coefficients off add_part_one.
CorrMatrixK extend_by_part_one(const CorrMatrixK& K, int max_degree = 4);

struct StructureViolation {
  Partition alpha;
  Partition alpha_hat;
  std::string rule;  // diagonal, vanishing, rank_order, rank_tie, dstar_order, homogeneity, symmetry, polynomiality
  std::string detail;
};

/// Runs every structural constraint on each stored row against all columns
/// alpha_hat with |alpha_hat| <= |alpha|.
std::vector<StructureViolation> check_structure(const CorrMatrixK& K);

/// (iu)^k as an exact series.
ULaurent iu_power(int k);

/// Capped vertex data in degree d: rows are descendent partitions alpha,
/// columns relative conditions lambda.
struct VertexMatrixPair {
  int d = 0;
  std::map<std::pair<Partition, Partition>, CapSeriesP> c_p;
  std::map<std::pair<Partition, Partition>, ULaurent> c_gw;
};

/// Solves (-q)^{-|l|} C_P(alpha, l) = (-iu)^{|l|+l(l)} sum_h K_{alpha,h} C_GW(h, l)
/// for the unknown K_{alpha, h} through u^order. Columns h range over the
/// rows of c_gw; entries in `known` are moved to the right side. Throws
/// std::domain_error for a singular leading matrix or inconsistent data.
std::map<Partition, ULaurent> solve_row(const Partition& alpha, const VertexMatrixPair& data, int order,
                                        const std::map<Partition, ULaurent>& known = {});

/// The degree one data of the worked example: d = 1 entries and the (2),(1) column.
VertexMatrixPair degree_one_example_data(int order);

}  // namespace gwpairs
