#pragma once

#include "report.hpp"

#include "gwpairs/cap/cap_series.hpp"
#include "gwpairs/partitions/partition.hpp"

#include <optional>

namespace gwpairs::cli {

Report verify_charsum(int max_n);
Report verify_jm(int max_n, int max_r);
Report verify_maxdeg_cap(int max_size);
Report verify_cap_tube(int max_size, TubeConvention tube);
Report verify_degree_one(int order);
Report verify_fundamental(int max_k);
/// A single sigma, or every sigma with l <= max_length and |sigma| <= max_size.
Report verify_basid(const std::optional<Partition>& sigma, int max_size, int max_length);
Report verify_k_structure(int max_degree);
Report verify_ktilde(int max_degree);
Report verify_schur(int max_d, int max_N);
Report verify_vandermonde(int max_d);
Report verify_series(int order);

/// Every suite at its default depth, run on the worker pool.
Report verify_all(int order);

}  // namespace gwpairs::cli
