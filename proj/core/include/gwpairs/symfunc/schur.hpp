#pragma once

#include "gwpairs/algebra/matrix.hpp"
#include "gwpairs/algebra/q_rat_func.hpp"
#include "gwpairs/partitions/partition.hpp"

#include <vector>

namespace gwpairs {

/// Rational function in q^{1/2} (a QRatFunc with kappa = 2).
using QHalfRat = QRatFunc;

/// h_k at q^rho = (q^{-1/2}, q^{-3/2}, ...): q^{-k/2} / prod_{j=1..k} (1 - q^{-j});
/// 1 for k = 0 and 0 for k < 0.
QHalfRat h_qrho(int k);

/// Jacobi-Trudi determinant det(h_{lambda_i - mu_j + j - i}) at q^rho; 0 unless mu is inside lambda.
QHalfRat skew_schur_qrho(const Partition& lambda, const Partition& mu);

/// Partitions of size 0..d, the empty partition first.
std::vector<Partition> partitions_with_empty(int d);

/// eta >= eta~ in the order nu_- containing eta~_-.
bool eta_order_geq(const Partition& nu, const Partition& eta);

/// [s_{nu^+/eta}(q^rho)] with rows nu and columns eta over partitions_with_empty(d).
Matrix<QHalfRat> skew_plus_matrix(int d, int N);

/// Rows delta |- d, columns nu = eta^+ for |eta| <= d; entries
/// sum_{eta'} s_{delta^t/eta'}(q^rho) s_{nu/eta'}(q^rho).
Matrix<QHalfRat> vertex_pair_matrix(int d, int N);

struct SkewBlock {
  Partition theta;
  int M = 0;
  std::vector<Partition> members;  // (t_1 + i) + theta, 0 <= i <= M
  QHalfRat determinant;            // det [s_{nu^+/eta}] over the block
  QHalfRat rectangle_schur;        // s_{(N^{M+1})}(q^rho)
};

/// Diagonal blocks of skew_plus_matrix: one per theta with d - |theta| >= theta_1.
std::vector<SkewBlock> skew_plus_blocks(int d, int N);

struct VandermondeBlock {
  Matrix<mpq_class> matrix;
  mpq_class determinant;
};

/// Entries (|gamma| + j)^i / j! for 0 <= i, j <= d - |gamma|; gamma must be 1-free.
VandermondeBlock vandermonde_block(const Partition& gamma, int d);

}  // namespace gwpairs
