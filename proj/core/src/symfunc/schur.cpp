#include "gwpairs/symfunc/schur.hpp"

#include <stdexcept>

namespace gwpairs {

QHalfRat h_qrho(int k) {
  if (k < 0) return QHalfRat(GaussianRational(0), 2);
  if (k == 0) return QHalfRat(GaussianRational(1), 2);
  // With t = q^{1/2}: h_k = t^{k^2} / prod_j (t^{2j} - 1).
  UPoly den(1);
  for (int j = 1; j <= k; ++j) den = den * (UPoly::monomial(2 * j) - UPoly(1));
  return {UPoly::monomial(k * k), den, 2};
}

QHalfRat skew_schur_qrho(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return QHalfRat(GaussianRational(0), 2);
  const int n = lambda.length();
  if (n == 0) return QHalfRat(GaussianRational(1), 2);
  Matrix<QHalfRat> m(static_cast<size_t>(n), std::vector<QHalfRat>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int mu_j = j < mu.length() ? mu[static_cast<size_t>(j)] : 0;
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = h_qrho(lambda[static_cast<size_t>(i)] - mu_j + j - i);
    }
  }
  return determinant(std::move(m));
}

std::vector<Partition> partitions_with_empty(int d) {
  std::vector<Partition> out{Partition{}};
  if (d >= 1) {
    auto rest = partitions_up_to(d);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

bool eta_order_geq(const Partition& nu, const Partition& eta) { return eta_minus(nu).contains(eta_minus(eta)); }

Matrix<QHalfRat> skew_plus_matrix(int d, int N) {
  const auto idx = partitions_with_empty(d);
  Matrix<QHalfRat> m(idx.size(), std::vector<QHalfRat>(idx.size()));
  for (size_t r = 0; r < idx.size(); ++r) {
    const Partition plus = eta_plus(idx[r], N);
    for (size_t c = 0; c < idx.size(); ++c) m[r][c] = skew_schur_qrho(plus, idx[c]);
  }
  return m;
}

Matrix<QHalfRat> vertex_pair_matrix(int d, int N) {
  if (d < 1 || N < 1) throw std::invalid_argument("vertex_pair_matrix needs d >= 1 and N >= 1");
  const auto deltas = partitions_of(d);
  const auto etas = partitions_with_empty(d);
  const auto& inner = etas;  // eta' sits inside delta^t, so |eta'| <= d
  Matrix<QHalfRat> m(deltas.size(), std::vector<QHalfRat>(etas.size()));
  for (size_t r = 0; r < deltas.size(); ++r) {
    const Partition dt = deltas[r].conjugate();
    for (size_t c = 0; c < etas.size(); ++c) {
      const Partition nu = eta_plus(etas[c], N);
      QHalfRat acc(GaussianRational(0), 2);
      for (const auto& e : inner) {
        if (!dt.contains(e) || !nu.contains(e)) continue;
        acc += skew_schur_qrho(dt, e) * skew_schur_qrho(nu, e);
      }
      m[r][c] = acc;
    }
  }
  return m;
}

std::vector<SkewBlock> skew_plus_blocks(int d, int N) {
  std::vector<SkewBlock> blocks;
  for (const auto& theta : partitions_with_empty(d)) {
    const int t1 = theta.largest();
    const int M = d - theta.size() - t1;
    if (M < 0) continue;
    SkewBlock b;
    b.theta = theta;
    b.M = M;
    for (int i = 0; i <= M; ++i) {
      b.members.push_back(t1 + i == 0 ? theta : theta + Partition{t1 + i});
    }
    Matrix<QHalfRat> m(b.members.size(), std::vector<QHalfRat>(b.members.size()));
    for (size_t r = 0; r < b.members.size(); ++r) {
      for (size_t c = 0; c < b.members.size(); ++c) {
        m[r][c] = skew_schur_qrho(eta_plus(b.members[r], N), b.members[c]);
      }
    }
    b.determinant = determinant(std::move(m));
    b.rectangle_schur = skew_schur_qrho(Partition(std::vector<int>(static_cast<size_t>(M + 1), N)), Partition{});
    blocks.push_back(std::move(b));
  }
  return blocks;
}

VandermondeBlock vandermonde_block(const Partition& gamma, int d) {
  if (gamma.multiplicity(1) != 0) throw std::invalid_argument("vandermonde_block needs gamma without parts 1");
  if (gamma.size() > d) throw std::invalid_argument("vandermonde_block needs |gamma| <= d");
  const int n = d - gamma.size() + 1;
  VandermondeBlock out;
  out.matrix.assign(static_cast<size_t>(n), std::vector<mpq_class>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      mpz_class base = gamma.size() + j;
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(i));
      mpq_class v(p, factorial(static_cast<unsigned>(j)));
      v.canonicalize();
      out.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    }
  }
  out.determinant = determinant(out.matrix);
  return out;
}

}  // namespace gwpairs
