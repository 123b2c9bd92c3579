#include "doctest.h"

#include "gwpairs/symfunc/characters.hpp"
#include "gwpairs/symfunc/schur.hpp"

using namespace gwpairs;

namespace {

/// Hook-content evaluation q^{-|l|/2 - n(l)} / prod_h (1 - q^{-h}), written in t = q^{1/2}.
QHalfRat hook_content_oracle(const Partition& lambda) {
  long n_lambda = 0;
  for (int i = 0; i < lambda.length(); ++i) n_lambda += static_cast<long>(i) * lambda[static_cast<size_t>(i)];
  QHalfRat value = QRatFunc::t_power(-lambda.size() - 2 * static_cast<int>(n_lambda), 2);
  const Partition conj = lambda.conjugate();
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[static_cast<size_t>(i)]; ++j) {
      const int hook = lambda[static_cast<size_t>(i)] - j + conj[static_cast<size_t>(j)] - i - 1;
      value /= QHalfRat(GaussianRational(1), 2) - QRatFunc::t_power(-2 * hook, 2);
    }
  }
  return value;
}

/// n! / prod hooks.
long hook_length_dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  mpz_class prod = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[static_cast<size_t>(i)]; ++j) {
      prod *= lambda[static_cast<size_t>(i)] - j + conj[static_cast<size_t>(j)] - i - 1;
    }
  }
  const mpz_class dim = factorial(static_cast<unsigned>(lambda.size())) / prod;
  return dim.get_si();
}

std::vector<Partition> one_free_up_to(int n) {
  std::vector<Partition> out{Partition{}};
  for (const auto& p : partitions_up_to(n)) {
    if (p.multiplicity(1) == 0) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_SUITE("symfunc_char") {
  TEST_CASE("characters") {
    CHECK(mn_character(Partition{3}, Partition{2, 1}) == 1);
    CHECK(mn_character(Partition{1, 1}, Partition{2}) == -1);
    CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(mn_character(Partition{2, 2}, Partition{3, 1}) == -1);
    CHECK_THROWS(mn_character(Partition{2}, Partition{1}));

    for (int n = 1; n <= 6; ++n) {
      const auto ps = partitions_of(n);
      for (const auto& sigma : ps) CHECK(mn_character(sigma, Partition::ones(n)) == hook_length_dimension(sigma));
      for (const auto& mu : ps) {
        for (const auto& nu : ps) {
          long s = 0;
          for (const auto& sigma : ps) s += mn_character(sigma, mu) * mn_character(sigma, nu);
          CHECK(mpz_class(s) == (mu == nu ? z_factor(mu) : mpz_class(0)));
        }
      }
    }
  }

  TEST_CASE("content sums") {
    auto x = [](int c) { return XLaurent::power(c); };
    CHECK(content_sum<XLaurent>(Partition{2}, x) == XLaurent(1) + XLaurent::power(1));
    CHECK(content_sum<XLaurent>(Partition{1}, x) == XLaurent(1));
    CHECK(content_sum<XLaurent>(Partition{2, 1}, x) == XLaurent::power(-1) + XLaurent(1) + XLaurent::power(1));
  }

  TEST_CASE("character sum identity") {
    CHECK(charsum_lhs_x(Partition{}, 1) == XLaurent(1));
    CHECK(charsum_rhs(Partition{}, 1) == XLaurent(1));
    const XLaurent two = XLaurent::power(1) + XLaurent(2) + XLaurent::power(-1);
    CHECK(charsum_lhs_x(Partition{}, 2) == two);
    CHECK(charsum_rhs(Partition{}, 2) == two);
    CHECK(charsum_rhs(Partition{2}, 0) == XLaurent::power(1) - XLaurent::power(-1));
    CHECK_THROWS(charsum_rhs(Partition{2, 1}, 0));
    CHECK_THROWS(charsum_lhs_x(Partition{}, 0));

    for (const auto& mu : one_free_up_to(7)) {
      for (int e = 0; mu.size() + e <= 7; ++e) {
        if (mu.size() + e == 0) continue;
        CAPTURE(mu.to_display());
        CAPTURE(e);
        CHECK(charsum_lhs_x(mu, e) == charsum_rhs(mu, e));
      }
    }
  }

  TEST_CASE("Jucys-Murphy oracle") {
    CHECK(jm_trace_oracle(Partition{2}, 0, 1) == 2);
    CHECK(jm_trace_oracle(Partition{}, 1, 0) == 1);
    CHECK(jm_trace_oracle(Partition{2}, 0, 0) == 0);
    CHECK_THROWS(jm_trace_oracle(Partition{}, 7, 1));

    for (const auto& mu : one_free_up_to(5)) {
      for (int e = 0; mu.size() + e <= 5; ++e) {
        if (mu.size() + e == 0) continue;
        for (int r = 0; r <= 3; ++r) {
          const mpq_class lhs = charsum_lhs<mpq_class>(mu, e, [r](int c) {
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), mpz_class(c).get_mpz_t(), static_cast<unsigned long>(r));
            return mpq_class(p);
          });
          CHECK(lhs == mpq_class(jm_trace_oracle(mu, e, r)));
        }
      }
    }
  }

  TEST_CASE("Schur functions at q^rho") {
    CHECK(h_qrho(0).is_one());
    CHECK(h_qrho(-2).is_zero());
    const QHalfRat h1 = QRatFunc::t_power(-1, 2) / (QHalfRat(GaussianRational(1), 2) - QRatFunc::t_power(-2, 2));
    CHECK(h_qrho(1) == h1);
    CHECK(skew_schur_qrho(Partition{1}, Partition{}) == h1);
    CHECK(skew_schur_qrho(Partition{3, 1}, Partition{3, 1}).is_one());
    CHECK(skew_schur_qrho(Partition{2}, Partition{1, 1}).is_zero());
    for (const auto& lambda : partitions_up_to(5)) {
      CAPTURE(lambda.to_display());
      CHECK(skew_schur_qrho(lambda, Partition{}) == hook_content_oracle(lambda));
    }
    // Skew by a row: s_{(a)/(b)} = h_{a-b}.
    CHECK(skew_schur_qrho(Partition{4}, Partition{1}) == h_qrho(3));
  }

  TEST_CASE("skew matrix structure") {
    for (int d = 1; d <= 3; ++d) {
      for (int N = 1; N <= 3; ++N) {
        const auto idx = partitions_with_empty(d);
        const auto m = skew_plus_matrix(d, N);
        for (size_t r = 0; r < idx.size(); ++r) {
          for (size_t c = 0; c < idx.size(); ++c) {
            if (!eta_order_geq(idx[r], idx[c])) CHECK(m[r][c].is_zero());
            CHECK(m[r][c].is_zero() == !eta_plus(idx[r], N).contains(idx[c]));
          }
        }
        CHECK_FALSE(determinant(m).is_zero());
        for (const auto& b : skew_plus_blocks(d, N)) {
          CAPTURE(b.theta.to_display());
          CHECK(b.determinant == b.rectangle_schur);
          CHECK(b.rectangle_schur == hook_content_oracle(Partition(std::vector<int>(static_cast<size_t>(b.M + 1), N))));
        }
        const auto v = vertex_pair_matrix(d, N);
        CHECK(matrix_rank(v) == static_cast<long>(partition_count(d)));
      }
    }
  }

  TEST_CASE("Vandermonde blocks") {
    const auto a = vandermonde_block(Partition{2}, 2);
    CHECK(a.matrix == Matrix<mpq_class>{{1}});
    CHECK(a.determinant == 1);
    const auto b = vandermonde_block(Partition{2}, 3);
    CHECK(b.matrix == Matrix<mpq_class>{{1, 1}, {2, 3}});
    CHECK(b.determinant == 1);
    CHECK_THROWS(vandermonde_block(Partition{2, 1}, 4));
    CHECK_THROWS(vandermonde_block(Partition{3}, 2));
    for (const auto& g : one_free_up_to(8)) CHECK(vandermonde_block(g, 8).determinant != 0);
  }
}
