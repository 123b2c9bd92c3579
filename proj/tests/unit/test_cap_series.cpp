#include "doctest.h"

#include "gwpairs/cap/cap_series.hpp"

using namespace gwpairs;

namespace {

CapSeriesP q_term(int k, long num, long den) { return QRatFunc::t_power(k, 1, GaussianRational::fraction(num, den)); }

CapSeriesGW u_term(int k, long num, long den) {
  return CapSeriesGW::monomial(k, SymRatFunc(GaussianRational::fraction(num, den)));
}

}  // namespace

TEST_SUITE("cap_series") {
  TEST_CASE("pure caps") {
    CHECK(pt_cap_pure(Partition{2}) == q_term(2, 1, 2));
    CHECK(pt_cap_pure(Partition{3}) == q_term(3, 1, 6));
    CHECK(pt_cap_pure(Partition{2, 2}) == q_term(4, 1, 8));
    CHECK(gw_cap_pure(Partition{2}) == u_term(-2, 1, 2));
    CHECK(gw_cap_pure(Partition{3}) == u_term(-2, 1, 6));
    CHECK(gw_cap_pure(Partition{2, 2}) == u_term(-4, 1, 8));
    CHECK_THROWS(pt_cap_pure(Partition{2, 1}));
  }

  TEST_CASE("maximal degree caps") {
    CHECK(pt_cap_maxdeg(Partition{2}, 2) == q_term(2, 1, 2));
    CHECK(pt_cap_maxdeg(Partition{2, 2}, 3) == q_term(3, 1, 1));
    CHECK(gw_cap_maxdeg(Partition{2, 2}, 3) == u_term(-2, 1, 1));
    CHECK(pt_cap_maxdeg(Partition{3}, 3) == pt_cap_pure(Partition{3}));
    CHECK_THROWS(pt_cap_maxdeg(Partition{2}, 3));
    CHECK(pt_cap_maxdeg_oracle(Partition{2}) == q_term(2, 1, 2));
    CHECK(pt_cap_maxdeg_oracle(Partition{1}) == q_term(1, 1, 1));
    for (const auto& alpha : partitions_up_to(7)) {
      CAPTURE(alpha.to_display());
      CHECK(pt_cap_maxdeg_oracle(alpha) == pt_cap_maxdeg(alpha, alpha.size() - alpha.length() + 1));
    }
    for (int k = 2; k <= 6; ++k) CHECK(pt_cap_pure(Partition{k}) == pt_cap_maxdeg(Partition{k}, k));
  }

  TEST_CASE("tube and closed forms") {
    CHECK(pt_tube_ones(0).is_one());
    const SymRatFunc s12 = SymRatFunc::s1() * SymRatFunc::s2();
    CHECK(pt_tube_ones(1) == s12.inverse());
    CHECK(pt_tube_ones(2) == (s12 * s12 * SymRatFunc(2)).inverse());
    CHECK(cap_tube_closed_pt(Partition{1}) == q_term(1, 1, 1));
    CHECK(cap_tube_closed_pt(Partition{1, 1}) == q_term(2, -1, 4));
    CHECK(cap_tube_closed_pt(Partition{2}) == q_term(2, 1, 2));
    CHECK(cap_tube_closed_gw(Partition{1, 1}) == u_term(-2, 1, 4));
  }

  TEST_CASE("composition sum") {
    CHECK(cap_tube_sum_pt(Partition{1}) == q_term(1, 1, 1));
    CHECK(cap_tube_sum_pt(Partition{2}) == q_term(2, 1, 2));
    CHECK(cap_tube_sum_pt(Partition{1, 1}) == q_term(2, -1, 4));
    for (const auto& gamma : partitions_up_to(6)) {
      CAPTURE(gamma.to_display());
      CHECK(cap_tube_sum_pt(gamma) == cap_tube_closed_pt(gamma));
    }
    // The tube value without q^e mixes curve classes once ones appear.
    CHECK_FALSE(cap_tube_sum_pt(Partition{1, 1}, TubeConvention::printed) == cap_tube_closed_pt(Partition{1, 1}));
    CHECK(cap_tube_sum_pt(Partition{3}, TubeConvention::printed) == cap_tube_closed_pt(Partition{3}));
  }

  TEST_CASE("degree one descendent example") {
    CHECK(gw_cap_tau1_point() == u_term(-2, 1, 1));
    const auto r = check_degree_one_descendent(8);
    CHECK(r.equal);
    CHECK_FALSE(r.first_difference.has_value());
    CHECK(r.gw_side_s3_free);
    CHECK(r.k21_matches);
    CHECK(r.pt_side.truncation() == 8);
    CHECK(r.pt_side.valuation() == -1);
    CHECK_THROWS(check_degree_one_descendent(3));

    // Every term carries s1 + s2.
    const std::array<SymRatFunc, kNumVars> kill{SymRatFunc::s1(), -SymRatFunc::s1(), SymRatFunc::s3()};
    CHECK(r.gw_side.map_coeffs([&](const SymRatFunc& c) { return c.substitute(kill); }).is_zero());
    CHECK(r.pt_side.map_coeffs([&](const SymRatFunc& c) { return c.substitute(kill); }).is_zero());
  }
}
