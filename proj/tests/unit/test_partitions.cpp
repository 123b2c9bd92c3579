#include "doctest.h"

#include "gwpairs/partitions/partition.hpp"

#include <random>
#include <set>

using namespace gwpairs;

namespace {

/// Bell numbers from Stirling numbers of the second kind.
long bell_oracle(int n) {
  std::vector<std::vector<long>> s(static_cast<size_t>(n) + 1, std::vector<long>(static_cast<size_t>(n) + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= i; ++k) {
      s[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          k * s[static_cast<size_t>(i - 1)][static_cast<size_t>(k)] + s[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)];
    }
  }
  long b = 0;
  for (int k = 0; k <= n; ++k) b += s[static_cast<size_t>(n)][static_cast<size_t>(k)];
  return b;
}

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("automorphism and centralizer factors") {
    CHECK(aut_order(Partition{2, 2, 1}) == 2);
    CHECK(aut_order(Partition{}) == 1);
    CHECK(aut_order(Partition{3, 3, 3}) == 6);
    CHECK(z_factor(Partition{1, 1}) == 2);
    CHECK(z_factor(Partition{2}) == 2);
    CHECK(z_factor(Partition{2, 1}) == 2);
    CHECK(z_factor(Partition{}) == 1);
  }

  TEST_CASE("parsing and basic structure") {
    const Partition p = Partition::parse("1,3,1");
    CHECK(p.to_string() == "3,1,1");
    CHECK(p.size() == 5);
    CHECK(p.length() == 3);
    CHECK(p.length_plus() == 1);
    CHECK(Partition::parse("").empty());
    CHECK_THROWS(Partition::parse("2,x"));
    CHECK_THROWS(Partition::parse("2,0"));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({3, 1}).contains(Partition{2, 1}));
    CHECK_FALSE(Partition({3, 1}).contains(Partition{1, 1, 1}));
  }

  TEST_CASE("orderings") {
    CHECK(compare(Partition{4, 4, 3, 1}, Partition{4, 4, 3, 1, 1, 1}, Ordering::SIM) == Relation::equivalent);
    CHECK(compare(Partition{2}, Partition{1, 1}, Ordering::D) == Relation::greater);
    CHECK(ordering_rank(Partition{3, 1, 1}, Ordering::S) == 1);
    CHECK(compare(Partition{2, 1}, Partition{3}, Ordering::Dstar) == Relation::greater);
    CHECK(compare(Partition{2}, Partition{3}, Ordering::SIM) == Relation::not_equivalent);

    std::mt19937 rng(5);
    const auto all = partitions_up_to(6);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    for (Ordering o : {Ordering::D, Ordering::S, Ordering::Dstar}) {
      for (int trial = 0; trial < 200; ++trial) {
        const auto& a = all[pick(rng)];
        const auto& b = all[pick(rng)];
        const auto& c = all[pick(rng)];
        auto ge = [o](const Partition& x, const Partition& y) { return compare(x, y, o) != Relation::less; };
        CHECK(ge(a, a));
        if (ge(a, b) && ge(b, c)) CHECK(ge(a, c));
      }
    }
  }

  TEST_CASE("enumeration") {
    CHECK(partitions_up_to(1) == std::vector<Partition>{Partition{1}});
    CHECK(partitions_up_to(2) == std::vector<Partition>{Partition{1}, Partition{2}, Partition{1, 1}});
    CHECK(partitions_up_to(3).size() == 6);
    CHECK_THROWS(partitions_up_to(0));
    for (int n = 0; n <= 12; ++n) {
      const auto ps = partitions_of(n);
      CHECK(static_cast<long>(ps.size()) == partition_count(n));
      CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
      for (const auto& p : ps) CHECK(p.size() == n);
    }
    CHECK(partition_count(10) == 42);
  }

  TEST_CASE("set partitions") {
    CHECK(set_partitions(0).size() == 1);
    CHECK(set_partitions(1).size() == 1);
    CHECK(set_partitions(3).size() == 5);
    CHECK(set_partitions(4).size() == 15);
    for (int n = 0; n <= 9; ++n) {
      const auto sps = set_partitions(n);
      CHECK(static_cast<long>(sps.size()) == bell_oracle(n));
      CHECK(bell_number(n) == bell_oracle(n));
      for (const auto& sp : sps) {
        std::vector<int> seen;
        for (const auto& b : sp.blocks) {
          CHECK_FALSE(b.empty());
          seen.insert(seen.end(), b.begin(), b.end());
        }
        std::sort(seen.begin(), seen.end());
        std::vector<int> expect(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) expect[static_cast<size_t>(i)] = i;
        CHECK(seen == expect);
      }
    }
    CHECK(set_partitions(2)[0].to_string() == "{1,2}");
    CHECK(set_partitions(2)[1].to_string() == "{1}{2}");
  }

  TEST_CASE("eta constructions") {
    CHECK(eta_plus(Partition{}, 3) == Partition{3});
    CHECK(eta_plus(Partition{3, 1}, 2) == Partition{5, 1});
    CHECK(eta_minus(Partition{3, 1}) == Partition{1});
    CHECK(eta_minus(Partition{}) == Partition{});
    for (int N = 1; N <= 4; ++N) {
      CHECK(eta_plus(Partition{}, N).size() - eta_plus(Partition{}, N).length() == N - 1);
      for (const auto& eta : partitions_up_to(6)) {
        const Partition plus = eta_plus(eta, N);
        CHECK(plus.size() - plus.length() > N - 1);
      }
    }
  }

  TEST_CASE("equivalence classes have d - |gamma| + 1 members") {
    for (int d = 1; d <= 8; ++d) {
      const auto all = partitions_up_to(d);
      for (const auto& gamma : all) {
        if (gamma.multiplicity(1) != 0) continue;
        const long direct = std::count_if(all.begin(), all.end(), [&](const Partition& p) {
          return compare(p, gamma, Ordering::SIM) == Relation::equivalent;
        });
        CHECK(direct == d - gamma.size() + 1);
        CHECK(static_cast<long>(sim_class(gamma, d).size()) == direct);
      }
    }
  }
}
