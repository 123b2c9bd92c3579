#include "doctest.h"

#include "gwpairs/algebra/series.hpp"
#include "gwpairs/assembly/assembly.hpp"
#include "gwpairs/util/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

using namespace gwpairs;

namespace {

const SymRatFunc s1 = SymRatFunc::s1();
const SymRatFunc s2 = SymRatFunc::s2();
const SymRatFunc s3 = SymRatFunc::s3();

/// Centralizer order n! / |conjugacy class|, counting permutations by cycle type.
long centralizer_oracle(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  long total = 0;
  long matching = 0;
  do {
    ++total;
    std::vector<bool> seen(p.size(), false);
    std::vector<int> cycles;
    for (size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (size_t j = i; !seen[j]; j = static_cast<size_t>(p[j])) {
        seen[j] = true;
        ++len;
      }
      cycles.push_back(len);
    }
    if (Partition(cycles) == lambda) ++matching;
  } while (std::next_permutation(p.begin(), p.end()));
  return total / matching;
}

ToricGraph single_edge_graph() {
  ToricGraph g;
  g.add_vertex("v0", {s1, s2, s3});
  g.add_vertex("v1", {s1, s2, -s3});
  g.add_edge({0, 2}, {1, 2}, "C");
  return g;
}

PTSeries pt_value(int vertex, const Partition& lambda) {
  return PTSeries::q_power(lambda.size(), SymRatFunc(GaussianRational::fraction(1, lambda.length() + vertex + 1)));
}

}  // namespace

TEST_SUITE("capped_assembly") {
  TEST_CASE("exact stable pairs series") {
    const PTSeries q = PTSeries::q_power(1);
    CHECK(PTSeries(CapSeriesP(QRatFunc::q())) == q);
    CHECK(PTSeries::q_power(1, s1) + PTSeries::q_power(1, s2) == PTSeries::q_power(1, s1 + s2));
    const QRatFunc one_plus_q = QRatFunc(1) + QRatFunc::q();
    const PTSeries inv = PTSeries(CapSeriesP(one_plus_q.inverse()));
    CHECK(inv + q * inv == PTSeries(1L));
    CHECK(PTSeries(CapSeriesP(s1, one_plus_q.inverse())) * PTSeries(CapSeriesP(one_plus_q)) == PTSeries(s1));
    const PTSeries half(CapSeriesP(QRatFunc::t_power(1, 2)));
    CHECK(half.kappa() == 2);
    CHECK(half * half == q);
    CHECK((half * half).kappa() == 1);
    CHECK((q - q).is_zero());
    CHECK_FALSE(PTSeries::q_power(1, s1) == PTSeries::q_power(1, s2));

    const QRatFunc f = (QRatFunc(1) - QRatFunc::q()) / one_plus_q;
    const PTSeries pf = PTSeries(CapSeriesP(s1 + s2, f));
    CHECK(pf.expand_u(10) == ULaurent(s1 + s2) * expand_q_to_u(f, 10));
    CHECK(PTSeries::q_power(-2, s3).to_string() == "s3*q^(-2)");
  }

  TEST_CASE("marking enumeration") {
    const ToricGraph g = single_edge_graph();
    for (int d = 0; d <= 5; ++d) {
      const auto m = enumerate_markings(g, {{"C", d}});
      CHECK(static_cast<long>(m.size()) == partition_count(d) * partition_count(d));
      for (const auto& x : m) {
        CHECK(x.at({0, 2}).size() == d);
        CHECK(x.at({1, 2}).size() == d);
      }
    }
    const auto empty = enumerate_markings(g, {});
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].lambda.empty());

    ToricGraph two;
    for (int v = 0; v < 3; ++v) two.add_vertex("v" + std::to_string(v), {s1, s2, s3});
    two.add_edge({0, 0}, {1, 0}, "C1");
    two.add_edge({1, 1}, {2, 1}, "C2");
    CHECK(enumerate_markings(two, {{"C1", 1}}).size() == 1);
    for (int d1 = 0; d1 <= 5; ++d1) {
      for (int d2 = 0; d1 + d2 <= 5; ++d2) {
        const long expected = partition_count(d1) * partition_count(d1) * partition_count(d2) * partition_count(d2);
        CHECK(static_cast<long>(enumerate_markings(two, {{"C1", d1}, {"C2", d2}}).size()) == expected);
      }
    }

    ToricGraph shared;
    for (int v = 0; v < 3; ++v) shared.add_vertex("v" + std::to_string(v), {s1, s2, s3});
    shared.add_edge({0, 0}, {1, 0}, "C");
    shared.add_edge({1, 1}, {2, 1}, "C");
    long expected = 0;
    for (int d = 0; d <= 3; ++d) expected += partition_count(d) * partition_count(d) * partition_count(3 - d) * partition_count(3 - d);
    CHECK(static_cast<long>(enumerate_markings(shared, {{"C", 3}}).size()) == expected);

    CHECK_THROWS_AS(enumerate_markings(g, {{"D", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_markings(g, {{"C", -1}}), std::invalid_argument);
    CHECK(enumerate_markings(g, {{"D", 0}}).size() == 1);

    ToricGraph bad;
    bad.add_vertex("v", {s1, s2, s3});
    CHECK_THROWS(bad.add_edge({0, 0}, {0, 0}, "C"));
    CHECK_THROWS(bad.add_edge({0, 0}, {0, 3}, "C"));
    bad.add_leg({0, 1}, Partition{1});
    CHECK_THROWS(bad.add_leg({0, 1}, Partition{2}));
  }

  TEST_CASE("gluing factors") {
    ToricGraph g;
    g.add_vertex("v", {s1, s2, s3});
    g.add_vertex("w", {s1, SymRatFunc(0), s3});
    CappedMarking m;
    m.lambda[{0, 2}] = Partition{1};
    CHECK(gluing_P(g, {0, 2}, m) == PTSeries::q_power(-1, s1 * s2));
    CHECK(gluing_GW(g, {0, 2}, m) == ULaurent::monomial(2, s1 * s2));
    m.lambda[{0, 2}] = Partition{2};
    CHECK(gluing_P(g, {0, 2}, m) == PTSeries::q_power(-2, SymRatFunc(-2) * s1 * s2));
    CHECK(gluing_P(g, {0, 1}, m) == PTSeries(1L));
    CHECK(gluing_GW(g, {0, 1}, m) == ULaurent(1));

    for (int n = 1; n <= 4; ++n) {
      for (const auto& lambda : partitions_of(n)) {
        for (int slot = 0; slot < 3; ++slot) {
          CappedMarking x;
          x.lambda[{0, slot}] = lambda;
          const SymRatFunc ratio = s1 * s2 * s3 / g.vertices()[0].weights[static_cast<size_t>(slot)];
          const SymRatFunc w = SymRatFunc(centralizer_oracle(lambda)) * ratio.pow(lambda.length());
          CHECK(gluing_GW(g, {0, slot}, x) == ULaurent::monomial(2 * lambda.length(), w));
          // G_GW = (-1)^{|l| - l(l)} G_P q^{|l|} u^{2 l(l)}, compared through the shared weight.
          const long sign = (n - lambda.length()) % 2 == 0 ? 1 : -1;
          CHECK(gluing_P(g, {0, slot}, x) * PTSeries::q_power(n, SymRatFunc(sign)) == PTSeries(w));
        }
      }
    }

    CappedMarking z;
    z.lambda[{1, 1}] = Partition{1};
    CHECK_THROWS_AS(gluing_P(g, {1, 1}, z), std::domain_error);
    z.lambda[{1, 1}] = Partition{};
    CHECK(gluing_P(g, {1, 1}, z) == PTSeries(1L));
  }

  TEST_CASE("assembly sums") {
    // Single vertex, one leg: the provider's vertex unmodified.
    ToricGraph leg_only;
    leg_only.add_vertex("p", {s1, s2, s3});
    leg_only.add_leg({0, 2}, Partition{2, 2});
    const DescendentPlacement sigma22{{0, 2}, {0, 2}};
    CHECK(assemble_pt(leg_only, sigma22, {}, PureCapProviderPT()) == PTSeries(pt_cap_pure(Partition{2, 2})));
    CHECK(assemble_gw(leg_only, sigma22, {}, PureCapProviderGW()) == gw_cap_pure(Partition{2, 2}));

    // tre3: descendents on a vertex with three empty partitions.
    ToricGraph bare;
    bare.add_vertex("p", {s1, s2, s3});
    CHECK_THROWS_WITH_AS(assemble_pt(bare, {{0, 2}}, {}, PureCapProviderPT()),
                         doctest::Contains("|lambda1|+|lambda2|+|lambda3| > 0"), std::invalid_argument);
    CHECK(assemble_pt(bare, {}, {}, PureCapProviderPT()) == PTSeries(1L));
    CHECK_THROWS_AS(assemble_pt(leg_only, {{0, 3}}, {}, PureCapProviderPT()), UnsupportedInput);
    CHECK_THROWS_AS(assemble_pt(leg_only, {{5, 3}}, {}, PureCapProviderPT()), std::invalid_argument);

    // One compact edge of degree d with Kronecker edges.
    const ToricGraph g = single_edge_graph();
    for (int d = 1; d <= 4; ++d) {
      TableProvider<PTSeries> table;
      for (const auto& a : partitions_of(d)) {
        for (int v = 0; v < 2; ++v) table.set_vertex(v, Partition{}, {Partition{}, Partition{}, a}, pt_value(v, a));
      }
      PTSeries expected;
      for (const auto& lambda : partitions_of(d)) {
        const SymRatFunc z(centralizer_oracle(lambda));
        const SymRatFunc glue = z * z * (s1 * s2).pow(2 * lambda.length());
        expected += pt_value(0, lambda) * pt_value(1, lambda) * PTSeries::q_power(-2 * d, glue);
      }
      CAPTURE(d);
      CHECK(assemble_pt(g, {}, {{"C", d}}, table) == expected);
    }

    TableProvider<PTSeries> sparse;
    sparse.set_vertex(0, Partition{}, {Partition{}, Partition{}, Partition{1}}, PTSeries(1L));
    CHECK_THROWS_WITH_AS(assemble_pt(g, {}, {{"C", 1}}, sparse), doctest::Contains("vertex 1"), UnsupportedInput);
  }

  TEST_CASE("vertex relabeling and worker counts") {
    ToricGraph a;
    a.add_vertex("x", {s1, s2, s3});
    a.add_vertex("y", {s2, s1, s3});
    a.add_edge({0, 2}, {1, 2}, "C");
    a.add_leg({0, 0}, Partition{2});
    ToricGraph b;
    b.add_vertex("y", {s2, s1, s3});
    b.add_vertex("x", {s1, s2, s3});
    b.add_edge({1, 2}, {0, 2}, "C");
    b.add_leg({1, 0}, Partition{2});

    auto fill = [](TableProvider<ULaurent>& t, int vx, int vy) {
      for (int d = 1; d <= 3; ++d) {
        for (const auto& l : partitions_of(d)) {
          const ULaurent val = ULaurent::monomial(-2 * l.length(), SymRatFunc(GaussianRational::fraction(1, l.size() + 1)));
          t.set_vertex(vx, Partition{}, {Partition{2}, Partition{}, l}, val * ULaurent(s1 + s2));
          t.set_vertex(vy, Partition{}, {Partition{}, Partition{}, l}, val);
        }
      }
    };
    TableProvider<ULaurent> ta;
    fill(ta, 0, 1);
    TableProvider<ULaurent> tb;
    fill(tb, 1, 0);
    for (int d = 1; d <= 3; ++d) {
      const ULaurent za = assemble_gw(a, {}, {{"C", d}}, ta);
      CHECK_FALSE(za.is_zero());
      CHECK(za == assemble_gw(b, {}, {{"C", d}}, tb));
    }

    setenv("GWPAIRS_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    const ULaurent serial = assemble_gw(a, {}, {{"C", 3}}, ta);
    setenv("GWPAIRS_THREADS", "4", 1);
    CHECK(worker_count() == 4);
    CHECK(assemble_gw(a, {}, {{"C", 3}}, ta) == serial);
    unsetenv("GWPAIRS_THREADS");
  }

  TEST_CASE("degeneration kernels") {
    CHECK(degeneration_kernel_gw(Partition{1}) == ULaurent::monomial(2, SymRatFunc(1)));
    CHECK(degeneration_kernel_pt(Partition{1}) == PTSeries::q_power(-1));
    CHECK(degeneration_kernel_pt(Partition{2}) == PTSeries::q_power(-2, SymRatFunc(-2)));
    for (int n = 1; n <= 4; ++n) {
      for (const auto& mu : partitions_of(n)) {
        const long z = centralizer_oracle(mu);
        const long sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
        CHECK(degeneration_kernel_gw(mu) == ULaurent::monomial(2 * mu.length(), SymRatFunc(z)));
        CHECK(degeneration_kernel_pt(mu) == PTSeries::q_power(-n, SymRatFunc(sign * z)));
      }
    }

    const PTSeries z1 = PTSeries(CapSeriesP(s1, QRatFunc::q()));
    const PTSeries z2 = PTSeries(CapSeriesP(s2, QRatFunc::q() * QRatFunc::q()));
    CHECK(degenerate_combine(std::map<Partition, PTSeries>{{Partition{2}, z1}}, {{Partition{2}, z2}}) ==
          PTSeries::q_power(1, SymRatFunc(-2) * s1 * s2));
    CHECK(degenerate_combine(std::map<Partition, ULaurent>{{Partition{1}, ULaurent(s1)}}, {{Partition{1}, ULaurent(s2)}}) ==
          ULaurent::monomial(2, s1 * s2));

    // A trivial cap table inverting the kernel returns Z1.
    std::map<Partition, PTSeries> t1{{Partition{1, 1}, z1}};
    std::map<Partition, PTSeries> trivial{{Partition{1, 1}, PTSeries::q_power(2, SymRatFunc(GaussianRational::fraction(1, 2)))}};
    CHECK(degenerate_combine(t1, trivial) == z1);
    std::map<Partition, ULaurent> g1{{Partition{3}, ULaurent(s3)}};
    std::map<Partition, ULaurent> gtrivial{{Partition{3}, ULaurent::monomial(-2, SymRatFunc(GaussianRational::fraction(1, 3)))}};
    CHECK(degenerate_combine(g1, gtrivial) == ULaurent(s3));

    CHECK_THROWS_AS(degenerate_combine(t1, std::map<Partition, PTSeries>{{Partition{2}, z1}}), std::invalid_argument);
    CHECK_THROWS_AS(degenerate_combine(t1, std::map<Partition, PTSeries>{}), std::invalid_argument);
  }
}
