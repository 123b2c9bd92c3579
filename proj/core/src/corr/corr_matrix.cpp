#include "gwpairs/corr/corr_matrix.hpp"

#include "gwpairs/algebra/series.hpp"
#include "gwpairs/descendent/descendent.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gwpairs {

ULaurent iu_power(int k) { return ULaurent::monomial(k, SymRatFunc(GaussianRational::i()).pow(k)); }

CorrMatrixK tabulated_entries() {
  CorrMatrixK K;
  K.set_entry(Partition{1}, Partition{1}, ULaurent(1), Provenance::tabulated);
  const ULaurent inv_iu = iu_power(-1);
  const SymRatFunc c1 = SymRatFunc::s1() + SymRatFunc::s2() + SymRatFunc::s3();
  K.set_entry(Partition{2}, Partition{2}, inv_iu, Provenance::tabulated);
  K.set_entry(Partition{2}, Partition{1}, inv_iu * c1, Provenance::tabulated);
  K.set_entry(Partition{2}, Partition{1, 1}, ULaurent::zero(), Provenance::tabulated);
  return K;
}

CorrMatrixK extend_by_part_one(const CorrMatrixK& K, int max_degree) {
  CorrMatrixK out = K;
  std::vector<Partition> seeds;
  for (const auto& [alpha, row] : K.rows()) seeds.push_back(alpha);
  for (const Partition& seed : seeds) {
    Partition cur = seed;
    while (cur.size() + 1 <= max_degree) {
      const Partition next = cur + Partition{1};
      if (!out.has_row(next)) {
        const DescendentPoly h = add_part_one(cur, out);
        out.ensure_row(next);
        for (const auto& [m, c] : h.terms()) {
          if (m.degree() == 0) throw std::logic_error("part one rule produced a constant term");
          out.set_entry(next, m.partition(), c, Provenance::derived_rule);
        }
      }
      cur = next;
    }
  }
  return out;
}

std::vector<StructureViolation> check_structure(const CorrMatrixK& K) {
  std::vector<StructureViolation> out;
  for (const auto& [alpha, row] : K.rows()) {
    const int l = alpha.length();
    for (const Partition& h : partitions_up_to(alpha.size())) {
      const ULaurent k = K.entry(alpha, h);
      auto flag = [&](const std::string& rule, const std::string& detail) {
        out.push_back({alpha, h, rule, detail + "; entry = " + k.to_string()});
      };
      if (h == alpha) {
        if (!(k == iu_power(l - alpha.size()))) flag("diagonal", "expected (iu)^" + std::to_string(l - alpha.size()));
      } else if (!k.is_zero()) {
        if (alpha.size() <= h.size() + std::abs(l - h.length())) {
          flag("vanishing", "|alpha| <= |alpha_hat| + |l(alpha) - l(alpha_hat)|");
        }
        const Relation d = compare(alpha, h, Ordering::D);
        if (d == Relation::less) flag("rank_order", "alpha below alpha_hat in |.|-l(.)");
        if (d == Relation::equal_rank) flag("rank_tie", "|alpha|-l(alpha) = |alpha_hat|-l(alpha_hat)");
        if (!strictly_greater(alpha, h, Ordering::Dstar)) flag("dstar_order", "alpha not strictly above alpha_hat in |.|+l(.)");
      }
      if (k.is_zero()) continue;
      const int expected_degree = alpha.size() + l - h.size() - h.length();
      bool poly = true;
      bool homogeneous = true;
      for (const SymRatFunc& c : k.coeffs()) {
        if (c.is_zero()) continue;
        if (!c.is_polynomial()) poly = false;
        const auto deg = c.homogeneous_degree();
        if (!deg || *deg != expected_degree) homogeneous = false;
      }
      if (!poly) flag("polynomiality", "a u-coefficient has a nontrivial denominator");
      if (!homogeneous) flag("homogeneity", "expected degree " + std::to_string(expected_degree));
      for (const auto& perm : variable_permutations()) {
        const ULaurent moved = k.map_coeffs([&](const SymRatFunc& c) { return c.permuted(perm); });
        if (!(moved == k)) {
          flag("symmetry", "not invariant under permutations of s1, s2, s3");
          break;
        }
      }
    }
  }
  return out;
}

namespace {

/// (-q)^{-k} as a rational function.
QRatFunc minus_q_power(int k) { return QRatFunc::t_power(-k, 1, GaussianRational(k % 2 == 0 ? 1 : -1)); }

/// (-iu)^k.
ULaurent minus_iu_power(int k) {
  return ULaurent::monomial(k, SymRatFunc(-GaussianRational::i()).pow(k));
}

}  // namespace

std::map<Partition, ULaurent> solve_row(const Partition& alpha, const VertexMatrixPair& data, int order,
                                        const std::map<Partition, ULaurent>& known) {
  const int work = order + 6;
  std::vector<Partition> unknowns;
  std::vector<Partition> columns;
  for (const auto& [key, v] : data.c_gw) {
    const Partition& h = key.first;
    if (h.size() > alpha.size() || known.count(h)) continue;
    if (std::find(unknowns.begin(), unknowns.end(), h) == unknowns.end()) unknowns.push_back(h);
  }
  for (const auto& [key, v] : data.c_p) {
    if (key.first == alpha) columns.push_back(key.second);
  }
  if (unknowns.empty()) throw std::invalid_argument("solve_row: no unknown entries for " + alpha.to_display());
  if (columns.size() < unknowns.size()) {
    throw std::domain_error("solve_row: " + std::to_string(columns.size()) + " equations for " +
                            std::to_string(unknowns.size()) + " unknowns");
  }

  auto gw = [&](const Partition& h, const Partition& lambda) {
    auto it = data.c_gw.find({h, lambda});
    return it == data.c_gw.end() ? ULaurent::zero() : it->second;
  };

  // Rows are equations (one per lambda), columns the unknowns, plus the right side.
  std::vector<std::vector<ULaurent>> a;
  std::vector<ULaurent> b;
  for (const Partition& lambda : columns) {
    const CapSeriesP& cp = data.c_p.at({alpha, lambda});
    ULaurent rhs = expand_q_to_u(cp.value * minus_q_power(lambda.size()), work) * cp.prefactor *
                   minus_iu_power(-lambda.size() - lambda.length());
    for (const auto& [h, kh] : known) rhs -= kh * gw(h, lambda);
    std::vector<ULaurent> row;
    for (const Partition& h : unknowns) row.push_back(gw(h, lambda));
    a.push_back(std::move(row));
    b.push_back(rhs.truncated(work));
  }

  const size_t n = unknowns.size();
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = a.size();
    for (size_t r = c; r < a.size(); ++r) {
      if (a[r][c].is_zero()) continue;
      if (pivot == a.size() || a[r][c].valuation() < a[pivot][c].valuation()) pivot = r;
    }
    if (pivot == a.size()) {
      throw std::domain_error("solve_row: leading matrix is singular at column " + unknowns[c].to_display());
    }
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (size_t r = 0; r < a.size(); ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const ULaurent f = ULaurent::divide(a[r][c], a[c][c], work);
      for (size_t k = c; k < n; ++k) a[r][k] = (a[r][k] - f * a[c][k]).truncated(work);
      b[r] = (b[r] - f * b[c]).truncated(work);
    }
  }
  for (size_t r = n; r < a.size(); ++r) {
    const auto diff = b[r].truncated(order);
    if (!diff.is_zero()) {
      throw std::domain_error("solve_row: inconsistent system; residual " + diff.to_string());
    }
  }

  std::map<Partition, ULaurent> out;
  for (size_t c = 0; c < n; ++c) {
    ULaurent x = ULaurent::divide(b[c], a[c][c], work);
    if (x.truncation() < order) {
      throw std::domain_error("solve_row: input series too short to reach u^" + std::to_string(order));
    }
    out[unknowns[c]] = x.truncated(order);
  }
  return out;
}

VertexMatrixPair degree_one_example_data(int order) {
  VertexMatrixPair data;
  data.d = 1;
  const Partition one{1};
  const Partition two{2};
  data.c_p[{one, one}] = CapSeriesP(QRatFunc::q());
  data.c_gw[{one, one}] = gw_cap_tau1_point();
  data.c_p[{two, one}] = pt_cap_tau2_point();
  data.c_gw[{two, one}] = gw_cap_tau2_point(order + 4);
  return data;
}

}  // namespace gwpairs
