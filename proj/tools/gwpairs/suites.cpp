#include "suites.hpp"

#include "serialize.hpp"

#include "gwpairs/algebra/matrix.hpp"
#include "gwpairs/algebra/series.hpp"
#include "gwpairs/corr/corr_matrix.hpp"
#include "gwpairs/descendent/descendent.hpp"
#include "gwpairs/symfunc/characters.hpp"
#include "gwpairs/symfunc/schur.hpp"
#include "gwpairs/util/parallel.hpp"

#include <functional>

namespace gwpairs::cli {

namespace {

std::vector<Partition> one_free_up_to(int n) {
  std::vector<Partition> out{Partition{}};
  for (const auto& p : partitions_up_to(n)) {
    if (p.multiplicity(1) == 0) out.push_back(p);
  }
  return out;
}

std::string case_name(const Partition& mu, int e) { return "mu=" + mu.to_display() + " e=" + std::to_string(e); }

ordered_json case_json(const Partition& mu, int e) { return {{"mu", mu.to_string()}, {"e", e}}; }

}  // namespace

Report verify_charsum(int max_n) {
  Report r("verify charsum");
  r.inputs["max_n"] = max_n;
  for (const auto& mu : one_free_up_to(max_n)) {
    for (int e = 0; mu.size() + e <= max_n; ++e) {
      if (mu.size() + e == 0) continue;
      const XLaurent lhs = charsum_lhs_x(mu, e);
      const XLaurent rhs = charsum_rhs(mu, e);
      ordered_json w = case_json(mu, e);
      if (!(lhs == rhs)) {
        w["lhs"] = lhs.to_string();
        w["rhs"] = rhs.to_string();
      }
      r.expect(lhs == rhs, case_name(mu, e), w);
    }
  }
  return r;
}

Report verify_jm(int max_n, int max_r) {
  Report r("verify jm");
  r.inputs["max_n"] = max_n;
  r.inputs["max_r"] = max_r;
  for (const auto& mu : one_free_up_to(max_n)) {
    for (int e = 0; mu.size() + e <= max_n; ++e) {
      if (mu.size() + e == 0) continue;
      for (int k = 0; k <= max_r; ++k) {
        const mpq_class lhs = charsum_lhs<mpq_class>(mu, e, [k](int c) {
          mpz_class p;
          mpz_pow_ui(p.get_mpz_t(), mpz_class(c).get_mpz_t(), static_cast<unsigned long>(k));
          return mpq_class(p);
        });
        const mpz_class oracle = jm_trace_oracle(mu, e, k, max_n);
        ordered_json w = case_json(mu, e);
        w["r"] = k;
        w["charsum"] = lhs.get_str();
        w["oracle"] = oracle.get_str();
        r.expect(lhs == mpq_class(oracle), case_name(mu, e) + " r=" + std::to_string(k), w);
      }
    }
  }
  return r;
}

Report verify_maxdeg_cap(int max_size) {
  Report r("verify maxdeg-cap");
  r.inputs["max"] = max_size;
  for (const auto& alpha : partitions_up_to(max_size)) {
    const int d = alpha.size() - alpha.length() + 1;
    const CapSeriesP closed = pt_cap_maxdeg(alpha, d);
    const CapSeriesP oracle = pt_cap_maxdeg_oracle(alpha);
    r.expect(closed == oracle, "alpha=" + alpha.to_display(),
             {{"alpha", alpha.to_string()}, {"closed_form", closed.to_string()}, {"oracle", oracle.to_string()}});
  }
  return r;
}

Report verify_cap_tube(int max_size, TubeConvention tube) {
  Report r("verify cap-tube");
  r.inputs["max"] = max_size;
  r.inputs["tube"] = tube == TubeConvention::printed ? "printed" : "with-q-power";
  for (const auto& gamma : partitions_up_to(max_size)) {
    const std::string name = "gamma=" + gamma.to_display();
    const CapSeriesP closed = cap_tube_closed_pt(gamma);
    try {
      const CapSeriesP sum = cap_tube_sum_pt(gamma, tube);
      r.expect(sum == closed, name,
               {{"gamma", gamma.to_string()}, {"sum", sum.to_string()}, {"closed_form", closed.to_string()}});
    } catch (const std::runtime_error& e) {
      r.fail(name, {{"gamma", gamma.to_string()}, {"error", e.what()}}, "residual s1 dependence");
    }
  }
  return r;
}

Report verify_degree_one(int order) {
  Report r("verify degree-one");
  r.inputs["order"] = order;
  const DegreeOneExampleReport x = check_degree_one_descendent(order);
  ordered_json w;
  if (x.first_difference) w["first_difference"] = *x.first_difference;
  r.expect(x.equal, "both sides agree through u^" + std::to_string(order), w);
  r.expect(x.gw_side_s3_free, "GW side is free of s3", to_json(x.gw_side));
  r.expect(x.k21_matches, "recovered K_(2),(1) = (s1+s2+s3)/(iu)", to_json(x.recovered_k21));
  r.results["pt_side"] = to_json(x.pt_side);
  r.results["gw_side"] = to_json(x.gw_side);
  r.results["recovered_k21"] = to_json(x.recovered_k21);
  return r;
}

Report verify_fundamental(int max_k) {
  Report r("verify fundamental");
  r.inputs["max_k"] = max_k;
  for (int k = 0; k <= max_k; ++k) {
    const mpz_class v = fundamental_identity(k);
    r.expect(v == (k <= 1 ? 1 : 0), "k=" + std::to_string(k), {{"k", k}, {"value", v.get_str()}});
  }
  return r;
}

Report verify_basid(const std::optional<Partition>& sigma, int max_size, int max_length) {
  Report r("verify basid");
  std::vector<Partition> cases;
  if (sigma) {
    r.inputs["alpha"] = sigma->to_string();
    cases.push_back(*sigma);
  } else {
    r.inputs["max"] = max_size;
    r.inputs["max_length"] = max_length;
    for (const auto& p : partitions_up_to(max_size)) {
      if (p.length() <= max_length) cases.push_back(p);
    }
  }
  int degree = max_size;
  for (const auto& c : cases) degree = std::max(degree, c.size());
  const CorrMatrixK K = extend_by_part_one(tabulated_entries(), degree);
  for (const auto& s : cases) {
    const std::string name = "sigma=" + s.to_display();
    const BasidReport b = basid_check(s, K, std::max(max_length, s.length()));
    r.expect(b.formal, name + " formal", {{"sigma", s.to_string()}});
    r.expect(b.inversion_formal, name + " inversion formal", {{"sigma", s.to_string()}});
    auto concrete = [&](CheckStatus st, const std::string& what) {
      if (st == CheckStatus::skipped) {
        r.skip(name + " " + what, b.note);
      } else {
        r.expect(st == CheckStatus::passed, name + " " + what, {{"sigma", s.to_string()}}, b.note);
      }
    };
    concrete(b.concrete, "concrete");
    concrete(b.inversion_concrete, "inversion concrete");
  }
  return r;
}

Report verify_k_structure(int max_degree) {
  Report r("verify k-structure");
  r.inputs["max_deg"] = max_degree;
  const CorrMatrixK K = extend_by_part_one(tabulated_entries(), max_degree);
  const auto violations = check_structure(K);
  ordered_json w = ordered_json::array();
  for (const auto& v : violations) {
    w.push_back({{"alpha", v.alpha.to_string()}, {"alpha_hat", v.alpha_hat.to_string()}, {"rule", v.rule},
                 {"detail", v.detail}});
  }
  r.expect(violations.empty(), "no structural violations through degree " + std::to_string(max_degree), w);

  struct Mutation {
    Partition alpha;
    Partition alpha_hat;
    ULaurent value;
    std::string rule;
  };
  const SymRatFunc skew = SymRatFunc::s1() + SymRatFunc(2) * SymRatFunc::s2() + SymRatFunc::s3();
  const SymRatFunc c1 = SymRatFunc::s1() + SymRatFunc::s2() + SymRatFunc::s3();
  const std::vector<Mutation> mutations{
      {Partition{2}, Partition{1, 1}, ULaurent(1), "vanishing"},
      {Partition{2}, Partition{1}, iu_power(-1) * ULaurent(skew), "symmetry"},
      {Partition{2}, Partition{2}, ULaurent(1), "diagonal"},
      {Partition{2, 1}, Partition{1}, iu_power(-1) * ULaurent(c1), "homogeneity"},
      {Partition{2, 1}, Partition{1}, iu_power(-1) * ULaurent(c1.inverse()), "polynomiality"},
      {Partition{2, 1, 1}, Partition{2}, ULaurent(1), "rank_tie"},
      {Partition{2, 1, 1}, Partition{2, 2}, ULaurent(1), "rank_order"},
      {Partition{2, 1, 1}, Partition{1, 1, 1, 1}, ULaurent(1), "dstar_order"},
  };
  for (const auto& m : mutations) {
    if (!K.has_row(m.alpha)) continue;
    CorrMatrixK bad = K;
    bad.set_entry(m.alpha, m.alpha_hat, m.value, Provenance::solved);
    const auto v = check_structure(bad);
    const bool flagged = std::any_of(v.begin(), v.end(), [&](const auto& x) { return x.rule == m.rule; });
    r.expect(flagged, "mutation at " + m.alpha.to_display() + "," + m.alpha_hat.to_display() + " flagged as " + m.rule,
             {{"alpha", m.alpha.to_string()}, {"alpha_hat", m.alpha_hat.to_string()}});
  }
  return r;
}

Report verify_ktilde(int max_degree) {
  Report r("verify ktilde");
  r.inputs["max_deg"] = max_degree;
  const CorrMatrixK K = extend_by_part_one(tabulated_entries(), max_degree);
  for (const auto& [sigma, row] : K.rows()) {
    bool ok = true;
    ordered_json w;
    for (const Partition& h : partitions_up_to(sigma.size())) {
      try {
        const ULaurent k = ktilde_s(sigma, h, K);
        const int expected = sigma.size() + sigma.length() - h.size() - h.length() - 3 * (sigma.length() - 1);
        for (const auto& c : k.coeffs()) {
          if (c.is_zero()) continue;
          const auto deg = c.homogeneous_degree();
          if (!deg || *deg != expected) {
            ok = false;
            w = {{"alpha_hat", h.to_string()}, {"coeff", to_json(k)}, {"expected_degree", expected}};
          }
        }
      } catch (const std::domain_error& e) {
        ok = false;
        w = {{"alpha_hat", h.to_string()}, {"error", e.what()}};
      }
      if (!ok) break;
    }
    r.expect(ok, "row " + sigma.to_display() + " divisible with the expected degrees", w);
  }
  const ULaurent c1 = ULaurent(SymRatFunc(SymPoly::var(0)));
  const ULaurent k21 = ktilde(Partition{2}, Partition{1}, K);
  r.expect(k21 == iu_power(-1) * c1, "K~_(2),(1) = c1/(iu)", to_json(k21, kCVars));
  if (K.has_row(Partition{2, 1})) {
    const ULaurent k211 = ktilde(Partition{2, 1}, Partition{1}, K);
    r.expect(k211 == -iu_power(-1), "K~_(2,1),(1) = -1/(iu)", to_json(k211, kCVars));
  }
  return r;
}

Report verify_schur(int max_d, int max_N) {
  Report r("verify schur");
  r.inputs["max_d"] = max_d;
  r.inputs["max_N"] = max_N;
  for (int d = 1; d <= max_d; ++d) {
    for (int N = 1; N <= max_N; ++N) {
      const std::string tag = "d=" + std::to_string(d) + " N=" + std::to_string(N);
      const ordered_json at = {{"d", d}, {"N", N}};
      const auto idx = partitions_with_empty(d);
      const auto m = skew_plus_matrix(d, N);
      bool triangular = true;
      ordered_json w = at;
      for (size_t a = 0; a < idx.size() && triangular; ++a) {
        for (size_t b = 0; b < idx.size(); ++b) {
          const bool zero = m[a][b].is_zero();
          if ((!eta_order_geq(idx[a], idx[b]) && !zero) || zero != !eta_plus(idx[a], N).contains(idx[b])) {
            triangular = false;
            w["nu"] = idx[a].to_string();
            w["eta"] = idx[b].to_string();
            w["entry"] = m[a][b].to_string();
            break;
          }
        }
      }
      r.expect(triangular, tag + " block triangular", w);
      for (const auto& b : skew_plus_blocks(d, N)) {
        r.expect(b.determinant == b.rectangle_schur, tag + " block theta=" + b.theta.to_display(),
                 {{"d", d}, {"N", N}, {"theta", b.theta.to_string()}, {"determinant", b.determinant.to_string()},
                  {"rectangle_schur", b.rectangle_schur.to_string()}});
      }
      r.expect(!determinant(m).is_zero(), tag + " full matrix invertible", at);
      const int rank = matrix_rank(vertex_pair_matrix(d, N));
      r.expect(rank == partition_count(d), tag + " vertex pair rank p(d)",
               {{"d", d}, {"N", N}, {"rank", rank}, {"p(d)", partition_count(d)}});
    }
  }
  return r;
}

Report verify_vandermonde(int max_d) {
  Report r("verify vandermonde");
  r.inputs["max_d"] = max_d;
  for (int d = 1; d <= max_d; ++d) {
    for (const auto& g : one_free_up_to(d)) {
      const auto v = vandermonde_block(g, d);
      r.expect(v.determinant != 0, "d=" + std::to_string(d) + " gamma=" + g.to_display(),
               {{"d", d}, {"gamma", g.to_string()}, {"determinant", v.determinant.get_str()}});
    }
  }
  return r;
}

Report verify_series(int order) {
  Report r("verify series");
  r.inputs["order"] = order;
  const QRatFunc q = QRatFunc::q();
  const QRatFunc one(1);
  const std::vector<std::pair<std::string, QRatFunc>> fs{
      {"(1-q)/(1+q)", (one - q) / (one + q)},
      {"q/(1+q)^2", q / ((one + q) * (one + q))},
      {"(1+q+q^2)/(1-q)", (one + q + q * q) / (one - q)},
      {"q^3", q * q * q},
  };
  const int work = order + 4;
  for (size_t a = 0; a < fs.size(); ++a) {
    for (size_t b = a; b < fs.size(); ++b) {
      const ULaurent ea = expand_q_to_u(fs[a].second, work);
      const ULaurent eb = expand_q_to_u(fs[b].second, work);
      const ULaurent prod = expand_q_to_u(fs[a].second * fs[b].second, work);
      const ULaurent sum = expand_q_to_u(fs[a].second + fs[b].second, work);
      const std::string tag = fs[a].first + ", " + fs[b].first;
      r.expect(prod.equal_through(ea * eb, order), "product " + tag, {{"f", fs[a].first}, {"g", fs[b].first}});
      r.expect(sum.equal_through(ea + eb, order), "sum " + tag, {{"f", fs[a].first}, {"g", fs[b].first}});
    }
    const ULaurent round = expand_q_to_u(fs[a].second, work) * expand_q_to_u(fs[a].second.inverse(), work);
    r.expect(round.equal_through(ULaurent(1), order), "inverse round trip " + fs[a].first, {{"f", fs[a].first}});
  }
  const ULaurent minus_exp = -exp_series(GaussianRational::i(), work);
  r.expect(expand_q_to_u(q, work).equal_through(minus_exp, order), "q -> -exp(iu)", nullptr);

  const ULaurent g = half_u_over_sin_half_u(order);
  const SymRatFunc x = SymRatFunc::s1() / SymRatFunc::s3();
  const SymRatFunc y = SymRatFunc::s2() + SymRatFunc(GaussianRational::fraction(1, 3));
  r.expect(series_pow(g, x + y, order).equal_through(series_pow(g, x, order) * series_pow(g, y, order), order),
           "series_pow exponent additivity", {{"x", x.to_string()}, {"y", y.to_string()}});
  r.expect(series_pow(g, SymRatFunc(0), order).equal_through(ULaurent(1), order), "series_pow at zero", nullptr);
  return r;
}

Report verify_all(int order) {
  const std::vector<std::function<Report()>> suites{
      [] { return verify_charsum(7); },
      [] { return verify_jm(6, 4); },
      [] { return verify_maxdeg_cap(7); },
      [] { return verify_cap_tube(6, TubeConvention::with_q_power); },
      [order] { return verify_degree_one(std::max(order, 20)); },
      [] { return verify_fundamental(9); },
      [] { return verify_basid(std::nullopt, 4, 3); },
      [] { return verify_k_structure(4); },
      [] { return verify_ktilde(4); },
      [] { return verify_schur(3, 3); },
      [] { return verify_vandermonde(8); },
      [order] { return verify_series(order); },
  };
  const auto reports = parallel_map(suites.size(), [&](size_t k) { return suites[k](); });
  Report all("verify all");
  all.inputs["order"] = order;
  for (const auto& rep : reports) {
    all.merge(rep);
    all.results[rep.command()] = rep.passed() ? "pass" : "fail";
  }
  return all;
}

}  // namespace gwpairs::cli
