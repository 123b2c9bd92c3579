#include "report.hpp"
#include "serialize.hpp"
#include "suites.hpp"

#include "CLI11.hpp"

#include "gwpairs/algebra/matrix.hpp"
#include "gwpairs/corr/corr_matrix.hpp"
#include "gwpairs/io/expression.hpp"
#include "gwpairs/partitions/partition.hpp"
#include "gwpairs/symfunc/schur.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

namespace gwpairs::cli {
namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "json";
  std::string out;
  bool timing = false;
};

/// One line per result; objects carrying a "text" field print that field.
std::string results_text(const ordered_json& results) {
  std::string out;
  for (const auto& [key, value] : results.items()) {
    const bool has_text = value.is_object() && value.contains("text");
    out += key + ": " + (has_text ? value["text"].get<std::string>() : value.dump()) + "\n";
  }
  return out;
}

int emit(const Report& r, const Options& o, double ms) {
  const ordered_json j = r.to_json(o.timing ? std::optional<double>(ms) : std::nullopt);
  std::string text = o.format == "text" ? results_text(r.results) + r.summary() : j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw std::invalid_argument("cannot write " + o.out);
    f << text;
  }
  if (o.format == "json") std::cerr << r.summary();
  return r.passed() ? kExitPass : kExitFail;
}

ordered_json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read " + path);
  try {
    return ordered_json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

CorrMatrixK load_k(const std::string& path, int max_deg) {
  if (!path.empty()) return k_from_json(read_json_file(path));
  return extend_by_part_one(tabulated_entries(), max_deg);
}

Report cap_report(const std::string& kind, const ordered_json& input, const std::string& closed,
                  const std::optional<std::string>& oracle, std::optional<bool> equal) {
  Report r("cap " + kind);
  r.inputs = input;
  r.results["input"] = input;
  r.results["closed_form"] = closed;
  r.results["oracle"] = oracle ? ordered_json(*oracle) : ordered_json(nullptr);
  r.results["equal"] = equal ? ordered_json(*equal) : ordered_json(nullptr);
  if (equal) r.expect(*equal, "closed form equals oracle", {{"closed_form", closed}, {"oracle", *oracle}});
  return r;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Descendent correspondence toolkit for toric threefolds"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", opt.out, "Write output to a file instead of stdout");
  app.add_flag("--timing", opt.timing, "Include timing_ms in the JSON output");

  std::function<Report()> action;

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  int order = 12;
  verify->add_option("--order", order, "Series order in u")->check(CLI::Range(1, 200));

  int charsum_n = 7;
  auto* v_charsum = verify->add_subcommand("charsum", "Character sum identity");
  v_charsum->add_option("--max,--max-n", charsum_n)->check(CLI::Range(1, 12));
  v_charsum->callback([&] { action = [&] { return verify_charsum(charsum_n); }; });

  int jm_n = 6;
  int jm_r = 4;
  auto* v_jm = verify->add_subcommand("jm", "Content power sums against the Jucys-Murphy trace");
  v_jm->add_option("--max", jm_n)->check(CLI::Range(1, 7));
  v_jm->add_option("--max-r", jm_r)->check(CLI::Range(0, 8));
  v_jm->callback([&] { action = [&] { return verify_jm(jm_n, jm_r); }; });

  int maxdeg_n = 7;
  auto* v_maxdeg = verify->add_subcommand("maxdeg-cap", "Maximal degree cap closed form against localization");
  v_maxdeg->add_option("--max", maxdeg_n)->check(CLI::Range(1, 9));
  v_maxdeg->callback([&] { action = [&] { return verify_maxdeg_cap(maxdeg_n); }; });

  int cap_tube_n = 6;
  std::string tube = "with-q-power";
  auto* v_cap_tube = verify->add_subcommand("cap-tube", "Cap and tube composition sum");
  v_cap_tube->alias("lee5");
  v_cap_tube->add_option("--max", cap_tube_n)->check(CLI::Range(1, 8));
  v_cap_tube->add_option("--tube", tube)->check(CLI::IsMember({"printed", "with-q-power"}));
  v_cap_tube->callback([&] {
    action = [&] {
      return verify_cap_tube(cap_tube_n, tube == "printed" ? TubeConvention::printed : TubeConvention::with_q_power);
    };
  });

  auto* v_ex = verify->add_subcommand("degree-one", "Degree one descendent example");
  v_ex->alias("example-3-5");
  v_ex->callback([&] {
    const int o = v_ex->count("--order") || verify->count("--order") ? order : 20;
    action = [o] { return verify_degree_one(o); };
  });
  v_ex->add_option("--order", order)->check(CLI::Range(1, 200));

  int max_k = 9;
  auto* v_fund = verify->add_subcommand("fundamental", "Set partition sign identity");
  v_fund->add_option("--max-k", max_k)->check(CLI::Range(0, 12));
  v_fund->callback([&] { action = [&] { return verify_fundamental(max_k); }; });

  std::string basid_alpha;
  int basid_max = 4;
  int basid_len = 3;
  auto* v_basid = verify->add_subcommand("basid", "Two-point identity behind divisibility");
  v_basid->add_option("--alpha", basid_alpha, "A single partition, e.g. 2,1");
  v_basid->add_option("--max", basid_max)->check(CLI::Range(1, 5));
  v_basid->add_option("--max-length", basid_len)->check(CLI::Range(1, 4));
  v_basid->callback([&] {
    action = [&] {
      std::optional<Partition> sigma;
      if (!basid_alpha.empty()) sigma = Partition::parse(basid_alpha);
      return verify_basid(sigma, basid_max, basid_len);
    };
  });

  int kdeg = 4;
  auto* v_kstruct = verify->add_subcommand("k-structure", "Structural constraints on the correspondence matrix");
  v_kstruct->add_option("--max-deg", kdeg)->check(CLI::Range(1, 4));
  v_kstruct->callback([&] { action = [&] { return verify_k_structure(kdeg); }; });

  auto* v_ktilde = verify->add_subcommand("ktilde", "Divisibility and degrees of the normalized matrix");
  v_ktilde->add_option("--max-deg", kdeg)->check(CLI::Range(1, 4));
  v_ktilde->callback([&] { action = [&] { return verify_ktilde(kdeg); }; });

  int schur_d = 3;
  int schur_n = 3;
  auto* v_schur = verify->add_subcommand("schur", "Skew Schur matrix triangularity and invertibility");
  v_schur->add_option("--max-d", schur_d)->check(CLI::Range(1, 5));
  v_schur->add_option("--max-N", schur_n)->check(CLI::Range(1, 5));
  v_schur->callback([&] { action = [&] { return verify_schur(schur_d, schur_n); }; });

  int vdm_d = 8;
  auto* v_vdm = verify->add_subcommand("vandermonde", "Vandermonde block determinants");
  v_vdm->add_option("--max-d", vdm_d)->check(CLI::Range(1, 12));
  v_vdm->callback([&] { action = [&] { return verify_vandermonde(vdm_d); }; });

  auto* v_series = verify->add_subcommand("series", "q to u expansion and series powers");
  v_series->callback([&] { action = [&] { return verify_series(order); }; });

  auto* v_all = verify->add_subcommand("all", "Every suite at its default depth");
  v_all->callback([&] { action = [&] { return verify_all(order); }; });

  // k-matrix
  int km_deg = 4;
  bool km_tilde = false;
  auto* kmatrix = app.add_subcommand("k-matrix", "Print the correspondence matrix");
  kmatrix->add_option("--max-deg", km_deg)->check(CLI::Range(1, 4));
  kmatrix->add_flag("--tilde", km_tilde, "Print the normalized matrix in c-variables");
  kmatrix->callback([&] {
    action = [&] {
      Report r(km_tilde ? "k-matrix --tilde" : "k-matrix");
      r.inputs["max_deg"] = km_deg;
      const CorrMatrixK K = extend_by_part_one(tabulated_entries(), km_deg);
      if (!km_tilde) {
        r.results["records"] = to_json(K);
        return r;
      }
      ordered_json records = ordered_json::array();
      for (const auto& [sigma, row] : K.rows()) {
        for (const auto& h : partitions_up_to(sigma.size())) {
          try {
            const ULaurent k = ktilde(sigma, h, K);
            if (k.is_zero()) continue;
            records.push_back({{"alpha", sigma.to_string()}, {"alpha_hat", h.to_string()}, {"coeff", to_json(k, kCVars)}});
          } catch (const std::domain_error& e) {
            r.fail("row " + sigma.to_display() + " column " + h.to_display(), {{"error", e.what()}});
          }
        }
      }
      r.results["records"] = std::move(records);
      return r;
    };
  });

  // k-check
  std::string k_input;
  auto* kcheck = app.add_subcommand("k-check", "Run the structural constraints on a K matrix from JSON");
  kcheck->add_option("--input", k_input)->required()->check(CLI::ExistingFile);
  kcheck->callback([&] {
    action = [&] {
      Report r("k-check");
      r.inputs["input"] = k_input;
      const CorrMatrixK K = k_from_json(read_json_file(k_input));
      for (const auto& v : check_structure(K)) {
        r.fail(v.rule + " at " + v.alpha.to_display() + "," + v.alpha_hat.to_display(),
               {{"alpha", v.alpha.to_string()}, {"alpha_hat", v.alpha_hat.to_string()}, {"rule", v.rule}}, v.detail);
      }
      if (r.checks().empty()) r.pass("all structural constraints hold");
      return r;
    };
  });

  // cap
  auto* cap = app.add_subcommand("cap", "Closed form cap series");
  cap->require_subcommand(1);
  std::string cap_part;
  int cap_d = 0;
  int cap_e = 0;
  std::string cap_tube = "with-q-power";

  auto* c_ptp = cap->add_subcommand("pt-pure", "Pure stable pairs cap");
  c_ptp->add_option("--gamma", cap_part)->required();
  c_ptp->callback([&] {
    action = [&] {
      const Partition g = Partition::parse(cap_part);
      return cap_report("pt-pure", {{"gamma", g.to_string()}}, pt_cap_pure(g).to_string(), std::nullopt, std::nullopt);
    };
  });

  auto* c_gwp = cap->add_subcommand("gw-pure", "Pure Gromov-Witten cap");
  c_gwp->add_option("--gamma", cap_part)->required();
  c_gwp->callback([&] {
    action = [&] {
      const Partition g = Partition::parse(cap_part);
      return cap_report("gw-pure", {{"gamma", g.to_string()}}, gw_cap_pure(g).to_string(), std::nullopt, std::nullopt);
    };
  });

  auto* c_max = cap->add_subcommand("maxdeg", "Maximal degree cap, checked against localization");
  c_max->add_option("--alpha", cap_part)->required();
  c_max->add_option("--d", cap_d, "Degree; defaults to |alpha| - l(alpha) + 1");
  c_max->callback([&] {
    action = [&] {
      const Partition a = Partition::parse(cap_part);
      const int d = c_max->count("--d") ? cap_d : a.size() - a.length() + 1;
      const CapSeriesP closed = pt_cap_maxdeg(a, d);
      const CapSeriesP oracle = pt_cap_maxdeg_oracle(a);
      return cap_report("maxdeg", {{"alpha", a.to_string()}, {"d", d}}, closed.to_string(), oracle.to_string(),
                        closed == oracle);
    };
  });

  auto* c_oracle = cap->add_subcommand("oracle", "Localization sum for the maximal degree cap");
  c_oracle->add_option("--alpha", cap_part)->required();
  c_oracle->callback([&] {
    action = [&] {
      const Partition a = Partition::parse(cap_part);
      return cap_report("oracle", {{"alpha", a.to_string()}}, pt_cap_maxdeg_oracle(a).to_string(), std::nullopt,
                        std::nullopt);
    };
  });

  auto* c_tube_sum = cap->add_subcommand("tube-sum", "Cap and tube composition sum against its closed form");
  c_tube_sum->alias("lee5");
  c_tube_sum->add_option("--gamma", cap_part)->required();
  c_tube_sum->add_option("--tube", cap_tube)->check(CLI::IsMember({"printed", "with-q-power"}));
  c_tube_sum->callback([&] {
    action = [&] {
      const Partition g = Partition::parse(cap_part);
      const ordered_json in = {{"gamma", g.to_string()}, {"tube", cap_tube}};
      const CapSeriesP closed = cap_tube_closed_pt(g);
      try {
        const CapSeriesP sum =
            cap_tube_sum_pt(g, cap_tube == "printed" ? TubeConvention::printed : TubeConvention::with_q_power);
        return cap_report("tube-sum", in, closed.to_string(), sum.to_string(), closed == sum);
      } catch (const std::runtime_error& e) {
        Report r = cap_report("tube-sum", in, closed.to_string(), std::nullopt, false);
        r.fail("composition sum reduces", {{"error", e.what()}});
        return r;
      }
    };
  });

  auto* c_tube = cap->add_subcommand("tube", "Tube series with e parts equal to 1");
  c_tube->add_option("--e", cap_e)->required()->check(CLI::Range(0, 20));
  c_tube->callback([&] {
    action = [&] {
      return cap_report("tube", {{"e", cap_e}}, pt_tube_ones(cap_e).to_string(), std::nullopt, std::nullopt);
    };
  });

  // tau
  auto* tau = app.add_subcommand("tau", "Descendent transforms");
  tau->require_subcommand(1);
  std::string tau_alpha;
  std::string tau_hat;
  std::string tau_k;
  int tau_deg = 4;
  auto tau_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", tau_alpha)->required();
    sub->add_option("--k", tau_k, "K matrix JSON; defaults to the built-in entries")->check(CLI::ExistingFile);
    sub->add_option("--max-deg", tau_deg)->check(CLI::Range(1, 4));
  };
  auto tau_action = [&](const std::string& kind, std::function<ordered_json(const Partition&, const CorrMatrixK&)> f) {
    action = [&, kind, f] {
      Report r("tau " + kind);
      const Partition a = Partition::parse(tau_alpha);
      r.inputs["alpha"] = a.to_string();
      const CorrMatrixK K = load_k(tau_k, std::max(tau_deg, a.size() + 1));
      r.results = f(a, K);
      return r;
    };
  };
  auto* t_hat = tau->add_subcommand("hat", "Correspondence image");
  tau_common(t_hat);
  t_hat->callback([&] { tau_action("hat", [](const Partition& a, const CorrMatrixK& K) { return to_json(hat(a, K)); }); });
  auto* t_tilde = tau->add_subcommand("tilde", "Normalized correspondence image");
  tau_common(t_tilde);
  t_tilde->callback(
      [&] { tau_action("tilde", [](const Partition& a, const CorrMatrixK& K) { return to_json(tilde(a, K)); }); });
  auto* t_add = tau->add_subcommand("add-one", "Image of the partition with an added part 1");
  tau_common(t_add);
  t_add->callback([&] {
    tau_action("add-one", [](const Partition& a, const CorrMatrixK& K) { return to_json(add_part_one(a, K)); });
  });
  auto* t_kt = tau->add_subcommand("ktilde", "Normalized matrix entry in c-variables");
  tau_common(t_kt);
  t_kt->add_option("--alpha-hat", tau_hat)->required();
  t_kt->callback([&] {
    tau_action("ktilde", [&](const Partition& a, const CorrMatrixK& K) {
      const Partition h = Partition::parse(tau_hat);
      return ordered_json{{"alpha_hat", h.to_string()}, {"coeff", to_json(ktilde(a, h, K), kCVars)}};
    });
  });

  // schur-rank
  int sr_d = 2;
  int sr_n = 2;
  auto* srank = app.add_subcommand("schur-rank", "Rank of the vertex pair matrix");
  srank->add_option("--d", sr_d)->required()->check(CLI::Range(1, 5));
  srank->add_option("--N", sr_n)->required()->check(CLI::Range(1, 5));
  srank->callback([&] {
    action = [&] {
      Report r("schur-rank");
      r.inputs = {{"d", sr_d}, {"N", sr_n}};
      const int rank = matrix_rank(vertex_pair_matrix(sr_d, sr_n));
      const long p = partition_count(sr_d);
      r.results = {{"rank", rank}, {"partition_count", p}};
      r.expect(rank == p, "rank equals p(d)", {{"rank", rank}, {"partition_count", p}});
      return r;
    };
  });

  // assemble
  std::string graph_path;
  std::string beta_text;
  std::string theory = "pt";
  std::string provider = "caps";
  std::string desc_text;
  auto* assemble = app.add_subcommand("assemble", "Capped localization sum over a toric graph");
  assemble->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  assemble->add_option("--beta", beta_text, "Curve class, e.g. C=2,D=1")->required();
  assemble->add_option("--theory", theory)->check(CLI::IsMember({"pt", "gw"}));
  assemble->add_option("--provider", provider)->check(CLI::IsMember({"caps"}));
  assemble->add_option("--descendents", desc_text, "vertex:part pairs, e.g. 0:2,0:3");
  assemble->add_option("--order", order)->check(CLI::Range(1, 200));
  assemble->callback([&] {
    action = [&] {
      Report r("assemble");
      const ToricGraph g = graph_from_json(read_json_file(graph_path));
      const CurveClass beta = parse_curve_class(beta_text);
      const DescendentPlacement sigma = parse_placement(desc_text);
      r.inputs = {{"graph", graph_path}, {"beta", beta_text}, {"theory", theory}, {"provider", provider},
                  {"descendents", desc_text}};
      r.results["markings"] = enumerate_markings(g, beta).size();
      if (theory == "pt") {
        const PTSeries z = assemble_pt(g, sigma, beta, PureCapProviderPT{});
        r.results["series"] = to_json(z);
        if (z.kappa() == 1) r.results["u_expansion"] = to_json(z.expand_u(order));
      } else {
        r.results["series"] = to_json(assemble_gw(g, sigma, beta, PureCapProviderGW{}));
      }
      return r;
    };
  });

  // expand
  std::string expr;
  auto* expand = app.add_subcommand("expand", "Expand a rational function of q under -q = e^{iu}");
  expand->add_option("--expr", expr)->required();
  expand->add_option("--order", order)->check(CLI::Range(0, 200));
  expand->callback([&] {
    action = [&] {
      Report r("expand");
      r.inputs = {{"expr", expr}, {"order", order}};
      const PTSeries f = parse_expression(expr);
      r.results["input"] = to_json(f);
      r.results["series"] = to_json(f.expand_u(order));
      return r;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (!action) {
    std::cerr << app.help();
    return kExitUsage;
  }
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const Report r = action();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return emit(r, opt, ms);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gwpairs::cli

int main(int argc, char** argv) { return gwpairs::cli::run(argc, argv); }
