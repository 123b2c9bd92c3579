#include "serialize.hpp"

#include "gwpairs/io/expression.hpp"

#include <sstream>
#include <stdexcept>

namespace gwpairs::cli {

ordered_json to_json(const ULaurent& f, const VarNames& names) {
  ordered_json terms = ordered_json::array();
  for (size_t k = 0; k < f.coeffs().size(); ++k) {
    const SymRatFunc& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    terms.push_back({{"u_power", f.min_pow() + static_cast<int>(k)}, {"value", c.to_string(names)}});
  }
  ordered_json j;
  j["text"] = f.to_string(names);
  j["terms"] = std::move(terms);
  j["truncation"] = f.is_exact() ? ordered_json(nullptr) : ordered_json(f.truncation());
  return j;
}

ULaurent laurent_from_json(const ordered_json& j) {
  if (j.is_string()) return ULaurent(parse_sym_expression(j.get<std::string>()));
  ULaurent f = ULaurent::zero();
  for (const auto& t : j.at("terms")) {
    f += ULaurent::monomial(t.at("u_power").get<int>(), parse_sym_expression(t.at("value").get<std::string>()));
  }
  if (j.contains("truncation") && !j.at("truncation").is_null()) f = f.truncated(j.at("truncation").get<int>());
  return f;
}

ordered_json to_json(const PTSeries& f) {
  ordered_json j;
  j["text"] = f.to_string();
  j["kappa"] = f.kappa();
  return j;
}

ordered_json to_json(const DescendentPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    ordered_json t;
    t["monomial"] = m.degree() == 0 ? "1" : m.to_string();
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  return {{"text", p.to_string()}, {"terms", std::move(terms)}};
}

ordered_json to_json(const CorrMatrixK& K) {
  ordered_json records = ordered_json::array();
  for (const auto& [alpha, row] : K.rows()) {
    for (const auto& [h, e] : row) {
      ordered_json r;
      r["alpha"] = alpha.to_string();
      r["alpha_hat"] = h.to_string();
      r["coeff"] = to_json(e.coeff);
      r["provenance"] = to_string(e.provenance);
      records.push_back(std::move(r));
    }
  }
  return records;
}

CorrMatrixK k_from_json(const ordered_json& j) {
  const ordered_json& records = j.is_object() ? j.at("records") : j;
  if (!records.is_array()) throw std::invalid_argument("K input must be an array of records");
  CorrMatrixK K;
  for (const auto& r : records) {
    const Partition alpha = Partition::parse(r.at("alpha").get<std::string>());
    const Partition h = Partition::parse(r.at("alpha_hat").get<std::string>());
    const Provenance prov = r.contains("provenance") ? parse_provenance(r.at("provenance").get<std::string>())
                                                     : Provenance::solved;
    K.ensure_row(alpha);
    K.set_entry(alpha, h, laurent_from_json(r.at("coeff")), prov);
  }
  return K;
}

namespace {

HalfEdge half_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("half-edge must be [vertex, slot]");
  return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

ToricGraph graph_from_json(const ordered_json& j) {
  ToricGraph g;
  for (const auto& v : j.at("vertices")) {
    const auto& w = v.at("weights");
    if (!w.is_array() || w.size() != 3) throw std::invalid_argument("vertex weights must be three strings");
    g.add_vertex(v.value("name", ""), {parse_sym_expression(w[0].get<std::string>()),
                                       parse_sym_expression(w[1].get<std::string>()),
                                       parse_sym_expression(w[2].get<std::string>())});
  }
  for (const auto& e : j.value("edges", ordered_json::array())) {
    g.add_edge(half_from_json(e.at("a")), half_from_json(e.at("b")), e.at("class").get<std::string>());
  }
  for (const auto& l : j.value("legs", ordered_json::array())) {
    g.add_leg(half_from_json(l.at("half")), Partition::parse(l.at("lambda").get<std::string>()));
  }
  return g;
}

CurveClass parse_curve_class(const std::string& text) {
  CurveClass beta;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("curve class terms look like C=2: " + item);
    beta[item.substr(0, eq)] += std::stoi(item.substr(eq + 1));
  }
  return beta;
}

DescendentPlacement parse_placement(const std::string& text) {
  DescendentPlacement sigma;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("descendents look like vertex:part: " + item);
    sigma.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
  }
  return sigma;
}

}  // namespace gwpairs::cli
