#include "gwpairs/assembly/assembly.hpp"

#include "gwpairs/cap/cap_series.hpp"
#include "gwpairs/util/parallel.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace gwpairs {

std::string to_string(const HalfEdge& h) {
  return "(" + std::to_string(h.vertex) + "," + std::to_string(h.slot) + ")";
}

int ToricGraph::add_vertex(std::string name, std::array<SymRatFunc, 3> weights) {
  vertices_.push_back({std::move(name), std::move(weights)});
  return static_cast<int>(vertices_.size()) - 1;
}

void ToricGraph::claim(const HalfEdge& h) {
  if (h.vertex < 0 || h.vertex >= static_cast<int>(vertices_.size()) || h.slot < 0 || h.slot > 2) {
    throw std::invalid_argument("half-edge " + gwpairs::to_string(h) + " out of range");
  }
  if (used_[h]) throw std::invalid_argument("half-edge " + gwpairs::to_string(h) + " already in use");
  used_[h] = true;
}

int ToricGraph::add_edge(HalfEdge a, HalfEdge b, std::string curve_class) {
  if (a == b) throw std::invalid_argument("edge halves must differ");
  if (curve_class.empty()) throw std::invalid_argument("edge needs a curve class label");
  claim(a);
  claim(b);
  edges_.push_back({a, b, std::move(curve_class)});
  return static_cast<int>(edges_.size()) - 1;
}

void ToricGraph::add_leg(HalfEdge h, Partition lambda) {
  claim(h);
  legs_.push_back({h, std::move(lambda)});
}

std::vector<std::string> ToricGraph::classes() const {
  std::set<std::string> s;
  for (const auto& e : edges_) s.insert(e.curve_class);
  return {s.begin(), s.end()};
}

Partition CappedMarking::at(const HalfEdge& h) const {
  auto it = lambda.find(h);
  return it == lambda.end() ? Partition{} : it->second;
}

std::string CappedMarking::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [h, l] : lambda) {
    if (!first) os << ", ";
    first = false;
    os << gwpairs::to_string(h) << ":" << l.to_display();
  }
  os << "}";
  return os.str();
}

namespace {

std::vector<Partition> partitions_or_empty(int d) { return d == 0 ? std::vector<Partition>{Partition{}} : partitions_of(d); }

}  // namespace

std::vector<CappedMarking> enumerate_markings(const ToricGraph& g, const CurveClass& beta) {
  const auto classes = g.classes();
  std::map<std::string, int> remaining;
  for (const auto& [name, coord] : beta) {
    if (coord < 0) throw std::invalid_argument("curve class coordinate " + name + " is negative");
    if (coord == 0) continue;
    if (std::find(classes.begin(), classes.end(), name) == classes.end()) {
      throw std::invalid_argument("curve class " + name + " is carried by no edge; enumeration is unbounded");
    }
    remaining[name] = coord;
  }

  const auto& edges = g.edges();
  std::vector<std::vector<int>> degree_vectors;
  std::vector<int> cur(edges.size(), 0);
  std::function<void(size_t)> distribute = [&](size_t e) {
    if (e == edges.size()) {
      for (const auto& [name, r] : remaining) {
        if (r != 0) return;
      }
      degree_vectors.push_back(cur);
      return;
    }
    auto it = remaining.find(edges[e].curve_class);
    const int cap = it == remaining.end() ? 0 : it->second;
    for (int d = cap; d >= 0; --d) {
      cur[e] = d;
      if (it != remaining.end()) it->second -= d;
      distribute(e + 1);
      if (it != remaining.end()) it->second += d;
    }
  };
  distribute(0);

  std::vector<CappedMarking> out;
  for (const auto& degrees : degree_vectors) {
    CappedMarking base;
    base.edge_degree = degrees;
    for (const auto& leg : g.legs()) base.lambda[leg.half] = leg.lambda;
    std::vector<CappedMarking> partial{base};
    for (size_t e = 0; e < edges.size(); ++e) {
      const auto choices = partitions_or_empty(degrees[e]);
      std::vector<CappedMarking> next;
      for (const auto& m : partial) {
        for (const auto& la : choices) {
          for (const auto& lb : choices) {
            CappedMarking n = m;
            if (!la.empty()) n.lambda[edges[e].a] = la;
            if (!lb.empty()) n.lambda[edges[e].b] = lb;
            next.push_back(std::move(n));
          }
        }
      }
      partial = std::move(next);
    }
    for (auto& m : partial) out.push_back(std::move(m));
  }
  return out;
}

SymRatFunc gluing_weight(const ToricGraph& g, const HalfEdge& h, const Partition& lambda) {
  if (lambda.empty()) return SymRatFunc(1);
  const auto& w = g.vertices().at(static_cast<size_t>(h.vertex)).weights;
  const SymRatFunc& si = w.at(static_cast<size_t>(h.slot));
  if (si.is_zero()) throw std::domain_error("zero tangent weight at half-edge " + to_string(h));
  const SymRatFunc ratio = w[0] * w[1] * w[2] / si;
  return SymRatFunc(GaussianRational(z_factor(lambda))) * ratio.pow(lambda.length());
}

PTSeries gluing_P(const ToricGraph& g, const HalfEdge& h, const CappedMarking& m) {
  const Partition lambda = m.at(h);
  const long sign = (lambda.size() - lambda.length()) % 2 == 0 ? 1 : -1;
  return PTSeries::q_power(-lambda.size(), SymRatFunc(sign) * gluing_weight(g, h, lambda));
}

ULaurent gluing_GW(const ToricGraph& g, const HalfEdge& h, const CappedMarking& m) {
  const Partition lambda = m.at(h);
  return ULaurent::monomial(2 * lambda.length(), gluing_weight(g, h, lambda));
}

std::string VertexQuery::to_string() const {
  std::string s = "vertex " + std::to_string(vertex);
  if (data != nullptr && !data->name.empty()) s += " (" + data->name + ")";
  s += " descendents " + descendents.to_display() + " lambda [" + lambda[0].to_display() + "," +
       lambda[1].to_display() + "," + lambda[2].to_display() + "]";
  return s;
}

std::string EdgeQuery::to_string() const {
  return "edge " + std::to_string(edge) + " degree " + std::to_string(degree) + " lambda " + lambda.to_display() +
         " lambda' " + lambda_prime.to_display();
}

namespace {

bool single_pure_leg(const VertexQuery& q) {
  int nonempty = 0;
  const Partition* leg = nullptr;
  for (const auto& l : q.lambda) {
    if (!l.empty()) {
      ++nonempty;
      leg = &l;
    }
  }
  return nonempty == 1 && leg->multiplicity(1) == 0 && q.descendents == *leg;
}

const Partition& the_leg(const VertexQuery& q) {
  for (const auto& l : q.lambda) {
    if (!l.empty()) return l;
  }
  throw UnsupportedInput("vertex has no leg");
}

}  // namespace

bool PureCapProviderPT::supports_vertex(const VertexQuery& q) const { return single_pure_leg(q); }

PTSeries PureCapProviderPT::capped_vertex(const VertexQuery& q) const {
  if (!supports_vertex(q)) throw UnsupportedInput("caps provider does not support " + q.to_string());
  return PTSeries(pt_cap_pure(the_leg(q)));
}

PTSeries PureCapProviderPT::capped_edge(const EdgeQuery& q) const { return PTSeries(q.lambda == q.lambda_prime ? 1L : 0L); }

bool PureCapProviderGW::supports_vertex(const VertexQuery& q) const { return single_pure_leg(q); }

ULaurent PureCapProviderGW::capped_vertex(const VertexQuery& q) const {
  if (!supports_vertex(q)) throw UnsupportedInput("caps provider does not support " + q.to_string());
  return gw_cap_pure(the_leg(q));
}

ULaurent PureCapProviderGW::capped_edge(const EdgeQuery& q) const { return ULaurent(q.lambda == q.lambda_prime ? 1L : 0L); }

namespace {

template <class S, class Glue>
S assemble_impl(const ToricGraph& g, const DescendentPlacement& sigma, const CurveClass& beta,
                const BlockProvider<S>& provider, Glue glue) {
  const int nv = static_cast<int>(g.vertices().size());
  std::vector<std::vector<int>> parts(static_cast<size_t>(nv));
  for (const auto& ins : sigma) {
    if (ins.vertex < 0 || ins.vertex >= nv) throw std::invalid_argument("descendent placed at a missing vertex");
    if (ins.part < 1) throw std::invalid_argument("descendent parts must be positive");
    parts[static_cast<size_t>(ins.vertex)].push_back(ins.part);
  }
  const auto markings = enumerate_markings(g, beta);

  auto term = [&](size_t k) -> S {
    const CappedMarking& m = markings[k];
    S prod(1L);
    for (int v = 0; v < nv; ++v) {
      VertexQuery q;
      q.vertex = v;
      q.data = &g.vertices()[static_cast<size_t>(v)];
      q.descendents = Partition(parts[static_cast<size_t>(v)]);
      for (int i = 0; i < 3; ++i) q.lambda[static_cast<size_t>(i)] = m.at({v, i});
      const bool bare = q.lambda[0].empty() && q.lambda[1].empty() && q.lambda[2].empty();
      if (bare && q.descendents.empty()) continue;
      if (bare) {
        throw std::invalid_argument("capped " + q.to_string() +
                                    " violates |lambda1|+|lambda2|+|lambda3| > 0 in marking " + m.to_string());
      }
      if (!provider.supports_vertex(q)) {
        throw UnsupportedInput(provider.name() + " provider does not support " + q.to_string() + " in marking " +
                               m.to_string());
      }
      prod *= provider.capped_vertex(q);
    }
    for (size_t e = 0; e < g.edges().size(); ++e) {
      if (m.edge_degree[e] == 0) continue;
      const ToricEdge& edge = g.edges()[e];
      EdgeQuery q{static_cast<int>(e), &edge, m.edge_degree[e], m.at(edge.a), m.at(edge.b)};
      if (!provider.supports_edge(q)) {
        throw UnsupportedInput(provider.name() + " provider does not support " + q.to_string() + " in marking " +
                               m.to_string());
      }
      prod *= provider.capped_edge(q);
      prod *= glue(g, edge.a, m) * glue(g, edge.b, m);
    }
    return prod;
  };

  const auto terms = parallel_map(markings.size(), term, provider.thread_safe());
  S sum(0L);
  for (const auto& t : terms) sum += t;
  return sum;
}

}  // namespace

PTSeries assemble_pt(const ToricGraph& g, const DescendentPlacement& sigma, const CurveClass& beta,
                     const PTProvider& provider) {
  return assemble_impl<PTSeries>(g, sigma, beta, provider, gluing_P);
}

ULaurent assemble_gw(const ToricGraph& g, const DescendentPlacement& sigma, const CurveClass& beta,
                     const GWProvider& provider) {
  return assemble_impl<ULaurent>(g, sigma, beta, provider, gluing_GW);
}

PTSeries degeneration_kernel_pt(const Partition& mu) {
  const long sign = (mu.size() - mu.length()) % 2 == 0 ? 1 : -1;
  return PTSeries::q_power(-mu.size(), SymRatFunc(GaussianRational(mpz_class(z_factor(mu) * sign))));
}

ULaurent degeneration_kernel_gw(const Partition& mu) {
  return ULaurent::monomial(2 * mu.length(), SymRatFunc(GaussianRational(z_factor(mu))));
}

namespace {

template <class S, class Kernel>
S combine_impl(const std::map<Partition, S>& z1, const std::map<Partition, S>& z2, Kernel kernel) {
  if (z1.size() != z2.size()) throw std::invalid_argument("relative tables have different index sets");
  S sum(0L);
  for (const auto& [mu, a] : z1) {
    auto it = z2.find(mu);
    if (it == z2.end()) throw std::invalid_argument("relative table lacks the index " + mu.to_display());
    sum += a * kernel(mu) * it->second;
  }
  return sum;
}

}  // namespace

PTSeries degenerate_combine(const std::map<Partition, PTSeries>& z1, const std::map<Partition, PTSeries>& z2) {
  return combine_impl(z1, z2, degeneration_kernel_pt);
}

ULaurent degenerate_combine(const std::map<Partition, ULaurent>& z1, const std::map<Partition, ULaurent>& z2) {
  return combine_impl(z1, z2, degeneration_kernel_gw);
}

}  // namespace gwpairs
