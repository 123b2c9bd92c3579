#pragma once

#include "gwpairs/algebra/laurent.hpp"
#include "gwpairs/assembly/pt_series.hpp"
#include "gwpairs/partitions/partition.hpp"

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwpairs {

/// Slot i in 0..2 of a vertex: the half-edge along the i-th tangent direction.
struct HalfEdge {
  int vertex = 0;
  int slot = 0;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};
std::string to_string(const HalfEdge& h);

struct ToricVertex {
  std::string name;
  std::array<SymRatFunc, 3> weights;
};

/// Compact edge joining two half-edges, labeled by a curve-class generator.
struct ToricEdge {
  HalfEdge a;
  HalfEdge b;
  std::string curve_class;
};

/// Noncompact half-edge carrying a fixed relative condition.
struct Leg {
  HalfEdge half;
  Partition lambda;
};

/// Coordinates of a curve class in the named generators; absent names are 0.
using CurveClass = std::map<std::string, int>;

class ToricGraph {
 public:
  int add_vertex(std::string name, std::array<SymRatFunc, 3> weights);
  /// Throws std::invalid_argument if a half-edge is out of range or in use.
  int add_edge(HalfEdge a, HalfEdge b, std::string curve_class);
  void add_leg(HalfEdge h, Partition lambda);

  const std::vector<ToricVertex>& vertices() const { return vertices_; }
  const std::vector<ToricEdge>& edges() const { return edges_; }
  const std::vector<Leg>& legs() const { return legs_; }
  /// Sorted curve-class generators appearing on edges.
  std::vector<std::string> classes() const;

 private:
  void claim(const HalfEdge& h);

  std::vector<ToricVertex> vertices_;
  std::vector<ToricEdge> edges_;
  std::vector<Leg> legs_;
  std::map<HalfEdge, bool> used_;
};

/// Balanced assignment of partitions to half-edges: both halves of edge e
/// carry partitions of edge_degree[e]; legs carry their fixed partitions.
struct CappedMarking {
  std::vector<int> edge_degree;
  std::map<HalfEdge, Partition> lambda;

  /// The partition at h; empty when h is unassigned.
  Partition at(const HalfEdge& h) const;
  std::string to_string() const;
};

/// All markings with sum_e edge_degree[e] [C_e] = beta, in a deterministic
/// order. Throws std::invalid_argument when beta has a negative coordinate or
/// a positive coordinate on a generator carried by no edge.
std::vector<CappedMarking> enumerate_markings(const ToricGraph& g, const CurveClass& beta);

/// z(lambda) (prod_j s_j / s_i)^{l(lambda)} at the half-edge (v, i). Throws
/// std::domain_error when lambda is nonempty and s_i vanishes.
SymRatFunc gluing_weight(const ToricGraph& g, const HalfEdge& h, const Partition& lambda);
/// (-1)^{|lambda| - l(lambda)} gluing_weight q^{-|lambda|}.
PTSeries gluing_P(const ToricGraph& g, const HalfEdge& h, const CappedMarking& m);
/// gluing_weight u^{2 l(lambda)}.
ULaurent gluing_GW(const ToricGraph& g, const HalfEdge& h, const CappedMarking& m);

/// tau_{part - 1}(p) placed at a vertex.
struct DescendentInsertion {
  int vertex = 0;
  int part = 1;
};
using DescendentPlacement = std::vector<DescendentInsertion>;

struct VertexQuery {
  int vertex = 0;
  const ToricVertex* data = nullptr;
  Partition descendents;
  std::array<Partition, 3> lambda;
  std::string to_string() const;
};

struct EdgeQuery {
  int edge = 0;
  const ToricEdge* data = nullptr;
  int degree = 0;
  Partition lambda;        // at edge.a
  Partition lambda_prime;  // at edge.b
  std::string to_string() const;
};

class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Source of capped vertex and capped edge series for one theory.
template <class Series>
class BlockProvider {
 public:
  virtual ~BlockProvider() = default;
  virtual std::string name() const = 0;
  virtual bool supports_vertex(const VertexQuery& q) const = 0;
  virtual bool supports_edge(const EdgeQuery& q) const = 0;
  virtual Series capped_vertex(const VertexQuery& q) const = 0;
  virtual Series capped_edge(const EdgeQuery& q) const = 0;
  /// Providers that are not safe for concurrent calls serialize the sum.
  virtual bool thread_safe() const { return true; }
};

using PTProvider = BlockProvider<PTSeries>;
using GWProvider = BlockProvider<ULaurent>;

/// Explicit vertex table plus Kronecker delta edges (1 if lambda = lambda', else 0).
template <class Series>
class TableProvider : public BlockProvider<Series> {
 public:
  using Key = std::pair<int, std::vector<Partition>>;  // vertex, (descendents, l1, l2, l3)

  void set_vertex(int vertex, const Partition& descendents, const std::array<Partition, 3>& lambda, Series value) {
    table_[key(vertex, descendents, lambda)] = std::move(value);
  }

  std::string name() const override { return "table"; }
  bool supports_vertex(const VertexQuery& q) const override {
    return table_.count(key(q.vertex, q.descendents, q.lambda)) > 0;
  }
  bool supports_edge(const EdgeQuery&) const override { return true; }
  Series capped_vertex(const VertexQuery& q) const override {
    auto it = table_.find(key(q.vertex, q.descendents, q.lambda));
    if (it == table_.end()) throw UnsupportedInput("table provider has no entry for " + q.to_string());
    return it->second;
  }
  Series capped_edge(const EdgeQuery& q) const override { return Series(q.lambda == q.lambda_prime ? 1 : 0); }

 private:
  static Key key(int v, const Partition& d, const std::array<Partition, 3>& l) { return {v, {d, l[0], l[1], l[2]}}; }
  std::map<Key, Series> table_;
};

/// Cap family with closed forms: a vertex with a single nonempty leg lambda,
/// no parts 1, carrying the descendents tau_{lambda_i - 1}; Kronecker delta edges.
class PureCapProviderPT : public PTProvider {
 public:
  std::string name() const override { return "caps"; }
  bool supports_vertex(const VertexQuery& q) const override;
  bool supports_edge(const EdgeQuery&) const override { return true; }
  PTSeries capped_vertex(const VertexQuery& q) const override;
  PTSeries capped_edge(const EdgeQuery& q) const override;
};

class PureCapProviderGW : public GWProvider {
 public:
  std::string name() const override { return "caps"; }
  bool supports_vertex(const VertexQuery& q) const override;
  bool supports_edge(const EdgeQuery&) const override { return true; }
  ULaurent capped_vertex(const VertexQuery& q) const override;
  ULaurent capped_edge(const EdgeQuery& q) const override;
};

/// Z = sum over markings of prod_v C(v) prod_e E(e) prod_h G(h), with h over
/// the halves of compact edges. Vertices without descendents and with three
/// empty partitions contribute 1; degree zero edges contribute 1. A vertex
/// with descendents and three empty partitions is rejected.
PTSeries assemble_pt(const ToricGraph& g, const DescendentPlacement& sigma, const CurveClass& beta,
                     const PTProvider& provider);
ULaurent assemble_gw(const ToricGraph& g, const DescendentPlacement& sigma, const CurveClass& beta,
                     const GWProvider& provider);

/// (-1)^{|mu| - l(mu)} z(mu) q^{-|mu|}.
PTSeries degeneration_kernel_pt(const Partition& mu);
/// z(mu) u^{2 l(mu)}.
ULaurent degeneration_kernel_gw(const Partition& mu);

/// sum_mu Z1(mu) kernel(mu) Z2(mu); throws std::invalid_argument when the
/// tables are indexed by different partitions.
PTSeries degenerate_combine(const std::map<Partition, PTSeries>& z1, const std::map<Partition, PTSeries>& z2);
ULaurent degenerate_combine(const std::map<Partition, ULaurent>& z1, const std::map<Partition, ULaurent>& z2);

}  // namespace gwpairs
