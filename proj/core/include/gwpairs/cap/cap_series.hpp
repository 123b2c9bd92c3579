#pragma once

#include "gwpairs/algebra/laurent.hpp"
#include "gwpairs/algebra/q_rat_func.hpp"
#include "gwpairs/algebra/sym_rat_func.hpp"
#include "gwpairs/partitions/partition.hpp"

#include <optional>
#include <string>

namespace gwpairs {

/// Stable pairs cap value: prefactor(s) * value(q). Constant prefactors are
/// folded into value, so equality is structural.
struct CapSeriesP {
  SymRatFunc prefactor{1};
  QRatFunc value;

  CapSeriesP() = default;
  CapSeriesP(QRatFunc v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  CapSeriesP(SymRatFunc pre, QRatFunc v);

  std::string to_string() const;
  friend bool operator==(const CapSeriesP& a, const CapSeriesP& b) {
    return a.prefactor == b.prefactor && a.value == b.value;
  }
};

using CapSeriesGW = ULaurent;

/// q^{|g|} / (|Aut g| prod g_i!) for g without parts 1.
CapSeriesP pt_cap_pure(const Partition& gamma);
/// u^{-2 l(g)} / (|Aut g| prod g_i!).
CapSeriesGW gw_cap_pure(const Partition& gamma);

/// q^d d^{l(a)-2} / prod (a_i - 1)!, requiring d - 1 = |a| - l(a).
CapSeriesP pt_cap_maxdeg(const Partition& alpha, int d);
/// u^{-2} d^{l(a)-2} / prod (a_i - 1)!.
CapSeriesGW gw_cap_maxdeg(const Partition& alpha, int d);
/// The localization sum for pt_cap_maxdeg at d = |a| - l(a) + 1.
CapSeriesP pt_cap_maxdeg_oracle(const Partition& alpha);

/// 1 / (e! (s1 s2)^e).
SymRatFunc pt_tube_ones(int e);

enum class TubeConvention {
  printed,      // pt_tube_ones as is
  with_q_power  // pt_tube_ones times q^e, matching the curve class e L
};

/// q^{|g|} (-1)^{l(g)-1} / (|g|! |Aut g|).
CapSeriesP cap_tube_closed_pt(const Partition& gamma);
/// u^{-2} / (|g|! |Aut g|).
CapSeriesGW cap_tube_closed_gw(const Partition& gamma);
/// Composition sum over e_0 + e_1 + ... + e_j = m of cap and tube terms,
/// reduced mod s1 + s2 via s2 := -s1. Throws std::runtime_error if any s1
/// dependence survives the reduction.
CapSeriesP cap_tube_sum_pt(const Partition& gamma, TubeConvention tube = TubeConvention::with_q_power);

/// Stable pairs cap with tau_(2)(p_0) and boundary (1): -q (s1+s2)/2 (1-q)/(1+q).
CapSeriesP pt_cap_tau2_point();
/// Matching GW series through u^order:
/// -s3 u^{-2} + u^{-1} d/du(s3 f^{-x}) f^x, f = (u/2)/sin(u/2), x = (s1+s2)/s3.
CapSeriesGW gw_cap_tau2_point(int order);
/// u^{-2}.
CapSeriesGW gw_cap_tau1_point();

struct DegreeOneExampleReport {
  int order = 0;
  ULaurent pt_side;  // (s1+s2)/2 (1-q)/(1+q) after -q = e^{iu}
  ULaurent gw_side;  // -1/(iu) ((s1+s2) + u d/du(s3 f^{-x}) f^x)
  bool equal = false;
  std::optional<int> first_difference;
  bool gw_side_s3_free = false;
  ULaurent recovered_k21;  // solved from the correspondence with K_(2),(2) = 1/(iu)
  bool k21_matches = false;
};

/// Degree one check of the descendent correspondence for tau_(2)(p).
DegreeOneExampleReport check_degree_one_descendent(int order);

}  // namespace gwpairs
