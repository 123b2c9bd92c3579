#pragma once

#include "gwpairs/algebra/laurent.hpp"
#include "gwpairs/algebra/q_rat_func.hpp"

namespace gwpairs {

inline constexpr int kDefaultPoleLimit = 8;

/// Substitutes q = -e^{iu} into a rational function of q and expands through
/// u^order. A pole at q = -1 of order m is split off exactly as (1+q)^{-m},
/// using 1 + q = -iu * E(u) with E(u) = sum_n (iu)^n/(n+1)!.
ULaurent expand_q_to_u(const QRatFunc& f, int order, int pole_limit = kDefaultPoleLimit);

/// f^x = exp(x log f) for f with constant term 1, through u^order.
ULaurent series_pow(const ULaurent& f, const SymRatFunc& x, int order);

/// d/du, dropping the truncation order by one.
inline ULaurent derivative_u(const ULaurent& f) { return f.derivative(); }

/// e^{c u} through u^order for a constant c.
ULaurent exp_series(const GaussianRational& c, int order);

/// (u/2)/sin(u/2) through u^order.
ULaurent half_u_over_sin_half_u(int order);

}  // namespace gwpairs
