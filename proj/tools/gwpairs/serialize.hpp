#pragma once

#include "report.hpp"

#include "gwpairs/assembly/assembly.hpp"
#include "gwpairs/corr/corr_matrix_k.hpp"
#include "gwpairs/descendent/descendent.hpp"

namespace gwpairs::cli {

/// {"text", "terms": [{"u_power", "value"}], "truncation"}; truncation is
/// null for exact values.
ordered_json to_json(const ULaurent& f, const VarNames& names = kSVars);
/// Inverse of to_json for s-variable coefficients.
ULaurent laurent_from_json(const ordered_json& j);

ordered_json to_json(const PTSeries& f);
ordered_json to_json(const DescendentPoly& p);

/// Records {alpha, alpha_hat, coeff, provenance}, row by row.
ordered_json to_json(const CorrMatrixK& K);
/// Accepts either the record array or an object with a "records" array.
CorrMatrixK k_from_json(const ordered_json& j);

/// {"vertices": [{"name", "weights": [3 strings]}], "edges": [{"a": [v, slot],
/// "b": [v, slot], "class"}], "legs": [{"half": [v, slot], "lambda": "2,1"}]}.
ToricGraph graph_from_json(const ordered_json& j);

/// "C=2,D=1".
CurveClass parse_curve_class(const std::string& text);
/// "0:2,0:2" as vertex:part pairs.
DescendentPlacement parse_placement(const std::string& text);

}  // namespace gwpairs::cli
