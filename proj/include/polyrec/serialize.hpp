#pragma once

#include "polyrec/elimination.hpp"
#include "polyrec/laurent.hpp"
#include "polyrec/polytope.hpp"
#include "polyrec/quasifit.hpp"
#include "polyrec/ratfn.hpp"
#include "polyrec/recurrence.hpp"
#include "polyrec/valuation_fan.hpp"

#include <json.hpp>

// JSON schemas. Rationals travel as decimal strings ("3", "-2/5"); every
// from_json throws SchemaError on malformed input.
namespace polyrec::io {

using nlohmann::json;

// {"vars": r, "terms": [[num, den, [e1..er]], ...]} in lexicographic order
json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

// [num_poly, den_poly]
json to_json(const RatFn& f);
RatFn ratfn_from_json(const json& j, std::size_t vars_hint = 1);

// {"vars": r, "coeffs": [poly, ...]}
json to_json(const Recurrence& rec);
Recurrence recurrence_from_json(const json& j);

// row-major [[ratfn, ...], ...]; a bare poly or rational string is accepted per entry
MatrixRF matrix_from_json(const json& j);

// {"dim": r, "vertices": [[a, b], ...]}
json to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);

json to_json(const PolyN& p);
PolyN polyn_from_json(const json& j);

json to_json(const QuasiPolynomial& q);
QuasiPolynomial quasipoly_from_json(const json& j);

// {"period", "prefix", "dim", "degree_bound", "residues": [{"vertices": [[px coeffs], [py coeffs]]}...],
//  "exceptions": [polytope|null, ...]}
json to_json(const PolygonModel& m);
PolygonModel model_from_json(const json& j);

json to_json(const ZeroPattern& z);
ZeroPattern zero_pattern_from_json(const json& j);

json to_json(const SlopeSpectrum& s);
json to_json(const Fan2D& f);
json to_json(const SlopeReport& r);
json to_json(const Theorem1Report& r);

// {"P": poly, "Q": poly}
EliminationInstance instance_from_json(const json& j);

std::vector<Rational> rational_list_from_json(const json& j);
json to_json(std::span<const Rational> xs);

}  // namespace polyrec::io
