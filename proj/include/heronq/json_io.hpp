#pragma once

#include <json.hpp>

#include "heronq/analytic.hpp"
#include "heronq/correspond.hpp"
#include "heronq/curve.hpp"
#include "heronq/families.hpp"
#include "heronq/heights.hpp"
#include "heronq/quad.hpp"
#include "heronq/rational.hpp"

namespace heronq {

using Json = nlohmann::json;

// Rationals serialize as strings: "p" for integers, "p/q" otherwise
// (decimal integer parts, lowest terms, sign on the numerator).
Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"x":"p/q","y":"p/q"} for affine points, {"inf":true} for the identity.
Json point_json(const CurvePoint& p);
CurvePoint point_from_json(const Json& j);

// {"alpha":"p/q","n":"p/q"}; curves constructed from beta alone carry
// {"alpha":"p/q","beta":"p/q"} instead.
Json curve_json(const EllipticCurve& curve);
EllipticCurve curve_from_json(const Json& j);

// {"sides":["a","b","c","d"]}
Json quad_json(const Quadrilateral& q);
Quadrilateral quad_from_json(const Json& j);

Json correspondence_json(const Correspondence& c);
Json torsion_json(const TorsionGroup& t);

// Heights and pairing entries are rounded to 15 significant digits so the
// output is stable across platforms that agree to double precision.
double round_sig(double v, int digits = 15);
Json pairing_json(const PairingMatrix& m);

Json family_json(const FamilyInstance& f, bool emit_points = true);
Json sieve_json(const SieveReport& r);

}  // namespace heronq
