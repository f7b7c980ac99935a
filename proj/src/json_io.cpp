#include "heronq/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "heronq/errors.hpp"

namespace heronq {

namespace {
// j.at() would throw nlohmann's own out_of_range; keep malformed payloads
// on the InvalidInput path like every other bad-input case.
const Json& require(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw InvalidInput(std::string("missing key \"") + key + "\" in " + j.dump());
    return *it;
}
}  // namespace

Json rational_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw InvalidInput("expected rational as \"p/q\" string, got: " + j.dump());
    return Rational::parse_or_throw(j.get<std::string>());
}

Json point_json(const CurvePoint& p) {
    if (p.infinity) return Json{{"inf", true}};
    return Json{{"x", rational_json(p.x)}, {"y", rational_json(p.y)}};
}

CurvePoint point_from_json(const Json& j) {
    if (j.contains("inf")) {
        const Json& flag = j["inf"];
        if (flag.is_boolean() && flag.get<bool>()) return CurvePoint::at_infinity();
        throw InvalidInput("point with \"inf\" not true: " + flag.dump());
    }
    return CurvePoint(rational_from_json(require(j, "x")), rational_from_json(require(j, "y")));
}

Json curve_json(const EllipticCurve& curve) {
    Json j;
    j["alpha"] = rational_json(curve.alpha());
    if (curve.n())
        j["n"] = rational_json(*curve.n());
    else
        j["beta"] = rational_json(curve.beta());
    return j;
}

EllipticCurve curve_from_json(const Json& j) {
    Rational alpha = rational_from_json(require(j, "alpha"));
    if (j.contains("n")) return EllipticCurve::from_alpha_n(alpha, rational_from_json(j["n"]));
    return EllipticCurve::from_alpha_beta(alpha, rational_from_json(require(j, "beta")));
}

Json quad_json(const Quadrilateral& q) {
    return Json{{"sides", Json::array({rational_json(q.a()), rational_json(q.b()),
                                       rational_json(q.c()), rational_json(q.d())})}};
}

Quadrilateral quad_from_json(const Json& j) {
    const Json& s = require(j, "sides");
    if (!s.is_array() || s.size() != 4) throw InvalidInput("\"sides\" must be an array of 4 rationals");
    Rational a = rational_from_json(s[0]), b = rational_from_json(s[1]);
    Rational c = rational_from_json(s[2]), d = rational_from_json(s[3]);
    if (d.is_zero()) return Quadrilateral::make_triangle(a, b, c);
    return Quadrilateral::make(a, b, c, d);
}

Json correspondence_json(const Correspondence& c) {
    Json j;
    j["quad"] = quad_json(c.quad);
    j["curve"] = curve_json(c.curve);
    j["points"] = Json::array({point_json(c.p1), point_json(c.p2), point_json(c.p3)});
    if (auto a = area(c.quad)) j["area"] = rational_json(*a);
    return j;
}

Json torsion_json(const TorsionGroup& t) {
    return Json{{"group", t.name()}, {"order", t.order}};
}

double round_sig(double v, int digits) {
    if (v == 0.0 || !std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::strtod(buf, nullptr);
}

Json pairing_json(const PairingMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m.entries) {
        Json r = Json::array();
        for (double v : row) r.push_back(round_sig(v));
        rows.push_back(std::move(r));
    }
    Json pts = Json::array();
    for (const auto& p : m.points) pts.push_back(point_json(p));
    return Json{{"points", pts}, {"matrix", rows}, {"det", round_sig(m.det)}};
}

Json family_json(const FamilyInstance& f, bool emit_points) {
    Json params = Json::object();
    for (const auto& [key, value] : f.parameters) params[key] = rational_json(value);
    Json j{{"family", f.family},
           {"parameters", params},
           {"curve", curve_json(f.curve)},
           {"expected_min_rank", f.expected_min_rank},
           {"point_count", f.points.size()}};
    if (emit_points) {
        Json pts = Json::array();
        for (const auto& p : f.points) pts.push_back(point_json(p));
        j["points"] = pts;
    }
    return j;
}

Json sieve_json(const SieveReport& r) {
    Json j{{"curve", r.curve_id}, {"s1", round_sig(r.s1)}, {"passed", r.passed}};
    if (r.s2) j["s2"] = round_sig(*r.s2);
    j["bad_primes"] = r.bad_primes;
    if (r.error) j["error"] = *r.error;
    return j;
}

}  // namespace heronq
