#pragma once

// JSON wire formats: algebraic numbers, field elements, cosine-sum
// expressions.  Rationals always travel as "p/q" strings so fixtures stay
// bit-exact.  Requires nlohmann/json on the include path (vendored).

#include <string>
#include <vector>

#include "json.hpp"

#include "costheta/algebraic.hpp"
#include "costheta/continuize.hpp"
#include "costheta/number_field.hpp"

namespace costheta {

using Json = nlohmann::json;

inline Rat rat_from_json(const Json& j, const char* what) {
    if (!j.is_string()) throw input_error(std::string(what) + ": expected a \"p/q\" string");
    return rat_from_string(j.get<std::string>());
}

inline std::vector<Rat> rat_vector_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw input_error(std::string(what) + ": expected an array of rationals");
    std::vector<Rat> out;
    for (const auto& v : j) out.push_back(rat_from_json(v, what));
    return out;
}

inline Json rat_vector_to_json(const std::vector<Rat>& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(rat_to_string(q));
    return out;
}

namespace detail_json {

// Exact sign of |w - (cx + i cy)|^2 - r^2 for boundary-ambiguous roots.
inline int exact_disk_position(const AlgebraicNumber& w, const Rat& cx, const Rat& cy,
                               const Rat& r) {
    AlgebraicNumber center = alg_add(alg_from_rational(cx), alg_mul(alg_i(), alg_from_rational(cy)));
    AlgebraicNumber diff = alg_sub(w, center);
    AlgebraicNumber norm_sq = alg_mul(diff, alg_conj(diff));
    return compare_with_rational(norm_sq, r * r);
}

}  // namespace detail_json

// Parse {"rational": "p/q"} or {"minpoly": ["c0", ...], "box": {x, y, r}}.
// The minpoly is auto-minimalized: its squarefree part is factored and the
// (unique) irreducible factor with exactly one root in the closed input disk
// is selected; anything else is an input error.
inline AlgebraicNumber algebraic_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("algebraic number: expected an object");
    if (j.contains("rational")) return alg_from_rational(rat_from_json(j["rational"], "rational"));
    if (!j.contains("minpoly") || !j.contains("box"))
        throw input_error("algebraic number: need \"rational\" or \"minpoly\" + \"box\"");
    RatPoly poly{rat_vector_from_json(j["minpoly"], "minpoly")};
    if (poly.degree() < 1) throw input_error("minpoly must have degree >= 1");
    const Json& bj = j["box"];
    if (!bj.is_object() || !bj.contains("x") || !bj.contains("y") || !bj.contains("r"))
        throw input_error("box: expected {\"x\", \"y\", \"r\"}");
    Rat bx = rat_from_json(bj["x"], "box.x");
    Rat by = rat_from_json(bj["y"], "box.y");
    Rat br = rat_from_json(bj["r"], "box.r");
    if (sign(br) < 0) throw input_error("box radius must be nonnegative");
    ComplexBox target(bx, by, br);

    RatPoly sf = poly_squarefree(poly);
    std::vector<std::pair<RatPoly, ComplexBox>> inside;
    for (auto& [factor, mult] : factor_rational(sf)) {
        Rat radius = separation_bound(factor) / 4;
        for (ComplexBox rb : isolate_roots(factor, radius)) {
            // Refine until clearly inside/outside, with an exact fallback
            // for roots sitting on the boundary circle.
            AlgebraicNumber root(factor, rb);
            int verdict = 0;  // -1 outside, +1 inside, 0 unknown
            for (int round = 0; round < 24 && verdict == 0; ++round) {
                const ComplexBox& b = root.box();
                if (target.contains_box(b)) verdict = 1;
                else if (!target.overlaps(b)) verdict = -1;
                else root = root.refined(b.r / 16);
            }
            if (verdict == 0)
                verdict = detail_json::exact_disk_position(root, bx, by, br) <= 0 ? 1 : -1;
            if (verdict == 1) inside.emplace_back(factor, root.box());
        }
    }
    if (inside.size() != 1)
        throw input_error("box must isolate exactly one root of the minimal polynomial (found " +
                          std::to_string(inside.size()) + ")");
    return AlgebraicNumber(inside[0].first, inside[0].second);
}

inline Json algebraic_to_json(const AlgebraicNumber& a) {
    if (a.is_rational()) return Json{{"rational", rat_to_string(a.rational_value())}};
    Json mp = Json::array();
    for (const auto& c : a.minpoly().coeffs()) mp.push_back(rat_to_string(c));
    return Json{{"minpoly", mp},
                {"box", Json{{"x", rat_to_string(a.box().x)},
                             {"y", rat_to_string(a.box().y)},
                             {"r", rat_to_string(a.box().r)}}}};
}

// --- Expression schema -----------------------------------------------------
// {"constant": "q", "terms": [{"coeff": "q", "theta": ["q", ...], "pi": "q",
//  "base": {"r_tags": ["q", ...]}, "poly": ["q", ...]}]}
// Pure cosine terms carry coeff/theta/pi; exponential-polynomial terms carry
// poly (absorbing coeff) and base.

inline Json angle_theta_json(const Angle& a, size_t dim) {
    Json arr = Json::array();
    for (size_t i = 0; i < dim; ++i)
        arr.push_back(rat_to_string(i < a.theta.size() ? a.theta[i] : Rat(0)));
    return arr;
}

inline Json cos_sum_to_json(const CosSumExpr& e) {
    size_t dim = e.theta_dimension();
    Json terms = Json::array();
    for (const auto& t : e.terms) {
        terms.push_back(Json{{"coeff", rat_to_string(t.coeff)},
                             {"theta", angle_theta_json(t.angle, dim)},
                             {"pi", rat_to_string(t.angle.pi_coeff)}});
    }
    return Json{{"constant", rat_to_string(e.constant)}, {"terms", terms}};
}

inline Json exp_poly_to_json(const ExpPolyCosExpr& e) {
    size_t dim = e.theta_dimension();
    size_t bdim = e.base_dimension();
    Json terms = Json::array();
    for (const auto& t : e.terms) {
        Json tags = Json::array();
        for (size_t i = 0; i < bdim; ++i)
            tags.push_back(rat_to_string(i < t.base.exps.size() ? t.base.exps[i] : Rat(0)));
        Json poly = Json::array();
        for (const auto& c : t.poly.coeffs()) poly.push_back(rat_to_string(c));
        terms.push_back(Json{{"theta", angle_theta_json(t.angle, dim)},
                             {"pi", rat_to_string(t.angle.pi_coeff)},
                             {"base", Json{{"r_tags", tags}}},
                             {"poly", poly}});
    }
    return Json{{"constant", rat_to_string(e.constant)}, {"terms", terms}};
}

// Parses the superset (exp-poly) form; pure cosine input is the special case
// with trivial base and constant poly.
inline ExpPolyCosExpr exp_poly_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("expression: expected an object");
    ExpPolyCosExpr out;
    out.constant = j.contains("constant") ? rat_from_json(j["constant"], "constant") : Rat(0);
    if (!j.contains("terms")) return out;
    if (!j["terms"].is_array()) throw input_error("expression: \"terms\" must be an array");
    for (const auto& tj : j["terms"]) {
        Rat coeff = tj.contains("coeff") ? rat_from_json(tj["coeff"], "coeff") : Rat(1);
        std::vector<Rat> theta =
            tj.contains("theta") ? rat_vector_from_json(tj["theta"], "theta") : std::vector<Rat>{};
        Rat pi = tj.contains("pi") ? rat_from_json(tj["pi"], "pi") : Rat(0);
        RatPoly poly = tj.contains("poly") ? RatPoly{rat_vector_from_json(tj["poly"], "poly")}
                                           : RatPoly::one();
        BaseTag base;
        if (tj.contains("base")) {
            const Json& bj = tj["base"];
            if (!bj.is_object() || !bj.contains("r_tags"))
                throw input_error("term base: expected {\"r_tags\": [...]}");
            base = BaseTag(rat_vector_from_json(bj["r_tags"], "r_tags"));
        }
        out.terms.push_back(ExpPolyCosTerm{base, poly * coeff, Angle(theta, pi)});
    }
    return ep_normalize(out);
}

// Down-conversion for the pure cosine pipeline.
inline CosSumExpr cos_sum_from_json(const Json& j) {
    ExpPolyCosExpr ep = exp_poly_from_json(j);
    CosSumExpr out;
    out.constant = ep.constant;
    for (const auto& t : ep.terms) {
        if (!t.base.is_one())
            throw input_error("pure cosine expression cannot carry base tags (use --exp-poly)");
        if (t.poly.degree() > 0)
            throw input_error("pure cosine expression cannot carry polynomials (use --exp-poly)");
        out.terms.push_back(CosTerm{t.poly.coeff(0), t.angle});
    }
    return normalize(out);
}

}  // namespace costheta
