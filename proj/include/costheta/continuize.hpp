#pragma once

#include <map>
#include <utility>
#include <vector>

#include "costheta/interval.hpp"
#include "costheta/polynomial.hpp"

namespace costheta {

// Formal angle q_1 theta_1 + ... + q_k theta_k + q_pi * pi over the symbol
// basis {theta_1..theta_k, pi}.  Canonical form: trailing zero theta
// coefficients trimmed, and the first nonzero coordinate positive (cosine is
// even, so an angle and its negation are identified).
struct Angle {
    std::vector<Rat> theta;
    Rat pi_coeff;

    Angle() : pi_coeff(0) {}
    Angle(std::vector<Rat> t, Rat p) : theta(std::move(t)), pi_coeff(std::move(p)) { trim(); }

    static Angle theta_symbol(size_t index, const Rat& coeff = Rat(1)) {
        std::vector<Rat> t(index + 1, Rat(0));
        t[index] = coeff;
        return Angle(std::move(t), Rat(0));
    }
    static Angle pi_multiple(const Rat& coeff) { return Angle({}, coeff); }

    bool is_zero() const { return theta.empty() && sign(pi_coeff) == 0; }

    Angle canonicalized() const {
        Angle a = *this;
        for (const auto& q : a.theta) {
            if (sign(q) == 0) continue;
            if (sign(q) < 0) a.negate();
            return a;
        }
        if (sign(a.pi_coeff) < 0) a.negate();
        return a;
    }

    Angle operator+(const Angle& o) const {
        std::vector<Rat> t(std::max(theta.size(), o.theta.size()), Rat(0));
        for (size_t i = 0; i < theta.size(); ++i) t[i] += theta[i];
        for (size_t i = 0; i < o.theta.size(); ++i) t[i] += o.theta[i];
        return Angle(std::move(t), pi_coeff + o.pi_coeff);
    }

    Angle operator-(const Angle& o) const {
        std::vector<Rat> t(std::max(theta.size(), o.theta.size()), Rat(0));
        for (size_t i = 0; i < theta.size(); ++i) t[i] += theta[i];
        for (size_t i = 0; i < o.theta.size(); ++i) t[i] -= o.theta[i];
        return Angle(std::move(t), pi_coeff - o.pi_coeff);
    }

    Angle scaled(const Rat& s) const {
        Angle a = *this;
        for (auto& q : a.theta) q *= s;
        a.pi_coeff *= s;
        a.trim();
        return a;
    }

    bool operator==(const Angle& o) const { return theta == o.theta && pi_coeff == o.pi_coeff; }
    bool operator<(const Angle& o) const {
        if (theta != o.theta) return theta < o.theta;
        return pi_coeff < o.pi_coeff;
    }

  private:
    void negate() {
        for (auto& q : theta) q = -q;
        pi_coeff = -pi_coeff;
    }
    void trim() {
        while (!theta.empty() && sign(theta.back()) == 0) theta.pop_back();
    }
};

struct CosTerm {
    Rat coeff;
    Angle angle;
};

// constant + sum coeff_i * cos(t * angle_i)
struct CosSumExpr {
    Rat constant;
    std::vector<CosTerm> terms;

    CosSumExpr() : constant(0) {}
    CosSumExpr(Rat k, std::vector<CosTerm> t) : constant(std::move(k)), terms(std::move(t)) {}

    size_t theta_dimension() const {
        size_t n = 0;
        for (const auto& t : terms) n = std::max(n, t.angle.theta.size());
        return n;
    }
};

// Canonical form: angles sign-canonicalized (cos is even), equal angles
// merged, zero coefficients dropped, the zero angle folded into the
// constant (cos 0 = 1), terms sorted.  Idempotent.
inline CosSumExpr normalize(const CosSumExpr& e) {
    Rat constant = e.constant;
    std::map<Angle, Rat> merged;
    for (const auto& t : e.terms) {
        if (sign(t.coeff) == 0) continue;
        Angle a = t.angle.canonicalized();
        if (a.is_zero())
            constant += t.coeff;
        else
            merged[a] += t.coeff;
    }
    std::vector<CosTerm> out;
    for (auto& [angle, coeff] : merged)
        if (sign(coeff) != 0) out.push_back(CosTerm{coeff, angle});
    return CosSumExpr(std::move(constant), std::move(out));
}

// ((expr(t) - c))^2 + (cos 2 pi t - 1)^2 as a pure cosine sum: squares and
// cross products are eliminated with 2 cos A cos B = cos(A+B) + cos(A-B),
// so real zeros characterize exactly the integer solutions of expr(t) = c.
inline CosSumExpr square_and_rewrite(const CosSumExpr& expr, const Rat& c) {
    CosSumExpr e = normalize(expr);
    Rat k0 = e.constant - c;
    CosSumExpr out;
    out.constant = k0 * k0;
    for (const auto& t : e.terms) out.terms.push_back(CosTerm{2 * k0 * t.coeff, t.angle});
    for (const auto& ti : e.terms) {
        for (const auto& tj : e.terms) {
            Rat half = ti.coeff * tj.coeff / 2;
            out.terms.push_back(CosTerm{half, ti.angle + tj.angle});
            out.terms.push_back(CosTerm{half, ti.angle - tj.angle});
        }
    }
    // (cos 2 pi t - 1)^2 = 3/2 + (1/2) cos 4 pi t - 2 cos 2 pi t
    out.constant += Rat(3, 2);
    out.terms.push_back(CosTerm{Rat(1, 2), Angle::pi_multiple(Rat(4))});
    out.terms.push_back(CosTerm{Rat(-2), Angle::pi_multiple(Rat(2))});
    return normalize(out);
}

// Multiplicative base bookkeeping: exponent vector over the formal positive
// symbols r_1..r_m; the empty tag is base 1.  Products add exponents.
struct BaseTag {
    std::vector<Rat> exps;

    BaseTag() = default;
    explicit BaseTag(std::vector<Rat> e) : exps(std::move(e)) { trim(); }

    static BaseTag symbol(size_t index, const Rat& e = Rat(1)) {
        std::vector<Rat> v(index + 1, Rat(0));
        v[index] = e;
        return BaseTag(std::move(v));
    }

    bool is_one() const { return exps.empty(); }

    BaseTag operator+(const BaseTag& o) const {
        std::vector<Rat> v(std::max(exps.size(), o.exps.size()), Rat(0));
        for (size_t i = 0; i < exps.size(); ++i) v[i] += exps[i];
        for (size_t i = 0; i < o.exps.size(); ++i) v[i] += o.exps[i];
        return BaseTag(std::move(v));
    }

    bool operator==(const BaseTag& o) const { return exps == o.exps; }
    bool operator<(const BaseTag& o) const { return exps < o.exps; }

  private:
    void trim() {
        while (!exps.empty() && sign(exps.back()) == 0) exps.pop_back();
    }
};

// p(t) * (prod r_i^(e_i t)) * cos(t * angle)
struct ExpPolyCosTerm {
    BaseTag base;
    RatPoly poly;
    Angle angle;
};

struct ExpPolyCosExpr {
    Rat constant;
    std::vector<ExpPolyCosTerm> terms;

    ExpPolyCosExpr() : constant(0) {}
    ExpPolyCosExpr(Rat k, std::vector<ExpPolyCosTerm> t)
        : constant(std::move(k)), terms(std::move(t)) {}

    size_t theta_dimension() const {
        size_t n = 0;
        for (const auto& t : terms) n = std::max(n, t.angle.theta.size());
        return n;
    }
    size_t base_dimension() const {
        size_t n = 0;
        for (const auto& t : terms) n = std::max(n, t.base.exps.size());
        return n;
    }
};

// Canonical merge on (base tag, angle); a term folds into the constant only
// when base = 1, angle = 0 and the polynomial is constant.
inline ExpPolyCosExpr ep_normalize(const ExpPolyCosExpr& e) {
    Rat constant = e.constant;
    std::map<std::pair<BaseTag, Angle>, RatPoly> merged;
    for (const auto& t : e.terms) {
        if (t.poly.is_zero()) continue;
        Angle a = t.angle.canonicalized();
        if (t.base.is_one() && a.is_zero() && t.poly.degree() == 0) {
            constant += t.poly.coeff(0);
            continue;
        }
        merged[{t.base, a}] = merged[{t.base, a}] + t.poly;
    }
    std::vector<ExpPolyCosTerm> out;
    for (auto& [key, poly] : merged)
        if (!poly.is_zero()) out.push_back(ExpPolyCosTerm{key.first, poly, key.second});
    return ExpPolyCosExpr(std::move(constant), std::move(out));
}

// The sum-of-squares rewrite for exponential-polynomial cosine sums: cross
// products multiply the bases (tag addition) and polynomials, and cosine
// products reduce by the same product-to-sum identity.
inline ExpPolyCosExpr ep_square_and_rewrite(const ExpPolyCosExpr& expr, const Rat& c) {
    ExpPolyCosExpr e = ep_normalize(expr);
    Rat k0 = e.constant - c;
    ExpPolyCosExpr out;
    out.constant = k0 * k0;
    for (const auto& t : e.terms)
        out.terms.push_back(ExpPolyCosTerm{t.base, t.poly * (2 * k0), t.angle});
    for (const auto& ti : e.terms) {
        for (const auto& tj : e.terms) {
            RatPoly half = ti.poly * tj.poly * Rat(1, 2);
            BaseTag tag = ti.base + tj.base;
            out.terms.push_back(ExpPolyCosTerm{tag, half, ti.angle + tj.angle});
            out.terms.push_back(ExpPolyCosTerm{tag, half, ti.angle - tj.angle});
        }
    }
    out.constant += Rat(3, 2);
    out.terms.push_back(
        ExpPolyCosTerm{BaseTag(), RatPoly::constant(Rat(1, 2)), Angle::pi_multiple(Rat(4))});
    out.terms.push_back(
        ExpPolyCosTerm{BaseTag(), RatPoly::constant(Rat(-2)), Angle::pi_multiple(Rat(2))});
    return ep_normalize(out);
}

// Assigns certified real intervals to the formal symbols; base values must
// be positive.
struct Valuation {
    std::vector<DyadicInterval> theta;
    std::vector<DyadicInterval> base;
};

namespace detail_continuize {

inline DyadicInterval angle_value(const Angle& a, const Valuation& val, unsigned prec) {
    DyadicInterval acc(Rat(0), Rat(0));
    for (size_t i = 0; i < a.theta.size(); ++i) {
        if (sign(a.theta[i]) == 0) continue;
        if (i >= val.theta.size()) throw missing_symbol("theta" + std::to_string(i + 1));
        acc = acc + val.theta[i] * a.theta[i];
    }
    if (sign(a.pi_coeff) != 0) acc = acc + certified::pi(prec) * a.pi_coeff;
    return acc;
}

inline DyadicInterval poly_value(const RatPoly& p, const DyadicInterval& t, unsigned prec) {
    DyadicInterval acc(Rat(0), Rat(0));
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * t + DyadicInterval::point(p.coeffs()[i]);
        (void)prec;
    }
    return acc;
}

// prod r_i^(e_i t) = exp(t * sum e_i log r_i)
inline DyadicInterval base_value(const BaseTag& tag, const DyadicInterval& t, const Valuation& val,
                                 unsigned prec) {
    if (tag.is_one()) return DyadicInterval(Rat(1), Rat(1));
    DyadicInterval log_sum(Rat(0), Rat(0));
    for (size_t i = 0; i < tag.exps.size(); ++i) {
        if (sign(tag.exps[i]) == 0) continue;
        if (i >= val.base.size()) throw missing_symbol("r" + std::to_string(i + 1));
        log_sum = log_sum + certified::log(val.base[i], prec) * tag.exps[i];
    }
    return certified::exp(log_sum * t, prec);
}

}  // namespace detail_continuize

// Certified interval enclosure of the expression value at real t.
inline DyadicInterval eval_numeric(const CosSumExpr& expr, const DyadicInterval& t,
                                   const Valuation& val, unsigned prec = 128) {
    DyadicInterval acc = DyadicInterval::point(expr.constant);
    for (const auto& term : expr.terms) {
        DyadicInterval angle = detail_continuize::angle_value(term.angle, val, prec);
        acc = acc + certified::cos(angle * t, prec) * term.coeff;
    }
    return acc;
}

inline DyadicInterval eval_numeric(const ExpPolyCosExpr& expr, const DyadicInterval& t,
                                   const Valuation& val, unsigned prec = 128) {
    DyadicInterval acc = DyadicInterval::point(expr.constant);
    for (const auto& term : expr.terms) {
        DyadicInterval angle = detail_continuize::angle_value(term.angle, val, prec);
        DyadicInterval v = certified::cos(angle * t, prec);
        v = v * detail_continuize::poly_value(term.poly, t, prec);
        v = v * detail_continuize::base_value(term.base, t, val, prec);
        acc = acc + v;
    }
    return acc;
}

}  // namespace costheta
