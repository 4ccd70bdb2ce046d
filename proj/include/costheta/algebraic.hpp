#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "costheta/config.hpp"
#include "costheta/interval.hpp"
#include "costheta/lattice.hpp"
#include "costheta/root_isolation.hpp"

namespace costheta {

// Canonical representation of an algebraic number: irreducible minimal
// polynomial (primitive integer form) plus a complex disk isolating exactly
// one of its roots.  Boxes produced here keep the isolate_roots labeling:
// center exactly on the real axis iff the root is real.
class AlgebraicNumber {
  public:
    AlgebraicNumber() : AlgebraicNumber(from_rational(Rat(0))) {}

    static AlgebraicNumber from_rational(const Rat& q) {
        RatPoly mp = RatPoly::linear(-q, Rat(1)).primitive_integer_form();
        return AlgebraicNumber(std::move(mp), ComplexBox::point(q));
    }

    // Trusted constructor: minpoly irreducible primitive, box isolating.
    AlgebraicNumber(RatPoly minpoly, ComplexBox box)
        : minpoly_(std::move(minpoly)), box_(std::move(box)) {}

    const RatPoly& minpoly() const { return minpoly_; }
    const ComplexBox& box() const { return box_; }

    int degree() const { return minpoly_.degree(); }
    Int height() const { return minpoly_.height(); }

    bool is_rational() const { return minpoly_.degree() == 1; }
    Rat rational_value() const {
        if (!is_rational()) throw domain_error("not a rational value");
        return -minpoly_.coeff(0) / minpoly_.coeff(1);
    }
    bool is_zero() const { return is_rational() && sign(minpoly_.coeff(0)) == 0; }
    bool is_real() const { return sign(box_.y) == 0; }

    bool same_minpoly(const AlgebraicNumber& o) const { return minpoly_ == o.minpoly_; }

    // A copy whose box radius is at most max_radius.
    AlgebraicNumber refined(const Rat& max_radius) const {
        if (box_.r <= max_radius) return *this;
        if (is_rational()) return AlgebraicNumber(minpoly_, ComplexBox::point(box_.x, box_.y));
        Rat r = max_radius;
        for (;;) {
            if (detail_roots::bits_of_inverse(r) > precision_cap_bits())
                throw precision_cap_exceeded("AlgebraicNumber::refined");
            auto boxes = isolate_roots(minpoly_, r);
            const ComplexBox* match = nullptr;
            bool unique = true;
            for (const auto& b : boxes) {
                if (b.overlaps(box_)) {
                    if (match) unique = false;
                    match = &b;
                }
            }
            if (match && unique) return AlgebraicNumber(minpoly_, *match);
            r /= 2;
        }
    }

    // Certified enclosure with radius <= 2^-bits.
    ComplexBox enclosure(unsigned bits) const { return refined(pow2(-(long)bits)).box(); }

  private:
    RatPoly minpoly_;
    ComplexBox box_;
};

namespace detail_alg {

// Pick the unique (irreducible factor, isolated root) pair compatible with a
// refinable enclosure of the value.  EncloseFn: unsigned prec_bits -> ComplexBox.
template <typename EncloseFn>
AlgebraicNumber select_root(const std::vector<RatPoly>& factors, EncloseFn enclose,
                            const char* where) {
    for (unsigned prec = kPrecisionStartBits; prec <= precision_cap_bits(); prec *= 2) {
        ComplexBox e = enclose(prec);
        Rat target_r = pow2(-static_cast<long>(prec) / 2);
        const RatPoly* hit_poly = nullptr;
        ComplexBox hit_box;
        int hits = 0;
        for (const auto& f : factors) {
            for (const auto& b : isolate_roots(f, target_r)) {
                if (b.overlaps(e)) {
                    ++hits;
                    hit_poly = &f;
                    hit_box = b;
                }
            }
        }
        if (hits == 1) return AlgebraicNumber(*hit_poly, hit_box);
    }
    throw precision_cap_exceeded(where);
}

inline AlgebraicNumber from_annihilator(const RatPoly& ann,
                                        const std::function<ComplexBox(unsigned)>& enclose,
                                        const char* where) {
    if (ann.is_zero()) throw error(std::string(where) + ": zero annihilator");
    std::vector<RatPoly> factors;
    for (auto& [f, mult] : factor_rational(poly_squarefree(ann))) factors.push_back(f);
    return select_root(factors, enclose, where);
}

inline Int binomial(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace detail_alg

inline AlgebraicNumber alg_from_rational(const Rat& q) { return AlgebraicNumber::from_rational(q); }

inline AlgebraicNumber alg_i() {
    return AlgebraicNumber(RatPoly({Rat(1), Rat(0), Rat(1)}), ComplexBox(Rat(0), Rat(1), Rat(0)));
}

// minpoly p(x - r); box shifted.
inline AlgebraicNumber alg_shift(const AlgebraicNumber& a, const Rat& r) {
    if (a.is_rational()) return alg_from_rational(a.rational_value() + r);
    RatPoly mp = a.minpoly().taylor_shift(-r).primitive_integer_form();
    ComplexBox b = a.box();
    return AlgebraicNumber(std::move(mp), ComplexBox(b.x + r, b.y, b.r));
}

// minpoly of s*a; box scaled.
inline AlgebraicNumber alg_scale(const AlgebraicNumber& a, const Rat& s) {
    if (sign(s) == 0) return alg_from_rational(Rat(0));
    if (a.is_rational()) return alg_from_rational(a.rational_value() * s);
    Rat inv_s = Rat(1) / s;
    RatPoly mp = a.minpoly().scale_arg(inv_s).primitive_integer_form();
    return AlgebraicNumber(std::move(mp), a.box().scale(s));
}

inline AlgebraicNumber alg_neg(const AlgebraicNumber& a) { return alg_scale(a, Rat(-1)); }

inline AlgebraicNumber alg_conj(const AlgebraicNumber& a) {
    return AlgebraicNumber(a.minpoly(), a.box().conj());
}

inline AlgebraicNumber alg_inv(const AlgebraicNumber& a) {
    if (a.is_zero()) throw division_by_zero();
    if (a.is_rational()) return alg_from_rational(Rat(1) / a.rational_value());
    RatPoly mp = a.minpoly().reversed().primitive_integer_form();
    // Refine until the disk excludes 0, then invert it exactly.
    AlgebraicNumber cur = a;
    Rat r = std::max(cur.box().r, Rat(1, 1024));
    while (cur.box().center_norm_sq() <= cur.box().r * cur.box().r) {
        r /= 2;
        cur = cur.refined(r);
    }
    return AlgebraicNumber(std::move(mp), cur.box().inverse());
}

inline AlgebraicNumber alg_add(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational()) return alg_shift(b, a.rational_value());
    if (b.is_rational()) return alg_shift(a, b.rational_value());
    // Annihilator Res_x(p(x), q(y - x)).
    const RatPoly& q = b.minpoly();
    int m = q.degree();
    BiPoly qb(m + 1);
    for (int k = 0; k <= m; ++k) {
        std::vector<Rat> ycoeffs(m - k + 1, Rat(0));
        for (int j = k; j <= m; ++j) {
            Rat term = q.coeff(j) * Rat(detail_alg::binomial(j, k));
            if (k % 2 == 1) term = -term;
            ycoeffs[j - k] += term;
        }
        qb[k] = RatPoly(std::move(ycoeffs));
    }
    RatPoly ann = poly_resultant_eliminate(a.minpoly(), qb);
    auto enclose = [&](unsigned prec) {
        return a.enclosure(prec) + b.enclosure(prec);
    };
    return detail_alg::from_annihilator(ann, enclose, "alg_add");
}

inline AlgebraicNumber alg_sub(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return alg_add(a, alg_neg(b));
}

inline AlgebraicNumber alg_mul(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational()) return alg_scale(b, a.rational_value());
    if (b.is_rational()) return alg_scale(a, b.rational_value());
    // Annihilator Res_x(p(x), x^m q(y/x)).
    const RatPoly& q = b.minpoly();
    int m = q.degree();
    BiPoly qb(m + 1);
    for (int k = 0; k <= m; ++k) qb[k] = RatPoly::monomial(q.coeff(m - k), m - k);
    RatPoly ann = poly_resultant_eliminate(a.minpoly(), qb);
    auto enclose = [&](unsigned prec) {
        return a.enclosure(prec) * b.enclosure(prec);
    };
    return detail_alg::from_annihilator(ann, enclose, "alg_mul");
}

inline AlgebraicNumber alg_div(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return alg_mul(a, alg_inv(b));
}

enum class AlgOp { add, sub, mul, div };

inline AlgebraicNumber alg_arith(AlgOp op, const AlgebraicNumber& a, const AlgebraicNumber& b) {
    switch (op) {
        case AlgOp::add: return alg_add(a, b);
        case AlgOp::sub: return alg_sub(a, b);
        case AlgOp::mul: return alg_mul(a, b);
        case AlgOp::div: return alg_div(a, b);
    }
    throw input_error("unknown arithmetic op");
}

inline bool alg_equals(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (!a.same_minpoly(b)) return false;
    if (a.is_rational()) return true;  // degree-1 minpoly pins the value
    Rat quarter_sep = separation_bound(a.minpoly()) / 4;
    AlgebraicNumber ra = a.refined(quarter_sep);
    AlgebraicNumber rb = b.refined(quarter_sep);
    return ra.box().overlaps(rb.box());
}

inline bool alg_is_zero(const AlgebraicNumber& a) { return a.is_zero(); }

// Exact comparison of a real algebraic number with a rational.
inline int compare_with_rational(const AlgebraicNumber& a, const Rat& q) {
    if (!a.is_real()) throw domain_error("compare_with_rational: number is not real");
    if (a.is_rational()) {
        Rat v = a.rational_value();
        return v < q ? -1 : (v > q ? 1 : 0);
    }
    // Irrational, so a != q; refine until the interval separates them.
    AlgebraicNumber cur = a;
    Rat r = std::max(cur.box().r, Rat(1));
    for (;;) {
        DyadicInterval iv = cur.box().real_interval();
        if (q < iv.lo) return 1;
        if (q > iv.hi) return -1;
        r /= 2;
        cur = cur.refined(r);
    }
}

inline int sign_real(const AlgebraicNumber& a) { return compare_with_rational(a, Rat(0)); }

// Exact comparison of two real algebraic numbers.
inline int compare_real(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (!a.is_real() || !b.is_real()) throw domain_error("compare_real: inputs must be real");
    if (b.is_rational()) return compare_with_rational(a, b.rational_value());
    if (a.is_rational()) return -compare_with_rational(b, a.rational_value());
    if (alg_equals(a, b)) return 0;
    AlgebraicNumber ca = a, cb = b;
    Rat r(1, 16);
    for (;;) {
        DyadicInterval ia = ca.box().real_interval(), ib = cb.box().real_interval();
        if (ia.hi < ib.lo) return -1;
        if (ib.hi < ia.lo) return 1;
        ca = ca.refined(r);
        cb = cb.refined(r);
        r /= 2;
    }
}

inline AlgebraicNumber alg_abs(const AlgebraicNumber& a) {
    return sign_real(a) < 0 ? alg_neg(a) : a;
}

// Nonnegative real square root of a nonnegative real input.
inline AlgebraicNumber alg_sqrt_nonneg(const AlgebraicNumber& a) {
    if (!a.is_real()) throw domain_error("alg_sqrt_nonneg: input must be real");
    int s = sign_real(a);
    if (s < 0) throw domain_error("alg_sqrt_nonneg: input is negative");
    if (s == 0) return alg_from_rational(Rat(0));
    if (a.is_rational()) {
        Rat q = a.rational_value();
        if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
            Rat root(isqrt(num(q)), isqrt(den(q)));
            root.canonicalize();
            return alg_from_rational(root);
        }
    }
    RatPoly ann = a.minpoly().compose_square();
    auto enclose = [&](unsigned prec) {
        DyadicInterval iv = a.refined(pow2(-(long)prec)).box().real_interval();
        Rat lo = sign(iv.lo) <= 0 ? Rat(0) : sqrt_lower(iv.lo, prec);
        Rat hi = sqrt_upper(iv.hi, prec);
        return ComplexBox((lo + hi) / 2, Rat(0), (hi - lo) / 2);
    };
    return detail_alg::from_annihilator(ann, enclose, "alg_sqrt_nonneg");
}

// sqrt extended to negative real inputs: sqrt(a) = i * sqrt(-a).
inline AlgebraicNumber alg_sqrt_any(const AlgebraicNumber& a) {
    if (!a.is_real()) throw domain_error("alg_sqrt_any: input must be real");
    if (sign_real(a) >= 0) return alg_sqrt_nonneg(a);
    return alg_mul(alg_i(), alg_sqrt_nonneg(alg_neg(a)));
}

inline AlgebraicNumber alg_pow(const AlgebraicNumber& a, unsigned long e) {
    AlgebraicNumber result = alg_from_rational(Rat(1));
    AlgebraicNumber base = a;
    while (e > 0) {
        if (e & 1) result = alg_mul(result, base);
        base = e > 1 ? alg_mul(base, base) : base;
        e >>= 1;
    }
    return result;
}

// Norm: product of all Galois conjugates, (-1)^d * p(0) / lc.
inline Rat alg_norm(const AlgebraicNumber& a) {
    const RatPoly& p = a.minpoly();
    Rat n = p.coeff(0) / p.lc();
    return p.degree() % 2 == 0 ? n : -n;
}

inline bool is_algebraic_integer(const AlgebraicNumber& a) {
    return int_abs(num(a.minpoly().primitive_integer_form().lc())) == 1;
}

// Certified enclosure of the Weil height
// h = (1/d) (log|lc| + sum_i log max(1, |root_i|)), width <= 2^-(bits/4).
inline DyadicInterval weil_height(const AlgebraicNumber& a, unsigned precision_bits = 64) {
    if (a.is_zero()) throw domain_error("weil_height of zero");
    RatPoly p = a.minpoly().primitive_integer_form();
    int d = p.degree();
    Rat target_width = pow2(-(long)(precision_bits / 4));
    unsigned fprec = precision_bits + 32;
    DyadicInterval lc_term = certified::log(Rat(int_abs(num(p.lc()))), fprec);
    for (unsigned k = precision_bits; k <= precision_cap_bits(); k *= 2) {
        DyadicInterval total = lc_term;
        for (const auto& rb : isolate_roots(p, pow2(-(long)k))) {
            DyadicInterval av = rb.abs_interval();
            if (av.hi <= 1) continue;
            if (av.lo >= 1) {
                total = total + certified::log(av, fprec);
            } else {
                DyadicInterval up = certified::log(DyadicInterval(Rat(1), av.hi), fprec);
                total = total + DyadicInterval(Rat(0), up.hi);
            }
        }
        DyadicInterval h(total.lo / d, total.hi / d);
        if (sign(h.lo) < 0) h = DyadicInterval(Rat(0), std::max(Rat(0), h.hi));
        if (h.width() <= target_width) return h;
    }
    throw precision_cap_exceeded("weil_height");
}

// Exact multiplicative order if a^n = 1 for some n >= 1, else nullopt.
// Candidates satisfy phi(n) = deg; n <= 2 deg^2 since phi(n) >= sqrt(n/2).
inline std::optional<unsigned long> root_of_unity_order(const AlgebraicNumber& a) {
    RatPoly p = a.minpoly().primitive_integer_form();
    unsigned long d = static_cast<unsigned long>(p.degree());
    if (int_abs(num(p.lc())) != 1 || int_abs(num(p.coeff(0))) != 1) return std::nullopt;
    for (unsigned long n = 1; n <= 2 * d * d; ++n) {
        if (euler_phi(n) != d) continue;
        if (p.divides(RatPoly::xn_minus_one(n))) return n;
    }
    return std::nullopt;
}

}  // namespace costheta
