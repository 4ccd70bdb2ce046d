#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "costheta/rational.hpp"

namespace costheta {

namespace detail {

// RAII mpfr_t.
class MpfrReal {
  public:
    explicit MpfrReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    MpfrReal(const MpfrReal&) = delete;
    MpfrReal& operator=(const MpfrReal&) = delete;
    ~MpfrReal() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

  private:
    mpfr_t v_;
};

// mpfr values are dyadic; conversion back to Rat is exact.
inline Rat rat_from_mpfr(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return Rat(0);
    Rat r;
    mpfr_get_q(r.get_mpq_t(), x);
    return r;
}

// Representable enclosure x in [lo, hi] at prec bits.
inline void enclose_rat(const Rat& x, unsigned prec, Rat& lo, Rat& hi) {
    MpfrReal a(prec), b(prec);
    mpfr_set_q(a.get(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(b.get(), x.get_mpq_t(), MPFR_RNDU);
    lo = rat_from_mpfr(a.get());
    hi = rat_from_mpfr(b.get());
}

}  // namespace detail

// Closed interval with (dyadic) rational endpoints.  Endpoints produced by
// the functions below are exactly dyadic; exact rational inputs are enclosed
// outward first.
struct DyadicInterval {
    Rat lo;
    Rat hi;

    DyadicInterval() : lo(0), hi(0) {}
    DyadicInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw input_error("interval endpoints out of order");
    }

    static DyadicInterval point(const Rat& q) { return DyadicInterval(q, q); }

    // Outward dyadic enclosure of an arbitrary rational.
    static DyadicInterval enclose(const Rat& q, unsigned prec_bits) {
        Rat l, h;
        detail::enclose_rat(q, prec_bits, l, h);
        return DyadicInterval(l, h);
    }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& q) const { return lo <= q && q <= hi; }
    bool contains(const DyadicInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    bool overlaps(const DyadicInterval& o) const { return lo <= o.hi && o.lo <= hi; }

    DyadicInterval operator+(const DyadicInterval& o) const {
        return DyadicInterval(lo + o.lo, hi + o.hi);
    }
    DyadicInterval operator-(const DyadicInterval& o) const {
        return DyadicInterval(lo - o.hi, hi - o.lo);
    }
    DyadicInterval operator-() const { return DyadicInterval(-hi, -lo); }
    DyadicInterval operator*(const DyadicInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return DyadicInterval(std::min(std::min(a, b), std::min(c, d)),
                              std::max(std::max(a, b), std::max(c, d)));
    }
    DyadicInterval operator*(const Rat& q) const {
        return q >= 0 ? DyadicInterval(lo * q, hi * q) : DyadicInterval(hi * q, lo * q);
    }
    DyadicInterval operator+(const Rat& q) const { return DyadicInterval(lo + q, hi + q); }

    // Division requires the divisor bounded away from zero.
    DyadicInterval operator/(const DyadicInterval& o) const {
        if (o.contains_zero()) throw domain_error("interval division by interval containing 0");
        Rat a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
        return DyadicInterval(std::min(std::min(a, b), std::min(c, d)),
                              std::max(std::max(a, b), std::max(c, d)));
    }

    double to_double() const { return mid().get_d(); }
    std::string str() const { return "[" + rat_to_string(lo) + ", " + rat_to_string(hi) + "]"; }
};

namespace certified {

// pi in [lo, hi].
inline DyadicInterval pi(unsigned prec_bits) {
    detail::MpfrReal a(prec_bits), b(prec_bits);
    mpfr_const_pi(a.get(), MPFR_RNDD);
    mpfr_const_pi(b.get(), MPFR_RNDU);
    return DyadicInterval(detail::rat_from_mpfr(a.get()), detail::rat_from_mpfr(b.get()));
}

// Natural log over [x.lo, x.hi], x.lo > 0; log is increasing.
inline DyadicInterval log(const DyadicInterval& x, unsigned prec_bits) {
    if (sign(x.lo) <= 0) throw domain_error("log of non-positive interval");
    detail::MpfrReal t(prec_bits), r(prec_bits);
    mpfr_set_q(t.get(), x.lo.get_mpq_t(), MPFR_RNDD);
    mpfr_log(r.get(), t.get(), MPFR_RNDD);
    Rat lo = detail::rat_from_mpfr(r.get());
    mpfr_set_q(t.get(), x.hi.get_mpq_t(), MPFR_RNDU);
    mpfr_log(r.get(), t.get(), MPFR_RNDU);
    Rat hi = detail::rat_from_mpfr(r.get());
    return DyadicInterval(lo, hi);
}

inline DyadicInterval log(const Rat& x, unsigned prec_bits) {
    return log(DyadicInterval(x, x), prec_bits);
}

// exp is increasing.
inline DyadicInterval exp(const DyadicInterval& x, unsigned prec_bits) {
    detail::MpfrReal t(prec_bits), r(prec_bits);
    mpfr_set_q(t.get(), x.lo.get_mpq_t(), MPFR_RNDD);
    mpfr_exp(r.get(), t.get(), MPFR_RNDD);
    Rat lo = detail::rat_from_mpfr(r.get());
    mpfr_set_q(t.get(), x.hi.get_mpq_t(), MPFR_RNDU);
    mpfr_exp(r.get(), t.get(), MPFR_RNDU);
    Rat hi = detail::rat_from_mpfr(r.get());
    return DyadicInterval(lo, hi);
}

// sqrt is increasing; domain clamped at 0 for enclosures that dip below.
inline DyadicInterval sqrt(const DyadicInterval& x, unsigned prec_bits) {
    if (sign(x.hi) < 0) throw domain_error("sqrt of negative interval");
    Rat lo = sign(x.lo) <= 0 ? Rat(0) : sqrt_lower(x.lo, prec_bits);
    Rat hi = sqrt_upper(x.hi, prec_bits);
    return DyadicInterval(lo, hi);
}

namespace detail_cos {

// cos at an exact rational point: Lipschitz-1 widening over the rounding
// error of representing x.
inline DyadicInterval cos_point(const Rat& x, unsigned prec_bits) {
    detail::MpfrReal t(prec_bits), r(prec_bits);
    mpfr_set_q(t.get(), x.get_mpq_t(), MPFR_RNDN);
    Rat xm = detail::rat_from_mpfr(t.get());
    Rat err = rat_abs(xm - x);
    mpfr_cos(r.get(), t.get(), MPFR_RNDD);
    Rat lo = detail::rat_from_mpfr(r.get()) - err;
    mpfr_cos(r.get(), t.get(), MPFR_RNDU);
    Rat hi = detail::rat_from_mpfr(r.get()) + err;
    return DyadicInterval(std::max(lo, Rat(-1)), std::min(hi, Rat(1)));
}

}  // namespace detail_cos

// cos over an interval: endpoint values, widened to +/-1 whenever a
// multiple of pi may lie inside.
inline DyadicInterval cos(const DyadicInterval& x, unsigned prec_bits) {
    DyadicInterval pi_iv = pi(prec_bits);
    if (x.width() >= 2 * pi_iv.lo) return DyadicInterval(Rat(-1), Rat(1));
    DyadicInterval at_lo = detail_cos::cos_point(x.lo, prec_bits);
    DyadicInterval at_hi = detail_cos::cos_point(x.hi, prec_bits);
    Rat lo = std::min(at_lo.lo, at_hi.lo);
    Rat hi = std::max(at_lo.hi, at_hi.hi);
    // Integers k with k*pi possibly inside [x.lo, x.hi].
    DyadicInterval k_range = x / pi_iv;
    Int k_min = ceil_rat(k_range.lo), k_max = floor_rat(k_range.hi);
    for (Int k = k_min; k <= k_max; ++k) {
        if (mpz_even_p(k.get_mpz_t()))
            hi = Rat(1);
        else
            lo = Rat(-1);
    }
    return DyadicInterval(std::max(lo, Rat(-1)), std::min(hi, Rat(1)));
}

inline DyadicInterval cos(const Rat& x, unsigned prec_bits) {
    return detail_cos::cos_point(x, prec_bits);
}

// acos is decreasing on [-1, 1]; inputs clamped (callers pass enclosures
// that may overshoot by rounding slack).
inline DyadicInterval acos(const DyadicInterval& x, unsigned prec_bits) {
    Rat xl = std::max(x.lo, Rat(-1)), xh = std::min(x.hi, Rat(1));
    if (xl > xh) throw domain_error("acos of interval outside [-1, 1]");
    detail::MpfrReal t(prec_bits), r(prec_bits);
    mpfr_set_q(t.get(), xh.get_mpq_t(), MPFR_RNDU);
    if (mpfr_cmp_ui(t.get(), 1) > 0) mpfr_set_ui(t.get(), 1, MPFR_RNDN);
    mpfr_acos(r.get(), t.get(), MPFR_RNDD);
    Rat lo = detail::rat_from_mpfr(r.get());
    mpfr_set_q(t.get(), xl.get_mpq_t(), MPFR_RNDD);
    if (mpfr_cmp_si(t.get(), -1) < 0) mpfr_set_si(t.get(), -1, MPFR_RNDN);
    mpfr_acos(r.get(), t.get(), MPFR_RNDU);
    Rat hi = detail::rat_from_mpfr(r.get());
    return DyadicInterval(lo, hi);
}

inline DyadicInterval acos(const Rat& x, unsigned prec_bits) {
    return acos(DyadicInterval(x, x), prec_bits);
}

}  // namespace certified

}  // namespace costheta
