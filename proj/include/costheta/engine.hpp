#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "costheta/power_solver.hpp"

namespace costheta {

// Does some t >= t_min satisfy cos(t*theta) = c, where alpha = cos(theta)?
struct CosInstance {
    AlgebraicNumber alpha;  // real, |alpha| <= 1
    AlgebraicNumber c;      // real, |c| <= 1
    unsigned long long t_min = 0;

    CosInstance(AlgebraicNumber a, AlgebraicNumber target, unsigned long long tmin = 0)
        : alpha(std::move(a)), c(std::move(target)), t_min(tmin) {
        if (!alpha.is_real() || !c.is_real())
            throw domain_error("cos instance: alpha and c must be real");
        if (compare_with_rational(alpha, Rat(1)) > 0 || compare_with_rational(alpha, Rat(-1)) < 0)
            throw domain_error("cos instance: |alpha| must be <= 1");
        if (compare_with_rational(c, Rat(1)) > 0 || compare_with_rational(c, Rat(-1)) < 0)
            throw domain_error("cos instance: |c| must be <= 1");
    }
};

// Does some t >= t_min satisfy r^t cos(t*theta) = c?  The geometry is carried
// by r_cos = r cos(theta) and r_sq = r^2 (so z = r e^(i theta) solves
// z^2 - 2 r_cos z + r_sq = 0).
struct RCosInstance {
    AlgebraicNumber r_cos;
    AlgebraicNumber r_sq;
    AlgebraicNumber c;
    unsigned long long t_min = 0;

    RCosInstance(AlgebraicNumber rc, AlgebraicNumber rs, AlgebraicNumber target,
                 unsigned long long tmin = 0)
        : r_cos(std::move(rc)), r_sq(std::move(rs)), c(std::move(target)), t_min(tmin) {
        if (!r_cos.is_real() || !r_sq.is_real() || !c.is_real())
            throw domain_error("rcos instance: inputs must be real");
        if (sign_real(r_sq) <= 0) throw degenerate_input("rcos instance: r^2 must be positive");
        if (compare_real(alg_mul(r_cos, r_cos), r_sq) > 0)
            throw domain_error("rcos instance: (r cos)^2 must be <= r^2");
    }
};

// z = alpha + i sqrt(1 - alpha^2): |z| = 1 and z + 1/z = 2 alpha.  The
// minimal polynomial is the irreducible factor of
// Res_x(minpoly_alpha(x), y^2 - 2xy + 1) selected by the enclosure.
inline AlgebraicNumber build_z(const AlgebraicNumber& alpha) {
    if (!alpha.is_real()) throw domain_error("build_z: alpha must be real");
    if (compare_with_rational(alpha, Rat(1)) > 0 || compare_with_rational(alpha, Rat(-1)) < 0)
        throw domain_error("build_z: |alpha| must be <= 1");
    if (alpha.is_rational()) {
        Rat a = alpha.rational_value();
        if (rat_abs(a) == 1) return alg_from_rational(a);
    }
    BiPoly q = {RatPoly({Rat(1), Rat(0), Rat(1)}),  // y^2 + 1
                RatPoly({Rat(0), Rat(-2)})};        // -2y
    RatPoly ann = poly_resultant_eliminate(alpha.minpoly(), q);
    auto enclose = [&](unsigned prec) {
        DyadicInterval a = alpha.refined(pow2(-(long)prec)).box().real_interval();
        DyadicInterval sq = DyadicInterval(Rat(1), Rat(1)) - a * a;
        Rat lo = sign(sq.lo) <= 0 ? Rat(0) : sqrt_lower(sq.lo, prec);
        Rat hi = sign(sq.hi) <= 0 ? Rat(0) : sqrt_upper(sq.hi, prec);
        return ComplexBox(a.mid(), (lo + hi) / 2, a.width() / 2 + (hi - lo) / 2);
    };
    return detail_alg::from_annihilator(ann, enclose, "build_z");
}

// The targets c + i sqrt(1-c^2) and its conjugate; a single target at c = +-1.
inline std::vector<AlgebraicNumber> build_targets(const AlgebraicNumber& c) {
    AlgebraicNumber w = build_z(c);
    if (w.is_rational()) return {w};
    return {w, alg_conj(w)};
}

namespace detail_engine {

// cos(t*theta) values for t in [0, n) via a_t = 2 alpha a_{t-1} - a_{t-2},
// with a rational fast path.
inline std::vector<AlgebraicNumber> cos_orbit(const AlgebraicNumber& alpha, unsigned long long n) {
    std::vector<AlgebraicNumber> out;
    if (alpha.is_rational()) {
        Rat a = alpha.rational_value();
        Rat prev(1), cur = a;
        for (unsigned long long t = 0; t < n; ++t) {
            out.push_back(alg_from_rational(t == 0 ? prev : cur));
            if (t >= 1) {
                Rat next = 2 * a * cur - prev;
                prev = cur;
                cur = next;
            }
        }
        return out;
    }
    AlgebraicNumber two_alpha = alg_scale(alpha, Rat(2));
    AlgebraicNumber prev = alg_from_rational(Rat(1));
    AlgebraicNumber cur = alpha;
    for (unsigned long long t = 0; t < n; ++t) {
        out.push_back(t == 0 ? prev : cur);
        if (t >= 1) {
            AlgebraicNumber next = alg_sub(alg_mul(two_alpha, cur), prev);
            prev = cur;
            cur = next;
        }
    }
    return out;
}

}  // namespace detail_engine

// The 5-step pipeline: build z, take Q(z), test membership of the targets,
// solve the power instances, OR the outcomes with the minimal witness.
// When z is a root of unity the orbit of cos values is finite and is scanned
// directly (this covers alpha = +-1).
inline Decision decide_cos(const CosInstance& inst) {
    AlgebraicNumber z = build_z(inst.alpha);

    if (auto order = root_of_unity_order(z)) {
        unsigned long long n = *order;
        auto orbit = detail_engine::cos_orbit(inst.alpha, n);
        bool found = false;
        unsigned long long best = 0;
        for (unsigned long long r = 0; r < n; ++r) {
            if (!alg_equals(orbit[r], inst.c)) continue;
            // smallest t >= t_min with t = r (mod n)
            unsigned long long offset = (r + n - inst.t_min % n) % n;
            unsigned long long t = inst.t_min + offset;
            if (!found || t < best) {
                best = t;
                found = true;
            }
        }
        if (found) return Decision::make_yes(best);
        return Decision::make_no(Decision::Certificate::orbit_exhausted);
    }

    NumberField field(z);
    FieldElement base = field.generator_element();
    bool any_member = false;
    bool any_yes = false;
    unsigned long long best = 0;
    for (const auto& target : build_targets(inst.c)) {
        auto coords = membership(field, target);
        if (!coords) continue;
        any_member = true;
        Decision d = solve_power(PowerInstance{field, base, *coords, inst.t_min});
        if (d.yes && (!any_yes || *d.witness < best)) {
            any_yes = true;
            best = *d.witness;
        }
    }
    if (any_yes) return Decision::make_yes(best);
    if (!any_member) return Decision::make_no(Decision::Certificate::not_in_field);
    return Decision::make_no(Decision::Certificate::height_candidate_failed);
}

// Contracting case r <= 1: for r = 1 delegate to decide_cos; for r < 1 the
// terms a_t = r^t cos(t theta) satisfy |a_t| <= r^t, so no solution exists
// past T = ceil(log|c| / log r).  The scan itself is exact via
// a_t = (2 r cos theta) a_{t-1} - r^2 a_{t-2}.
inline Decision decide_rcos_contracting(const RCosInstance& inst) {
    int cmp_one = compare_with_rational(inst.r_sq, Rat(1));
    if (cmp_one > 0) throw degenerate_input("rcos: r^2 > 1 is not contracting");
    if (cmp_one == 0) return decide_cos(CosInstance(inst.r_cos, inst.c, inst.t_min));
    if (inst.c.is_zero())
        throw degenerate_input("rcos: c = 0 degenerates the bound (zero set equals the cos case)");
    if (compare_with_rational(inst.c, Rat(1)) > 0 || compare_with_rational(inst.c, Rat(-1)) < 0) {
        // |c| > 1 can only be hit at a_0 = 1, which |c| > 1 excludes; the
        // bound formula still yields T = t_min and the scan below refutes.
    }

    // T = max(t_min, ceil(log|c| / log r)) from certified outward-rounded logs.
    unsigned long long scan_to = inst.t_min;
    for (unsigned prec = kPrecisionStartBits;; prec *= 2) {
        if (prec > precision_cap_bits()) throw precision_cap_exceeded("decide_rcos_contracting");
        Rat rad = pow2(-(long)prec);
        DyadicInterval c_abs = alg_abs(inst.c).refined(rad).box().real_interval();
        if (sign(c_abs.lo) <= 0) continue;
        DyadicInterval r2 = inst.r_sq.refined(rad).box().real_interval();
        if (sign(r2.lo) <= 0) continue;
        DyadicInterval r_iv(sqrt_lower(r2.lo, prec), sqrt_upper(r2.hi, prec));
        if (r_iv.hi >= 1) continue;  // need log r bounded away from 0
        DyadicInterval log_c = certified::log(c_abs, prec + 32);
        DyadicInterval log_r = certified::log(r_iv, prec + 32);
        DyadicInterval quotient = log_c / log_r;
        Int t_upper = ceil_rat(quotient.hi);
        if (sign(t_upper) < 0) t_upper = 0;
        if (!mpz_fits_ulong_p(t_upper.get_mpz_t()))
            throw error("rcos bound out of supported range");
        scan_to = std::max<unsigned long long>(inst.t_min, mpz_get_ui(t_upper.get_mpz_t()));
        break;
    }

    bool rational_path = inst.r_cos.is_rational() && inst.r_sq.is_rational() && inst.c.is_rational();
    Decision no = Decision::make_no(Decision::Certificate::bound_exhausted);
    no.scan_bound = scan_to;
    if (rational_path) {
        Rat two_rc = 2 * inst.r_cos.rational_value();
        Rat r2 = inst.r_sq.rational_value();
        Rat c = inst.c.rational_value();
        Rat prev(1), cur = inst.r_cos.rational_value();
        for (unsigned long long t = 0; t <= scan_to; ++t) {
            const Rat& a_t = (t == 0) ? prev : cur;
            if (t >= inst.t_min && a_t == c) return Decision::make_yes(t);
            if (t >= 1) {
                Rat next = two_rc * cur - r2 * prev;
                prev = cur;
                cur = next;
            }
        }
        return no;
    }
    AlgebraicNumber two_rc = alg_scale(inst.r_cos, Rat(2));
    AlgebraicNumber prev = alg_from_rational(Rat(1));
    AlgebraicNumber cur = inst.r_cos;
    for (unsigned long long t = 0; t <= scan_to; ++t) {
        const AlgebraicNumber& a_t = (t == 0) ? prev : cur;
        if (t >= inst.t_min && alg_equals(a_t, inst.c)) return Decision::make_yes(t);
        if (t >= 1) {
            AlgebraicNumber next = alg_sub(alg_mul(two_rc, cur), alg_mul(inst.r_sq, prev));
            prev = cur;
            cur = next;
        }
    }
    return no;
}

}  // namespace costheta
