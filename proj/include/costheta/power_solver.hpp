#pragma once

#include <optional>
#include <string>
#include <utility>

#include "costheta/number_field.hpp"

namespace costheta {

// Outcome of a reachability decision: yes carries the witness exponent, no
// carries a certificate naming the refutation route.
struct Decision {
    enum class Certificate { not_in_field, orbit_exhausted, height_candidate_failed, bound_exhausted };

    bool yes = false;
    std::optional<unsigned long long> witness;
    std::optional<Certificate> certificate;
    std::optional<unsigned long long> scan_bound;  // rcos contracting: last t examined

    static Decision make_yes(unsigned long long t) {
        Decision d;
        d.yes = true;
        d.witness = t;
        return d;
    }
    static Decision make_no(Certificate c) {
        Decision d;
        d.yes = false;
        d.certificate = c;
        return d;
    }
};

inline std::string certificate_name(Decision::Certificate c) {
    switch (c) {
        case Decision::Certificate::not_in_field: return "not-in-field";
        case Decision::Certificate::orbit_exhausted: return "orbit-exhausted";
        case Decision::Certificate::height_candidate_failed: return "height-candidate-failed";
        case Decision::Certificate::bound_exhausted: return "bound-exhausted";
    }
    return "unknown";
}

// Does some t >= t_min satisfy base^t = target in Q(z)?
struct PowerInstance {
    NumberField field;
    FieldElement base;
    FieldElement target;
    unsigned long long t_min = 0;
};

// Exact decision of base^t = target.
//  Branch A: base a root of unity of order n -- scan t in [t_min, t_min+n).
//  Branch B: otherwise h(base) > 0 (Kronecker), and h(base^t) = t h(base)
//  pins the only possible exponent; certified height intervals are narrowed
//  until at most 3 integer candidates remain, each verified exactly.
inline Decision solve_power(const PowerInstance& inst) {
    const NumberField& field = inst.field;
    check_element(field, inst.base);
    check_element(field, inst.target);
    if (fe_is_zero(inst.base)) throw degenerate_input("solve_power: base is zero");

    AlgebraicNumber base_alg = fe_to_algebraic(field, inst.base);
    if (auto order = root_of_unity_order(base_alg)) {
        FieldElement cur = fe_pow(field, inst.base, inst.t_min);
        for (unsigned long long k = 0; k < *order; ++k) {
            if (cur == inst.target) return Decision::make_yes(inst.t_min + k);
            cur = fe_mul(field, cur, inst.base);
        }
        return Decision::make_no(Decision::Certificate::orbit_exhausted);
    }

    if (fe_is_zero(inst.target))  // powers of a nonzero element never vanish
        return Decision::make_no(Decision::Certificate::height_candidate_failed);

    AlgebraicNumber target_alg = fe_to_algebraic(field, inst.target);
    for (unsigned prec = kPrecisionStartBits; prec <= precision_cap_bits(); prec *= 2) {
        DyadicInterval hb = weil_height(base_alg, prec);
        if (sign(hb.lo) <= 0) continue;  // escalate until bounded away from 0
        DyadicInterval hw = weil_height(target_alg, prec);
        Rat lo = hw.lo / hb.hi;
        Rat hi = hw.hi / hb.lo;
        Int first = ceil_rat(lo);
        if (first < Int(0)) first = 0;
        {
            Int tmin_int(static_cast<unsigned long>(inst.t_min));
            if (first < tmin_int) first = tmin_int;
        }
        Int last = floor_rat(hi);
        if (last < first) return Decision::make_no(Decision::Certificate::height_candidate_failed);
        if (last - first + 1 > 3) continue;  // narrow further
        for (Int t = first; t <= last; ++t) {
            if (!mpz_fits_ulong_p(t.get_mpz_t()))
                throw error("solve_power: candidate exponent out of supported range");
            unsigned long long tt = mpz_get_ui(t.get_mpz_t());
            if (fe_pow(field, inst.base, tt) == inst.target) return Decision::make_yes(tt);
        }
        return Decision::make_no(Decision::Certificate::height_candidate_failed);
    }
    throw precision_cap_exceeded("solve_power");
}

// Orbit wrapper: M must be the multiplication matrix of some field element
// (recovered from its first column, since column 0 is coords(base * 1)).
inline Decision solve_orbit_multiplication(const RationalMatrix& m, const FieldElement& v,
                                           const NumberField& field, unsigned long long t_min = 0) {
    if (static_cast<int>(m.size()) != field.degree())
        throw input_error("matrix size does not match field degree");
    check_element(field, v);
    FieldElement base(m.size());
    for (size_t i = 0; i < m.size(); ++i) base[i] = m.rows[i][0];
    if (!(multiplication_matrix(field, base) == m)) throw not_multiplication_matrix();
    return solve_power(PowerInstance{field, std::move(base), v, t_min});
}

}  // namespace costheta
