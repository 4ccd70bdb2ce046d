#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "costheta/errors.hpp"

namespace costheta {

// Exact arithmetic substrate.  GMP's canonical mpq (gcd(num, den) = 1,
// den >= 1) is exactly the BigRational contract, so we use it directly.
using Int = mpz_class;
using Rat = mpq_class;

inline Int num(const Rat& q) { return Int(q.get_num()); }
inline Int den(const Rat& q) { return Int(q.get_den()); }

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& n) { return sgn(n); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw division_by_zero();
        Rat inv(den(base), num(base));
        inv.canonicalize();
        return pow_rat(inv, -e);
    }
    Rat r(pow_int(num(base), static_cast<unsigned long>(e)),
          pow_int(den(base), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
}

// 2^e as a rational, e may be negative.
inline Rat pow2(long e) {
    Rat r(1);
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Rational bounds on sqrt(q) for q >= 0, accurate to roughly 2^-prec_bits
// relative error: lower^2 <= q <= upper^2.
inline Rat sqrt_lower(const Rat& q, unsigned prec_bits = 64) {
    if (sign(q) < 0) throw domain_error("sqrt of negative rational");
    if (sign(q) == 0) return Rat(0);
    Int n = num(q), d = den(q);
    // sqrt(n/d) = sqrt(n*d * 4^k) / (d * 2^k)
    Int scaled = n * d;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * prec_bits);
    Int root = isqrt(scaled);  // root^2 <= scaled
    Rat r(root, d);
    r.canonicalize();
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), prec_bits);
    return r;
}

inline Rat sqrt_upper(const Rat& q, unsigned prec_bits = 64) {
    if (sign(q) < 0) throw domain_error("sqrt of negative rational");
    if (sign(q) == 0) return Rat(0);
    Int n = num(q), d = den(q);
    Int scaled = n * d;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * prec_bits);
    Int root = isqrt(scaled) + 1;  // root^2 > scaled
    Rat r(root, d);
    r.canonicalize();
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), prec_bits);
    return r;
}

// Nearest dyadic m/2^bits; |result - q| <= 2^-(bits+1).
inline Rat dyadic_round(const Rat& q, unsigned bits) {
    Rat scaled = q * pow2(static_cast<long>(bits));
    Int m = floor_rat(scaled + Rat(1, 2));
    return Rat(m) * pow2(-static_cast<long>(bits));
}

// Parse "p", "-p", "p/q".  Throws input_error on malformed text.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw input_error("malformed rational literal: '" + s + "'");
    if (sign(Int(r.get_den())) <= 0) {
        if (r.get_den() == 0) throw input_error("zero denominator in: '" + s + "'");
        // mpq_set_str accepts negative denominators; canonicalize fixes sign.
    }
    r.canonicalize();
    return r;
}

// Canonical "p/q" text, denominator always present (bit-exact fixtures).
inline std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int int_from_string(const std::string& s) {
    Int r;
    if (mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
        throw input_error("malformed integer literal: '" + s + "'");
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Euler totient by trial division; n fits in unsigned long here.
inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline size_t bit_length(const Int& n) { return mpz_sizeinbase(n.get_mpz_t(), 2); }

}  // namespace costheta
