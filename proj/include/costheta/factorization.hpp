#pragma once

#include <random>
#include <utility>
#include <vector>

#include "costheta/polynomial.hpp"
#include "costheta/rational.hpp"

namespace costheta {
namespace modpoly {

// Polynomials over Z/m, dense, coefficients in [0, m), lowest degree first.
using ZPoly = std::vector<Int>;

inline Int mod_reduce(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Representative in (-m/2, m/2].
inline Int symmetric_mod(const Int& a, const Int& m) {
    Int r = mod_reduce(a, m);
    if (2 * r > m) r -= m;
    return r;
}

inline void zp_trim(ZPoly& a) {
    while (!a.empty() && sign(a.back()) == 0) a.pop_back();
}

inline ZPoly zp_from_int_coeffs(const std::vector<Int>& c, const Int& m) {
    ZPoly r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = mod_reduce(c[i], m);
    zp_trim(r);
    return r;
}

inline int zp_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod_reduce(r[i] + b[i], m);
    zp_trim(r);
    return r;
}

inline ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod_reduce(r[i] - b[i], m);
    zp_trim(r);
    return r;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (sign(a[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& v : r) v = mod_reduce(v, m);
    zp_trim(r);
    return r;
}

inline ZPoly zp_scale(const ZPoly& a, const Int& s, const Int& m) {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod_reduce(a[i] * s, m);
    zp_trim(r);
    return r;
}

inline Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw error("inv_mod: element not invertible");
    return r;
}

inline ZPoly zp_make_monic(const ZPoly& a, const Int& m) {
    if (a.empty()) return a;
    return zp_scale(a, inv_mod(a.back(), m), m);
}

// Division by a polynomial with invertible leading coefficient.
inline std::pair<ZPoly, ZPoly> zp_divrem(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (b.empty()) throw division_by_zero();
    if (zp_deg(a) < zp_deg(b)) return {{}, a};
    Int lcinv = inv_mod(b.back(), m);
    ZPoly rem = a;
    ZPoly quo(a.size() - b.size() + 1, Int(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= zp_deg(b); --i) {
        if (sign(rem[i]) == 0) continue;
        Int q = mod_reduce(rem[i] * lcinv, m);
        quo[i - zp_deg(b)] = q;
        for (size_t j = 0; j < b.size(); ++j)
            rem[i - zp_deg(b) + j] = mod_reduce(rem[i - zp_deg(b) + j] - q * b[j], m);
    }
    zp_trim(quo);
    zp_trim(rem);
    return {quo, rem};
}

inline ZPoly zp_rem(const ZPoly& a, const ZPoly& b, const Int& m) {
    return zp_divrem(a, b, m).second;
}

// Monic gcd mod prime p.
inline ZPoly zp_gcd(ZPoly a, ZPoly b, const Int& p) {
    while (!b.empty()) {
        ZPoly r = zp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zp_make_monic(a, p);
}

// Extended Euclid mod prime p: returns (g, s, t) with s*a + t*b = g, g monic.
inline void zp_ext_gcd(const ZPoly& a, const ZPoly& b, const Int& p, ZPoly& g, ZPoly& s,
                       ZPoly& t) {
    ZPoly r0 = a, r1 = b;
    ZPoly s0 = {Int(1)}, s1 = {};
    ZPoly t0 = {}, t1 = {Int(1)};
    zp_trim(r0);
    zp_trim(r1);
    while (!r1.empty()) {
        auto [q, r2] = zp_divrem(r0, r1, p);
        ZPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
        ZPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    Int lcinv = inv_mod(r0.back(), p);
    g = zp_scale(r0, lcinv, p);
    s = zp_scale(s0, lcinv, p);
    t = zp_scale(t0, lcinv, p);
}

// base^e mod (f, m).
inline ZPoly zp_powmod(const ZPoly& base, const Int& e, const ZPoly& f, const Int& m) {
    ZPoly result = {Int(1)};
    ZPoly b = zp_rem(base, f, m);
    size_t bits = bit_length(e);
    if (sign(e) == 0) return result;
    for (size_t i = bits; i-- > 0;) {
        result = zp_rem(zp_mul(result, result, m), f, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = zp_rem(zp_mul(result, b, m), f, m);
    }
    return result;
}

inline ZPoly zp_x() { return {Int(0), Int(1)}; }

// Distinct-degree factorization of a squarefree monic f mod p:
// list of (product of irreducibles of degree d, d).
inline std::vector<std::pair<ZPoly, int>> distinct_degree_factor(ZPoly f, const Int& p) {
    std::vector<std::pair<ZPoly, int>> out;
    ZPoly h = zp_x();
    int d = 0;
    while (zp_deg(f) > 0) {
        ++d;
        if (2 * d > zp_deg(f)) {
            out.emplace_back(f, zp_deg(f));  // remainder is irreducible
            break;
        }
        h = zp_powmod(h, p, f, p);  // h = x^(p^d) mod f
        ZPoly g = zp_gcd(zp_sub(h, zp_x(), p), f, p);
        if (zp_deg(g) > 0) {
            out.emplace_back(g, d);
            f = zp_divrem(f, g, p).first;
            h = zp_rem(h, f, p);
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting (p odd).
inline void equal_degree_split(const ZPoly& f, int d, const Int& p, std::mt19937_64& rng,
                               std::vector<ZPoly>& out) {
    if (zp_deg(f) == d) {
        out.push_back(zp_make_monic(f, p));
        return;
    }
    Int exponent = (pow_int(p, static_cast<unsigned long>(d)) - 1) / 2;
    for (;;) {
        ZPoly r(static_cast<size_t>(zp_deg(f)), Int(0));
        for (auto& v : r) {
            unsigned long raw = rng();
            v = mod_reduce(Int(raw), p);
        }
        zp_trim(r);
        if (zp_deg(r) < 1) continue;
        ZPoly s = zp_powmod(r, exponent, f, p);
        ZPoly w = zp_gcd(zp_sub(s, ZPoly{Int(1)}, p), f, p);
        if (zp_deg(w) > 0 && zp_deg(w) < zp_deg(f)) {
            equal_degree_split(w, d, p, rng, out);
            equal_degree_split(zp_divrem(f, w, p).first, d, p, rng, out);
            return;
        }
    }
}

// Monic irreducible factors of squarefree f mod odd prime p.
inline std::vector<ZPoly> factor_mod_p(const ZPoly& f, const Int& p) {
    std::mt19937_64 rng(0x5eedf00dULL);
    std::vector<ZPoly> out;
    for (auto& [g, d] : distinct_degree_factor(zp_make_monic(f, p), p))
        equal_degree_split(g, d, p, rng, out);
    return out;
}

// One quadratic Hensel step: given f = g*h (mod m), s*g + t*h = 1 (mod m),
// h monic, produces the same data mod m^2.
inline void hensel_step(const std::vector<Int>& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t,
                        const Int& m) {
    Int m2 = m * m;
    ZPoly fm = zp_from_int_coeffs(f, m2);
    ZPoly e = zp_sub(fm, zp_mul(g, h, m2), m2);
    auto [q, r] = zp_divrem(zp_mul(s, e, m2), h, m2);
    ZPoly g1 = zp_add(g, zp_add(zp_mul(t, e, m2), zp_mul(q, g, m2), m2), m2);
    ZPoly h1 = zp_add(h, r, m2);
    ZPoly b = zp_sub(zp_add(zp_mul(s, g1, m2), zp_mul(t, h1, m2), m2), ZPoly{Int(1)}, m2);
    auto [c, d] = zp_divrem(zp_mul(s, b, m2), h1, m2);
    ZPoly s1 = zp_sub(s, d, m2);
    ZPoly t1 = zp_sub(t, zp_add(zp_mul(t, b, m2), zp_mul(c, g1, m2), m2), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// Multifactor Hensel lifting over a factor tree: f has integer coefficients,
// lc(f) = l invertible mod p, and f = l * prod(factors) (mod p) with monic
// factors.  Returns monic factors mod target = p^K with
// f = l * prod(result) (mod target).
inline std::vector<ZPoly> hensel_lift_tree(const std::vector<Int>& f, const Int& l,
                                           std::vector<ZPoly> factors, const Int& p,
                                           const Int& target) {
    if (factors.size() == 1) {
        ZPoly fm = zp_from_int_coeffs(f, target);
        return {zp_scale(fm, inv_mod(mod_reduce(l, target), target), target)};
    }
    size_t half = factors.size() / 2;
    ZPoly a = {mod_reduce(l, p)};
    for (size_t i = 0; i < half; ++i) a = zp_mul(a, factors[i], p);
    ZPoly b = {Int(1)};
    for (size_t i = half; i < factors.size(); ++i) b = zp_mul(b, factors[i], p);
    ZPoly g, s, t;
    zp_ext_gcd(a, b, p, g, s, t);
    if (zp_deg(g) != 0) throw error("hensel lift: factors not coprime mod p");
    Int m = p;
    while (m < target) {
        hensel_step(f, a, b, s, t, m);
        m *= m;
    }
    // Truncate to the target modulus before recursing.
    auto truncate = [&](const ZPoly& z) {
        ZPoly r(z.size());
        for (size_t i = 0; i < z.size(); ++i) r[i] = mod_reduce(z[i], target);
        zp_trim(r);
        return r;
    };
    std::vector<Int> a_int, b_int;
    for (auto& v : truncate(a)) a_int.push_back(v);
    for (auto& v : truncate(b)) b_int.push_back(v);
    std::vector<ZPoly> left(factors.begin(), factors.begin() + half);
    std::vector<ZPoly> right(factors.begin() + half, factors.end());
    auto lifted_left = hensel_lift_tree(a_int, l, std::move(left), p, target);
    auto lifted_right = hensel_lift_tree(b_int, Int(1), std::move(right), p, target);
    lifted_left.insert(lifted_left.end(), lifted_right.begin(), lifted_right.end());
    return lifted_left;
}

}  // namespace modpoly

namespace detail_factor {

inline std::vector<Int> small_primes(size_t count) {
    std::vector<Int> primes;
    for (unsigned long candidate = 3; primes.size() < count; candidate += 2) {
        bool ok = true;
        for (unsigned long d = 3; d * d <= candidate; d += 2)
            if (candidate % d == 0) {
                ok = false;
                break;
            }
        if (ok) primes.emplace_back(candidate);
    }
    return primes;
}

// Factors a squarefree primitive integer polynomial with positive leading
// coefficient into irreducibles (Zassenhaus: factor mod p, Hensel lift to a
// Landau-Mignotte bound, recombine subsets).
inline std::vector<RatPoly> factor_squarefree(const RatPoly& input) {
    using namespace modpoly;
    if (input.degree() == 1) return {input};

    std::vector<Int> fc;
    for (const auto& c : input.coeffs()) fc.push_back(num(c));
    Int l = fc.back();
    int n = input.degree();

    // Pick the prime (squarefree image, lc preserved) with fewest modular
    // factors among a few candidates.
    static const std::vector<Int> primes = small_primes(60);
    std::vector<ZPoly> best_factors;
    Int best_p(0);
    int tried = 0;
    for (const Int& p : primes) {
        if (mod_reduce(l, p) == 0) continue;
        ZPoly fp = zp_from_int_coeffs(fc, p);
        if (zp_deg(fp) != n) continue;
        ZPoly deriv(fp.size() - 1);
        for (size_t i = 1; i < fp.size(); ++i) deriv[i - 1] = mod_reduce(fp[i] * Int(i), p);
        zp_trim(deriv);
        if (deriv.empty() || zp_deg(zp_gcd(fp, deriv, p)) != 0) continue;
        auto factors = factor_mod_p(fp, p);
        if (best_factors.empty() || factors.size() < best_factors.size()) {
            best_factors = std::move(factors);
            best_p = p;
        }
        if (++tried >= 3 || best_factors.size() == 1) break;
    }
    if (best_factors.empty()) throw error("factorization: no usable prime found");
    if (best_factors.size() == 1) return {input};

    // Landau-Mignotte: any factor's coefficients are < 2^n * ||f||_2 * |lc|.
    Int norm2_sq(0);
    for (const auto& c : fc) norm2_sq += c * c;
    Int bound = (isqrt(norm2_sq) + 1) * pow_int(Int(2), static_cast<unsigned long>(n)) *
                int_abs(l);
    Int target(best_p);
    while (target <= 2 * bound) target *= best_p;

    auto lifted = hensel_lift_tree(fc, l, best_factors, best_p, target);

    // Subset recombination against the shrinking remainder polynomial.
    std::vector<RatPoly> result;
    RatPoly f_cur = input;
    std::vector<ZPoly> pool = std::move(lifted);
    size_t subset_size = 1;
    while (2 * subset_size <= pool.size()) {
        bool found = false;
        std::vector<size_t> idx(subset_size);
        for (size_t i = 0; i < subset_size; ++i) idx[i] = i;
        for (;;) {
            ZPoly prod = {mod_reduce(num(f_cur.lc()), target)};
            for (size_t i : idx) prod = zp_mul(prod, pool[i], target);
            std::vector<Rat> cand_coeffs(prod.size());
            for (size_t i = 0; i < prod.size(); ++i)
                cand_coeffs[i] = Rat(symmetric_mod(prod[i], target));
            RatPoly candidate = RatPoly(std::move(cand_coeffs)).primitive_integer_form();
            if (!candidate.is_zero() && candidate.degree() > 0 && candidate.divides(f_cur)) {
                result.push_back(candidate);
                f_cur = f_cur.divexact(candidate).primitive_integer_form();
                std::vector<ZPoly> next_pool;
                for (size_t i = 0, j = 0; i < pool.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    next_pool.push_back(std::move(pool[i]));
                }
                pool = std::move(next_pool);
                found = true;
                break;
            }
            // next combination
            size_t k = subset_size;
            while (k > 0 && idx[k - 1] == pool.size() - subset_size + (k - 1)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (size_t i = k; i < subset_size; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (f_cur.degree() > 0) result.push_back(f_cur);
    return result;
}

}  // namespace detail_factor

// Complete factorization over Q into irreducible primitive integer
// polynomials with multiplicities; the product over factor^mult equals the
// input up to a rational scalar.  Constants factor to an empty list.
inline std::vector<std::pair<RatPoly, int>> factor_rational(const RatPoly& p) {
    if (p.is_zero()) throw input_error("factorization of zero polynomial");
    std::vector<std::pair<RatPoly, int>> out;
    for (auto& [g, mult] : squarefree_decomposition(p))
        for (auto& f : detail_factor::factor_squarefree(g))
            out.emplace_back(f, mult);
    return out;
}

inline bool is_irreducible(const RatPoly& p) {
    if (p.degree() < 1) return false;
    if (p.degree() == 1) return true;
    auto factors = factor_rational(p);
    return factors.size() == 1 && factors[0].second == 1;
}

}  // namespace costheta
