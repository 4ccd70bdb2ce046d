#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "costheta/complex_box.hpp"
#include "costheta/config.hpp"
#include "costheta/factorization.hpp"
#include "costheta/polynomial.hpp"

namespace costheta {
namespace detail_roots {

// Complex arithmetic on GMP bigfloats (heuristic stage only; results are
// certified afterwards with exact arithmetic).
struct CF {
    mpf_class re, im;
    CF() = default;
    CF(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}
};

inline CF cf_add(const CF& a, const CF& b) { return {a.re + b.re, a.im + b.im}; }
inline CF cf_sub(const CF& a, const CF& b) { return {a.re - b.re, a.im - b.im}; }
inline CF cf_mul(const CF& a, const CF& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline mpf_class cf_norm2(const CF& a) { return a.re * a.re + a.im * a.im; }
inline CF cf_div(const CF& a, const CF& b) {
    mpf_class d = cf_norm2(b);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

// Aberth-Ehrlich simultaneous iteration.  Returns approximations to all
// complex roots of a squarefree polynomial.
inline std::vector<CF> aberth(const RatPoly& p, unsigned prec) {
    int d = p.degree();
    std::vector<CF> c(d + 1);
    for (int i = 0; i <= d; ++i) {
        mpf_class re(0, prec);
        mpf_set_q(re.get_mpf_t(), p.coeff(i).get_mpq_t());
        c[i] = CF{re, mpf_class(0, prec)};
    }
    // Cauchy bound for the initial circle.
    mpf_class radius(1, prec);
    for (int i = 0; i < d; ++i) {
        mpf_class q = abs(c[i].re) / abs(c[d].re);
        if (q > radius) radius = q;
    }
    radius += 1;
    std::vector<CF> z(d);
    for (int i = 0; i < d; ++i) {
        double ang = 2.0 * 3.14159265358979323846 * i / d + 0.4;
        z[i] = CF{mpf_class(radius * std::cos(ang), prec), mpf_class(radius * std::sin(ang), prec)};
    }
    mpf_class eps(1, prec);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec * 3 / 4);
    int max_iter = 120 + 30 * d;
    for (int iter = 0; iter < max_iter; ++iter) {
        mpf_class worst(0, prec);
        for (int i = 0; i < d; ++i) {
            // Horner for p and p'.
            CF pv = c[d], dv = CF{mpf_class(0, prec), mpf_class(0, prec)};
            for (int k = d - 1; k >= 0; --k) {
                dv = cf_add(cf_mul(dv, z[i]), pv);
                pv = cf_add(cf_mul(pv, z[i]), c[k]);
            }
            if (cf_norm2(pv) == 0) continue;
            if (cf_norm2(dv) == 0) {
                z[i].re += mpf_class(1e-3, prec);  // nudge off a critical point
                worst = 1;
                continue;
            }
            CF w = cf_div(pv, dv);
            CF s{mpf_class(0, prec), mpf_class(0, prec)};
            bool collision = false;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                CF diff = cf_sub(z[i], z[j]);
                if (cf_norm2(diff) == 0) {
                    collision = true;
                    break;
                }
                s = cf_add(s, cf_div(CF{mpf_class(1, prec), mpf_class(0, prec)}, diff));
            }
            if (collision) {
                z[i].re += mpf_class(1e-3, prec);
                worst = 1;
                continue;
            }
            CF denom = cf_sub(CF{mpf_class(1, prec), mpf_class(0, prec)}, cf_mul(w, s));
            CF delta = cf_norm2(denom) == 0 ? w : cf_div(w, denom);
            z[i] = cf_sub(z[i], delta);
            mpf_class step = cf_norm2(delta);
            if (step > worst) worst = step;
        }
        if (worst < eps * eps) break;
    }
    return z;
}

// Exact one-root test for the closed disk |z - c| <= r: Pellet/Rouche on the
// shifted, scaled polynomial.  Sufficient, never wrong when it answers true.
inline bool pellet_one_root(const RatPoly& p, const Rat& cx, const Rat& cy, const Rat& r) {
    int d = p.degree();
    std::vector<std::pair<Rat, Rat>> a(d + 1);
    for (int i = 0; i <= d; ++i) a[i] = {p.coeff(i), Rat(0)};
    // Taylor coefficients p^(k)(c)/k! by repeated synthetic division.
    for (int i = 0; i < d; ++i) {
        for (int j = d - 1; j >= i; --j) {
            a[j].first += cx * a[j + 1].first - cy * a[j + 1].second;
            a[j].second += cx * a[j + 1].second + cy * a[j + 1].first;
        }
    }
    Rat rk(1);
    Rat dominant(0), rest(0);
    for (int k = 0; k <= d; ++k) {
        Rat re = rat_abs(a[k].first * rk), im = rat_abs(a[k].second * rk);
        if (k == 1) {
            dominant = std::max(re, im);  // lower bound on |b_1|
        } else {
            rest += re + im;  // upper bound on |b_k|
        }
        rk *= r;
    }
    return dominant > rest;
}

inline size_t bits_of_inverse(const Rat& r) {
    size_t nd = bit_length(den(r)), nn = bit_length(num(r));
    return nd > nn ? nd - nn : 0;
}

}  // namespace detail_roots

// Certified isolation of all distinct complex roots: pairwise disjoint
// disks, one root each, radius < separation_bound/2, and each box either
// centered exactly on the real axis (real root) or with |y| > r (non-real).
// radius_cap, when positive, further bounds every radius.
inline std::vector<ComplexBox> isolate_roots(const RatPoly& p_in, const Rat& radius_cap = Rat(0)) {
    if (p_in.is_zero()) throw input_error("root isolation of zero polynomial");
    RatPoly p = poly_squarefree(p_in);
    int d = p.degree();
    std::vector<ComplexBox> out;
    if (d == 0) return out;
    if (d == 1) {
        Rat root = -p.coeff(0) / p.coeff(1);
        out.emplace_back(root, Rat(0), Rat(0));
        return out;
    }
    Rat base = separation_bound(p) / 4;
    if (sign(radius_cap) > 0 && radius_cap < base) base = radius_cap;

    for (unsigned attempt = 0;; ++attempt) {
        Rat rad = base * pow2(-static_cast<long>(attempt));
        size_t cbits = detail_roots::bits_of_inverse(rad) + 24;
        unsigned prec = static_cast<unsigned>(cbits) + 64 + 32 * attempt;
        if (prec > precision_cap_bits()) throw precision_cap_exceeded("isolate_roots");
        auto approx = detail_roots::aberth(p, prec);
        out.clear();
        bool ok = true;
        for (auto& z : approx) {
            Rat ax, ay;
            mpq_set_f(ax.get_mpq_t(), z.re.get_mpf_t());
            mpq_set_f(ay.get_mpq_t(), z.im.get_mpf_t());
            Rat cx = dyadic_round(ax, cbits);
            Rat cy = dyadic_round(ay, cbits);
            if (rat_abs(cy) <= rad) cy = Rat(0);  // candidate real root
            if (!detail_roots::pellet_one_root(p, cx, cy, rad)) {
                ok = false;
                break;
            }
            if (sign(cy) != 0 && rat_abs(cy) <= rad) {
                ok = false;  // realness would be ambiguous
                break;
            }
            out.emplace_back(cx, cy, rad);
        }
        if (ok && static_cast<int>(out.size()) == d) {
            for (size_t i = 0; ok && i < out.size(); ++i)
                for (size_t j = i + 1; ok && j < out.size(); ++j)
                    if (out[i].overlaps(out[j])) ok = false;
            if (ok) {
                std::sort(out.begin(), out.end(), [](const ComplexBox& a, const ComplexBox& b) {
                    return a.x != b.x ? a.x < b.x : a.y < b.y;
                });
                return out;
            }
        }
    }
}

}  // namespace costheta
