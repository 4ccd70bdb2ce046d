#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "costheta/rational.hpp"

namespace costheta {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector and degree -1.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    RatPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static RatPoly zero() { return RatPoly(); }
    static RatPoly one() { return RatPoly({Rat(1)}); }
    static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }
    static RatPoly constant(const Rat& a) { return RatPoly({a}); }
    // a + b*x
    static RatPoly linear(const Rat& a, const Rat& b) { return RatPoly({a, b}); }
    static RatPoly monomial(const Rat& coeff, size_t deg) {
        std::vector<Rat> c(deg + 1, Rat(0));
        c[deg] = coeff;
        return RatPoly(std::move(c));
    }
    // x^n - 1
    static RatPoly xn_minus_one(size_t n) {
        std::vector<Rat> c(n + 1, Rat(0));
        c[0] = Rat(-1);
        c[n] = Rat(1);
        return RatPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& lc() const { return c_.back(); }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    RatPoly operator-() const {
        std::vector<Rat> r(c_);
        for (auto& v : r) v = -v;
        return RatPoly(std::move(r));
    }

    RatPoly operator+(const RatPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return RatPoly(std::move(r));
    }

    RatPoly operator-(const RatPoly& o) const { return *this + (-o); }

    RatPoly operator*(const RatPoly& o) const {
        if (is_zero() || o.is_zero()) return RatPoly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (sign(c_[i]) == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return RatPoly(std::move(r));
    }

    RatPoly operator*(const Rat& s) const {
        if (sign(s) == 0) return RatPoly();
        std::vector<Rat> r(c_);
        for (auto& v : r) v *= s;
        return RatPoly(std::move(r));
    }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<RatPoly, RatPoly> divrem(const RatPoly& d) const {
        if (d.is_zero()) throw division_by_zero();
        if (degree() < d.degree()) return {RatPoly(), *this};
        std::vector<Rat> rem(c_);
        std::vector<Rat> quo(c_.size() - d.c_.size() + 1, Rat(0));
        const Rat& dl = d.lc();
        for (int i = static_cast<int>(rem.size()) - 1; i >= d.degree(); --i) {
            if (sign(rem[i]) == 0) continue;
            Rat q = rem[i] / dl;
            quo[i - d.degree()] = q;
            for (size_t j = 0; j < d.c_.size(); ++j) rem[i - d.degree() + j] -= q * d.c_[j];
        }
        return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
    }

    bool divides(const RatPoly& other) const { return other.divrem(*this).second.is_zero(); }

    RatPoly divexact(const RatPoly& d) const {
        auto [q, r] = divrem(d);
        if (!r.is_zero()) throw error("divexact: nonzero remainder");
        return q;
    }

    RatPoly derivative() const {
        if (degree() <= 0) return RatPoly();
        std::vector<Rat> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return RatPoly(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    RatPoly monic() const {
        if (is_zero()) return RatPoly();
        Rat inv(den(lc()), num(lc()));
        inv.canonicalize();
        return *this * inv;
    }

    // p(x + a)
    RatPoly taylor_shift(const Rat& a) const {
        std::vector<Rat> r(c_);
        for (size_t i = 0; i + 1 < r.size(); ++i)
            for (size_t j = r.size() - 1; j-- > i;) r[j] += a * r[j + 1];
        return RatPoly(std::move(r));
    }

    // p(s * x)
    RatPoly scale_arg(const Rat& s) const {
        std::vector<Rat> r(c_);
        Rat pw(1);
        for (size_t i = 0; i < r.size(); ++i) {
            r[i] *= pw;
            pw *= s;
        }
        return RatPoly(std::move(r));
    }

    // x^deg * p(1/x)
    RatPoly reversed() const {
        std::vector<Rat> r(c_.rbegin(), c_.rend());
        return RatPoly(std::move(r));
    }

    // p(-x)
    RatPoly negate_arg() const {
        std::vector<Rat> r(c_);
        for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return RatPoly(std::move(r));
    }

    // p(x^2)
    RatPoly compose_square() const {
        if (is_zero()) return RatPoly();
        std::vector<Rat> r(2 * c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
        return RatPoly(std::move(r));
    }

    // Integer-coefficient associate with content 1 and positive leading
    // coefficient; unique per equivalence class up to Q*.
    RatPoly primitive_integer_form() const {
        if (is_zero()) return RatPoly();
        Int l(1);
        for (const auto& v : c_) l = lcm_int(l, den(v));
        Int g(0);
        std::vector<Rat> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            Int n = num(c_[i]) * (l / den(c_[i]));
            r[i] = Rat(n);
            g = gcd_int(g, n);
        }
        if (sign(r.back()) < 0) g = -g;
        for (auto& v : r) v /= Rat(g);
        return RatPoly(std::move(r));
    }

    // Max |coefficient| of the primitive integer form (the height H).
    Int height() const {
        RatPoly p = primitive_integer_form();
        Int h(0);
        for (const auto& v : p.c_) h = std::max(h, int_abs(num(v)));
        return h;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (sign(c_[i]) == 0) continue;
            if (!s.empty()) s += sign(c_[i]) > 0 ? " + " : " - ";
            else if (sign(c_[i]) < 0) s += "-";
            Rat a = rat_abs(c_[i]);
            bool unit = (a == 1);
            if (!unit || i == 0) s += is_integer(a) ? num(a).get_str() : rat_to_string(a);
            if (i > 0) {
                if (!unit) s += "*";
                s += "x";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

inline RatPoly operator*(const Rat& s, const RatPoly& p) { return p * s; }

// Extended Euclid over Q[x]: returns (g, s, t) with s*a + t*b = g, g monic.
inline void poly_ext_gcd(const RatPoly& a, const RatPoly& b, RatPoly& g, RatPoly& s, RatPoly& t) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::one(), s1;
    RatPoly t0, t1 = RatPoly::one();
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divrem(r1);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        g = s = t = RatPoly();
        return;
    }
    Rat inv(den(r0.lc()), num(r0.lc()));
    inv.canonicalize();
    g = r0 * inv;
    s = s0 * inv;
    t = t0 * inv;
}

// Monic gcd; poly_gcd(p, 0) = monic(p).
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Squarefree part p / gcd(p, p') in primitive integer form.
inline RatPoly poly_squarefree(const RatPoly& p) {
    if (p.is_zero()) throw input_error("squarefree part of zero polynomial");
    if (p.degree() == 0) return RatPoly::one();
    RatPoly g = poly_gcd(p, p.derivative());
    return p.divexact(g).primitive_integer_form();
}

// Yun's squarefree decomposition: list of (squarefree factor, multiplicity),
// factors pairwise coprime, product of factor^mult = p up to a scalar.
inline std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
    if (p.is_zero()) throw input_error("squarefree decomposition of zero polynomial");
    std::vector<std::pair<RatPoly, int>> out;
    if (p.degree() == 0) return out;
    RatPoly g = poly_gcd(p, p.derivative());
    RatPoly w = p.divexact(g);
    RatPoly y = p.derivative().divexact(g);
    int mult = 1;
    while (w.degree() > 0) {
        RatPoly z = y - w.derivative();
        RatPoly f = poly_gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f.primitive_integer_form(), mult);
        w = w.divexact(f);
        y = z.divexact(f);
        ++mult;
    }
    return out;
}

// Resultant of p and q via the Euclidean recurrence.
inline Rat poly_resultant(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) {
        if (p.degree() <= 0 && q.degree() <= 0) return Rat(1);
        return Rat(0);
    }
    int m = p.degree(), n = q.degree();
    if (m < n) {
        Rat r = poly_resultant(q, p);
        return (static_cast<long long>(m) * n) % 2 == 0 ? r : -r;
    }
    if (n == 0) return pow_rat(q.coeff(0), m);
    RatPoly r = p.divrem(q).second;
    if (r.is_zero()) return Rat(0);
    Rat factor = pow_rat(q.lc(), m - r.degree());
    Rat sub = poly_resultant(q, r);
    Rat res = factor * sub;
    return (static_cast<long long>(m) * n) % 2 == 0 ? res : -res;
}

// Lagrange interpolation through distinct nodes.
inline RatPoly poly_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    RatPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        RatPoly basis = RatPoly::one();
        Rat denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * RatPoly::linear(-xs[j], Rat(1));
            denom *= xs[i] - xs[j];
        }
        acc = acc + basis * (ys[i] / denom);
    }
    return acc;
}

// Bivariate polynomial in x and y represented as coefficients of x^k, each a
// RatPoly in y.
using BiPoly = std::vector<RatPoly>;

inline int bipoly_deg_x(const BiPoly& q) {
    int d = -1;
    for (size_t k = 0; k < q.size(); ++k)
        if (!q[k].is_zero()) d = static_cast<int>(k);
    return d;
}

// Sylvester resultant Res_x(p(x), q(x, y)) as a polynomial in y, computed by
// evaluation at m*dy+1 points and interpolation.  A degree drop of q at a
// sample point is corrected by the lc(p)^(n - n0) factor of the padded
// Sylvester determinant.
inline RatPoly poly_resultant_eliminate(const RatPoly& p, const BiPoly& q) {
    if (p.is_zero()) throw input_error("resultant elimination: p is zero");
    int n = bipoly_deg_x(q);
    if (n <= 0) throw degenerate_input("resultant elimination: q is constant in x");
    int m = p.degree();
    if (m == 0) return RatPoly::constant(pow_rat(p.coeff(0), n));
    int dy = 0;
    for (int k = 0; k <= n; ++k) dy = std::max(dy, std::max(0, q[k].degree()));
    int points = m * dy + 1;
    std::vector<Rat> xs, ys;
    xs.reserve(points);
    ys.reserve(points);
    long node = 0;
    while (static_cast<int>(xs.size()) < points) {
        Rat y0(node);
        node = node <= 0 ? -node + 1 : -node;  // 0, 1, -1, 2, -2, ...
        std::vector<Rat> qc(n + 1);
        for (int k = 0; k <= n; ++k) qc[k] = q[k].eval(y0);
        RatPoly qy{std::vector<Rat>(qc)};
        Rat value;
        if (qy.is_zero()) {
            value = Rat(0);
        } else {
            int n0 = qy.degree();
            value = pow_rat(p.lc(), n - n0) * poly_resultant(p, qy);
        }
        xs.push_back(y0);
        ys.push_back(value);
    }
    return poly_interpolate(xs, ys);
}

// Lower bound on the pairwise distance of distinct roots:
// sqrt(6) / (d^((d+1)/2) * H^(d-1)).  Returns 1 for degree <= 1.
inline Rat separation_bound(const RatPoly& poly) {
    RatPoly p = poly.primitive_integer_form();
    int d = p.degree();
    if (d <= 1) return Rat(1);
    Int h = p.height();
    Rat sqrt6_lo = sqrt_lower(Rat(6), 96);
    // d^((d+1)/2), rounded up when (d+1) is odd.
    Rat denom;
    if ((d + 1) % 2 == 0) {
        denom = Rat(pow_int(Int(d), static_cast<unsigned long>((d + 1) / 2)));
    } else {
        Rat whole(pow_int(Int(d), static_cast<unsigned long>(d / 2)));
        denom = whole * sqrt_upper(Rat(d), 96);
    }
    denom *= Rat(pow_int(h, static_cast<unsigned long>(d - 1)));
    return sqrt6_lo / denom;
}

}  // namespace costheta
