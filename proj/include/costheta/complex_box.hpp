#pragma once

#include <utility>

#include "costheta/interval.hpp"
#include "costheta/polynomial.hpp"
#include "costheta/rational.hpp"

namespace costheta {

// Closed disk { z : |z - (x + iy)| <= r } with exact rational data.
// Disk arithmetic is conservative: the result disk contains the image of
// the operand disks.
struct ComplexBox {
    Rat x;
    Rat y;
    Rat r;

    ComplexBox() : x(0), y(0), r(0) {}
    ComplexBox(Rat cx, Rat cy, Rat radius) : x(std::move(cx)), y(std::move(cy)), r(std::move(radius)) {
        if (sign(r) < 0) throw input_error("negative box radius");
    }

    static ComplexBox point(const Rat& px, const Rat& py = Rat(0)) {
        return ComplexBox(px, py, Rat(0));
    }

    bool is_point() const { return sign(r) == 0; }

    Rat center_norm_sq() const { return x * x + y * y; }

    // Upper/lower rational bounds on |center|.
    Rat center_abs_upper() const { return sqrt_upper(center_norm_sq(), 48); }
    Rat center_abs_lower() const { return sqrt_lower(center_norm_sq(), 48); }

    // Bounds on |z| over the disk.
    DyadicInterval abs_interval() const {
        Rat lo = center_abs_lower() - r;
        if (sign(lo) < 0) lo = Rat(0);
        return DyadicInterval(lo, center_abs_upper() + r);
    }

    DyadicInterval real_interval() const { return DyadicInterval(x - r, x + r); }
    DyadicInterval imag_interval() const { return DyadicInterval(y - r, y + r); }

    bool contains_point(const Rat& px, const Rat& py) const {
        Rat dx = px - x, dy = py - y;
        return dx * dx + dy * dy <= r * r;
    }

    bool contains_zero() const { return contains_point(Rat(0), Rat(0)); }

    // Disks intersect (closed).
    bool overlaps(const ComplexBox& o) const {
        Rat dx = x - o.x, dy = y - o.y, s = r + o.r;
        return dx * dx + dy * dy <= s * s;
    }

    // This disk contains o entirely.
    bool contains_box(const ComplexBox& o) const {
        if (o.r > r) return false;
        Rat dx = x - o.x, dy = y - o.y, s = r - o.r;
        return dx * dx + dy * dy <= s * s;
    }

    // Disks are disjoint (strict).
    bool disjoint(const ComplexBox& o) const { return !overlaps(o); }

    ComplexBox operator+(const ComplexBox& o) const {
        return ComplexBox(x + o.x, y + o.y, r + o.r);
    }
    ComplexBox operator-() const { return ComplexBox(-x, -y, r); }
    ComplexBox operator-(const ComplexBox& o) const { return *this + (-o); }
    ComplexBox conj() const { return ComplexBox(x, -y, r); }

    ComplexBox operator*(const ComplexBox& o) const {
        Rat cx = x * o.x - y * o.y;
        Rat cy = x * o.y + y * o.x;
        Rat radius = center_abs_upper() * o.r + o.center_abs_upper() * r + r * o.r;
        return ComplexBox(cx, cy, radius);
    }

    ComplexBox scale(const Rat& s) const { return ComplexBox(x * s, y * s, r * rat_abs(s)); }

    // Image of the disk under z -> 1/z; requires 0 strictly outside.
    ComplexBox inverse() const {
        Rat d = center_norm_sq() - r * r;
        if (sign(d) <= 0) throw domain_error("disk inversion: disk contains 0");
        return ComplexBox(x / d, -y / d, r / d);
    }

    ComplexBox operator/(const ComplexBox& o) const { return *this * o.inverse(); }

    // Dyadic rounding of the center; the rounding error moves into the radius.
    ComplexBox rounded(unsigned bits) const {
        Rat rx = dyadic_round(x, bits);
        Rat ry = dyadic_round(y, bits);
        Rat slack = pow2(-static_cast<long>(bits));
        return ComplexBox(rx, ry, r + slack);
    }

    ComplexBox inflated(const Rat& extra) const { return ComplexBox(x, y, r + extra); }

    std::string str() const {
        return "(" + rat_to_string(x) + " + " + rat_to_string(y) + "i ~ " + rat_to_string(r) + ")";
    }
};

// Exact evaluation of p at the rational point px + i*py.
inline std::pair<Rat, Rat> poly_eval_complex_point(const RatPoly& p, const Rat& px,
                                                   const Rat& py) {
    Rat ax(0), ay(0);
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        Rat nx = ax * px - ay * py + p.coeffs()[i];
        Rat ny = ax * py + ay * px;
        ax = std::move(nx);
        ay = std::move(ny);
    }
    return {ax, ay};
}

// Conservative enclosure of { p(w) : w in box } by Horner in disk
// arithmetic; intermediate centers are rounded at precision_bits to keep
// representations bounded.
inline ComplexBox poly_eval_box(const RatPoly& p, const ComplexBox& box,
                                unsigned precision_bits = 64) {
    if (precision_bits < 8) throw input_error("poly_eval_box: precision_bits must be >= 8");
    if (p.is_zero()) return ComplexBox::point(Rat(0));
    ComplexBox acc = ComplexBox::point(p.coeffs().back());
    for (size_t i = p.coeffs().size() - 1; i-- > 0;) {
        acc = acc * box + ComplexBox::point(p.coeffs()[i]);
        acc = acc.rounded(precision_bits);
    }
    return acc;
}

}  // namespace costheta
