#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "costheta/algebraic.hpp"

namespace costheta {

// Coordinates in the power basis 1, z, ..., z^(d-1).
using FieldElement = std::vector<Rat>;

struct RationalMatrix {
    std::vector<std::vector<Rat>> rows;  // square, row-major

    RationalMatrix() = default;
    explicit RationalMatrix(std::vector<std::vector<Rat>> r) : rows(std::move(r)) {
        for (const auto& row : rows)
            if (row.size() != rows.size()) throw input_error("matrix is not square");
    }

    size_t size() const { return rows.size(); }

    static RationalMatrix identity(size_t n) {
        std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
        for (size_t i = 0; i < n; ++i) r[i][i] = Rat(1);
        return RationalMatrix(std::move(r));
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        if (v.size() != size()) throw input_error("matrix/vector size mismatch");
        std::vector<Rat> out(size(), Rat(0));
        for (size_t i = 0; i < size(); ++i)
            for (size_t j = 0; j < size(); ++j) out[i] += rows[i][j] * v[j];
        return out;
    }

    RationalMatrix operator*(const RationalMatrix& o) const {
        size_t n = size();
        std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                if (sign(rows[i][k]) == 0) continue;
                for (size_t j = 0; j < n; ++j) r[i][j] += rows[i][k] * o.rows[k][j];
            }
        return RationalMatrix(std::move(r));
    }

    Rat trace() const {
        Rat t(0);
        for (size_t i = 0; i < size(); ++i) t += rows[i][i];
        return t;
    }

    bool operator==(const RationalMatrix& o) const { return rows == o.rows; }
};

// Characteristic polynomial (monic) by Faddeev-LeVerrier.
inline RatPoly char_poly(const RationalMatrix& m) {
    size_t d = m.size();
    std::vector<Rat> c(d + 1, Rat(0));
    c[d] = Rat(1);
    RationalMatrix n = m;
    c[d - 1] = -n.trace();
    for (size_t k = 2; k <= d; ++k) {
        RationalMatrix shifted = n;
        for (size_t i = 0; i < d; ++i) shifted.rows[i][i] += c[d - k + 1];
        n = m * shifted;
        c[d - k] = -n.trace() / Rat(static_cast<long>(k));
    }
    return RatPoly(std::move(c));
}

// The field Q(z) presented by the generator's irreducible minimal
// polynomial and the distinguished embedding (the isolated root).
class NumberField {
  public:
    explicit NumberField(AlgebraicNumber generator) : generator_(std::move(generator)) {
        int d = generator_.degree();
        const RatPoly& p = generator_.minpoly();
        // Reduction table: coordinates of z^d, ..., z^(2d-2).
        if (d >= 1) {
            std::vector<Rat> zd(d, Rat(0));
            for (int i = 0; i < d; ++i) zd[i] = -p.coeff(i) / p.lc();
            reductions_.push_back(zd);
            for (int k = d + 1; k <= 2 * d - 2; ++k) {
                const std::vector<Rat>& prev = reductions_.back();
                std::vector<Rat> cur(d, Rat(0));
                // multiply by z: shift, then fold the overflow with z^d.
                for (int i = 0; i + 1 < d; ++i) cur[i + 1] = prev[i];
                const Rat& top = prev[d - 1];
                if (sign(top) != 0)
                    for (int i = 0; i < d; ++i) cur[i] += top * reductions_[0][i];
                reductions_.push_back(std::move(cur));
            }
        }
    }

    int degree() const { return generator_.degree(); }
    const RatPoly& generator_minpoly() const { return generator_.minpoly(); }
    const AlgebraicNumber& generator() const { return generator_; }

    FieldElement zero() const { return FieldElement(degree(), Rat(0)); }

    FieldElement one() const {
        FieldElement e(degree(), Rat(0));
        e[0] = Rat(1);
        return e;
    }

    FieldElement from_rational(const Rat& q) const {
        FieldElement e(degree(), Rat(0));
        e[0] = q;
        return e;
    }

    // The generator z itself (degree >= 2), else its rational value.
    FieldElement generator_element() const {
        FieldElement e(degree(), Rat(0));
        if (degree() == 1) {
            e[0] = generator_.rational_value();
        } else {
            e[1] = Rat(1);
        }
        return e;
    }

    const std::vector<Rat>& reduction(size_t power) const {
        return reductions_[power - degree()];
    }

  private:
    AlgebraicNumber generator_;
    std::vector<std::vector<Rat>> reductions_;
};

inline void check_element(const NumberField& field, const FieldElement& a) {
    if (static_cast<int>(a.size()) != field.degree())
        throw input_error("field element has wrong coordinate length");
}

inline bool fe_is_zero(const FieldElement& a) {
    for (const auto& c : a)
        if (sign(c) != 0) return false;
    return true;
}

inline FieldElement fe_add(const NumberField& field, const FieldElement& a, const FieldElement& b) {
    check_element(field, a);
    check_element(field, b);
    FieldElement r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline FieldElement fe_sub(const NumberField& field, const FieldElement& a, const FieldElement& b) {
    check_element(field, a);
    check_element(field, b);
    FieldElement r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline FieldElement fe_scale(const FieldElement& a, const Rat& s) {
    FieldElement r(a);
    for (auto& c : r) c *= s;
    return r;
}

inline FieldElement fe_mul(const NumberField& field, const FieldElement& a, const FieldElement& b) {
    check_element(field, a);
    check_element(field, b);
    size_t d = a.size();
    if (d == 1) return {a[0] * b[0]};
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (size_t i = 0; i < d; ++i) {
        if (sign(a[i]) == 0) continue;
        for (size_t j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
    }
    FieldElement r(prod.begin(), prod.begin() + d);
    for (size_t k = d; k < prod.size(); ++k) {
        if (sign(prod[k]) == 0) continue;
        const auto& red = field.reduction(k);
        for (size_t i = 0; i < d; ++i) r[i] += prod[k] * red[i];
    }
    return r;
}

// Multiplication by the generator: shift and fold (cheaper than fe_mul).
inline FieldElement fe_mul_generator(const NumberField& field, const FieldElement& a) {
    check_element(field, a);
    size_t d = a.size();
    if (d == 1) return {a[0] * field.generator().rational_value()};
    FieldElement r(d, Rat(0));
    for (size_t i = 0; i + 1 < d; ++i) r[i + 1] = a[i];
    if (sign(a[d - 1]) != 0) {
        const auto& red = field.reduction(d);
        for (size_t i = 0; i < d; ++i) r[i] += a[d - 1] * red[i];
    }
    return r;
}

inline FieldElement fe_inv(const NumberField& field, const FieldElement& a) {
    check_element(field, a);
    if (fe_is_zero(a)) throw division_by_zero();
    if (field.degree() == 1) return {Rat(1) / a[0]};
    RatPoly ap{std::vector<Rat>(a)};
    RatPoly g, s, t;
    poly_ext_gcd(ap, field.generator_minpoly(), g, s, t);
    if (g.degree() != 0) throw error("fe_inv: gcd with irreducible minpoly is not constant");
    RatPoly inv = s.divrem(field.generator_minpoly()).second;
    FieldElement r(field.degree(), Rat(0));
    for (int i = 0; i <= inv.degree(); ++i) r[i] = inv.coeff(i);
    return r;
}

inline FieldElement fe_div(const NumberField& field, const FieldElement& a, const FieldElement& b) {
    return fe_mul(field, a, fe_inv(field, b));
}

enum class FeOp { add, sub, mul, inv };

inline FieldElement fe_arith(FeOp op, const NumberField& field, const FieldElement& a,
                             const FieldElement& b) {
    switch (op) {
        case FeOp::add: return fe_add(field, a, b);
        case FeOp::sub: return fe_sub(field, a, b);
        case FeOp::mul: return fe_mul(field, a, b);
        case FeOp::inv: return fe_inv(field, a);
    }
    throw input_error("unknown field op");
}

inline FieldElement fe_pow(const NumberField& field, const FieldElement& a, unsigned long long t) {
    check_element(field, a);
    FieldElement result = field.one();
    FieldElement base = a;
    while (t > 0) {
        if (t & 1ULL) result = fe_mul(field, result, base);
        t >>= 1;
        if (t > 0) base = fe_mul(field, base, base);
    }
    return result;
}

// Evaluate a rational polynomial at a field element (Horner).
inline FieldElement fe_poly_eval(const NumberField& field, const RatPoly& p, const FieldElement& a) {
    FieldElement acc = field.zero();
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        acc = fe_mul(field, acc, a);
        acc[0] += p.coeffs()[i];
    }
    return acc;
}

// Matrix of x -> a*x in the power basis; column j holds coords(a * z^j).
inline RationalMatrix multiplication_matrix(const NumberField& field, const FieldElement& a) {
    check_element(field, a);
    size_t d = a.size();
    std::vector<std::vector<Rat>> rows(d, std::vector<Rat>(d, Rat(0)));
    FieldElement col = a;
    for (size_t j = 0; j < d; ++j) {
        for (size_t i = 0; i < d; ++i) rows[i][j] = col[i];
        if (j + 1 < d) col = fe_mul_generator(field, col);
    }
    return RationalMatrix(std::move(rows));
}

// Certified enclosure of the embedded value sum a_i z^i.
inline ComplexBox embed(const NumberField& field, const FieldElement& a, unsigned precision_bits) {
    check_element(field, a);
    ComplexBox z = field.generator().enclosure(precision_bits);
    ComplexBox acc = ComplexBox::point(Rat(0));
    for (size_t i = a.size(); i-- > 0;) {
        acc = acc * z + ComplexBox::point(a[i]);
        acc = acc.rounded(precision_bits + 16);
    }
    return acc;
}

// Exact algebraic number carried by a field element: minimal polynomial from
// the characteristic polynomial of its multiplication matrix, root selected
// by the embedding.
inline AlgebraicNumber fe_to_algebraic(const NumberField& field, const FieldElement& a) {
    check_element(field, a);
    bool rational = true;
    for (size_t i = 1; i < a.size(); ++i)
        if (sign(a[i]) != 0) rational = false;
    if (rational) return alg_from_rational(a[0]);
    RatPoly ann = char_poly(multiplication_matrix(field, a));
    auto enclose = [&](unsigned prec) { return embed(field, a, prec); };
    return detail_alg::from_annihilator(ann, enclose, "fe_to_algebraic");
}

// Sound and complete membership test for w in Q(z) (as subfields of C via
// the distinguished embeddings).  Returns the exact coordinates when member,
// nullopt otherwise with non-membership certified by the compositum degree:
// [Q(z,w):Q] > deg(z) is witnessed by some minpoly(z + lambda*w) of degree
// > deg(z); if all (deg_z*deg_w)^2 + 1 sampled lambda give degree <= deg(z),
// a good lambda is among them and membership is certain, so the relation
// search is guaranteed to terminate.
inline std::optional<FieldElement> membership(const NumberField& field, const AlgebraicNumber& w) {
    int d = field.degree();
    if (w.is_rational()) return field.from_rational(w.rational_value());
    int dw = w.degree();
    if (dw > d || d % dw != 0) return std::nullopt;  // Q(w) <= Q(z) forces deg | d

    const RatPoly& q = w.minpoly();
    Rat quarter_sep_w = separation_bound(q) / 4;

    // Exact verification of a coordinate candidate.
    auto verify = [&](const FieldElement& cand) -> bool {
        FieldElement value = fe_poly_eval(field, q, cand);
        if (!fe_is_zero(value)) return false;
        // cand evaluates to some root of q; match the distinguished one.
        AlgebraicNumber w_ref = w.refined(quarter_sep_w);
        for (unsigned prec = kPrecisionStartBits; prec <= precision_cap_bits(); prec *= 2) {
            ComplexBox e = embed(field, cand, prec);
            if (e.r >= quarter_sep_w) continue;
            if (!e.overlaps(w_ref.box())) return false;  // a different conjugate
            // Both boxes are smaller than sep/4 and both contain roots of q.
            return true;
        }
        throw precision_cap_exceeded("membership verification");
    };

    long max_lambda = static_cast<long>(d) * dw;
    max_lambda = max_lambda * max_lambda + 1;
    bool member_certified = false;

    for (unsigned prec = 256; prec <= precision_cap_bits(); prec *= 2) {
        // Heuristic relation search at this precision.
        std::vector<ComplexBox> values;
        FieldElement pw = field.one();
        for (int i = 0; i < d; ++i) {
            values.push_back(embed(field, pw, prec));
            if (i + 1 < d) pw = fe_mul_generator(field, pw);
        }
        values.push_back(w.enclosure(prec));
        Int height_bound = pow_int(Int(2), std::max(16u, prec / (2 * (d + 2))));
        std::optional<RelationCandidate> rel;
        try {
            rel = integer_relation(values, height_bound);
        } catch (const insufficient_precision&) {
            rel = std::nullopt;
        }
        if (rel && sign(rel->coefficients[d]) != 0) {
            FieldElement cand(d, Rat(0));
            for (int i = 0; i < d; ++i) cand[i] = -Rat(rel->coefficients[i]) / Rat(rel->coefficients[d]);
            if (verify(cand)) return cand;
        }
        if (!member_certified) {
            // Exact compositum-degree certificate.
            for (long lambda = 1; lambda <= max_lambda; ++lambda) {
                AlgebraicNumber shifted = alg_add(field.generator(), alg_scale(w, Rat(lambda)));
                if (shifted.degree() > d) return std::nullopt;
            }
            member_certified = true;  // keep escalating until the relation appears
        }
    }
    throw precision_cap_exceeded("membership");
}

}  // namespace costheta
