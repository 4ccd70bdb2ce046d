#pragma once

#include <utility>
#include <vector>

#include "costheta/algebraic.hpp"
#include "costheta/number_field.hpp"

namespace costheta {

namespace detail_lrs {

template <typename V>
struct ValueOps;

template <>
struct ValueOps<Rat> {
    static Rat from_rat(const Rat& q) { return q; }
    static Rat add(const Rat& a, const Rat& b) { return a + b; }
    static Rat mul(const Rat& a, const Rat& b) { return a * b; }
    static bool eq(const Rat& a, const Rat& b) { return a == b; }
    static bool maybe_eq(const Rat& a, const Rat& b) { return a == b; }
};

template <>
struct ValueOps<AlgebraicNumber> {
    static AlgebraicNumber from_rat(const Rat& q) { return alg_from_rational(q); }
    static AlgebraicNumber add(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return alg_add(a, b);
    }
    static AlgebraicNumber mul(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return alg_mul(a, b);
    }
    static bool eq(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_equals(a, b); }
    // Cheap interval prefilter; exact confirmation follows only on overlap.
    static bool maybe_eq(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return a.enclosure(48).overlaps(b.enclosure(48));
    }
};

}  // namespace detail_lrs

// Order-k linear recurrence a_t = sum_{i=1..k} c_i a_{t-i} with the first k
// terms given.  Terms are indexed from 0: term_at(0) is the first seed.
template <typename V>
struct BasicLinearRecurrence {
    std::vector<Rat> coeffs;  // c_1..c_k, c_k != 0
    std::vector<V> initial;   // k seed terms

    BasicLinearRecurrence(std::vector<Rat> c, std::vector<V> init)
        : coeffs(std::move(c)), initial(std::move(init)) {
        if (coeffs.empty()) throw input_error("recurrence order must be >= 1");
        if (sign(coeffs.back()) == 0) throw input_error("trailing coefficient c_k must be nonzero");
        if (initial.size() != coeffs.size())
            throw input_error("initial terms must match the recurrence order");
    }

    size_t order() const { return coeffs.size(); }
};

using LinearRecurrence = BasicLinearRecurrence<Rat>;
using AlgLinearRecurrence = BasicLinearRecurrence<AlgebraicNumber>;

// Exact term at 0-based index t.
template <typename V>
V term_at(const BasicLinearRecurrence<V>& rec, unsigned long long t) {
    using Ops = detail_lrs::ValueOps<V>;
    size_t k = rec.order();
    if (t < k) return rec.initial[t];
    std::vector<V> window(rec.initial);
    for (unsigned long long i = k; i <= t; ++i) {
        V next = Ops::mul(Ops::from_rat(rec.coeffs[0]), window[k - 1]);
        for (size_t j = 1; j < k; ++j)
            next = Ops::add(next, Ops::mul(Ops::from_rat(rec.coeffs[j]), window[k - 1 - j]));
        for (size_t j = 0; j + 1 < k; ++j) window[j] = window[j + 1];
        window[k - 1] = std::move(next);
    }
    return window[k - 1];
}

// One-based view matching the a_1..a_k naming of the seeds.
template <typename V>
V term_1based(const BasicLinearRecurrence<V>& rec, unsigned long long i) {
    if (i == 0) throw input_error("term_1based starts at index 1");
    return term_at(rec, i - 1);
}

// Every 0-based t <= t_max with term_at(t) = c.  Terms are produced exactly;
// a cheap enclosure prefilter guards the exact comparison.
template <typename V>
std::vector<unsigned long long> scan_for_value(const BasicLinearRecurrence<V>& rec, const V& c,
                                               unsigned long long t_max) {
    using Ops = detail_lrs::ValueOps<V>;
    std::vector<unsigned long long> hits;
    size_t k = rec.order();
    std::vector<V> window;
    for (unsigned long long t = 0; t <= t_max; ++t) {
        V cur = [&] {
            if (t < k) return rec.initial[t];
            V next = Ops::mul(Ops::from_rat(rec.coeffs[0]), window[k - 1]);
            for (size_t j = 1; j < k; ++j)
                next = Ops::add(next, Ops::mul(Ops::from_rat(rec.coeffs[j]), window[k - 1 - j]));
            return next;
        }();
        if (Ops::maybe_eq(cur, c) && Ops::eq(cur, c)) hits.push_back(t);
        if (window.size() == k) {
            for (size_t j = 0; j + 1 < k; ++j) window[j] = window[j + 1];
            window[k - 1] = std::move(cur);
        } else {
            window.push_back(std::move(cur));
        }
    }
    return hits;
}

// Matrix form u^T M^t v of Claim-style companion matrices.
struct MatrixLRS {
    RationalMatrix m;
    std::vector<Rat> u;
    std::vector<Rat> v;
};

// Companion form with u = e_1 and v = (a_k, ..., a_1); u^T M^t v equals the
// term at 0-based index k-1+t.
inline MatrixLRS companion_form(const LinearRecurrence& rec) {
    size_t k = rec.order();
    std::vector<std::vector<Rat>> rows(k, std::vector<Rat>(k, Rat(0)));
    for (size_t j = 0; j < k; ++j) rows[0][j] = rec.coeffs[j];
    for (size_t i = 1; i < k; ++i) rows[i][i - 1] = Rat(1);
    std::vector<Rat> u(k, Rat(0));
    u[0] = Rat(1);
    std::vector<Rat> v(k);
    for (size_t i = 0; i < k; ++i) v[i] = rec.initial[k - 1 - i];
    return MatrixLRS{RationalMatrix(std::move(rows)), std::move(u), std::move(v)};
}

inline Rat matrix_lrs_term(const MatrixLRS& lrs, unsigned long long t) {
    std::vector<Rat> vec = lrs.v;
    for (unsigned long long i = 0; i < t; ++i) vec = lrs.m.apply(vec);
    Rat out(0);
    for (size_t i = 0; i < vec.size(); ++i) out += lrs.u[i] * vec[i];
    return out;
}

// The recurrence satisfied by a_t = cos(t*theta) for rational alpha = cos(theta):
// coefficients read off the minimal polynomial of z = e^(i*theta), seeds are
// Chebyshev values cos(0), cos(theta), ...
inline LinearRecurrence cos_recurrence(const AlgebraicNumber& alpha_in) {
    if (!alpha_in.is_real()) throw domain_error("cos_recurrence: alpha must be real");
    if (!alpha_in.is_rational())
        throw domain_error("cos_recurrence: alpha must have a rational value");
    Rat alpha = alpha_in.rational_value();
    if (rat_abs(alpha) > 1) throw domain_error("cos_recurrence: |alpha| must be <= 1");
    // minpoly of z = alpha + i sqrt(1-alpha^2): x -+ 1 at alpha = +-1, else
    // the (irreducible, complex-rooted) x^2 - 2 alpha x + 1.
    RatPoly zpoly = rat_abs(alpha) == 1
                        ? RatPoly::linear(-alpha, Rat(1)).primitive_integer_form()
                        : RatPoly({Rat(1), -2 * alpha, Rat(1)}).primitive_integer_form();
    size_t k = static_cast<size_t>(zpoly.degree());
    std::vector<Rat> coeffs(k);
    for (size_t i = 1; i <= k; ++i) coeffs[i - 1] = -zpoly.coeff(k - i) / zpoly.lc();
    // Chebyshev seeds: T_0 = 1, T_1 = alpha, T_{n+1} = 2 alpha T_n - T_{n-1}.
    std::vector<Rat> seeds;
    Rat prev(1), cur = alpha;
    for (size_t t = 0; t < k; ++t) {
        seeds.push_back(t == 0 ? prev : cur);
        if (t >= 1) {
            Rat next = 2 * alpha * cur - prev;
            prev = cur;
            cur = next;
        }
    }
    return LinearRecurrence(std::move(coeffs), std::move(seeds));
}

inline LinearRecurrence cos_recurrence(const Rat& alpha) {
    return cos_recurrence(alg_from_rational(alpha));
}

}  // namespace costheta
