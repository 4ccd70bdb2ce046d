#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "costheta/complex_box.hpp"
#include "costheta/interval.hpp"
#include "costheta/rational.hpp"

namespace costheta {

using IntVec = std::vector<Int>;

// Row-basis integer lattice.  Construction verifies linear independence via
// the Gram determinant.
struct IntLattice {
    std::vector<IntVec> basis;

    explicit IntLattice(std::vector<IntVec> rows) : basis(std::move(rows)) {
        if (basis.empty()) throw input_error("empty lattice basis");
        size_t dim = basis[0].size();
        for (const auto& v : basis)
            if (v.size() != dim) throw input_error("lattice vectors of unequal dimension");
        if (gram_det_is_zero()) throw dependent_basis();
    }

  private:
    bool gram_det_is_zero() const {
        size_t n = basis.size();
        std::vector<std::vector<Rat>> g(n, std::vector<Rat>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Int dot(0);
                for (size_t k = 0; k < basis[0].size(); ++k) dot += basis[i][k] * basis[j][k];
                g[i][j] = Rat(dot);
            }
        // Gaussian elimination; determinant is zero iff a pivot vanishes.
        for (size_t col = 0; col < n; ++col) {
            size_t pivot = col;
            while (pivot < n && sign(g[pivot][col]) == 0) ++pivot;
            if (pivot == n) return true;
            std::swap(g[pivot], g[col]);
            for (size_t row = col + 1; row < n; ++row) {
                if (sign(g[row][col]) == 0) continue;
                Rat f = g[row][col] / g[col][col];
                for (size_t k = col; k < n; ++k) g[row][k] -= f * g[col][k];
            }
        }
        return false;
    }
};

struct RelationCandidate {
    IntVec coefficients;            // not all zero
    DyadicInterval residual_bound;  // bounds |sum m_i v_i| over the input boxes
};

namespace detail_lll {

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Exact rational Gram-Schmidt data for the current basis.
struct Gso {
    std::vector<std::vector<Rat>> mu;
    std::vector<Rat> norm_sq;  // |b*_i|^2

    void compute(const std::vector<IntVec>& b) {
        size_t n = b.size(), m = b[0].size();
        mu.assign(n, std::vector<Rat>(n, Rat(0)));
        norm_sq.assign(n, Rat(0));
        std::vector<std::vector<Rat>> bstar(n, std::vector<Rat>(m, Rat(0)));
        for (size_t i = 0; i < n; ++i) {
            for (size_t k = 0; k < m; ++k) bstar[i][k] = Rat(b[i][k]);
            for (size_t j = 0; j < i; ++j) {
                Rat num(0);
                for (size_t k = 0; k < m; ++k) num += Rat(b[i][k]) * bstar[j][k];
                if (sign(norm_sq[j]) == 0) throw dependent_basis();
                mu[i][j] = num / norm_sq[j];
                for (size_t k = 0; k < m; ++k) bstar[i][k] -= mu[i][j] * bstar[j][k];
            }
            for (size_t k = 0; k < m; ++k) norm_sq[i] += bstar[i][k] * bstar[i][k];
            if (sign(norm_sq[i]) == 0) throw dependent_basis();
        }
    }
};

inline Int round_nearest(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

}  // namespace detail_lll

// LLL reduction with exact rational Gram-Schmidt; output spans the same
// lattice and satisfies size reduction and the Lovasz condition.
inline IntLattice lll_reduce(const IntLattice& lattice, const Rat& delta = Rat(3, 4)) {
    if (!(delta > Rat(1, 4) && delta < Rat(1))) throw input_error("LLL delta out of (1/4, 1)");
    std::vector<IntVec> b = lattice.basis;
    size_t n = b.size();
    if (n == 1) return IntLattice(b);
    detail_lll::Gso gso;
    gso.compute(b);
    size_t k = 1;
    while (k < n) {
        for (size_t j = k; j-- > 0;) {
            if (2 * rat_abs(gso.mu[k][j]) > 1) {
                Int c = detail_lll::round_nearest(gso.mu[k][j]);
                for (size_t t = 0; t < b[k].size(); ++t) b[k][t] -= c * b[j][t];
                gso.compute(b);
            }
        }
        if (gso.norm_sq[k] >= (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.norm_sq[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gso.compute(b);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return IntLattice(std::move(b));
}

// Heuristic integer-relation detection: embeds scaled real/imaginary parts
// as two extra columns and LLL-reduces.  A returned candidate only means the
// residual interval contains 0 at the given precision; callers must verify
// exactly.
inline std::optional<RelationCandidate> integer_relation(const std::vector<ComplexBox>& values,
                                                         const Int& height_bound) {
    size_t n = values.size();
    if (n < 2) throw input_error("integer_relation needs at least two values");
    if (sign(height_bound) <= 0) throw input_error("height bound must be positive");

    // Scale selection: 2^p with 2^p * max_radius <= 2^-16; exact inputs get
    // a scale derived from the height bound.
    Rat max_rad(0);
    for (const auto& v : values) max_rad = std::max(max_rad, v.r);
    long p;
    long required = static_cast<long>(bit_length(height_bound) + 16) * static_cast<long>(n);
    if (sign(max_rad) == 0) {
        p = required + 64;
    } else {
        long k = 0;  // minimal k with 2^k * max_rad >= 1
        Rat r = max_rad;
        while (r < 1) {
            r *= 2;
            ++k;
        }
        p = k - 17;  // 2^p * max_rad < 2^-16
        if (p < required)
            throw insufficient_precision("integer_relation: boxes too wide for height bound");
    }
    Rat scale = pow2(p);

    std::vector<IntVec> rows(n, IntVec(n + 2, Int(0)));
    for (size_t i = 0; i < n; ++i) {
        rows[i][i] = 1;
        rows[i][n] = detail_lll::round_nearest(scale * values[i].x);
        rows[i][n + 1] = detail_lll::round_nearest(scale * values[i].y);
    }
    IntLattice reduced = lll_reduce(IntLattice(std::move(rows)));

    // Shortest reduced vector by squared norm.
    size_t best = 0;
    Int best_norm = detail_lll::dot(reduced.basis[0], reduced.basis[0]);
    for (size_t i = 1; i < reduced.basis.size(); ++i) {
        Int norm = detail_lll::dot(reduced.basis[i], reduced.basis[i]);
        if (norm < best_norm) {
            best_norm = norm;
            best = i;
        }
    }
    IntVec m(reduced.basis[best].begin(), reduced.basis[best].begin() + n);
    bool nonzero = false;
    for (const auto& c : m)
        if (sign(c) != 0) nonzero = true;
    if (!nonzero) return std::nullopt;
    for (const auto& c : m)
        if (int_abs(c) > height_bound) return std::nullopt;

    ComplexBox residual = ComplexBox::point(Rat(0));
    for (size_t i = 0; i < n; ++i) residual = residual + values[i].scale(Rat(m[i]));
    DyadicInterval bound = residual.abs_interval();
    if (sign(bound.lo) > 0) return std::nullopt;  // residual excludes 0
    return RelationCandidate{std::move(m), bound};
}

}  // namespace costheta
