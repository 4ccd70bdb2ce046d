#include <random>

#include "catch2/catch_amalgamated.hpp"

#include "costheta/algebraic.hpp"
#include "costheta/lattice.hpp"

using namespace costheta;

namespace {

// Solve X * basis = target over Q (row convention); nullopt if singular.
std::optional<std::vector<Rat>> solve_in_basis(const std::vector<IntVec>& basis,
                                               const IntVec& target) {
    size_t n = basis.size(), m = basis[0].size();
    // Least-squares-free exact solve via Gaussian elimination on the
    // transposed system (m equations, n unknowns); requires full row rank.
    std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(n + 1, Rat(0)));
    for (size_t r = 0; r < m; ++r) {
        for (size_t c = 0; c < n; ++c) aug[r][c] = Rat(basis[c][r]);
        aug[r][n] = Rat(target[r]);
    }
    size_t row = 0;
    std::vector<int> pivot_col(n, -1);
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t p = row;
        while (p < m && sign(aug[p][col]) == 0) ++p;
        if (p == m) continue;
        std::swap(aug[p], aug[row]);
        for (size_t r2 = 0; r2 < m; ++r2) {
            if (r2 == row || sign(aug[r2][col]) == 0) continue;
            Rat f = aug[r2][col] / aug[row][col];
            for (size_t c2 = col; c2 <= n; ++c2) aug[r2][c2] -= f * aug[row][c2];
        }
        pivot_col[col] = static_cast<int>(row);
        ++row;
    }
    std::vector<Rat> x(n, Rat(0));
    for (size_t col = 0; col < n; ++col) {
        if (pivot_col[col] < 0) return std::nullopt;
        x[col] = aug[pivot_col[col]][n] / aug[pivot_col[col]][col];
    }
    // Verify (also catches inconsistent systems).
    for (size_t r = 0; r < m; ++r) {
        Rat acc(0);
        for (size_t c = 0; c < n; ++c) acc += x[c] * Rat(basis[c][r]);
        if (acc != Rat(target[r])) return std::nullopt;
    }
    return x;
}

bool spans_same_lattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
    for (const auto& v : a) {
        auto x = solve_in_basis(b, v);
        if (!x) return false;
        for (const auto& q : *x)
            if (!is_integer(q)) return false;
    }
    for (const auto& v : b) {
        auto x = solve_in_basis(a, v);
        if (!x) return false;
        for (const auto& q : *x)
            if (!is_integer(q)) return false;
    }
    return true;
}

// Independent check of the LLL postconditions (size reduction + Lovasz).
bool is_lll_reduced(const std::vector<IntVec>& b, const Rat& delta) {
    size_t n = b.size(), m = b[0].size();
    std::vector<std::vector<Rat>> bstar(n, std::vector<Rat>(m, Rat(0)));
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> norm(n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < m; ++k) bstar[i][k] = Rat(b[i][k]);
        for (size_t j = 0; j < i; ++j) {
            Rat dot(0);
            for (size_t k = 0; k < m; ++k) dot += Rat(b[i][k]) * bstar[j][k];
            mu[i][j] = dot / norm[j];
            for (size_t k = 0; k < m; ++k) bstar[i][k] -= mu[i][j] * bstar[j][k];
        }
        for (size_t k = 0; k < m; ++k) norm[i] += bstar[i][k] * bstar[i][k];
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j)
            if (2 * rat_abs(mu[i][j]) > 1) return false;
    for (size_t k = 1; k < n; ++k)
        if (norm[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) return false;
    return true;
}

Int norm_sq(const IntVec& v) {
    Int s(0);
    for (const auto& c : v) s += c * c;
    return s;
}

}  // namespace

TEST_CASE("lll_reduce examples") {
    SECTION("identity basis is unchanged up to sign and order") {
        IntLattice l({{Int(1), Int(0)}, {Int(0), Int(1)}});
        auto r = lll_reduce(l);
        REQUIRE(r.basis.size() == 2);
        for (const auto& v : r.basis) CHECK(norm_sq(v) == 1);
        CHECK(spans_same_lattice(l.basis, r.basis));
    }
    SECTION("{(1,1),(2,0)} reduces to the shortest basis") {
        IntLattice l({{Int(1), Int(1)}, {Int(2), Int(0)}});
        auto r = lll_reduce(l);
        CHECK(spans_same_lattice(l.basis, r.basis));
        CHECK(is_lll_reduced(r.basis, Rat(3, 4)));
        // Exhaustive oracle over small combinations: the minimum nonzero
        // squared norm in this lattice is 2.
        Int best(1000);
        for (int a = -4; a <= 4; ++a)
            for (int b = -4; b <= 4; ++b) {
                if (a == 0 && b == 0) continue;
                IntVec v = {Int(a + 2 * b), Int(a)};
                best = std::min(best, norm_sq(v));
            }
        CHECK(best == 2);
        CHECK(norm_sq(r.basis[0]) == best);
    }
    SECTION("single vector reduces to itself up to sign") {
        IntLattice l({{Int(3), Int(-5), Int(7)}});
        auto r = lll_reduce(l);
        REQUIRE(r.basis.size() == 1);
        CHECK(norm_sq(r.basis[0]) == norm_sq(l.basis[0]));
    }
    SECTION("dependent basis is rejected") {
        CHECK_THROWS_AS(IntLattice({{Int(1), Int(1)}, {Int(2), Int(2)}}), dependent_basis);
    }
    SECTION("delta outside (1/4, 1) is rejected") {
        IntLattice l({{Int(1), Int(0)}, {Int(0), Int(1)}});
        CHECK_THROWS_AS(lll_reduce(l, Rat(2)), input_error);
    }
}

TEST_CASE("lll_reduce spans the same lattice on random bases") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-20, 20);
    int done = 0;
    while (done < 50) {
        std::vector<IntVec> rows(4, IntVec(4));
        for (auto& r : rows)
            for (auto& c : r) c = Int(entry(rng));
        try {
            IntLattice l(rows);
            auto r = lll_reduce(l);
            CHECK(spans_same_lattice(l.basis, r.basis));
            CHECK(is_lll_reduced(r.basis, Rat(3, 4)));
            ++done;
        } catch (const dependent_basis&) {
            continue;
        }
    }
}

TEST_CASE("integer_relation examples") {
    SECTION("1, phi, phi^2 carries the relation (1, 1, -1)") {
        auto boxes = isolate_roots(RatPoly({Rat(-1), Rat(-1), Rat(1)}), pow2(-130));
        REQUIRE(boxes.size() == 2);
        const ComplexBox& phi = boxes[0].x > 0 ? boxes[0] : boxes[1];
        std::vector<ComplexBox> values = {ComplexBox::point(Rat(1)), phi, phi * phi};
        auto rel = integer_relation(values, Int(1000));
        REQUIRE(rel.has_value());
        auto& m = rel->coefficients;
        bool forward = (m[0] == 1 && m[1] == 1 && m[2] == -1);
        bool backward = (m[0] == -1 && m[1] == -1 && m[2] == 1);
        CHECK((forward || backward));
        CHECK(rel->residual_bound.lo == 0);
    }
    SECTION("1, sqrt(2) has no small relation") {
        auto boxes = isolate_roots(RatPoly({Rat(-2), Rat(0), Rat(1)}), pow2(-130));
        const ComplexBox& rt2 = boxes[0].x > 0 ? boxes[0] : boxes[1];
        std::vector<ComplexBox> values = {ComplexBox::point(Rat(1)), rt2};
        CHECK_FALSE(integer_relation(values, Int(1000)).has_value());
    }
    SECTION("exact values (1, -1) relate by (1, 1)") {
        std::vector<ComplexBox> values = {ComplexBox::point(Rat(1)), ComplexBox::point(Rat(-1))};
        auto rel = integer_relation(values, Int(10));
        REQUIRE(rel.has_value());
        auto& m = rel->coefficients;
        CHECK(int_abs(m[0]) == 1);
        CHECK(m[0] == m[1]);
    }
    SECTION("overly wide boxes are rejected") {
        std::vector<ComplexBox> values = {ComplexBox(Rat(1), Rat(0), Rat(1, 2)),
                                          ComplexBox(Rat(-1), Rat(0), Rat(1, 2))};
        CHECK_THROWS_AS(integer_relation(values, Int(1000)), insufficient_precision);
    }
}

TEST_CASE("planted relations are recovered at 512-bit precision") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> m_entry(-100, 100);
    std::uniform_int_distribution<int> coord(-9, 9);
    auto rt2_boxes = isolate_roots(RatPoly({Rat(-2), Rat(0), Rat(1)}), pow2(-514));
    auto rt3_boxes = isolate_roots(RatPoly({Rat(-3), Rat(0), Rat(1)}), pow2(-514));
    ComplexBox rt2 = rt2_boxes[0].x > 0 ? rt2_boxes[0] : rt2_boxes[1];
    ComplexBox rt3 = rt3_boxes[0].x > 0 ? rt3_boxes[0] : rt3_boxes[1];

    int done = 0;
    while (done < 50) {
        IntVec m(4);
        for (auto& v : m) v = Int(m_entry(rng));
        if (sign(m[3]) == 0) continue;
        // Values over the basis (1, sqrt2, sqrt3); the last is forced so the
        // planted relation holds exactly.
        std::vector<std::vector<Rat>> coords(4, std::vector<Rat>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) coords[i][j] = Rat(coord(rng));
        for (int j = 0; j < 3; ++j) {
            Rat acc(0);
            for (int i = 0; i < 3; ++i) acc += Rat(m[i]) * coords[i][j];
            coords[3][j] = -acc / Rat(m[3]);
        }
        std::vector<ComplexBox> values;
        for (int i = 0; i < 4; ++i) {
            ComplexBox b = ComplexBox::point(coords[i][0]);
            b = b + rt2.scale(coords[i][1]);
            b = b + rt3.scale(coords[i][2]);
            values.push_back(b);
        }
        auto rel = integer_relation(values, Int(200000));
        REQUIRE(rel.has_value());
        auto& r = rel->coefficients;
        // Whatever came back must be an exact relation on the coordinates.
        for (int j = 0; j < 3; ++j) {
            Rat acc(0);
            for (int i = 0; i < 4; ++i) acc += Rat(r[i]) * coords[i][j];
            REQUIRE(acc == 0);
        }
        // For generic draws the relation space is one-dimensional, so the
        // result is proportional to the planted vector.
        bool proportional = true;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (r[i] * m[j] != r[j] * m[i]) proportional = false;
        if (!proportional) continue;  // degenerate draw with a bigger relation space
        ++done;
    }
}
