#include <random>

#include "catch2/catch_amalgamated.hpp"

#include "costheta/factorization.hpp"
#include "costheta/root_isolation.hpp"

using namespace costheta;

namespace {

RatPoly P(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return RatPoly(std::move(c));
}

bool same_up_to_scalar(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.primitive_integer_form() == b.primitive_integer_form();
}

RatPoly random_poly(std::mt19937& rng, int max_deg, int coeff_bound) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> coeff_dist(-coeff_bound, coeff_bound);
    int d = deg_dist(rng);
    std::vector<Rat> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = Rat(coeff_dist(rng));
    if (sign(c[d]) == 0) c[d] = Rat(1);
    return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(rat_from_string("3/5") == Rat(3, 5));
    CHECK(rat_from_string("-7") == Rat(-7));
    CHECK(rat_from_string("6/4") == Rat(3, 2));
    CHECK(rat_to_string(Rat(3, 5)) == "3/5");
    CHECK(rat_to_string(Rat(2)) == "2/1");
    CHECK_THROWS_AS(rat_from_string("abc"), input_error);
    CHECK_THROWS_AS(rat_from_string(""), input_error);
}

TEST_CASE("rational sqrt bounds bracket the true root") {
    for (long n : {2L, 3L, 5L, 14L}) {
        Rat q(n, 7);
        Rat lo = sqrt_lower(q, 64), hi = sqrt_upper(q, 64);
        CHECK(lo * lo <= q);
        CHECK(hi * hi >= q);
        CHECK(hi - lo < pow2(-32));
    }
}

TEST_CASE("poly_gcd examples") {
    CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}).monic());
    CHECK(poly_gcd(P({1, 0, 1}), P({-1, 0, 1})) == RatPoly::one());
    // Euclid by hand: x^3 - x = x (x^2 - 1), so the gcd is x^2 - 1.
    CHECK(poly_gcd(P({0, -1, 0, 1}), P({-1, 0, 1})) == P({-1, 0, 1}).monic());
    CHECK(poly_gcd(P({0, -1, 0, 1}), RatPoly::zero()) == P({0, -1, 0, 1}).monic());
}

TEST_CASE("poly_gcd divides both operands exactly") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 50; ++iter) {
        RatPoly p = random_poly(rng, 6, 9);
        RatPoly q = random_poly(rng, 6, 9);
        RatPoly g = poly_gcd(p, q);
        if (g.is_zero()) {
            CHECK(p.is_zero());
            CHECK(q.is_zero());
            continue;
        }
        CHECK(p.divrem(g).second.is_zero());
        CHECK(q.divrem(g).second.is_zero());
    }
}

TEST_CASE("poly_squarefree examples") {
    CHECK(poly_squarefree(P({1, -2, 1})) == P({-1, 1}));        // (x-1)^2
    CHECK(poly_squarefree(P({1, 0, 1})) == P({1, 0, 1}));       // already squarefree
    CHECK(poly_squarefree(P({0, 0, -1, 1})) == P({0, -1, 1}));  // x^3 - x^2
}

TEST_CASE("squarefree decomposition reconstructs the input") {
    RatPoly p = P({-1, 1}) * P({-1, 1}) * P({1, 0, 1});  // (x-1)^2 (x^2+1)
    auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 2);
    RatPoly prod = RatPoly::one();
    for (auto& [f, mult] : parts)
        for (int i = 0; i < mult; ++i) prod = prod * f;
    CHECK(same_up_to_scalar(prod, p));
}

TEST_CASE("resultant elimination examples") {
    SECTION("p = 5x - 3, q = y^2 - (1 - x^2)") {
        BiPoly q = {P({-1, 0, 1}), RatPoly(), RatPoly::one()};
        RatPoly res = poly_resultant_eliminate(P({-3, 5}), q);
        CHECK(same_up_to_scalar(res, P({-16, 0, 25})));  // y^2 - 16/25 up to scalar
    }
    SECTION("p = x - a, q = y - x") {
        BiPoly q = {RatPoly({Rat(0), Rat(1)}), RatPoly::constant(Rat(-1))};
        RatPoly res = poly_resultant_eliminate(P({-7, 1}), q);
        CHECK(same_up_to_scalar(res, P({-7, 1})));
    }
    SECTION("p = x^2 - 2, q = y - x^2 gives (y-2)^2") {
        BiPoly q = {RatPoly({Rat(0), Rat(1)}), RatPoly(), RatPoly::constant(Rat(-1))};
        RatPoly res = poly_resultant_eliminate(P({-2, 0, 1}), q);
        CHECK(same_up_to_scalar(res, P({-2, 1}) * P({-2, 1})));
        CHECK(poly_squarefree(res) == P({-2, 1}));
    }
    SECTION("q constant in x is degenerate") {
        BiPoly q = {RatPoly({Rat(0), Rat(1)})};
        CHECK_THROWS_AS(poly_resultant_eliminate(P({-2, 0, 1}), q), degenerate_input);
    }
}

TEST_CASE("factor_rational examples") {
    SECTION("x^4 - 1") {
        auto factors = factor_rational(P({-1, 0, 0, 0, 1}));
        REQUIRE(factors.size() == 3);
        std::vector<RatPoly> expect = {P({-1, 1}), P({1, 1}), P({1, 0, 1})};
        for (const auto& e : expect) {
            bool found = false;
            for (auto& [f, mult] : factors)
                if (f == e && mult == 1) found = true;
            CHECK(found);
        }
    }
    SECTION("x^2 - x - 1 is irreducible") {
        auto factors = factor_rational(P({-1, -1, 1}));
        REQUIRE(factors.size() == 1);
        CHECK(factors[0].first == P({-1, -1, 1}));
        CHECK(factors[0].second == 1);
    }
    SECTION("annihilator of (3+4i)/5 times its mirror") {
        RatPoly p = P({25, 0, 14, 0, 25});
        auto factors = factor_rational(p);
        REQUIRE(factors.size() == 2);
        // Oracle: multiply the candidate factors back together.
        RatPoly prod = RatPoly::one();
        for (auto& [f, mult] : factors) {
            CHECK(f.degree() == 2);
            for (int i = 0; i < mult; ++i) prod = prod * f;
        }
        CHECK(same_up_to_scalar(prod, p));
        bool has_minus = false, has_plus = false;
        for (auto& [f, mult] : factors) {
            if (f == P({5, -6, 5})) has_minus = true;
            if (f == P({5, 6, 5})) has_plus = true;
        }
        CHECK(has_minus);
        CHECK(has_plus);
    }
}

TEST_CASE("factorization reproduces random products of irreducibles") {
    std::mt19937 rng(777);
    std::vector<RatPoly> pool = {
        P({1, 1}),     P({-2, 1}),       P({3, 1}),     P({1, 0, 1}),  P({-2, 0, 1}),
        P({-1, -1, 1}), P({5, -6, 5}),   P({1, 1, 1}),  P({-1, 0, 0, 1}),
        P({2, 3, 0, 1}), P({1, 0, 0, 0, 2}),
    };
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> count_dist(1, 3);
    std::uniform_int_distribution<int> mult_dist(1, 2);
    for (int iter = 0; iter < 100; ++iter) {
        RatPoly p = RatPoly::one();
        int parts = count_dist(rng);
        for (int j = 0; j < parts; ++j) {
            RatPoly f = pool[pick(rng)];
            int mult = mult_dist(rng);
            for (int i = 0; i < mult; ++i) p = p * f;
        }
        auto factors = factor_rational(p);
        RatPoly prod = RatPoly::one();
        for (auto& [f, mult] : factors)
            for (int i = 0; i < mult; ++i) prod = prod * f;
        CHECK(same_up_to_scalar(prod, p));
    }
}

TEST_CASE("poly_eval_box encloses") {
    SECTION("identity polynomial returns the box (up to rounding slack)") {
        ComplexBox b(Rat(1, 3), Rat(-2, 7), Rat(1, 100));
        ComplexBox out = poly_eval_box(RatPoly::x(), b, 64);
        CHECK(out.contains_box(ComplexBox(b.x, b.y, Rat(0))));
        CHECK(out.r <= b.r + pow2(-32));
    }
    SECTION("squaring the unit disk stays inside the output") {
        ComplexBox b(Rat(0), Rat(0), Rat(1));
        ComplexBox out = poly_eval_box(P({0, 0, 1}), b, 64);
        std::vector<std::pair<Rat, Rat>> samples = {
            {Rat(1, 2), Rat(1, 2)}, {Rat(-3, 5), Rat(4, 5)}, {Rat(0), Rat(1)}};
        for (auto& [px, py] : samples) {
            Rat sx = px * px - py * py, sy = 2 * px * py;
            CHECK(out.contains_point(sx, sy));
        }
    }
    SECTION("near-root evaluation shrinks towards zero") {
        ComplexBox b(Rat(3, 5), Rat(4, 5), pow2(-20));
        ComplexBox out = poly_eval_box(P({5, -6, 5}), b, 64);
        CHECK(out.contains_point(Rat(0), Rat(0)));
        CHECK(out.r + out.center_abs_upper() <= pow2(-10));
    }
    SECTION("precision precondition") {
        CHECK_THROWS_AS(poly_eval_box(RatPoly::x(), ComplexBox(), 4), input_error);
    }
}

TEST_CASE("poly_eval_box is conservative on random samples") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> small(-8, 8);
    for (int iter = 0; iter < 100; ++iter) {
        RatPoly p = random_poly(rng, 5, 9);
        Rat cx(small(rng), 3), cy(small(rng), 5), r(std::abs(small(rng)) + 1, 17);
        ComplexBox box(cx, cy, r);
        ComplexBox out = poly_eval_box(p, box, 64);
        // Sample a point certainly inside the disk.
        Rat px = cx + Rat(small(rng), 17) * r / 9;
        Rat py = cy + Rat(small(rng), 19) * r / 9;
        REQUIRE(box.contains_point(px, py));
        auto [vx, vy] = poly_eval_complex_point(p, px, py);
        CHECK(out.contains_point(vx, vy));
    }
}

TEST_CASE("separation bound examples") {
    SECTION("x^2 - 2") {
        Rat b = separation_bound(P({-2, 0, 1}));
        CHECK(b > Rat(42, 100));
        CHECK(b < Rat(434, 1000));
        // actual separation 2*sqrt(2) comfortably exceeds it
        CHECK(b < Rat(28, 10));
    }
    SECTION("5x^2 - 6x + 5") {
        Rat b = separation_bound(P({5, -6, 5}));
        CHECK(b > Rat(14, 100));
        CHECK(b < Rat(145, 1000));
        CHECK(b < Rat(8, 5));  // actual separation is 8/5
    }
    SECTION("degree one returns a positive placeholder") {
        CHECK(separation_bound(P({-1, 1})) > 0);
    }
}

TEST_CASE("root isolation examples") {
    SECTION("x^2 + 1 isolates +-i") {
        auto boxes = isolate_roots(P({1, 0, 1}));
        REQUIRE(boxes.size() == 2);
        bool plus = false, minus = false;
        for (const auto& b : boxes) {
            if (b.contains_point(Rat(0), Rat(1))) plus = true;
            if (b.contains_point(Rat(0), Rat(-1))) minus = true;
            CHECK(sign(b.y) != 0);  // labeled non-real
        }
        CHECK(plus);
        CHECK(minus);
        CHECK(boxes[0].disjoint(boxes[1]));
    }
    SECTION("5x^2 - 6x + 5 isolates (3 +- 4i)/5") {
        auto boxes = isolate_roots(P({5, -6, 5}));
        REQUIRE(boxes.size() == 2);
        bool plus = false, minus = false;
        for (const auto& b : boxes) {
            if (b.contains_point(Rat(3, 5), Rat(4, 5))) plus = true;
            if (b.contains_point(Rat(3, 5), Rat(-4, 5))) minus = true;
            CHECK(b.r < separation_bound(P({5, -6, 5})) / 2);
        }
        CHECK(plus);
        CHECK(minus);
    }
    SECTION("(x-1)(x-2)(x-3) gives three real boxes") {
        RatPoly p = P({-1, 1}) * P({-2, 1}) * P({-3, 1});
        auto boxes = isolate_roots(p);
        REQUIRE(boxes.size() == 3);
        for (int i = 0; i < 3; ++i) {
            CHECK(sign(boxes[i].y) == 0);
            CHECK(boxes[i].contains_point(Rat(i + 1), Rat(0)));
        }
    }
    SECTION("multiple roots are collapsed to distinct boxes") {
        RatPoly p = P({-1, 1}) * P({-1, 1}) * P({1, 1});
        auto boxes = isolate_roots(p);
        CHECK(boxes.size() == 2);
    }
}

TEST_CASE("separation bound is below the observed root separation") {
    std::mt19937 rng(2026);
    int done = 0;
    while (done < 50) {
        RatPoly p = random_poly(rng, 5, 9);
        if (p.degree() < 2) continue;
        p = poly_squarefree(p);
        if (p.degree() < 2) continue;
        ++done;
        Rat bound = separation_bound(p);
        auto boxes = isolate_roots(p, pow2(-64));
        for (size_t i = 0; i < boxes.size(); ++i) {
            for (size_t j = i + 1; j < boxes.size(); ++j) {
                // Lower bound on the true distance: center distance minus radii.
                Rat dx = boxes[i].x - boxes[j].x, dy = boxes[i].y - boxes[j].y;
                Rat gap = bound + boxes[i].r + boxes[j].r;
                CHECK(dx * dx + dy * dy >= gap * gap);
            }
        }
    }
}
