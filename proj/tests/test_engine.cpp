#include <random>

#include "catch2/catch_amalgamated.hpp"

#include "costheta/engine.hpp"
#include "costheta/lrs.hpp"

using namespace costheta;

namespace {

RatPoly P(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return RatPoly(std::move(c));
}

AlgebraicNumber Q(long n, long d = 1) {
    Rat q(n, d);
    q.canonicalize();
    return alg_from_rational(q);
}

Decision cosd(long an, long ad, long cn, long cd, unsigned long long t_min = 0) {
    return decide_cos(CosInstance(Q(an, ad), Q(cn, cd), t_min));
}

Rat chebyshev(int k, const Rat& x) {
    Rat prev(1), cur = x;
    if (k == 0) return prev;
    for (int i = 1; i < k; ++i) {
        Rat next = 2 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

TEST_CASE("build_z examples") {
    SECTION("alpha = 3/5") {
        AlgebraicNumber z = build_z(Q(3, 5));
        CHECK(z.minpoly() == P({5, -6, 5}));
        CHECK(z.box().contains_point(Rat(3, 5), Rat(4, 5)));
    }
    SECTION("alpha = 1 is degenerate") {
        AlgebraicNumber z = build_z(Q(1));
        CHECK(z.is_rational());
        CHECK(z.rational_value() == Rat(1));
    }
    SECTION("alpha = 1/2 gives the sixth root of unity") {
        AlgebraicNumber z = build_z(Q(1, 2));
        CHECK(z.minpoly() == P({1, -1, 1}));
    }
    SECTION("z sits on the unit circle: z * conj(z) = 1") {
        AlgebraicNumber z = build_z(Q(5, 13));
        CHECK(alg_equals(alg_mul(z, alg_conj(z)), Q(1)));
        // and z + 1/z = 2 alpha
        CHECK(alg_equals(alg_add(z, alg_inv(z)), Q(10, 13)));
    }
    SECTION("irrational cosine") {
        AlgebraicNumber rt2_over3 = alg_scale(alg_sqrt_nonneg(Q(2)), Rat(1, 3));
        AlgebraicNumber z = build_z(rt2_over3);
        CHECK(z.degree() == 4);
        CHECK(alg_equals(alg_mul(z, alg_conj(z)), Q(1)));
    }
    SECTION("out-of-range alpha is rejected") {
        CHECK_THROWS_AS(build_z(Q(2)), domain_error);
        CHECK_THROWS_AS(build_z(alg_i()), domain_error);
    }
}

TEST_CASE("build_targets examples") {
    SECTION("c = -7/25") {
        auto targets = build_targets(Q(-7, 25));
        REQUIRE(targets.size() == 2);
        for (const auto& w : targets) CHECK(w.minpoly() == P({25, 14, 25}));
        bool plus = targets[0].box().contains_point(Rat(-7, 25), Rat(24, 25)) ||
                    targets[1].box().contains_point(Rat(-7, 25), Rat(24, 25));
        bool minus = targets[0].box().contains_point(Rat(-7, 25), Rat(-24, 25)) ||
                     targets[1].box().contains_point(Rat(-7, 25), Rat(-24, 25));
        CHECK(plus);
        CHECK(minus);
    }
    SECTION("c = 1 collapses to a single target") {
        auto targets = build_targets(Q(1));
        REQUIRE(targets.size() == 1);
        CHECK(targets[0].rational_value() == Rat(1));
    }
    SECTION("c = 0 gives +-i") {
        auto targets = build_targets(Q(0));
        REQUIRE(targets.size() == 2);
        for (const auto& w : targets) CHECK(w.minpoly() == P({1, 0, 1}));
    }
}

TEST_CASE("decide_cos positive family") {
    Decision d1 = cosd(3, 5, -7, 25);
    REQUIRE(d1.yes);
    CHECK(*d1.witness == 2);

    Decision d2 = cosd(3, 5, -117, 125);
    REQUIRE(d2.yes);
    CHECK(*d2.witness == 3);

    Decision d3 = cosd(1, 2, -1, 1);
    REQUIRE(d3.yes);
    CHECK(*d3.witness == 3);

    Decision d4 = cosd(3, 5, 1, 1);  // cos 0 = 1
    REQUIRE(d4.yes);
    CHECK(*d4.witness == 0);
}

TEST_CASE("decide_cos negative certificates") {
    Decision d1 = cosd(3, 5, 1, 2);
    REQUIRE_FALSE(d1.yes);
    CHECK(*d1.certificate == Decision::Certificate::not_in_field);

    Decision d2 = cosd(3, 5, 4, 5);
    REQUIRE_FALSE(d2.yes);
    CHECK(*d2.certificate == Decision::Certificate::height_candidate_failed);

    Decision d3 = cosd(1, 2, 3, 5);
    REQUIRE_FALSE(d3.yes);
    CHECK(*d3.certificate == Decision::Certificate::orbit_exhausted);

    // finite-orbit path with all targets outside the field: still a plain
    // orbit refutation (the orbit {1, 1/2, -1/2, -1} misses 0)
    Decision d4 = cosd(1, 2, 0, 1);
    REQUIRE_FALSE(d4.yes);
    CHECK(*d4.certificate == Decision::Certificate::orbit_exhausted);
}

TEST_CASE("decide_cos degenerate alpha") {
    Decision d1 = decide_cos(CosInstance(Q(1), Q(1)));
    REQUIRE(d1.yes);
    CHECK(*d1.witness == 0);

    Decision d2 = decide_cos(CosInstance(Q(1), Q(1, 2)));
    REQUIRE_FALSE(d2.yes);
    CHECK(*d2.certificate == Decision::Certificate::orbit_exhausted);

    Decision d3 = decide_cos(CosInstance(Q(-1), Q(-1)));
    REQUIRE(d3.yes);
    CHECK(*d3.witness == 1);

    Decision d4 = decide_cos(CosInstance(Q(-1), Q(1), 3));
    REQUIRE(d4.yes);
    CHECK(*d4.witness == 4);  // smallest even t >= 3
}

TEST_CASE("decide_cos respects t_min") {
    // the unique witness is t = 2; pushing t_min past it flips the answer
    Decision d = cosd(3, 5, -7, 25, 3);
    REQUIRE_FALSE(d.yes);
    CHECK(*d.certificate == Decision::Certificate::height_candidate_failed);

    // periodic case: hits at t = 1 (mod 6) and t = 5 (mod 6)
    Decision p = cosd(1, 2, 1, 2, 2);
    REQUIRE(p.yes);
    CHECK(*p.witness == 5);
}

TEST_CASE("decide_cos validates the instance") {
    CHECK_THROWS_AS(CosInstance(Q(2), Q(0)), domain_error);
    CHECK_THROWS_AS(CosInstance(Q(1, 2), Q(3, 2)), domain_error);
    CHECK_THROWS_AS(CosInstance(alg_i(), Q(0)), domain_error);
}

TEST_CASE("decide_cos with an irrational algebraic cosine") {
    // alpha = sqrt2/3: not a root-of-unity angle; c = alpha hits at t = 1.
    AlgebraicNumber alpha = alg_scale(alg_sqrt_nonneg(Q(2)), Rat(1, 3));
    Decision d = decide_cos(CosInstance(alpha, alpha));
    REQUIRE(d.yes);
    CHECK(*d.witness == 1);
    // c = 2 alpha^2 - 1 (the double angle) hits at t = 2
    AlgebraicNumber c2 = alg_sub(alg_scale(alg_mul(alpha, alpha), Rat(2)), Q(1));
    Decision d2 = decide_cos(CosInstance(alpha, c2));
    REQUIRE(d2.yes);
    CHECK(*d2.witness == 2);
}

TEST_CASE("Chebyshev family yields witnesses at or below k") {
    std::mt19937 rng(141);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(10, 20);
    std::uniform_int_distribution<int> k_dist(1, 4);
    for (int iter = 0; iter < 20; ++iter) {
        Rat alpha(num(rng), den(rng));
        alpha.canonicalize();
        int k = k_dist(rng);
        Rat c = chebyshev(k, alpha);
        Decision d = decide_cos(CosInstance(alg_from_rational(alpha), alg_from_rational(c)));
        REQUIRE(d.yes);
        CHECK(*d.witness <= static_cast<unsigned long long>(k));
    }
}

TEST_CASE("decide_cos agrees with the exact scan oracle") {
    std::mt19937 rng(99991);
    std::uniform_int_distribution<int> qd(2, 20);
    std::uniform_int_distribution<int> mode(0, 1);
    std::uniform_int_distribution<int> k_dist(1, 5);
    for (int iter = 0; iter < 30; ++iter) {
        int q = qd(rng);
        std::uniform_int_distribution<int> pd(-(q - 1), q - 1);
        Rat alpha(pd(rng), q);
        alpha.canonicalize();
        Rat c;
        if (mode(rng) == 0) {
            c = chebyshev(k_dist(rng), alpha);
        } else {
            int cq = qd(rng);
            std::uniform_int_distribution<int> cpd(-cq, cq);
            c = Rat(cpd(rng), cq);
            c.canonicalize();
        }
        Decision d = decide_cos(CosInstance(alg_from_rational(alpha), alg_from_rational(c)));
        auto hits = scan_for_value(cos_recurrence(alpha), c, 50);
        if (!hits.empty()) {
            REQUIRE(d.yes);
            CHECK(*d.witness == hits.front());  // witness minimality
        } else if (d.yes) {
            CHECK(*d.witness > 50);
        }
    }
}

TEST_CASE("decide_rcos_contracting examples") {
    // z = (3+4i)/10: r_cos = 3/10, r^2 = 1/4
    SECTION("c = 3/10 hits at t = 1") {
        Decision d = decide_rcos_contracting(RCosInstance(Q(3, 10), Q(1, 4), Q(3, 10)));
        REQUIRE(d.yes);
        CHECK(*d.witness == 1);
    }
    SECTION("c = 1/5 exhausts the bound T = 3") {
        Decision d = decide_rcos_contracting(RCosInstance(Q(3, 10), Q(1, 4), Q(1, 5)));
        REQUIRE_FALSE(d.yes);
        CHECK(*d.certificate == Decision::Certificate::bound_exhausted);
        REQUIRE(d.scan_bound.has_value());
        CHECK(*d.scan_bound == 3);
    }
    SECTION("c = 1 hits at t = 0") {
        Decision d = decide_rcos_contracting(RCosInstance(Q(3, 10), Q(1, 4), Q(1)));
        REQUIRE(d.yes);
        CHECK(*d.witness == 0);
    }
    SECTION("r = 1 delegates to decide_cos") {
        Decision d = decide_rcos_contracting(RCosInstance(Q(3, 5), Q(1), Q(-7, 25)));
        REQUIRE(d.yes);
        CHECK(*d.witness == 2);
    }
    SECTION("degenerate inputs") {
        CHECK_THROWS_AS(decide_rcos_contracting(RCosInstance(Q(3, 10), Q(1, 4), Q(0))),
                        degenerate_input);
        CHECK_THROWS_AS(decide_rcos_contracting(RCosInstance(Q(3, 10), Q(2), Q(1, 5))),
                        degenerate_input);
        CHECK_THROWS_AS(RCosInstance(Q(9, 10), Q(1, 4), Q(1, 5)), domain_error);
        CHECK_THROWS_AS(RCosInstance(Q(3, 10), Q(-1, 4), Q(1, 5)), degenerate_input);
    }
    SECTION("never scans past the bound and witnesses are exact") {
        // a_2 = -7/100 is within T = ceil(log(7/100)/log(1/2)) = 4
        Decision d = decide_rcos_contracting(RCosInstance(Q(3, 10), Q(1, 4), Q(-7, 100)));
        REQUIRE(d.yes);
        CHECK(*d.witness == 2);
    }
    SECTION("irrational r_cos") {
        // z = sqrt2/2 e^(i pi/4)-ish: r_cos = 1/2, r_sq = 1/2: a_2 = 2*(1/4) - 1/2*1 = 0... use c = a_3
        AlgebraicNumber rc = Q(1, 2);
        AlgebraicNumber rs = Q(1, 2);
        // a_0 = 1, a_1 = 1/2, a_2 = 1/2*1/2*2? recurrence a_t = 2rc a_(t-1) - rs a_(t-2)
        // = a_(t-1) - (1/2) a_(t-2): a_2 = 1/2 - 1/2 = 0, a_3 = 0 - 1/4 = -1/4
        Decision d = decide_rcos_contracting(RCosInstance(rc, rs, Q(-1, 4)));
        REQUIRE(d.yes);
        CHECK(*d.witness == 3);
    }
}
