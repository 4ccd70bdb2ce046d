#include <random>

#include "catch2/catch_amalgamated.hpp"

#include "costheta/number_field.hpp"

using namespace costheta;

namespace {

RatPoly P(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return RatPoly(std::move(c));
}

// Q((3+4i)/5)
NumberField field35() {
    return NumberField(AlgebraicNumber(P({5, -6, 5}), ComplexBox(Rat(3, 5), Rat(4, 5), Rat(0))));
}

NumberField field_i() {
    return NumberField(AlgebraicNumber(P({1, 0, 1}), ComplexBox(Rat(0), Rat(1), Rat(0))));
}

// Q(sqrt2 + sqrt3), degree 4
NumberField field_deg4() {
    RatPoly p = P({1, 0, -10, 0, 1});
    auto boxes = isolate_roots(p, separation_bound(p) / 4);
    // pick the root near sqrt2 + sqrt3 ~ 3.146
    for (const auto& b : boxes)
        if (b.x > 3) return NumberField(AlgebraicNumber(p, b));
    FAIL("root not found");
    return NumberField(AlgebraicNumber(p, boxes[0]));
}

FieldElement random_element(std::mt19937& rng, int d, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    FieldElement e(d);
    for (auto& c : e) {
        c = Rat(dist(rng), 1 + std::abs(dist(rng)));
        c.canonicalize();
    }
    return e;
}

}  // namespace

TEST_CASE("field element arithmetic") {
    NumberField f = field35();
    FieldElement z = f.generator_element();
    SECTION("z * z = (-1, 6/5)") {
        FieldElement z2 = fe_mul(f, z, z);
        CHECK(z2 == FieldElement{Rat(-1), Rat(6, 5)});
    }
    SECTION("a * inv(a) = 1 for random nonzero a") {
        std::mt19937 rng(7);
        for (int iter = 0; iter < 20; ++iter) {
            FieldElement a = random_element(rng, 2, 9);
            if (fe_is_zero(a)) continue;
            CHECK(fe_mul(f, a, fe_inv(f, a)) == f.one());
        }
        CHECK_THROWS_AS(fe_inv(f, f.zero()), division_by_zero);
    }
    SECTION("addition is coordinatewise") {
        CHECK(fe_add(f, FieldElement{Rat(1), Rat(0)}, FieldElement{Rat(0), Rat(1)}) ==
              FieldElement{Rat(1), Rat(1)});
    }
    SECTION("fe_arith dispatcher") {
        CHECK(fe_arith(FeOp::mul, f, z, z) == FieldElement{Rat(-1), Rat(6, 5)});
        CHECK(fe_arith(FeOp::inv, f, z, z) == fe_inv(f, z));
    }
}

TEST_CASE("fe_pow") {
    NumberField f = field35();
    FieldElement z = f.generator_element();
    CHECK(fe_pow(f, z, 2) == FieldElement{Rat(-1), Rat(6, 5)});
    CHECK(fe_pow(f, z, 0) == f.one());
    NumberField fi = field_i();
    CHECK(fe_pow(fi, fi.generator_element(), 2) == FieldElement{Rat(-1), Rat(0)});
}

TEST_CASE("multiplication matrix") {
    NumberField f = field35();
    SECTION("columns of M_z") {
        RationalMatrix m = multiplication_matrix(f, f.generator_element());
        CHECK(m.rows[0] == std::vector<Rat>{Rat(0), Rat(-1)});
        CHECK(m.rows[1] == std::vector<Rat>{Rat(1), Rat(6, 5)});
    }
    SECTION("identity for a = 1, scalar matrix for rationals") {
        CHECK(multiplication_matrix(f, f.one()) == RationalMatrix::identity(2));
        RationalMatrix mq = multiplication_matrix(f, f.from_rational(Rat(7, 3)));
        CHECK(mq.rows[0] == std::vector<Rat>{Rat(7, 3), Rat(0)});
        CHECK(mq.rows[1] == std::vector<Rat>{Rat(0), Rat(7, 3)});
    }
}

TEST_CASE("multiplication matrix agrees with field multiplication") {
    std::mt19937 rng(1234);
    for (NumberField f : {field35(), field_deg4()}) {
        int d = f.degree();
        for (int iter = 0; iter < 50; ++iter) {
            FieldElement a = random_element(rng, d, 9);
            FieldElement b = random_element(rng, d, 9);
            CHECK(multiplication_matrix(f, a).apply(b) == fe_mul(f, a, b));
        }
    }
}

TEST_CASE("characteristic polynomial of M_z is the generator minpoly") {
    for (NumberField f : {field35(), field_i(), field_deg4()}) {
        RatPoly chi = char_poly(multiplication_matrix(f, f.generator_element()));
        CHECK(chi.primitive_integer_form() == f.generator_minpoly().primitive_integer_form());
    }
}

TEST_CASE("embed and fe_to_algebraic") {
    NumberField f = field35();
    SECTION("embed(z) encloses (3+4i)/5") {
        ComplexBox b = embed(f, f.generator_element(), 64);
        CHECK(b.contains_point(Rat(3, 5), Rat(4, 5)));
        CHECK(b.r <= pow2(-32));
    }
    SECTION("fe_to_algebraic of (-1, 6/5) is (-7+24i)/25") {
        AlgebraicNumber w = fe_to_algebraic(f, FieldElement{Rat(-1), Rat(6, 5)});
        AlgebraicNumber expect =
            alg_add(alg_from_rational(Rat(-7, 25)), alg_scale(alg_i(), Rat(24, 25)));
        CHECK(w.minpoly() == P({25, 14, 25}));
        CHECK(alg_equals(w, expect));
    }
    SECTION("rational coordinates give rational numbers") {
        AlgebraicNumber q = fe_to_algebraic(f, f.from_rational(Rat(7, 3)));
        CHECK(q.is_rational());
        CHECK(q.rational_value() == Rat(7, 3));
    }
}

TEST_CASE("membership examples") {
    NumberField f = field35();
    SECTION("(-7+24i)/25 has coordinates (-1, 6/5)") {
        AlgebraicNumber w =
            alg_add(alg_from_rational(Rat(-7, 25)), alg_scale(alg_i(), Rat(24, 25)));
        auto coords = membership(f, w);
        REQUIRE(coords.has_value());
        CHECK(*coords == FieldElement{Rat(-1), Rat(6, 5)});
    }
    SECTION("rationals are always members") {
        auto coords = membership(f, alg_from_rational(Rat(7, 3)));
        REQUIRE(coords.has_value());
        CHECK(*coords == FieldElement{Rat(7, 3), Rat(0)});
    }
    SECTION("i is not in Q((1+i sqrt3)/2)") {
        NumberField zeta6(
            NumberField(AlgebraicNumber(P({1, -1, 1}), ComplexBox(Rat(1, 2), Rat(1, 2), Rat(1, 4)))));
        CHECK_FALSE(membership(zeta6, alg_i()).has_value());
    }
    SECTION("conjugate distinction: conj(z) is a member with the right coordinates") {
        // conj(z) = 1/z = (6/5) - z since z + conj z = 6/5
        AlgebraicNumber w = alg_conj(AlgebraicNumber(P({5, -6, 5}), ComplexBox(Rat(3, 5), Rat(4, 5), Rat(0))));
        auto coords = membership(f, w);
        REQUIRE(coords.has_value());
        CHECK(*coords == FieldElement{Rat(6, 5), Rat(-1)});
    }
    SECTION("degree obstruction: sqrt2 is not in a degree-2 complex field") {
        AlgebraicNumber rt2 = alg_sqrt_nonneg(alg_from_rational(Rat(2)));
        CHECK_FALSE(membership(f, rt2).has_value());
    }
}

TEST_CASE("membership round-trips random field elements") {
    std::mt19937 rng(4321);
    NumberField f2 = field35();
    for (int iter = 0; iter < 30; ++iter) {
        FieldElement a = random_element(rng, 2, 6);
        auto back = membership(f2, fe_to_algebraic(f2, a));
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
    NumberField f4 = field_deg4();
    for (int iter = 0; iter < 20; ++iter) {
        FieldElement a = random_element(rng, 4, 3);
        auto back = membership(f4, fe_to_algebraic(f4, a));
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
}
