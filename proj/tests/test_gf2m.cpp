#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "z4trace/gf2m.hpp"

using namespace z4trace;

TEST_CASE("m=1 is the prime field") {
    BinaryField f(1);
    CHECK(f.size() == 2);
    CHECK(f.poly() == 0b11);
    CHECK(f.mul(1, 1) == 1);
    CHECK(f.add(1, 1) == 0);
    CHECK(f.trace(1) == 1);
    CHECK(f.trace(0) == 0);
}

TEST_CASE("m=2 with x^2+x+1: omega has order 3") {
    BinaryField f(2, 0b111);
    FieldElem omega = f.generator();
    CHECK(omega == 2);
    CHECK(f.mul(omega, omega) == 3);                  // omega^2 = omega + 1
    CHECK(f.mul(omega, f.mul(omega, omega)) == 1);    // omega^3 = 1
    CHECK(f.mul(omega, f.sq(omega)) == 1);
    CHECK(f.inv(omega) == f.sq(omega));
    CHECK(f.trace(omega) == 1);
    CHECK(f.trace(1) == 0);
}

TEST_CASE("m=4 with x^4+x+1: antilog period 15") {
    BinaryField f(4, 0b10011);
    FieldElem x = f.generator();
    FieldElem cur = 1;
    for (int i = 1; i <= 15; ++i) {
        cur = f.mul(cur, x);
        if (i < 15) CHECK(cur != 1);
    }
    CHECK(cur == 1);
}

TEST_CASE("characteristic two and division errors") {
    BinaryField f(3);
    for (FieldElem a = 0; a < f.size(); ++a) CHECK(f.add(a, a) == 0);
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);
    CHECK_THROWS_AS(f.log(0), DivisionByZero);
}

TEST_CASE("reducible and non-primitive polynomials rejected") {
    CHECK_THROWS_AS(BinaryField(2, 0b101), NotPrimitive);   // x^2+1 = (x+1)^2
    CHECK_THROWS_AS(BinaryField(4, 0b10101), NotPrimitive); // x^4+x^2+1 reducible
    // x^4+x^3+x^2+x+1 is irreducible but its root has order 5.
    CHECK_THROWS_AS(BinaryField(4, 0b11111), NotPrimitive);
    CHECK_THROWS_AS(BinaryField(0, 0b11), std::invalid_argument);
    CHECK_THROWS_AS(BinaryField(13, 0b11), std::invalid_argument);
    CHECK_THROWS_AS(BinaryField(3, 0b11), std::invalid_argument);  // wrong degree
}

TEST_CASE("all built-in polynomials construct, up to m=12") {
    for (int m = 1; m <= 12; ++m) {
        BinaryField f(m);
        CHECK(f.size() == (1u << m));
        CHECK(f.alog(0) == 1);
    }
}

TEST_CASE("shipped polynomial table matches the built-ins") {
    auto table = BinaryField::load_poly_table(std::string(Z4TRACE_SOURCE_DIR) +
                                              "/data/primitive_polys.txt");
    REQUIRE(table.size() == 13);
    for (int m = 1; m <= 12; ++m) {
        CHECK(table[m] == BinaryField::default_poly(m));
        BinaryField f(m, table[m]);  // constructs = primitive
        CHECK(f.poly() == table[m]);
    }
}

TEST_CASE("trace is linear, Frobenius-invariant and balanced") {
    for (int m = 1; m <= 8; ++m) {
        BinaryField f(m);
        int ones = 0;
        for (FieldElem a = 0; a < f.size(); ++a) {
            ones += f.trace(a);
            CHECK(f.trace(f.sq(a)) == f.trace(a));
        }
        CHECK(ones == static_cast<int>(f.size() / 2));

        std::mt19937 rng(m);
        for (int k = 0; k < 200; ++k) {
            FieldElem a = rng() % f.size(), b = rng() % f.size();
            CHECK(f.trace(f.add(a, b)) == (f.trace(a) ^ f.trace(b)));
        }
    }
}

TEST_CASE("Frobenius is an automorphism of order m") {
    for (int m = 2; m <= 8; ++m) {
        BinaryField f(m);
        for (FieldElem a = 0; a < f.size(); ++a) {
            FieldElem cur = a;
            for (int i = 0; i < m; ++i) cur = f.sq(cur);
            CHECK(cur == a);  // x^(2^m) = x
        }
        // order exactly m: some element moves under every proper power
        for (int k = 1; k < m; ++k) {
            bool all_fixed = true;
            for (FieldElem a = 0; a < f.size(); ++a) {
                FieldElem cur = a;
                for (int i = 0; i < k; ++i) cur = f.sq(cur);
                if (cur != a) all_fixed = false;
            }
            CHECK_FALSE(all_fixed);
        }
        // multiplicativity, sampled
        std::mt19937 rng(m);
        for (int k = 0; k < 100; ++k) {
            FieldElem a = rng() % f.size(), b = rng() % f.size();
            CHECK(f.sq(f.mul(a, b)) == f.mul(f.sq(a), f.sq(b)));
        }
    }
}

TEST_CASE("x -> tr(ax) is balanced for every nonzero a") {
    for (int m = 1; m <= 6; ++m) {
        BinaryField f(m);
        for (FieldElem a = 1; a < f.size(); ++a) {
            int ones = 0;
            for (FieldElem x = 0; x < f.size(); ++x) ones += f.trace(f.mul(a, x));
            CHECK(ones == static_cast<int>(f.size() / 2));
        }
    }
}

TEST_CASE("field axioms, exhaustive small m") {
    for (int m = 1; m <= 3; ++m) {
        BinaryField f(m);
        for (FieldElem a = 0; a < f.size(); ++a) {
            for (FieldElem b = 0; b < f.size(); ++b) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (FieldElem c = 0; c < f.size(); ++c) {
                    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}
