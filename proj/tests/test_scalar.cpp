#include <doctest.h>

#include "cliffpair/scalar.hpp"

#include <random>

using cliffpair::Scalar;

namespace {

std::mt19937_64 rng(20240817);

Scalar random_scalar() {
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    return Scalar(num(rng), den(rng)) + Scalar(num(rng), den(rng)) * Scalar::i();
}

} // namespace

TEST_CASE("rational arithmetic is exact") {
    CHECK(Scalar(1, 3) + Scalar(1, 6) == Scalar(1, 2));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    Scalar z = Scalar(2) + Scalar::i();
    CHECK(z / z == Scalar(1));
}

TEST_CASE("field axioms on random triples") {
    for (int k = 0; k < 200; ++k) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
}

TEST_CASE("division by zero is an error") {
    CHECK_THROWS(Scalar(1) / Scalar(0));
}

TEST_CASE("canonical text round trip") {
    CHECK(Scalar(1, 2).str() == "1/2");
    CHECK(Scalar(-3).str() == "-3");
    CHECK((Scalar(1, 2) + Scalar(3, 4) * Scalar::i()).str() == "1/2+3/4*i");
    CHECK((Scalar(1, 2) - Scalar(3, 4) * Scalar::i()).str() == "1/2-3/4*i");
    for (int k = 0; k < 100; ++k) {
        Scalar a = random_scalar();
        CHECK(Scalar::parse(a.str()) == a);
    }
    CHECK(Scalar::parse("-5/7+2/3*i") == Scalar(-5, 7) + Scalar(2, 3) * Scalar::i());
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("-i") == -Scalar::i());
}
