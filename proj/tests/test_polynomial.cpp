#include "apartition/polynomial.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace apartition;
using apartition::testing::poly;
using apartition::testing::rat;

namespace {

Polynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 6), num(-9, 9), den(1, 9);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = rat(num(rng), den(rng));
    return Polynomial::from_coefficients(std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic and normalization") {
    Polynomial x = Polynomial::x();
    Polynomial x_plus_3 = poly({rat(3), rat(1)});

    Polynomial half_x_x3 = (x * x_plus_3).scaled(rat(1, 2));
    CHECK(half_x_x3 == poly({rat(0), rat(3, 2), rat(1, 2)}));

    CHECK(x + Polynomial() == x);
    CHECK((poly({rat(-3), rat(1)}) * x).scaled(rat(1, 2)) ==
          poly({rat(0), rat(-3, 2), rat(1, 2)}));

    CHECK(poly({rat(1), rat(1), rat(0), rat(0)}).degree() == 1);
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial().is_zero());
    CHECK((x - x).is_zero());
    CHECK(Polynomial(rat(0)).is_zero());
    CHECK(x.times_x() == poly({rat(0), rat(0), rat(1)}));
    CHECK(Polynomial().times_x().is_zero());
    CHECK(x.scaled(rat(0)).is_zero());
}

TEST_CASE("exact evaluation") {
    Polynomial p = poly({rat(0), rat(3, 2), rat(1, 2)});  // x(x+3)/2
    CHECK(p(rat(3)) == rat(9));
    CHECK(p(rat(0)) == rat(0));
    Polynomial q = poly({rat(0), rat(5, 2), rat(1, 2)});  // x(x+5)/2
    CHECK(q(rat(5)) == rat(25));
    Polynomial r = poly({rat(7), rat(-2), rat(1, 3)});
    CHECK(r(rat(0)) == r.coefficient(0));
    CHECK(r(rat(3, 2)) == rat(7) - rat(3) + rat(3, 4));
    CHECK(Polynomial()(rat(11)) == 0);
}

TEST_CASE("formal derivative") {
    CHECK(poly({rat(0), rat(3, 2), rat(1, 2)}).derivative() == poly({rat(3, 2), rat(1)}));
    CHECK(Polynomial(rat(42)).derivative().is_zero());
    CHECK(poly({rat(0), rat(0), rat(1)}).derivative()(rat(1)) == rat(2));
}

TEST_CASE("argument scaling substitutes x -> m x") {
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        Polynomial p = random_poly(rng);
        Rational m = rat(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
        Rational x0 = rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 5));
        CHECK(p.with_scaled_argument(m)(x0) == p(m * x0));
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20240818);
    for (int i = 0; i < 150; ++i) {
        Polynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == Polynomial());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(99);
    for (int i = 0; i < 80; ++i) {
        Polynomial p = random_poly(rng), q = random_poly(rng);
        Rational x0 = rat(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 6));
        CHECK((p * q)(x0) == p(x0) * q(x0));
        CHECK((p + q)(x0) == p(x0) + q(x0));
        if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("printing") {
    CHECK(poly({rat(0), rat(3, 2), rat(1, 2)}).str() == "1/2*x^2 + 3/2*x");
    CHECK(poly({rat(-3), rat(1)}).str() == "x - 3");
    CHECK(poly({rat(0), rat(-1, 3), rat(0), rat(1, 3)}).str() == "1/3*x^3 - 1/3*x");
    CHECK(Polynomial().str() == "0");
    CHECK(Polynomial(rat(1)).str() == "1");
    CHECK(poly({rat(0), rat(-1)}).str() == "-x");
}
