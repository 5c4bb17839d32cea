#include "shapeinv/poly.hpp"

#include <doctest.h>

#include <random>

using namespace shapeinv;

namespace {

Poly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 5);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 7);
    int d = deg(rng);
    std::vector<Rational> c(d + 1);
    for (auto& ci : c) ci = Rational(num(rng), den(rng));
    return Poly(std::move(c));
}

Rational random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 7);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("poly arithmetic examples") {
    Poly z = Poly::variable();
    Poly one = Poly::constant(Rational(1));

    CHECK((z + one) * (z - one) == Poly::from_coeffs({Rational(-1), Rational(0), Rational(1)}));
    Poly p = Poly::from_coeffs({Rational(2), Rational(3), Rational(5)});
    CHECK(p + Poly{} == p);

    // (z+g+3/2)(z+g+1/2) with g=3 -> z^2 + 8z + 63/4
    Rational g(3);
    Poly a = z + Poly::constant(g + Rational(3, 2));
    Poly b = z + Poly::constant(g + Rational(1, 2));
    CHECK(a * b == Poly::from_coeffs({Rational(63, 4), Rational(8), Rational(1)}));
}

TEST_CASE("poly degree contracts") {
    Poly z = Poly::variable();
    Poly p = z * z + z;
    Poly q = -(z * z);
    CHECK((p + q).degree() == 1);
    CHECK((p * p).degree() == 4);
    CHECK(Poly{}.degree() == Poly::kZeroDegree);
}

TEST_CASE("poly derivative examples") {
    Poly p = Poly::from_coeffs({Rational(1), Rational(2), Rational(3)});
    CHECK(p.derivative() == Poly::from_coeffs({Rational(2), Rational(6)}));
    CHECK(Poly::constant(Rational(7)).derivative().is_zero());
    std::vector<Rational> c(6);
    c[5] = 1;
    CHECK(Poly(c).derivative() == Poly::from_coeffs({Rational(0), Rational(0), Rational(0),
                                                     Rational(0), Rational(5)}));
}

TEST_CASE("poly eval examples") {
    Poly z = Poly::variable();
    CHECK((z + Poly::constant(Rational(7, 2))).eval(Rational(1, 2)) == Rational(4));
    CHECK(Poly{}.eval(Rational(123)) == Rational(0));
    CHECK((z * z - Poly::constant(Rational(1))).eval(Rational(3)) == Rational(8));
}

TEST_CASE("poly is_zero") {
    Poly z = Poly::variable();
    Poly p = z * z + z + Poly::constant(Rational(2, 3));
    CHECK((p - p).is_zero());
    CHECK_FALSE(z.is_zero());
}

TEST_CASE("poly ring and eval properties") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
        Rational x = random_rat(rng);
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
        CHECK((p - q).eval(x) == p.eval(x) - q.eval(x));
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
        // canonicalization idempotent: rebuilding from coefficients is a no-op
        CHECK(Poly(std::vector<Rational>(p.coeffs().begin(), p.coeffs().end())) == p);
    }
}

TEST_CASE("negate_variable") {
    Poly z = Poly::variable();
    Poly p = z * z * z + Poly::constant(Rational(2)) * z + Poly::constant(Rational(5));
    Poly n = p.negate_variable();
    CHECK(n.eval(Rational(2)) == p.eval(Rational(-2)));
}
