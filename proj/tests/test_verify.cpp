#include "shapeinv/verify.hpp"

#include "shapeinv/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace shapeinv;

namespace {

Params sample_params(Family fam) {
    switch (fam) {
        case Family::RadialOscillator: return make_params(Rational(3), 2);
        case Family::TrigDPT: return make_params(Rational(3), Rational(4), 2);
        case Family::HypDPT: return make_params(Rational(3), Rational(21, 2), 2);
        case Family::RadialOscillatorContL: return make_params_real(3, 0, 1.5);
        case Family::TrigDPTContL: return make_params_real(3, 4, 1.5);
    }
    return {};
}

}  // namespace

TEST_CASE("standard grids stay inside the domain") {
    for (Family fam : kAllFamilies) {
        auto xs = standard_grid(fam);
        CHECK(xs.size() == 60);
        for (double x : xs) CHECK_NOTHROW(check_domain(fam, x));
        CHECK(std::is_sorted(xs.begin(), xs.end()));
    }
}

TEST_CASE("compatibility residual is the zero constant on all families") {
    for (Family fam : kAllFamilies) {
        Params p = sample_params(fam);
        auto rep = cc_residual(fam, p, standard_grid(fam));
        CHECK(rep.is_constant);
        CHECK(rep.max_abs < 1e-8);
    }
}

TEST_CASE("exact identity certificates for the polynomial families") {
    for (int l = 0; l <= 4; ++l) {
        auto ro = cc_residual_exact(Family::RadialOscillator, make_params(Rational(3), l));
        CHECK(ro.proven);
        CHECK(ro.residual_poly.is_zero());
        CHECK(ro.l == l);
        auto tr = cc_residual_exact(Family::TrigDPT, make_params(Rational(3), Rational(4), l));
        CHECK(tr.proven);
        auto hy =
            cc_residual_exact(Family::HypDPT, make_params(Rational(3), Rational(21, 2), l));
        CHECK(hy.proven);
    }
    // half-integer parameters
    CHECK(cc_residual_exact(Family::RadialOscillator, make_params(Rational(7, 2), 3)).proven);
    CHECK(cc_residual_exact(Family::TrigDPT, make_params(Rational(5, 2), Rational(9, 2), 3))
              .proven);
}

TEST_CASE("perturbed branch polynomial refutes the identity") {
    for (Family fam : {Family::RadialOscillator, Family::TrigDPT, Family::HypDPT}) {
        Params p = sample_params(fam);
        Poly pp = deformation_poly(fam, p, Branch::Plus);
        Poly pm = deformation_poly(fam, p, Branch::Minus);
        CHECK(family_identity_poly(fam, p, pp, pm).is_zero());
        Poly bad = pm + Poly::constant(Rational(1));
        CHECK_FALSE(family_identity_poly(fam, p, pp, bad).is_zero());
    }
}

TEST_CASE("shape invariance residual is constant and matches the closed-form R") {
    for (Family fam : kAllFamilies) {
        Params p = sample_params(fam);
        auto rep = si_residual(fam, p, standard_grid(fam));
        REQUIRE(rep.is_constant);
        CHECK(*rep.constant_value == doctest::Approx(expected_R(fam, p)).epsilon(1e-9));
    }
    // R closed forms at the sample parameters
    CHECK(expected_R(Family::RadialOscillator, sample_params(Family::RadialOscillator)) ==
          -4.0);
    CHECK(expected_R(Family::TrigDPT, sample_params(Family::TrigDPT)) ==
          doctest::Approx(-4.0 * (3 + 4 + 4 - 1)));
    CHECK(expected_R(Family::HypDPT, sample_params(Family::HypDPT)) ==
          doctest::Approx(4.0 * (3 - 10.5 + 4 - 1)));
}

TEST_CASE("deformations satisfy their displayed second-order relations") {
    for (Family fam : kAllFamilies) {
        Params p = sample_params(fam);
        for (Branch br : {Branch::Plus, Branch::Minus}) {
            auto rep = ode_residual(fam, p, br, standard_grid(fam));
            // absolute residual; psi'' reaches ~1e9 on the hyperbolic grid
            CHECK(rep.max_abs < 1e-5);
        }
    }
}

TEST_CASE("gauge shift leaves potentials invariant and adds 2g' to the pairing expression") {
    Params p = make_params(Rational(3), 1);
    auto xs = standard_grid(Family::RadialOscillator);
    for (const char* expr : {"0", "5", "x^2", "1+x^3"}) {
        GaugeSpec spec = parse_gauge(expr);
        auto rep = gauge_transform(Family::RadialOscillator, p, spec, xs);
        CHECK(rep.residual.max_abs < 1e-8);
        CHECK(rep.max_v_shift < 1e-9);
        CHECK(rep.max_vt_shift < 1e-9);
    }
}

TEST_CASE("gauge expression parser") {
    CHECK(parse_gauge("0").g.is_zero());
    CHECK(parse_gauge("5").g == Poly::constant(Rational(5)));
    CHECK(parse_gauge("x^2").g ==
          Poly::from_coeffs({Rational(0), Rational(0), Rational(1)}));
    CHECK(parse_gauge("1+x^3").g ==
          Poly::from_coeffs({Rational(1), Rational(0), Rational(0), Rational(1)}));
    CHECK(parse_gauge("3/2*x - x^2").g ==
          Poly::from_coeffs({Rational(0), Rational(3, 2), Rational(-1)}));
    CHECK(parse_gauge("-x + 2").g == Poly::from_coeffs({Rational(2), Rational(-1)}));
    CHECK_THROWS_AS(parse_gauge(""), InvalidParams);
    CHECK_THROWS_AS(parse_gauge("x^-1"), InvalidParams);
}

TEST_CASE("perturbing one branch breaks both conditions together") {
    for (Family fam : kAllFamilies) {
        Params p = sample_params(fam);
        auto clean = equivalence_probe(fam, p, 0.0);
        CHECK(clean.cc_constant_in_x);
        CHECK(clean.si_constant_in_x);
        auto broken = equivalence_probe(fam, p, 1e-2);
        CHECK_FALSE(broken.degenerate);
        CHECK_FALSE(broken.cc_constant_in_x);
        CHECK_FALSE(broken.si_constant_in_x);
    }
}

TEST_CASE("l = 0 probe is reported as degenerate") {
    auto rep = equivalence_probe(Family::RadialOscillator, make_params(Rational(3), 0), 1e-2);
    CHECK(rep.degenerate);
    CHECK(rep.cc_constant_in_x);
    CHECK(rep.si_constant_in_x);
}
