#pragma once

#include "shapeinv/poly.hpp"
#include "shapeinv/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace shapeinv {

enum class Family {
    RadialOscillator,
    TrigDPT,
    HypDPT,
    RadialOscillatorContL,
    TrigDPTContL,
};

inline constexpr Family kAllFamilies[] = {
    Family::RadialOscillator, Family::TrigDPT, Family::HypDPT,
    Family::RadialOscillatorContL, Family::TrigDPTContL,
};

bool family_has_h(Family fam);
/// Integer-l families whose deformations are exact polynomials.
bool family_is_polynomial(Family fam);
const char* family_name(Family fam);
std::optional<Family> family_from_name(std::string_view name);

/// (0, pi/2) for the trigonometric families, (0, inf) otherwise.
double domain_max(Family fam);
void check_domain(Family fam, double x);

/// Parameter tuple a = (g, h, l). Exact rational values are carried alongside
/// the double ones when the input was a rational literal; the exact identity
/// machinery requires them.
struct Params {
    double g = 0;
    double h = 0;
    double l = 0;
    std::optional<Rational> g_exact;
    std::optional<Rational> h_exact;

    bool l_is_integer() const;
    int l_int() const;
};

Params make_params(const Rational& g, int l);
Params make_params(const Rational& g, const Rational& h, int l);
Params make_params_real(double g, double h, double l);

void validate_params(Family fam, const Params& p);
/// Conservative window in which the deformations are known nodeless:
/// g >= 3/2 (and h >= 3/2 trig, h >= l + 3/2 hyperbolic).
bool in_validity_window(Family fam, const Params& p);

/// Scalar function with analytic derivatives. deriv2 may be empty when a
/// second derivative is not available for the assembled quantity.
struct ScalarFn {
    std::function<double(double)> value;
    std::function<double(double)> deriv;
    std::function<double(double)> deriv2;
    double operator()(double x) const { return value(x); }
};

enum class Branch { Plus, Minus };

/// W0 evaluated at the family's shifted parameters (g+l, and h+l or h-l).
ScalarFn base_superpotential(Family fam, const Params& p);

/// psi_1+ or psi_1- with analytic first and second derivatives.
/// Construction scans the domain and throws NodefulDeformation on a sign change.
ScalarFn deformation(Family fam, const Params& p, Branch branch);

/// The translation f(a) pinned by W_{1-}(x,a) = W_{1+}(x,f(a)).
Params parameter_shift(Family fam, const Params& p);

/// Exact deformation polynomial in the substitution variable (polynomial
/// families with rational parameters only).
Poly deformation_poly(Family fam, const Params& p, Branch branch);

struct Substitution {
    std::function<double(double)> map;
    std::function<double(double)> dmap;
    std::function<double(double)> d2map;
};

/// z = x^2 (radial), y = cos 2x (trig), y = cosh 2x (hyperbolic).
Substitution substitution(Family fam);

/// Interval scanned for deformation nodes; also the widest sensible
/// evaluation range for the family.
std::pair<double, double> scan_range(Family fam);

/// Canonical textual form, e.g. "family=trig-dpt g=3 h=4 l=2".
std::string params_text(Family fam, const Params& p);

}  // namespace shapeinv
