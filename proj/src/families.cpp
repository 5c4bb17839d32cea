#include "shapeinv/families.hpp"

#include "shapeinv/errors.hpp"
#include "shapeinv/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace shapeinv {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kScanPoints = 1500;
}  // namespace

bool family_has_h(Family fam) {
    return fam == Family::TrigDPT || fam == Family::HypDPT || fam == Family::TrigDPTContL;
}

bool family_is_polynomial(Family fam) {
    return fam == Family::RadialOscillator || fam == Family::TrigDPT || fam == Family::HypDPT;
}

const char* family_name(Family fam) {
    switch (fam) {
        case Family::RadialOscillator: return "radial-oscillator";
        case Family::TrigDPT: return "trig-dpt";
        case Family::HypDPT: return "hyp-dpt";
        case Family::RadialOscillatorContL: return "radial-oscillator-contl";
        case Family::TrigDPTContL: return "trig-dpt-contl";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "radial-oscillator" || name == "ro") return Family::RadialOscillator;
    if (name == "trig-dpt") return Family::TrigDPT;
    if (name == "hyp-dpt") return Family::HypDPT;
    if (name == "radial-oscillator-contl" || name == "ro-contl")
        return Family::RadialOscillatorContL;
    if (name == "trig-dpt-contl") return Family::TrigDPTContL;
    return std::nullopt;
}

double domain_max(Family fam) {
    if (fam == Family::TrigDPT || fam == Family::TrigDPTContL) return kPi / 2;
    return std::numeric_limits<double>::infinity();
}

void check_domain(Family fam, double x) {
    if (!(x > 0.0) || !(x < domain_max(fam))) {
        std::ostringstream msg;
        msg << family_name(fam) << ": x=" << x << " outside domain (0, " << domain_max(fam) << ")";
        throw DomainError(msg.str());
    }
}

bool Params::l_is_integer() const { return l >= 0 && l == std::floor(l); }

int Params::l_int() const {
    if (!l_is_integer()) throw InvalidParams("l is not a nonnegative integer");
    return static_cast<int>(l);
}

Params make_params(const Rational& g, int l) {
    Params p;
    p.g = to_double(g);
    p.g_exact = g;
    p.l = l;
    return p;
}

Params make_params(const Rational& g, const Rational& h, int l) {
    Params p = make_params(g, l);
    p.h = to_double(h);
    p.h_exact = h;
    return p;
}

Params make_params_real(double g, double h, double l) {
    Params p;
    p.g = g;
    p.h = h;
    p.l = l;
    return p;
}

void validate_params(Family fam, const Params& p) {
    if (family_is_polynomial(fam)) {
        if (!p.l_is_integer()) throw InvalidParams("polynomial family requires integer l >= 0");
    } else {
        if (!(p.l > 0)) throw InvalidParams("continuous family requires l > 0");
    }
    if (!std::isfinite(p.g)) throw InvalidParams("g must be finite");
    if (family_has_h(fam) && !std::isfinite(p.h)) throw InvalidParams("h must be finite");
}

bool in_validity_window(Family fam, const Params& p) {
    if (p.g < 1.5) return false;
    switch (fam) {
        case Family::TrigDPT:
        case Family::TrigDPTContL:
            return p.h >= 1.5;
        case Family::HypDPT:
            return p.h >= p.l + 1.5;
        default:
            return true;
    }
}

ScalarFn base_superpotential(Family fam, const Params& p) {
    validate_params(fam, p);
    ScalarFn fn;
    switch (fam) {
        case Family::RadialOscillator:
        case Family::RadialOscillatorContL: {
            double G = p.g + p.l;
            fn.value = [fam, G](double x) { check_domain(fam, x); return -x + G / x; };
            fn.deriv = [fam, G](double x) { check_domain(fam, x); return -1.0 - G / (x * x); };
            break;
        }
        case Family::TrigDPT:
        case Family::TrigDPTContL: {
            double G = p.g + p.l, H = p.h + p.l;
            fn.value = [fam, G, H](double x) {
                check_domain(fam, x);
                return G / std::tan(x) - H * std::tan(x);
            };
            fn.deriv = [fam, G, H](double x) {
                check_domain(fam, x);
                double s = std::sin(x), c = std::cos(x);
                return -G / (s * s) - H / (c * c);
            };
            break;
        }
        case Family::HypDPT: {
            double G = p.g + p.l, H = p.h - p.l;
            fn.value = [fam, G, H](double x) {
                check_domain(fam, x);
                return G / std::tanh(x) - H * std::tanh(x);
            };
            fn.deriv = [fam, G, H](double x) {
                check_domain(fam, x);
                double s = std::sinh(x), c = std::cosh(x);
                return -G / (s * s) - H / (c * c);
            };
            break;
        }
    }
    return fn;
}

std::pair<double, double> scan_range(Family fam) {
    switch (fam) {
        case Family::TrigDPT: return {1e-3, kPi / 2 - 1e-3};
        // sin^2 x must stay below the 2F1 margin boundary.
        case Family::TrigDPTContL: return {1e-3, 1.34};
        default: return {1e-3, 6.0};
    }
}

Substitution substitution(Family fam) {
    switch (fam) {
        case Family::RadialOscillator:
        case Family::RadialOscillatorContL:
            return {[](double x) { return x * x; },
                    [](double x) { return 2 * x; },
                    [](double) { return 2.0; }};
        case Family::TrigDPT:
        case Family::TrigDPTContL:
            return {[](double x) { return std::cos(2 * x); },
                    [](double x) { return -2 * std::sin(2 * x); },
                    [](double x) { return -4 * std::cos(2 * x); }};
        case Family::HypDPT:
            return {[](double x) { return std::cosh(2 * x); },
                    [](double x) { return 2 * std::sinh(2 * x); },
                    [](double x) { return 4 * std::cosh(2 * x); }};
    }
    throw InvalidParams("unknown family");
}

namespace {

Rational require_exact_g(const Params& p) {
    if (!p.g_exact) throw InvalidParams("polynomial family requires rational g");
    return *p.g_exact;
}

Rational require_exact_h(const Params& p) {
    if (!p.h_exact) throw InvalidParams("polynomial family requires rational h");
    return *p.h_exact;
}

}  // namespace

Poly deformation_poly(Family fam, const Params& p, Branch branch) {
    int l = p.l_int();
    bool plus = branch == Branch::Plus;
    Rational g = require_exact_g(p);
    switch (fam) {
        case Family::RadialOscillator: {
            Rational alpha = g + Rational(l) - Rational(3, 2) + Rational(plus ? 1 : 0);
            return laguerre_neg_arg(l, alpha);
        }
        case Family::TrigDPT: {
            Rational h = require_exact_h(p);
            Rational a = -g - Rational(l) - Rational(1, 2) - Rational(plus ? 1 : 0);
            Rational b = h + Rational(l) - Rational(3, 2) + Rational(plus ? 1 : 0);
            return jacobi(l, a, b);
        }
        case Family::HypDPT: {
            Rational h = require_exact_h(p);
            Rational a = -g - Rational(l) - Rational(1, 2) - Rational(plus ? 1 : 0);
            Rational b = -h + Rational(l) - Rational(3, 2) + Rational(plus ? 1 : 0);
            return jacobi(l, a, b);
        }
        default:
            throw InvalidParams("deformation_poly: not a polynomial family");
    }
}

namespace {

ScalarFn polynomial_deformation(Family fam, const Params& p, Branch branch) {
    Poly poly = deformation_poly(fam, p, branch);
    auto c0 = poly.coeffs_double();
    auto c1 = derive_coeffs(c0);
    auto c2 = derive_coeffs(c1);
    Substitution sub = substitution(fam);
    ScalarFn fn;
    fn.value = [fam, c0, sub](double x) {
        check_domain(fam, x);
        return eval_coeffs(c0, sub.map(x));
    };
    fn.deriv = [fam, c1, sub](double x) {
        check_domain(fam, x);
        return sub.dmap(x) * eval_coeffs(c1, sub.map(x));
    };
    fn.deriv2 = [fam, c1, c2, sub](double x) {
        check_domain(fam, x);
        double u = sub.map(x), du = sub.dmap(x);
        return sub.d2map(x) * eval_coeffs(c1, u) + du * du * eval_coeffs(c2, u);
    };
    return fn;
}

ScalarFn continuous_deformation(Family fam, const Params& p, Branch branch) {
    bool plus = branch == Branch::Plus;
    double l = p.l;
    SeriesConfig cfg;
    if (fam == Family::RadialOscillatorContL) {
        double gg = p.g + (plus ? 1.0 : 0.0);
        double c = gg + l - 0.5;
        double pref = gamma_ratio(std::vector<double>{gg + 2 * l - 0.5},
                                  std::vector<double>{l + 1, gg + l - 0.5});
        // xi_l(x^2, gg) with argument z = -x^2
        auto F = [=](int shift, double z) {
            double num = 1.0;
            for (int i = 0; i < shift; ++i) num *= (-l + i) / (c + i);
            return num * hyp1f1(-l + shift, c + shift, z, cfg);
        };
        ScalarFn fn;
        fn.value = [=](double x) { check_domain(fam, x); return pref * F(0, -x * x); };
        fn.deriv = [=](double x) {
            check_domain(fam, x);
            return pref * F(1, -x * x) * (-2 * x);
        };
        fn.deriv2 = [=](double x) {
            check_domain(fam, x);
            double z = -x * x;
            return pref * (F(2, z) * 4 * x * x + F(1, z) * (-2.0));
        };
        return fn;
    }
    // TrigDPTContL: xi_l(cos 2x, gg, hh) with 2F1 argument w = sin^2 x
    double gg = p.g + (plus ? 1.0 : 0.0);
    double hh = p.h + (plus ? 1.0 : 0.0);
    double a = -l, b = gg - hh + l - 1, c = gg + l - 0.5;
    double pref = gamma_ratio(std::vector<double>{gg + 2 * l - 0.5},
                              std::vector<double>{l + 1, gg + l - 0.5});
    auto F = [=](int shift, double w) {
        double num = 1.0;
        for (int i = 0; i < shift; ++i) num *= (a + i) * (b + i) / (c + i);
        return num * hyp2f1(a + shift, b + shift, c + shift, w, cfg);
    };
    ScalarFn fn;
    fn.value = [=](double x) {
        check_domain(fam, x);
        double s = std::sin(x);
        return pref * F(0, s * s);
    };
    fn.deriv = [=](double x) {
        check_domain(fam, x);
        double s = std::sin(x);
        return pref * F(1, s * s) * std::sin(2 * x);
    };
    fn.deriv2 = [=](double x) {
        check_domain(fam, x);
        double s = std::sin(x), s2 = std::sin(2 * x);
        double w = s * s;
        return pref * (F(2, w) * s2 * s2 + F(1, w) * 2 * std::cos(2 * x));
    };
    return fn;
}

void require_nodeless(Family fam, const Params& p, Branch branch, const ScalarFn& fn) {
    auto [lo, hi] = scan_range(fam);
    double first = fn.value(lo);
    if (!std::isfinite(first) || first == 0.0)
        throw NodefulDeformation("deformation vanishes near domain edge");
    for (int i = 1; i < kScanPoints; ++i) {
        double x = lo + (hi - lo) * i / (kScanPoints - 1);
        double v = fn.value(x);
        if (!std::isfinite(v) || v == 0.0 || (v > 0) != (first > 0)) {
            std::ostringstream msg;
            msg << "deformation " << (branch == Branch::Plus ? "psi_1+" : "psi_1-")
                << " changes sign near x=" << x << " for " << params_text(fam, p);
            throw NodefulDeformation(msg.str());
        }
    }
}

}  // namespace

ScalarFn deformation(Family fam, const Params& p, Branch branch) {
    validate_params(fam, p);
    if (family_is_polynomial(fam) && p.l_int() == 0) {
        ScalarFn one;
        one.value = [fam](double x) { check_domain(fam, x); return 1.0; };
        one.deriv = [fam](double x) { check_domain(fam, x); return 0.0; };
        one.deriv2 = [fam](double x) { check_domain(fam, x); return 0.0; };
        return one;
    }
    ScalarFn fn = family_is_polynomial(fam) ? polynomial_deformation(fam, p, branch)
                                            : continuous_deformation(fam, p, branch);
    require_nodeless(fam, p, branch, fn);
    return fn;
}

Params parameter_shift(Family fam, const Params& p) {
    validate_params(fam, p);
    Params q = p;
    auto dec = [](double& v, std::optional<Rational>& e) {
        v -= 1;
        if (e) *e -= 1;
    };
    auto inc = [](double& v, std::optional<Rational>& e) {
        v += 1;
        if (e) *e += 1;
    };
    switch (fam) {
        case Family::RadialOscillator:
        case Family::RadialOscillatorContL:
            dec(q.g, q.g_exact);
            break;
        case Family::TrigDPT:
        case Family::TrigDPTContL:
            dec(q.g, q.g_exact);
            dec(q.h, q.h_exact);
            break;
        case Family::HypDPT:
            dec(q.g, q.g_exact);
            inc(q.h, q.h_exact);
            break;
    }
    validate_params(fam, q);
    return q;
}

std::string params_text(Family fam, const Params& p) {
    std::ostringstream out;
    out << "family=" << family_name(fam);
    out << " g=" << (p.g_exact ? rational_to_string(*p.g_exact) : std::to_string(p.g));
    if (family_has_h(fam))
        out << " h=" << (p.h_exact ? rational_to_string(*p.h_exact) : std::to_string(p.h));
    if (p.l_is_integer()) out << " l=" << p.l_int();
    else out << " l=" << p.l;
    return out.str();
}

}  // namespace shapeinv
