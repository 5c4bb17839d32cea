#include "shapeinv/verify.hpp"

#include "shapeinv/errors.hpp"
#include "shapeinv/superpotential.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace shapeinv {

namespace {

ResidualReport make_report(std::vector<double> xs, std::vector<double> values) {
    ResidualReport rep;
    rep.xs = std::move(xs);
    rep.values = std::move(values);
    double lo = rep.values.front(), hi = lo, sum = 0;
    for (double v : rep.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        sum += v;
        rep.max_abs = std::max(rep.max_abs, std::abs(v));
    }
    double mean = sum / static_cast<double>(rep.values.size());
    rep.spread = hi - lo;
    rep.is_constant = rep.spread <= kConstancyTol * (1.0 + std::abs(mean));
    if (rep.is_constant) rep.constant_value = mean;
    return rep;
}

// eps(x) from explicit branches.
double cc_value(const ScalarFn& w0, const ScalarFn& pp, const ScalarFn& pm, double x) {
    double fp = pp.value(x), fm = pm.value(x);
    double dp = pp.deriv(x), dm = pm.deriv(x);
    double w = w0.value(x);
    return (pp.deriv2(x) + 2 * w * dp) / fp + (pm.deriv2(x) - 2 * w * dm) / fm -
           2 * dp * dm / (fp * fm);
}

}  // namespace

std::vector<double> standard_grid(Family fam) {
    constexpr int n = 60;
    std::vector<double> xs(n);
    if (fam == Family::TrigDPT) {
        double lo = 0.05, hi = std::numbers::pi / 2 - 0.05;
        for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
    } else if (fam == Family::TrigDPTContL) {
        double lo = 0.05, hi = 1.1;
        for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
    } else {
        double lo = 0.05, hi = 4.0;
        for (int i = 0; i < n; ++i) xs[i] = lo * std::pow(hi / lo, double(i) / (n - 1));
    }
    return xs;
}

ResidualReport cc_residual(Family fam, const Params& p, std::span<const double> xs) {
    auto sp = make_superpotential(fam, p);
    std::vector<double> values;
    values.reserve(xs.size());
    for (double x : xs) values.push_back(cc_value(sp.w0, sp.psi_plus, sp.psi_minus, x));
    return make_report({xs.begin(), xs.end()}, std::move(values));
}

Poly family_identity_poly(Family fam, const Params& p, const Poly& pp, const Poly& pm) {
    if (!family_is_polynomial(fam))
        throw InvalidParams("family_identity_poly: polynomial families only");
    if (!p.g_exact || (family_has_h(fam) && !p.h_exact))
        throw InvalidParams("family_identity_poly: rational parameters required");
    Rational l(p.l_int());
    Rational g = *p.g_exact;
    Poly dpp = pp.derivative();
    Poly dpm = pm.derivative();
    Poly u = Poly::variable();
    Poly one = Poly::constant(Rational(1));
    switch (fam) {
        case Family::RadialOscillator:
            // 8l P+P- + 4(1-2g-2l) P+P-' - 8z P-P+' - 8z P+'P-'
            return Rational(8) * l * (pp * pm) +
                   Rational(4) * (Rational(1) - 2 * g - 2 * l) * (pp * dpm) -
                   Rational(8) * (u * (pm * dpp)) - Rational(8) * (u * (dpp * dpm));
        case Family::TrigDPT: {
            Rational h = *p.h_exact;
            // -8l(h-g+l-1) P+P- - 4(2h+2l-1)(1-y) P+P-'
            // - 4(2g+2l+1)(1+y) P-P+' - 8(1-y^2) P+'P-'
            return Rational(-8) * l * (h - g + l - 1) * (pp * pm) -
                   Rational(4) * (2 * h + 2 * l - 1) * ((one - u) * (pp * dpm)) -
                   Rational(4) * (2 * g + 2 * l + 1) * ((one + u) * (pm * dpp)) -
                   Rational(8) * ((one - u * u) * (dpp * dpm));
        }
        case Family::HypDPT: {
            Rational h = *p.h_exact;
            // -8l(h+g-l+1) P+P- + 4(1+2h-2l)(y-1) P+P-'
            // + 4(1+2g+2l)(y+1) P-P+' - 8(y^2-1) P+'P-'
            return Rational(-8) * l * (h + g - l + 1) * (pp * pm) +
                   Rational(4) * (1 + 2 * h - 2 * l) * ((u - one) * (pp * dpm)) +
                   Rational(4) * (1 + 2 * g + 2 * l) * ((u + one) * (pm * dpp)) -
                   Rational(8) * ((u * u - one) * (dpp * dpm));
        }
        default:
            throw InvalidParams("family_identity_poly: unknown polynomial family");
    }
}

IdentityCertificate cc_residual_exact(Family fam, const Params& p) {
    validate_params(fam, p);
    IdentityCertificate cert;
    cert.family = fam;
    cert.params = p;
    cert.l = p.l_int();
    cert.param_degree_bound = 2 * cert.l + 2;
    Poly pp = cert.l == 0 ? Poly::constant(Rational(1)) : deformation_poly(fam, p, Branch::Plus);
    Poly pm = cert.l == 0 ? Poly::constant(Rational(1)) : deformation_poly(fam, p, Branch::Minus);
    cert.residual_poly = family_identity_poly(fam, p, pp, pm);
    cert.proven = cert.residual_poly.is_zero();
    return cert;
}

double expected_R(Family fam, const Params& p) {
    switch (fam) {
        case Family::RadialOscillator:
        case Family::RadialOscillatorContL:
            return -4.0;
        case Family::TrigDPT:
        case Family::TrigDPTContL:
            return -4.0 * (p.g + p.h + 2 * p.l - 1);
        case Family::HypDPT:
            return 4.0 * (p.g - p.h + 2 * p.l - 1);
    }
    throw InvalidParams("unknown family");
}

ResidualReport si_residual(Family fam, const Params& p, std::span<const double> xs) {
    Params shifted = parameter_shift(fam, p);
    ScalarFn w = full_superpotential(fam, p);
    ScalarFn wf = full_superpotential(fam, shifted);
    std::vector<double> values;
    values.reserve(xs.size());
    for (double x : xs) {
        double a = w.value(x), b = wf.value(x);
        values.push_back(a * a - b * b + wf.deriv(x) + w.deriv(x));
    }
    return make_report({xs.begin(), xs.end()}, std::move(values));
}

ResidualReport ode_residual(Family fam, const Params& p, Branch branch,
                            std::span<const double> xs) {
    ScalarFn psi = deformation(fam, p, branch);
    bool plus = branch == Branch::Plus;
    double g = p.g, h = p.h, l = p.l;
    std::function<double(double)> c1;
    double c0 = 0;
    switch (fam) {
        case Family::RadialOscillator:
        case Family::RadialOscillatorContL:
            c0 = 4 * l;
            c1 = [=](double x) { return -2 * ((g + l - (plus ? 0 : 1)) / x + x); };
            break;
        case Family::TrigDPT:
            c0 = 4 * l * (g - h - l + 1);
            c1 = [=](double x) {
                return 2 * ((g + l + (plus ? 1 : 0)) / std::tan(x) +
                            (h + l - (plus ? 0 : 1)) * std::tan(x));
            };
            break;
        case Family::HypDPT:
            c0 = 4 * l * (l - g - h - 1);
            c1 = [=](double x) {
                return 2 * ((g + l + (plus ? 1 : 0)) / std::tanh(x) +
                            (h - l + (plus ? 0 : 1)) * std::tanh(x));
            };
            break;
        case Family::TrigDPTContL:
            c0 = -4 * l * (g - h + l - 1);
            c1 = [=](double x) {
                return -2 * ((g + h + 2 * l + (plus ? 1 : -1)) / std::sin(2 * x) +
                             (g - h - 1) / std::tan(2 * x));
            };
            break;
    }
    std::vector<double> values;
    values.reserve(xs.size());
    for (double x : xs)
        values.push_back(psi.deriv2(x) - (c0 * psi.value(x) + c1(x) * psi.deriv(x)));
    return make_report({xs.begin(), xs.end()}, std::move(values));
}

GaugeReport gauge_transform(Family fam, const Params& p, const GaugeSpec& gauge,
                            std::span<const double> xs) {
    auto sp = make_superpotential(fam, p);
    ScalarFn wp = log_derivative(sp.psi_plus);
    ScalarFn wm = log_derivative(sp.psi_minus);
    auto gc = gauge.g.coeffs_double();
    auto gd = derive_coeffs(gc);
    auto gval = [gc](double x) { return eval_coeffs(gc, x); };
    auto gder = [gd](double x) { return eval_coeffs(gd, x); };

    auto compat_expr = [&](double x, double shift, double shift_d) {
        double up = wp.value(x) + shift, um = wm.value(x) + shift;
        double dup = wp.deriv(x) + shift_d, dum = wm.deriv(x) + shift_d;
        double w = sp.w0.value(x);
        return up * up + dup + um * um + dum - 2 * w * um + 2 * w * up - 2 * um * up;
    };
    auto v_full = [&](double x, double shift, double shift_d, bool tilde) {
        double w = sp.w0.value(x);
        double dup = wp.deriv(x) + shift_d, dum = wm.deriv(x) + shift_d;
        double base = tilde ? w * w + sp.w0.deriv(x) : w * w - sp.w0.deriv(x);
        return base + compat_expr(x, shift, shift_d) - 2 * (tilde ? dum : dup);
    };

    GaugeReport rep;
    std::vector<double> values;
    values.reserve(xs.size());
    for (double x : xs) {
        double gv = gval(x), gp = gder(x);
        values.push_back(compat_expr(x, gv, gp) - 2 * gp);
        rep.max_v_shift = std::max(
            rep.max_v_shift, std::abs(v_full(x, gv, gp, false) - v_full(x, 0, 0, false)));
        rep.max_vt_shift = std::max(
            rep.max_vt_shift, std::abs(v_full(x, gv, gp, true) - v_full(x, 0, 0, true)));
    }
    rep.residual = make_report({xs.begin(), xs.end()}, std::move(values));
    return rep;
}

EquivalenceProbeReport equivalence_probe(Family fam, const Params& p, double delta) {
    validate_params(fam, p);
    EquivalenceProbeReport rep;
    auto xs = standard_grid(fam);
    if (family_is_polynomial(fam) && p.l_int() == 0) {
        // Constant deformations shift by a constant: the probe cannot break
        // the pairing.
        rep.degenerate = true;
        rep.cc = cc_residual(fam, p, xs);
        rep.si = si_residual(fam, p, xs);
        rep.cc_constant_in_x = rep.cc.is_constant;
        rep.si_constant_in_x = rep.si.is_constant;
        return rep;
    }
    auto perturb = [delta](const ScalarFn& psi) {
        ScalarFn q = psi;
        auto base = psi.value;
        q.value = [base, delta](double x) { return base(x) + delta; };
        return q;
    };
    auto nodeless_or_throw = [&](const ScalarFn& psi) {
        auto [lo, hi] = scan_range(fam);
        double first = psi.value(lo);
        for (int i = 0; i < 400; ++i) {
            double x = lo + (hi - lo) * i / 399.0;
            double v = psi.value(x);
            if (v == 0.0 || (v > 0) != (first > 0))
                throw NodefulDeformation("equivalence_probe: perturbation creates a node");
        }
    };

    auto sp = make_superpotential(fam, p);
    ScalarFn pm_pert = perturb(sp.psi_minus);
    if (delta != 0) nodeless_or_throw(pm_pert);

    std::vector<double> cc_vals;
    cc_vals.reserve(xs.size());
    ScalarFn wp = log_derivative(sp.psi_plus);
    ScalarFn wm = log_derivative(pm_pert);
    for (double x : xs) {
        double up = wp.value(x), um = wm.value(x);
        double w = sp.w0.value(x);
        cc_vals.push_back(up * up + wp.deriv(x) + um * um + wm.deriv(x) - 2 * w * um +
                          2 * w * up - 2 * um * up);
    }
    rep.cc = make_report(xs, std::move(cc_vals));
    rep.cc_constant_in_x = rep.cc.is_constant;

    Params shifted = parameter_shift(fam, p);
    auto spf = make_superpotential(fam, shifted);
    ScalarFn w_pert = full_superpotential(sp.w0, sp.psi_plus, pm_pert);
    ScalarFn wf_pert = full_superpotential(spf.w0, spf.psi_plus, perturb(spf.psi_minus));
    std::vector<double> si_vals;
    si_vals.reserve(xs.size());
    for (double x : xs) {
        double a = w_pert.value(x), b = wf_pert.value(x);
        si_vals.push_back(a * a - b * b + wf_pert.deriv(x) + w_pert.deriv(x));
    }
    rep.si = make_report(xs, std::move(si_vals));
    rep.si_constant_in_x = rep.si.is_constant;
    return rep;
}

GaugeSpec parse_gauge(std::string_view text) {
    // Sums of terms: "c", "x", "c*x^k", "x^k", with rational or decimal c.
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw InvalidParams("empty gauge expression");
    std::vector<Rational> coeffs;
    auto add_term = [&](const Rational& c, int power) {
        if (power >= static_cast<int>(coeffs.size())) coeffs.resize(power + 1);
        coeffs[power] += c;
    };
    std::size_t i = 0;
    while (i < s.size()) {
        Rational sign(1);
        if (s[i] == '+') ++i;
        else if (s[i] == '-') { sign = -1; ++i; }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw InvalidParams("malformed gauge expression '" + std::string(text) + "'");
        Rational coeff(1);
        int power = 0;
        auto xpos = term.find('x');
        if (xpos == std::string::npos) {
            coeff = parse_rational(term);
        } else {
            std::string head = term.substr(0, xpos);
            if (!head.empty() && head.back() == '*') head.pop_back();
            if (!head.empty()) coeff = parse_rational(head);
            power = 1;
            std::string tail = term.substr(xpos + 1);
            if (!tail.empty()) {
                std::string exp = tail.substr(1);
                if (tail[0] != '^' || exp.empty() ||
                    exp.find_first_not_of("0123456789") != std::string::npos)
                    throw InvalidParams("malformed gauge term '" + term + "'");
                power = std::stoi(exp);
            }
        }
        add_term(sign * coeff, power);
        i = j;
    }
    GaugeSpec spec;
    spec.g = Poly(std::move(coeffs));
    spec.description = std::string(text);
    return spec;
}

}  // namespace shapeinv
