#include "shapeinv/superpotential.hpp"

#include "shapeinv/errors.hpp"

#include <cmath>

namespace shapeinv {

ExtendedSuperpotential make_superpotential(Family fam, const Params& p) {
    return {fam, p, base_superpotential(fam, p), deformation(fam, p, Branch::Plus),
            deformation(fam, p, Branch::Minus)};
}

ScalarFn log_derivative(const ScalarFn& psi) {
    auto guard = [](double v) {
        if (!std::isfinite(v) || std::abs(v) < 1e-300)
            throw Error("log_derivative: evaluation at a psi zero");
        return v;
    };
    ScalarFn fn;
    fn.value = [=](double x) { return psi.deriv(x) / guard(psi.value(x)); };
    fn.deriv = [=](double x) {
        double p = guard(psi.value(x));
        double r = psi.deriv(x) / p;
        return psi.deriv2(x) / p - r * r;
    };
    return fn;
}

ScalarFn full_superpotential(const ScalarFn& w0, const ScalarFn& psi_plus,
                             const ScalarFn& psi_minus) {
    ScalarFn wp = log_derivative(psi_plus);
    ScalarFn wm = log_derivative(psi_minus);
    ScalarFn fn;
    fn.value = [=](double x) { return w0.value(x) + wp.value(x) - wm.value(x); };
    fn.deriv = [=](double x) { return w0.deriv(x) + wp.deriv(x) - wm.deriv(x); };
    return fn;
}

PartnerPair partner_pair_full(const ScalarFn& w0, const ScalarFn& psi_plus,
                              const ScalarFn& psi_minus) {
    ScalarFn wp = log_derivative(psi_plus);
    ScalarFn wm = log_derivative(psi_minus);
    // Common block of both displayed potentials.
    auto common = [=](double x) {
        double a = wp.value(x), b = wm.value(x), w = w0.value(x);
        return a * a + wp.deriv(x) + b * b + wm.deriv(x) - 2 * w * b + 2 * w * a - 2 * b * a;
    };
    PartnerPair pair;
    pair.construction = Construction::Full;
    pair.v.value = [=](double x) {
        double w = w0.value(x);
        return w * w - w0.deriv(x) + common(x) - 2 * wp.deriv(x);
    };
    pair.v_tilde.value = [=](double x) {
        double w = w0.value(x);
        return w * w + w0.deriv(x) + common(x) - 2 * wm.deriv(x);
    };
    return pair;
}

PartnerPair classical_partners(const ScalarFn& w0) {
    PartnerPair pair;
    pair.construction = Construction::Reduced;
    pair.v.value = [=](double x) {
        double w = w0.value(x);
        return w * w - w0.deriv(x);
    };
    pair.v_tilde.value = [=](double x) {
        double w = w0.value(x);
        return w * w + w0.deriv(x);
    };
    return pair;
}

ScalarFn full_superpotential(Family fam, const Params& p) {
    auto sp = make_superpotential(fam, p);
    return full_superpotential(sp.w0, sp.psi_plus, sp.psi_minus);
}

PartnerPair partner_pair_full(Family fam, const Params& p) {
    auto sp = make_superpotential(fam, p);
    return partner_pair_full(sp.w0, sp.psi_plus, sp.psi_minus);
}

PartnerPair partner_pair_reduced(Family fam, const Params& p) {
    auto sp = make_superpotential(fam, p);
    PartnerPair base = classical_partners(sp.w0);
    ScalarFn wp = log_derivative(sp.psi_plus);
    ScalarFn wm = log_derivative(sp.psi_minus);
    PartnerPair pair;
    pair.construction = Construction::Reduced;
    pair.v.value = [=](double x) { return base.v.value(x) - 2 * wp.deriv(x); };
    pair.v_tilde.value = [=](double x) { return base.v_tilde.value(x) - 2 * wm.deriv(x); };
    return pair;
}

PartnerPair classical_partners(Family fam, const Params& p) {
    return classical_partners(base_superpotential(fam, p));
}

}  // namespace shapeinv
