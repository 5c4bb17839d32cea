#pragma once

#include "shapeinv/families.hpp"
#include "shapeinv/poly.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shapeinv {

/// Spread tolerance for the x-constancy verdict, scaled by (1 + |mean|).
inline constexpr double kConstancyTol = 1e-9;

struct ResidualReport {
    std::vector<double> xs;
    std::vector<double> values;
    double max_abs = 0;
    bool is_constant = false;
    std::optional<double> constant_value;
    double spread = 0;  // max - min over samples
};

struct IdentityCertificate {
    Family family{};
    Params params;
    int l = 0;
    Poly residual_poly;
    bool proven = false;
    /// Degree bound of the identity in g (and h); instantiation at more
    /// rational values than this certifies the symbolic claim.
    int param_degree_bound = 0;
};

struct GaugeSpec {
    Poly g;  // polynomial gauge function of x
    std::string description;
};

struct GaugeReport {
    /// Generalized compatibility expression with U_{1±} = W_{1±} + g(x),
    /// minus the predicted 2g'(x).
    ResidualReport residual;
    double max_v_shift = 0;
    double max_vt_shift = 0;
};

struct EquivalenceProbeReport {
    bool cc_constant_in_x = false;
    bool si_constant_in_x = false;
    /// l = 0: constant deformations absorb a constant shift; reported
    /// separately instead of as an equivalence probe.
    bool degenerate = false;
    ResidualReport cc;
    ResidualReport si;
};

/// 60-point interior grid: log-spaced on [0.05, 4] for the radial and
/// hyperbolic families, linear on [0.05, pi/2 - 0.05] for TrigDPT, and linear
/// on [0.05, 1.1] for TrigDPTContL (2F1 argument kept below the margin).
std::vector<double> standard_grid(Family fam);

/// Compatibility residual eps(x), psi-form.
ResidualReport cc_residual(Family fam, const Params& p, std::span<const double> xs);

/// The family's reduced identity as an exact polynomial in the substitution
/// variable, from explicit branch polynomials. Exposed so negative controls
/// can feed perturbed inputs.
Poly family_identity_poly(Family fam, const Params& p, const Poly& p_plus, const Poly& p_minus);

/// Exact certificate for the family's reduced identity (integer l, rational
/// parameters).
IdentityCertificate cc_residual_exact(Family fam, const Params& p);

/// Samples W^2(x,a) - W^2(x,f(a)) + W'(x,f(a)) + W'(x,a); constant_value is
/// the extracted R(f(a)).
ResidualReport si_residual(Family fam, const Params& p, std::span<const double> xs);

/// R(f(a)) predicted by the closed-form per-family derivation.
double expected_R(Family fam, const Params& p);

/// LHS - RHS of the family's displayed second-order relation for psi_1±.
ResidualReport ode_residual(Family fam, const Params& p, Branch branch,
                            std::span<const double> xs);

GaugeReport gauge_transform(Family fam, const Params& p, const GaugeSpec& gauge,
                            std::span<const double> xs);

EquivalenceProbeReport equivalence_probe(Family fam, const Params& p, double delta = 1e-2);

/// "1+x^3", "x^2", "3/2*x", "0", ...
GaugeSpec parse_gauge(std::string_view text);

}  // namespace shapeinv
