#pragma once

#include "shapeinv/families.hpp"

namespace shapeinv {

struct ExtendedSuperpotential {
    Family family;
    Params params;
    ScalarFn w0;
    ScalarFn psi_plus;
    ScalarFn psi_minus;
};

ExtendedSuperpotential make_superpotential(Family fam, const Params& p);

/// psi'/psi with analytic derivative; guards against evaluation at a psi zero.
ScalarFn log_derivative(const ScalarFn& psi);

enum class Construction { Full, Reduced };

struct PartnerPair {
    ScalarFn v;
    ScalarFn v_tilde;
    Construction construction;
};

// Assembly from explicit components. verify injects gauged or perturbed
// branches through these overloads.
ScalarFn full_superpotential(const ScalarFn& w0, const ScalarFn& psi_plus,
                             const ScalarFn& psi_minus);
PartnerPair partner_pair_full(const ScalarFn& w0, const ScalarFn& psi_plus,
                              const ScalarFn& psi_minus);
PartnerPair classical_partners(const ScalarFn& w0);

ScalarFn full_superpotential(Family fam, const Params& p);
PartnerPair partner_pair_full(Family fam, const Params& p);
PartnerPair partner_pair_reduced(Family fam, const Params& p);
PartnerPair classical_partners(Family fam, const Params& p);

}  // namespace shapeinv
