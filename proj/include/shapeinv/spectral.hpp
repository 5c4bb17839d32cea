#pragma once

#include "shapeinv/families.hpp"

#include <vector>

namespace shapeinv {

struct Grid {
    double x_min = 1e-3;
    double x_max = 12.0;
    int n = 4000;  // interior points
};

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending, lowest k bound states
    int k = 0;
    Grid discretization;
};

/// Lowest k eigenvalues of -d^2/dx^2 + V on (x_min, x_max) with Dirichlet
/// ends, via second-order central differences and Sturm bisection on the
/// symmetric tridiagonal matrix. Units hbar = 2m = 1.
Spectrum solve_bound_states(const ScalarFn& potential, const Grid& grid, int k);

struct IsospectralityReport {
    Spectrum ext_v, ext_vt, cls_v, cls_vt;
    /// Extended V-tilde vs classical V0-tilde, level by level after the
    /// detected ground-state offset; scale = max(1, |level|).
    int vt_offset = 0;
    double vt_max_rel = 0;
    /// Extended V vs classical V0.
    int v_offset = 0;
    double v_max_rel = 0;
    /// Extended V vs extended V-tilde (first-order intertwining pattern).
    int partner_offset = 0;
    double partner_max_rel = 0;
    double mean_gap = 0;
    double expected_gap = 0;  // |R(f(a))|
};

IsospectralityReport isospectrality_report(Family fam, const Params& p, int k,
                                           const Grid& grid);

/// Best ground-state offset in {-1, 0, 1} and the max relative level mismatch
/// it leaves: b[i + offset] vs a[i].
std::pair<int, double> match_levels(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace shapeinv
