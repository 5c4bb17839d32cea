#include "shapeinv/spectral.hpp"

#include "shapeinv/errors.hpp"
#include "shapeinv/superpotential.hpp"
#include "shapeinv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace shapeinv {

namespace {

// Number of eigenvalues of the tridiagonal matrix (diag d, off e) below lambda.
int sturm_count(const std::vector<double>& d, double e, double lambda) {
    int count = 0;
    double e2 = e * e;
    double q = d[0] - lambda;
    if (q < 0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (q == 0.0) q = 1e-300;
        q = d[i] - lambda - e2 / q;
        if (q < 0) ++count;
    }
    return count;
}

}  // namespace

Spectrum solve_bound_states(const ScalarFn& potential, const Grid& grid, int k) {
    if (grid.n < 200) throw InvalidParams("grid must have n >= 200 interior points");
    if (!(grid.x_min < grid.x_max)) throw InvalidParams("grid: x_min must be < x_max");
    if (k < 1 || k > grid.n / 10) throw InvalidParams("k out of range (1 <= k <= n/10)");
    double h = (grid.x_max - grid.x_min) / (grid.n + 1);
    double e = -1.0 / (h * h);
    std::vector<double> d(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        double x = grid.x_min + h * (i + 1);
        double v = potential.value(x);
        if (!std::isfinite(v)) throw Error("potential evaluation failed at a grid node");
        d[i] = 2.0 / (h * h) + v;
    }
    double dmin = *std::min_element(d.begin(), d.end());
    double dmax = *std::max_element(d.begin(), d.end());
    double lo0 = dmin - 2.0 * std::abs(e) - 1.0;
    double hi0 = dmax + 2.0 * std::abs(e) + 1.0;

    Spectrum spec;
    spec.k = k;
    spec.discretization = grid;
    spec.eigenvalues.reserve(k);
    for (int j = 1; j <= k; ++j) {
        double lo = lo0, hi = hi0;
        // lambda_j = inf { lambda : count(lambda) >= j }
        for (int it = 0; it < 200 && hi - lo > 1e-13 * (1.0 + std::abs(lo)); ++it) {
            double mid = 0.5 * (lo + hi);
            if (sturm_count(d, e, mid) >= j) hi = mid;
            else lo = mid;
        }
        spec.eigenvalues.push_back(0.5 * (lo + hi));
    }
    return spec;
}

std::pair<int, double> match_levels(const std::vector<double>& a, const std::vector<double>& b) {
    int best_offset = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int off : {0, 1, -1}) {
        double worst = 0;
        int count = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            int j = static_cast<int>(i) + off;
            if (j < 0 || j >= static_cast<int>(b.size())) continue;
            double scale = std::max({1.0, std::abs(a[i]), std::abs(b[j])});
            worst = std::max(worst, std::abs(a[i] - b[j]) / scale);
            ++count;
        }
        if (count == 0) continue;
        if (worst < best) {
            best = worst;
            best_offset = off;
        }
    }
    return {best_offset, best};
}

IsospectralityReport isospectrality_report(Family fam, const Params& p, int k,
                                           const Grid& grid) {
    PartnerPair ext = partner_pair_reduced(fam, p);
    PartnerPair cls = classical_partners(fam, p);
    IsospectralityReport rep;
    rep.ext_v = solve_bound_states(ext.v, grid, k);
    rep.ext_vt = solve_bound_states(ext.v_tilde, grid, k);
    rep.cls_v = solve_bound_states(cls.v, grid, k);
    rep.cls_vt = solve_bound_states(cls.v_tilde, grid, k);

    std::tie(rep.vt_offset, rep.vt_max_rel) =
        match_levels(rep.ext_vt.eigenvalues, rep.cls_vt.eigenvalues);
    std::tie(rep.v_offset, rep.v_max_rel) =
        match_levels(rep.ext_v.eigenvalues, rep.cls_v.eigenvalues);
    std::tie(rep.partner_offset, rep.partner_max_rel) =
        match_levels(rep.ext_v.eigenvalues, rep.ext_vt.eigenvalues);

    const auto& ev = rep.ext_vt.eigenvalues;
    if (k > 1) rep.mean_gap = (ev.back() - ev.front()) / (k - 1);
    ResidualReport si = si_residual(fam, p, standard_grid(fam));
    rep.expected_gap = si.constant_value ? std::abs(*si.constant_value) : 0.0;
    return rep;
}

}  // namespace shapeinv
