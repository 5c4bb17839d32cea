// shapeinv: command-line driver for the verification engine and the
// desk-scale spectral oracle.
//
// Exit codes: 0 success, 1 usage/domain error, 2 check failure,
// 3 series non-convergence.

#include "shapeinv/errors.hpp"
#include "shapeinv/report_json.hpp"
#include "shapeinv/spectral.hpp"
#include "shapeinv/superpotential.hpp"
#include "shapeinv/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

namespace {

using namespace shapeinv;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitNonConvergence = 3;

struct ValueArg {
    double value = 0;
    std::optional<Rational> exact;
};

ValueArg parse_value(const std::string& text) {
    ValueArg v;
    try {
        Rational r = parse_rational(text);
        v.exact = r;
        v.value = to_double(r);
        return v;
    } catch (const InvalidParams&) {
        v.value = std::stod(text);
        return v;
    }
}

Family parse_family(const std::string& name) {
    auto fam = family_from_name(name);
    if (!fam) throw InvalidParams("unknown family '" + name + "'");
    return *fam;
}

Params build_params(Family fam, const std::string& g, const std::string& h,
                    const std::string& l) {
    Params p;
    ValueArg gv = parse_value(g);
    p.g = gv.value;
    p.g_exact = gv.exact;
    if (family_has_h(fam)) {
        if (h.empty()) throw InvalidParams("family requires --h");
        ValueArg hv = parse_value(h);
        p.h = hv.value;
        p.h_exact = hv.exact;
    }
    p.l = std::stod(l);
    validate_params(fam, p);
    return p;
}

std::vector<double> resolve_grid(Family fam, const std::string& spec) {
    if (spec.empty()) return standard_grid(fam);
    double lo, hi;
    int n;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 2)
        throw InvalidParams("bad --grid, expected min:max:n");
    check_domain(fam, lo);
    check_domain(fam, hi);
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
    return xs;
}

void write_output(const Json& j, const std::string& out_path) {
    if (out_path.empty()) return;
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open output file " + out_path);
    out << j.dump(2) << "\n";
}

int run_identity(const std::string& family, const std::vector<std::string>& gs,
                 const std::vector<std::string>& hs, const std::string& l_range,
                 bool perturb, const std::string& out_path, const std::string& format) {
    Family fam = parse_family(family);
    if (!family_is_polynomial(fam))
        throw InvalidParams("identity: polynomial families only");
    int l_lo = 0, l_hi = 0;
    if (std::sscanf(l_range.c_str(), "%d:%d", &l_lo, &l_hi) != 2) {
        if (std::sscanf(l_range.c_str(), "%d", &l_lo) != 1)
            throw InvalidParams("bad --l-range, expected lo:hi");
        l_hi = l_lo;
    }
    if (l_lo < 0 || l_hi < l_lo) throw InvalidParams("bad --l-range");

    Json report = report_envelope("identity");
    Json results = Json::array();
    bool all_proven = true;
    for (int l = l_lo; l <= l_hi; ++l) {
        for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            std::vector<std::string> h_list = family_has_h(fam) ? hs : std::vector<std::string>{""};
            if (family_has_h(fam) && h_list.empty())
                throw InvalidParams("family requires --h values");
            for (const auto& h : h_list) {
                Params p = build_params(fam, gs[gi], h, std::to_string(l));
                IdentityCertificate cert;
                if (perturb) {
                    // Negative control: shift psi_1- by 1 before forming the
                    // identity.
                    Poly pp = l == 0 ? Poly::constant(Rational(1))
                                     : deformation_poly(fam, p, Branch::Plus);
                    Poly pm = l == 0 ? Poly::constant(Rational(1))
                                     : deformation_poly(fam, p, Branch::Minus);
                    pm = pm + Poly::constant(Rational(1));
                    cert.family = fam;
                    cert.params = p;
                    cert.l = l;
                    cert.param_degree_bound = 2 * l + 2;
                    cert.residual_poly = family_identity_poly(fam, p, pp, pm);
                    cert.proven = cert.residual_poly.is_zero();
                } else {
                    cert = cc_residual_exact(fam, p);
                }
                all_proven = all_proven && cert.proven;
                results.push_back(certificate_json(cert));
                if (format == "text")
                    std::cout << params_text(fam, p) << "  "
                              << (cert.proven ? "proven" : "REFUTED") << "\n";
            }
        }
    }
    report["results"] = results;
    write_output(report, out_path);
    if (format == "json") std::cout << report.dump(2) << "\n";
    std::cout << (all_proven ? "identity: all certificates proven"
                             : "identity: certificate(s) REFUTED")
              << "\n";
    return all_proven ? kExitOk : kExitCheckFailed;
}

int run_check(const std::string& family, const std::string& g, const std::string& h,
              const std::string& l, const std::string& grid_spec, double tol,
              const std::string& out_path, const std::string& format) {
    Family fam = parse_family(family);
    Params p = build_params(fam, g, h, l);
    auto xs = resolve_grid(fam, grid_spec);
    if (tol <= 0) tol = family_is_polynomial(fam) ? 1e-10 : 1e-8;

    ResidualReport cc = cc_residual(fam, p, xs);
    ResidualReport si = si_residual(fam, p, xs);
    ResidualReport odep = ode_residual(fam, p, Branch::Plus, xs);
    ResidualReport odem = ode_residual(fam, p, Branch::Minus, xs);

    Json report = report_envelope("check");
    report["params"] = params_json(fam, p);
    report["cc_residual"] = residual_report_json(cc);
    report["si_residual"] = residual_report_json(si);
    report["ode_residual_plus"] = residual_report_json(odep);
    report["ode_residual_minus"] = residual_report_json(odem);
    write_output(report, out_path);

    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "x,cc_residual,si_residual\n";
        for (std::size_t i = 0; i < cc.xs.size(); ++i)
            std::cout << cc.xs[i] << "," << cc.values[i] << "," << si.values[i] << "\n";
    } else {
        std::cout << params_text(fam, p) << "\n";
        std::cout << "  max|eps(x)|        = " << cc.max_abs << "\n";
        std::cout << "  SI residual const  = " << (si.is_constant ? "yes" : "NO") << "\n";
        if (si.constant_value) std::cout << "  R(f(a))            = " << *si.constant_value << "\n";
        std::cout << "  expected R(f(a))   = " << expected_R(fam, p) << "\n";
        std::cout << "  max ODE residual   = " << std::max(odep.max_abs, odem.max_abs) << "\n";
    }
    bool ok = cc.max_abs <= tol && si.is_constant;
    return ok ? kExitOk : kExitCheckFailed;
}

int run_spectrum(const std::string& family, const std::string& g, const std::string& h,
                 const std::string& l, int k, const std::string& grid_spec, double tol,
                 const std::string& out_path, const std::string& format) {
    Family fam = parse_family(family);
    Params p = build_params(fam, g, h, l);
    Grid grid;
    if (fam == Family::TrigDPT || fam == Family::TrigDPTContL)
        grid = {1e-3, std::numbers::pi / 2 - 1e-3, 4000};
    if (!grid_spec.empty()) {
        if (std::sscanf(grid_spec.c_str(), "%lf:%lf:%d", &grid.x_min, &grid.x_max, &grid.n) != 3)
            throw InvalidParams("bad --grid, expected min:max:n");
    }
    if (tol <= 0) tol = 1e-4;

    IsospectralityReport rep = isospectrality_report(fam, p, k, grid);
    Json report = report_envelope("spectrum");
    report["params"] = params_json(fam, p);
    report["report"] = isospectrality_json(rep);
    write_output(report, out_path);

    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else if (format == "csv") {
        PartnerPair ext = partner_pair_reduced(fam, p);
        PartnerPair cls = classical_partners(fam, p);
        std::cout << "x,ext_v,ext_v_tilde,cls_v,cls_v_tilde\n";
        for (int i = 0; i < 400; ++i) {
            double x = grid.x_min + (grid.x_max - grid.x_min) * (i + 1) / 401.0;
            std::cout << x << "," << ext.v.value(x) << "," << ext.v_tilde.value(x) << ","
                      << cls.v.value(x) << "," << cls.v_tilde.value(x) << "\n";
        }
    } else {
        std::cout << params_text(fam, p) << "\n";
        std::cout << "  extended V~ vs classical V~0: offset " << rep.vt_offset
                  << ", max rel " << rep.vt_max_rel << "\n";
        std::cout << "  extended V  vs classical V0 : offset " << rep.v_offset
                  << ", max rel " << rep.v_max_rel << "\n";
        std::cout << "  extended V  vs extended V~  : offset " << rep.partner_offset
                  << ", max rel " << rep.partner_max_rel << "\n";
        std::cout << "  mean gap " << rep.mean_gap << " vs |R| " << rep.expected_gap << "\n";
    }
    bool ok = rep.vt_max_rel <= tol && rep.partner_max_rel <= tol;
    return ok ? kExitOk : kExitCheckFailed;
}

int run_gauge(const std::string& family, const std::string& g, const std::string& h,
              const std::string& l, const std::string& gauge_text,
              const std::string& grid_spec, double tol, const std::string& out_path,
              const std::string& format) {
    Family fam = parse_family(family);
    Params p = build_params(fam, g, h, l);
    auto xs = resolve_grid(fam, grid_spec);
    if (tol <= 0) tol = 1e-9;
    GaugeSpec gauge = parse_gauge(gauge_text);

    GaugeReport rep = gauge_transform(fam, p, gauge, xs);
    Json report = report_envelope("gauge");
    report["params"] = params_json(fam, p);
    report["gauge"] = gauge.description;
    report["report"] = gauge_report_json(rep);
    write_output(report, out_path);

    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << params_text(fam, p) << "  gauge g(x) = " << poly_to_string(gauge.g, "x")
                  << "\n";
        std::cout << "  max|residual - 2g'(x)| = " << rep.residual.max_abs << "\n";
        std::cout << "  max potential shift    = "
                  << std::max(rep.max_v_shift, rep.max_vt_shift) << "\n";
    }
    bool ok = rep.residual.max_abs <= tol &&
              std::max(rep.max_v_shift, rep.max_vt_shift) <= tol;
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shapeinv: verification lab for extended shape invariant superpotentials"};
    // --h is a parameter name, so keep only the long help flag.
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    std::string family, g, h, l = "0", l_range, grid_spec, gauge_text, out_path;
    std::string format = "text";
    std::vector<std::string> g_list, h_list;
    double tol = 0;
    int k = 5;
    bool perturb = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text|json|csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--out", out_path, "write JSON report to this path");
        cmd->add_option("--tol", tol, "tolerance override");
    };

    auto* identity = app.add_subcommand("identity", "exact polynomial identity certificates");
    identity->set_help_flag("--help", "print help");
    identity->add_option("--family", family)->required();
    identity->add_option("--g", g_list, "rational g values (repeatable)")->required();
    identity->add_option("--h", h_list, "rational h values (repeatable)");
    identity->add_option("--l-range", l_range, "l range lo:hi")->required();
    identity->add_flag("--perturb", perturb, "negative control: perturb psi_1- by +1");
    add_format(identity);

    auto* check = app.add_subcommand("check", "numeric compatibility / SI / ODE residuals");
    check->set_help_flag("--help", "print help");
    check->add_option("--family", family)->required();
    check->add_option("--g", g)->required();
    check->add_option("--h", h);
    check->add_option("--l", l)->required();
    check->add_option("--grid", grid_spec, "grid min:max:n");
    add_format(check);

    auto* spectrum = app.add_subcommand("spectrum", "isospectrality report");
    spectrum->set_help_flag("--help", "print help");
    spectrum->add_option("--family", family)->required();
    spectrum->add_option("--g", g)->required();
    spectrum->add_option("--h", h);
    spectrum->add_option("--l", l)->required();
    spectrum->add_option("--k", k, "number of bound states");
    spectrum->add_option("--grid", grid_spec, "grid min:max:n");
    add_format(spectrum);

    auto* gauge = app.add_subcommand("gauge", "gauge-transformed compatibility residual");
    gauge->set_help_flag("--help", "print help");
    gauge->add_option("--family", family)->required();
    gauge->add_option("--g", g)->required();
    gauge->add_option("--h", h);
    gauge->add_option("--l", l)->required();
    gauge->add_option("--gauge", gauge_text, "polynomial gauge function, e.g. 1+x^3")
        ->required();
    gauge->add_option("--grid", grid_spec, "grid min:max:n");
    add_format(gauge);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (identity->parsed())
            return run_identity(family, g_list, h_list, l_range, perturb, out_path, format);
        if (check->parsed())
            return run_check(family, g, h, l, grid_spec, tol, out_path, format);
        if (spectrum->parsed())
            return run_spectrum(family, g, h, l, k, grid_spec, tol, out_path, format);
        if (gauge->parsed())
            return run_gauge(family, g, h, l, gauge_text, grid_spec, tol, out_path, format);
    } catch (const shapeinv::NonConvergence& e) {
        std::cerr << "error: " << e.what() << " (last tail " << e.last_tail << ")\n";
        return kExitNonConvergence;
    } catch (const shapeinv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
