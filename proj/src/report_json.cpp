#include "shapeinv/report_json.hpp"

namespace shapeinv {

Json params_json(Family fam, const Params& p) {
    Json j;
    j["family"] = family_name(fam);
    if (p.g_exact) j["g"] = rational_to_string(*p.g_exact);
    else j["g"] = p.g;
    if (family_has_h(fam)) {
        if (p.h_exact) j["h"] = rational_to_string(*p.h_exact);
        else j["h"] = p.h;
    }
    if (p.l_is_integer()) j["l"] = p.l_int();
    else j["l"] = p.l;
    return j;
}

Json residual_report_json(const ResidualReport& rep) {
    Json j;
    j["xs"] = rep.xs;
    j["values"] = rep.values;
    j["max_abs"] = rep.max_abs;
    j["spread"] = rep.spread;
    j["is_constant"] = rep.is_constant;
    if (rep.constant_value) j["constant_value"] = *rep.constant_value;
    return j;
}

Json certificate_json(const IdentityCertificate& cert) {
    Json j = params_json(cert.family, cert.params);
    j["residual_poly"] = [&] {
        std::vector<std::string> coeffs;
        for (const auto& c : cert.residual_poly.coeffs()) coeffs.push_back(rational_to_string(c));
        return coeffs;
    }();
    j["verdict"] = cert.proven ? "proven" : "refuted";
    j["param_degree_bound"] = cert.param_degree_bound;
    return j;
}

Json gauge_report_json(const GaugeReport& rep) {
    Json j;
    j["residual"] = residual_report_json(rep.residual);
    j["max_v_shift"] = rep.max_v_shift;
    j["max_vt_shift"] = rep.max_vt_shift;
    return j;
}

Json equivalence_probe_json(const EquivalenceProbeReport& rep) {
    Json j;
    j["cc_constant_in_x"] = rep.cc_constant_in_x;
    j["si_constant_in_x"] = rep.si_constant_in_x;
    j["degenerate"] = rep.degenerate;
    j["cc"] = residual_report_json(rep.cc);
    j["si"] = residual_report_json(rep.si);
    return j;
}

Json spectrum_json(const Spectrum& spec) {
    Json j;
    j["eigenvalues"] = spec.eigenvalues;
    j["k"] = spec.k;
    j["grid"] = {{"x_min", spec.discretization.x_min},
                 {"x_max", spec.discretization.x_max},
                 {"n", spec.discretization.n}};
    return j;
}

Json isospectrality_json(const IsospectralityReport& rep) {
    Json j;
    j["extended_v"] = spectrum_json(rep.ext_v);
    j["extended_v_tilde"] = spectrum_json(rep.ext_vt);
    j["classical_v"] = spectrum_json(rep.cls_v);
    j["classical_v_tilde"] = spectrum_json(rep.cls_vt);
    j["vt_offset"] = rep.vt_offset;
    j["vt_max_rel"] = rep.vt_max_rel;
    j["v_offset"] = rep.v_offset;
    j["v_max_rel"] = rep.v_max_rel;
    j["partner_offset"] = rep.partner_offset;
    j["partner_max_rel"] = rep.partner_max_rel;
    j["mean_gap"] = rep.mean_gap;
    j["expected_gap"] = rep.expected_gap;
    return j;
}

Json report_envelope(const std::string& command) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

}  // namespace shapeinv
