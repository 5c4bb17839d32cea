#pragma once

#include "shapeinv/spectral.hpp"
#include "shapeinv/verify.hpp"

#include <json.hpp>

namespace shapeinv {

// Versioned report schema; rationals serialize as "p/q" strings, field order
// fixed so identical runs produce byte-identical output.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json params_json(Family fam, const Params& p);
Json residual_report_json(const ResidualReport& rep);
Json certificate_json(const IdentityCertificate& cert);
Json gauge_report_json(const GaugeReport& rep);
Json equivalence_probe_json(const EquivalenceProbeReport& rep);
Json spectrum_json(const Spectrum& spec);
Json isospectrality_json(const IsospectralityReport& rep);

Json report_envelope(const std::string& command);

}  // namespace shapeinv
