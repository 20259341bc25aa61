#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zdg/gf2.hpp"
#include "zdg/graph.hpp"
#include "zdg/indices.hpp"
#include "zdg/invariants.hpp"
#include "zdg/spectra.hpp"
#include "zdg/verify.hpp"

// Serialization of every computed artifact. Key order is fixed so identical
// inputs give byte-identical output.
namespace zdg {

using Json = nlohmann::ordered_json;

/// "%.12f"-style decimal used for every approximate value.
std::string decimal(double x);

// Graph exports: labels "b*u+c*u^2", class as a vertex attribute.
std::string graph_to_dot(const ZdGraph& g);
/// Header "index,source,target,block".
std::string graph_to_csv(const ZdGraph& g);
Json graph_to_json(const ZdGraph& g);
std::string graph_to_text(const ZdGraph& g);

Json invariants_to_json(std::uint32_t p, const InvariantReport& r);
Json indices_to_json(std::uint32_t p, const TopologicalIndices& t);

/// [{value, exact: {a, b, c, D}, multiplicity}]
Json spectrum_to_json(const Spectrum& s);
Json spectral_summary_to_json(const SpectralSummary& s);

Json code_to_json(std::uint32_t p, const CodeParams& c);

/// {generated_for, claims: [{id, paper_ref, ..., per_prime: [...], summary}], gates}
Json report_to_json(const VerificationReport& r);
/// Header "id,paper_ref,comparison,p,paper_value,oracle_value,verdict,discrepancy,summary".
std::string report_to_csv(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

/// RFC 4180 quoting when the field needs it.
std::string csv_field(const std::string& s);

}  // namespace zdg
