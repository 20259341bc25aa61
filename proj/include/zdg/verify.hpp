#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "zdg/gf2.hpp"
#include "zdg/graph.hpp"
#include "zdg/indices.hpp"
#include "zdg/invariants.hpp"
#include "zdg/spectra.hpp"
#include "zdg/surd.hpp"

namespace zdg {

enum class Comparison { ExactInteger, ExactRational, ExactSurd, FloatRelative };
enum class Verdict { Match, Mismatch };

const char* to_string(Comparison c) noexcept;
const char* to_string(Verdict v) noexcept;

struct CodeTriple {
  std::size_t n = 0, k = 0, d = 0;
  friend bool operator==(const CodeTriple&, const CodeTriple&) = default;
};

/// Integers and rationals travel as rational QuadSurd values.
using ClaimValue = std::variant<QuadSurd, double, Spectrum, CodeTriple>;

/// Exact rendering: "43", "151/8", "(3+sqrt(329))/2", "{0^5, -3, -1, 4}", "[13, 7, 2]_2", or
/// a 17-significant-digit decimal for floats.
std::string render(const ClaimValue& v);

/// Decimal approximation for scalar values.
std::optional<double> approximate(const ClaimValue& v);

/// Everything the oracles compute for one prime, built once and shared by all claims.
struct OracleBundle {
  explicit OracleBundle(Prime p);

  Prime p;
  ZdGraph graph;
  InvariantReport invariants;
  TopologicalIndices indices;
  Spectrum adjacency_spectrum;
  Spectrum laplacian_spectrum;
  SpectralSummary spectral;
  CodeParams code;
};

/// A formula in p alternative to the claimed one, checked against the oracle each run.
struct Annotation {
  std::string form;
  std::function<ClaimValue(Prime)> evaluate;
};

struct Claim {
  std::string id;
  std::string description;
  std::string paper_ref;
  std::string oracle_source;
  Comparison comparison = Comparison::ExactInteger;
  std::function<ClaimValue(Prime)> closed_form;
  std::function<ClaimValue(const OracleBundle&)> oracle;
  std::optional<Annotation> corrected;
};

inline constexpr double kRandicRelativeTolerance = 1e-9;

/// The fixed ledger of 20 claims, ordered by id.
const std::vector<Claim>& claims_ledger();

struct CorrectedCheck {
  std::string form;
  ClaimValue value;
  bool matches_oracle = false;
};

struct ClaimVerdict {
  std::string claim_id;
  std::uint32_t p = 0;
  ClaimValue paper_value;
  ClaimValue oracle_value;
  Verdict verdict = Verdict::Mismatch;
  /// oracle - claimed for exact scalar claims; nullopt otherwise.
  std::optional<QuadSurd> exact_discrepancy;
  std::string discrepancy;
  std::optional<CorrectedCheck> corrected;
};

/// Compares under the claim's mode and fills in the discrepancy payload.
ClaimVerdict judge(const Claim& claim, Prime p, ClaimValue claimed, ClaimValue oracle);

struct GateResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Raised when an internal consistency gate fails; indicates an implementation
/// bug rather than a discrepancy in the claims.
class ConsistencyGateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimeVerification {
  std::uint32_t p = 0;
  std::vector<GateResult> gates;
  std::vector<ClaimVerdict> verdicts;
};

struct VerifyOptions {
  std::uint32_t max_prime = 13;
};

/// Runs every gate then every claim. Throws std::invalid_argument for p = 2 or
/// p above the configured maximum, ConsistencyGateError when a gate fails.
PrimeVerification verify_prime(Prime p, const VerifyOptions& options = {});

struct ClaimRow {
  const Claim* claim = nullptr;
  std::vector<ClaimVerdict> per_prime;
  std::string summary;
};

struct VerificationReport {
  std::vector<std::uint32_t> primes;
  std::vector<ClaimRow> claims;
  std::vector<PrimeVerification> runs;
};

/// "MATCH for all", "MISMATCH for all" or "MATCH only at {3, 5}".
std::string summarize_verdicts(const std::vector<ClaimVerdict>& per_prime);

/// Primes are verified concurrently; output order follows (claim id, input prime order).
VerificationReport verify_range(const std::vector<Prime>& primes, const VerifyOptions& options = {});

}  // namespace zdg
