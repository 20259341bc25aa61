#include "zdg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <map>

namespace zdg {

const char* to_string(Comparison c) noexcept {
  switch (c) {
    case Comparison::ExactInteger: return "exact-integer";
    case Comparison::ExactRational: return "exact-rational";
    case Comparison::ExactSurd: return "exact-surd";
    case Comparison::FloatRelative: return "float(1e-9 relative)";
  }
  return "?";
}

const char* to_string(Verdict v) noexcept { return v == Verdict::Match ? "MATCH" : "MISMATCH"; }

namespace {

std::string render_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string render_spectrum(const Spectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i].value.to_string();
    if (s[i].multiplicity != 1) out += "^" + std::to_string(s[i].multiplicity);
  }
  return out + "}";
}

// Multiset difference a \ b.
Spectrum spectrum_minus(const Spectrum& a, const Spectrum& b) {
  Spectrum out;
  for (const auto& e : a) {
    std::size_t other = 0;
    for (const auto& f : b) {
      if (f.value == e.value) other = f.multiplicity;
    }
    if (e.multiplicity > other) out.push_back({e.value, e.multiplicity - other});
  }
  return out;
}

QuadSurd integer(std::int64_t n) { return QuadSurd(n); }

QuadSurd ratio(std::int64_t num, std::int64_t den) { return QuadSurd(Rational(num, den)); }

std::int64_t P(Prime p) { return p.value(); }

std::vector<Claim> build_ledger() {
  std::vector<Claim> ledger;
  auto add = [&](Claim c) { ledger.push_back(std::move(c)); };
  using C = Comparison;

  add({"C01_vertex_count", "number of vertices |Z*(R)|", "|Z*(R)| = p^2-1",
       "graph-build.build_bruteforce:vertex_count", C::ExactInteger,
       [](Prime p) -> ClaimValue { return integer(P(p) * P(p) - 1); },
       [](const OracleBundle& o) -> ClaimValue { return integer(static_cast<std::int64_t>(o.graph.order())); },
       std::nullopt});
  add({"C02_edge_count", "number of edges |E|", "|E| = (2p^3-3p^2-p+2)/2",
       "graph-build.build_bruteforce:edge_count", C::ExactInteger,
       [](Prime p) -> ClaimValue {
         const auto q = P(p);
         return ratio(2 * q * q * q - 3 * q * q - q + 2, 2);
       },
       [](const OracleBundle& o) -> ClaimValue { return integer(static_cast<std::int64_t>(o.graph.size())); },
       std::nullopt});
  add({"C03_diameter", "diameter", "diam(Γ(R)) = 2", "graph-invariants.diameter", C::ExactInteger,
       [](Prime) -> ClaimValue { return integer(2); },
       [](const OracleBundle& o) -> ClaimValue {
         if (!o.invariants.diameter) throw ConsistencyGateError("graph unexpectedly disconnected");
         return integer(static_cast<std::int64_t>(*o.invariants.diameter));
       },
       std::nullopt});
  add({"C04_girth", "girth", "girth(Γ(R)) = 3", "graph-invariants.girth", C::ExactInteger,
       [](Prime) -> ClaimValue { return integer(3); },
       [](const OracleBundle& o) -> ClaimValue {
         if (!o.invariants.girth) throw ConsistencyGateError("graph unexpectedly acyclic");
         return integer(static_cast<std::int64_t>(*o.invariants.girth));
       },
       std::nullopt});
  add({"C05_clique", "clique number", "ω(Γ(R)) = p", "graph-invariants.clique_number",
       C::ExactInteger, [](Prime p) -> ClaimValue { return integer(P(p)); },
       [](const OracleBundle& o) -> ClaimValue {
         return integer(static_cast<std::int64_t>(o.invariants.clique_number));
       },
       std::nullopt});
  add({"C06_chromatic", "chromatic number", "χ(Γ(R)) = p", "graph-invariants.chromatic_number",
       C::ExactInteger, [](Prime p) -> ClaimValue { return integer(P(p)); },
       [](const OracleBundle& o) -> ClaimValue {
         return integer(static_cast<std::int64_t>(o.invariants.chromatic_number));
       },
       std::nullopt});
  add({"C07_vertex_connectivity", "vertex connectivity", "κ(Γ(R)) = p-1",
       "graph-invariants.vertex_connectivity", C::ExactInteger,
       [](Prime p) -> ClaimValue { return integer(P(p) - 1); },
       [](const OracleBundle& o) -> ClaimValue {
         return integer(static_cast<std::int64_t>(o.invariants.vertex_connectivity));
       },
       std::nullopt});
  add({"C08_edge_connectivity", "edge connectivity", "λ(Γ(R)) = p-1",
       "graph-invariants.edge_connectivity", C::ExactInteger,
       [](Prime p) -> ClaimValue { return integer(P(p) - 1); },
       [](const OracleBundle& o) -> ClaimValue {
         return integer(static_cast<std::int64_t>(o.invariants.edge_connectivity));
       },
       std::nullopt});
  add({"C09_wiener", "Wiener index", "W(Γ(R)) = p(2p^3-2p^2-7p+5)/2", "topo-indices.wiener",
       C::ExactInteger,
       [](Prime p) -> ClaimValue {
         const auto q = P(p);
         return ratio(q * (2 * q * q * q - 2 * q * q - 7 * q + 5), 2);
       },
       [](const OracleBundle& o) -> ClaimValue { return integer(static_cast<std::int64_t>(o.indices.wiener)); },
       Annotation{"(2p^4-2p^3-3p^2+p+2)/2", [](Prime p) -> ClaimValue {
                    const auto q = P(p);
                    return ratio(2 * q * q * q * q - 2 * q * q * q - 3 * q * q + q + 2, 2);
                  }}});
  add({"C10_randic", "Randić index", "R(Γ(R)) = (p-1)/(2(p^2-2)) [2p sqrt((p-1)(p^2-2)) + (p-2)]",
       "topo-indices.randic", C::FloatRelative,
       [](Prime p) -> ClaimValue {
         const double q = static_cast<double>(p.value());
         const double d2 = q * q - 2.0;
         return (q - 1.0) / (2.0 * d2) * (2.0 * q * std::sqrt((q - 1.0) * d2) + (q - 2.0));
       },
       [](const OracleBundle& o) -> ClaimValue { return o.indices.randic; }, std::nullopt});
  add({"C11_zagreb1", "first Zagreb index", "M1(Γ(R)) = (p-1)(p^4+p^3-4p^2+p+4)",
       "topo-indices.zagreb_first", C::ExactInteger,
       [](Prime p) -> ClaimValue {
         const auto q = P(p);
         return integer((q - 1) * (q * q * q * q + q * q * q - 4 * q * q + q + 4));
       },
       [](const OracleBundle& o) -> ClaimValue {
         return integer(static_cast<std::int64_t>(o.indices.zagreb_first));
       },
       Annotation{"(p-1)(p^4+p^3-6p^2+p+4)", [](Prime p) -> ClaimValue {
                    const auto q = P(p);
                    return integer((q - 1) * (q * q * q * q + q * q * q - 6 * q * q + q + 4));
                  }}});
  add({"C12_zagreb2", "second Zagreb index", "M2(Γ(R)) = (3p^6-9p^5+22p^3-16p^2-8p+8)/2",
       "topo-indices.zagreb_second", C::ExactInteger,
       [](Prime p) -> ClaimValue {
         const auto q = P(p);
         const auto q2 = q * q, q3 = q2 * q;
         return ratio(3 * q3 * q3 - 9 * q3 * q2 + 22 * q3 - 16 * q2 - 8 * q + 8, 2);
       },
       [](const OracleBundle& o) -> ClaimValue {
         return integer(static_cast<std::int64_t>(o.indices.zagreb_second));
       },
       std::nullopt});
  add({"C13_adj_spectrum", "adjacency spectrum",
       "spec A(Γ(R)) = {0^(p^2-p-1), (3p-5)^1, (-1)^(p-2), (3-2p)^1}",
       "spectra.exact_adjacency_spectrum+numeric_spectrum", C::ExactSurd,
       [](Prime p) -> ClaimValue {
         const auto q = P(p);
         return normalize_spectrum({{integer(0), static_cast<std::size_t>(q * q - q - 1)},
                                    {integer(3 * q - 5), 1},
                                    {integer(-1), static_cast<std::size_t>(q - 2)},
                                    {integer(3 - 2 * q), 1}});
       },
       [](const OracleBundle& o) -> ClaimValue { return o.adjacency_spectrum; },
       Annotation{"{0^(p^2-p-1), (-1)^(p-2), roots of x^2-(p-2)x-p(p-1)^2}",
                  [](Prime p) -> ClaimValue {
                    const auto q = P(p);
                    const BigInt disc = BigInt(q - 2) * (q - 2) + BigInt(4) * q * (q - 1) * (q - 1);
                    const QuadSurd half_root(Rational(0), Rational(1, 2), disc);
                    const QuadSurd centre(Rational(q - 2, 2));
                    return normalize_spectrum({{integer(0), static_cast<std::size_t>(q * q - q - 1)},
                                               {integer(-1), static_cast<std::size_t>(q - 2)},
                                               {centre - half_root, 1},
                                               {centre + half_root, 1}});
                  }}});
  add({"C14_adj_energy", "adjacency energy", "ε(Γ(R)) = 6p-10", "spectra.spectral_summary:energy",
       C::ExactSurd, [](Prime p) -> ClaimValue { return integer(6 * P(p) - 10); },
       [](const OracleBundle& o) -> ClaimValue { return o.spectral.energy; }, std::nullopt});
  add({"C15_adj_rank", "adjacency rank", "rank A(Γ(R)) = p",
       "spectra.spectral_summary:adjacency_rank", C::ExactInteger,
       [](Prime p) -> ClaimValue { return integer(P(p)); },
       [](const OracleBundle& o) -> ClaimValue {
         return integer(static_cast<std::int64_t>(o.spectral.adjacency_rank));
       },
       std::nullopt});
  add({"C16_adj_radius", "adjacency spectral radius", "ρ(Γ(R)) = 3p-5",
       "spectra.spectral_summary:spectral_radius", C::ExactSurd,
       [](Prime p) -> ClaimValue { return integer(3 * P(p) - 5); },
       [](const OracleBundle& o) -> ClaimValue { return o.spectral.spectral_radius; }, std::nullopt});
  add({"C17_lap_spectrum", "Laplacian spectrum",
       "spec L(Γ(R)) = {0^1, (p^2-1)^(p-1), (p-1)^(p^2-p-1)}",
       "spectra.exact_laplacian_spectrum+numeric_spectrum", C::ExactRational,
       [](Prime p) -> ClaimValue {
         const auto q = P(p);
         return normalize_spectrum({{integer(0), 1},
                                    {integer(q * q - 1), static_cast<std::size_t>(q - 1)},
                                    {integer(q - 1), static_cast<std::size_t>(q * q - q - 1)}});
       },
       [](const OracleBundle& o) -> ClaimValue { return o.laplacian_spectrum; }, std::nullopt});
  add({"C18_lap_energy", "Laplacian energy", "LE(Γ(R)) = (2p^5-6p^4+6p^3-4p+1)/(p^2-1)",
       "spectra.spectral_summary:laplacian_energy", C::ExactRational,
       [](Prime p) -> ClaimValue {
         const auto q = P(p);
         const auto q2 = q * q;
         return ratio(2 * q2 * q2 * q - 6 * q2 * q2 + 6 * q2 * q - 4 * q + 1, q2 - 1);
       },
       [](const OracleBundle& o) -> ClaimValue { return o.spectral.laplacian_energy; },
       Annotation{"(2p^5-6p^4+6p^3-4p+2)/(p^2-1)", [](Prime p) -> ClaimValue {
                    const auto q = P(p);
                    const auto q2 = q * q;
                    return ratio(2 * q2 * q2 * q - 6 * q2 * q2 + 6 * q2 * q - 4 * q + 2, q2 - 1);
                  }}});
  add({"C19_lap_radius", "Laplacian spectral radius", "μ(Γ(R)) = p^2-1",
       "spectra.spectral_summary:laplacian_spectral_radius", C::ExactInteger,
       [](Prime p) -> ClaimValue { return integer(P(p) * P(p) - 1); },
       [](const OracleBundle& o) -> ClaimValue { return o.spectral.laplacian_spectral_radius; },
       std::nullopt});
  add({"C20_code_params", "binary incidence code parameters",
       "C_2(Γ(R)) = [(2p^3-3p^2-p+2)/2, p^2-2, p-1]_2", "gf2-codes.code_parameters",
       C::ExactInteger,
       [](Prime p) -> ClaimValue {
         const auto q = static_cast<std::size_t>(p.value());
         return CodeTriple{(2 * q * q * q - 3 * q * q - q + 2) / 2, q * q - 2, q - 1};
       },
       [](const OracleBundle& o) -> ClaimValue { return CodeTriple{o.code.n, o.code.k, o.code.d}; },
       std::nullopt});
  return ledger;
}

bool values_equal(const Claim& claim, const ClaimValue& claimed, const ClaimValue& oracle) {
  if (claim.comparison == Comparison::FloatRelative) {
    const double a = std::get<double>(claimed);
    const double b = std::get<double>(oracle);
    return std::abs(a - b) <= kRandicRelativeTolerance * std::max(std::abs(a), std::abs(b));
  }
  return claimed == oracle;
}

void gate(std::vector<GateResult>& gates, std::string name, bool passed, std::string detail) {
  gates.push_back({std::move(name), passed, std::move(detail)});
}

QuadSurd sum_of_squares(const Spectrum& s) {
  QuadSurd total(0);
  for (const auto& e : s) total += QuadSurd(static_cast<std::int64_t>(e.multiplicity)) * e.value * e.value;
  return total;
}

QuadSurd sum_of_values(const Spectrum& s) {
  QuadSurd total(0);
  for (const auto& e : s) total += QuadSurd(static_cast<std::int64_t>(e.multiplicity)) * e.value;
  return total;
}

}  // namespace

std::string render(const ClaimValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, QuadSurd>) {
          return x.to_string();
        } else if constexpr (std::is_same_v<T, double>) {
          return render_double(x);
        } else if constexpr (std::is_same_v<T, Spectrum>) {
          return render_spectrum(x);
        } else {
          return "[" + std::to_string(x.n) + ", " + std::to_string(x.k) + ", " +
                 std::to_string(x.d) + "]_2";
        }
      },
      v);
}

std::optional<double> approximate(const ClaimValue& v) {
  if (const auto* s = std::get_if<QuadSurd>(&v)) return s->to_double();
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return std::nullopt;
}

OracleBundle::OracleBundle(Prime prime)
    : p(prime),
      graph(build_bruteforce(prime)),
      invariants(compute_invariants(graph.graph())),
      indices(compute_indices(graph.graph())),
      adjacency_spectrum(exact_adjacency_spectrum(prime)),
      laplacian_spectrum(exact_laplacian_spectrum(prime)),
      spectral(spectral_summary(prime)),
      code(code_parameters(prime)) {}

const std::vector<Claim>& claims_ledger() {
  static const std::vector<Claim> ledger = build_ledger();
  return ledger;
}

ClaimVerdict judge(const Claim& claim, Prime p, ClaimValue claimed, ClaimValue oracle) {
  ClaimVerdict v;
  v.claim_id = claim.id;
  v.p = p.value();
  v.verdict = values_equal(claim, claimed, oracle) ? Verdict::Match : Verdict::Mismatch;

  if (const auto* a = std::get_if<QuadSurd>(&claimed)) {
    const auto diff = std::get<QuadSurd>(oracle) - *a;
    v.exact_discrepancy = diff;
    v.discrepancy = diff.to_string();
  } else if (const auto* a = std::get_if<double>(&claimed)) {
    v.discrepancy = render_double(std::get<double>(oracle) - *a);
  } else if (const auto* a = std::get_if<Spectrum>(&claimed)) {
    const auto& b = std::get<Spectrum>(oracle);
    if (v.verdict == Verdict::Match) {
      v.discrepancy = "0";
    } else {
      v.discrepancy = "claimed only " + render_spectrum(spectrum_minus(*a, b)) + "; oracle only " +
                      render_spectrum(spectrum_minus(b, *a));
    }
  } else {
    const auto& a3 = std::get<CodeTriple>(claimed);
    const auto& b3 = std::get<CodeTriple>(oracle);
    auto delta = [](std::size_t x, std::size_t y) {
      return std::to_string(static_cast<long long>(x) - static_cast<long long>(y));
    };
    v.discrepancy = "(" + delta(b3.n, a3.n) + ", " + delta(b3.k, a3.k) + ", " + delta(b3.d, a3.d) + ")";
  }
  v.paper_value = std::move(claimed);
  v.oracle_value = std::move(oracle);
  if (claim.corrected) {
    auto value = claim.corrected->evaluate(p);
    const bool ok = values_equal(claim, value, v.oracle_value);
    v.corrected = CorrectedCheck{claim.corrected->form, std::move(value), ok};
  }
  return v;
}

PrimeVerification verify_prime(Prime p, const VerifyOptions& options) {
  if (!p.is_odd()) throw std::invalid_argument("closed forms assume an odd prime; p = 2 rejected");
  if (p.value() > options.max_prime) {
    throw std::invalid_argument("p = " + std::to_string(p.value()) + " exceeds the configured maximum " +
                                std::to_string(options.max_prime));
  }

  const OracleBundle oracle(p);
  const auto& g = oracle.graph.graph();
  const auto two_m = static_cast<std::int64_t>(2 * g.size());
  PrimeVerification out;
  out.p = p.value();

  gate(out.gates, "bruteforce_equals_structured", oracle.graph == build_structured(p),
       "ring-multiplication graph equals block-structure graph");
  std::size_t degree_sum = 0;
  for (auto d : g.degrees()) degree_sum += d;
  gate(out.gates, "handshake", static_cast<std::int64_t>(degree_sum) == two_m,
       "sum of degrees " + std::to_string(degree_sum) + ", 2|E| " + std::to_string(two_m));
  gate(out.gates, "connected", g.is_connected(), "single component");

  const auto a = adjacency_matrix(g);
  double trace_a2 = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) trace_a2 += a(i, j) * a(j, i);
  }
  const auto exact_a2 = sum_of_squares(oracle.adjacency_spectrum);
  gate(out.gates, "trace_A2_equals_2E",
       trace_a2 == static_cast<double>(two_m) && exact_a2 == QuadSurd(two_m),
       "trace(A^2) " + render_double(trace_a2) + ", sum lambda^2 " + exact_a2.to_string() + ", 2|E| " +
           std::to_string(two_m));
  const auto exact_trace_a = sum_of_values(oracle.adjacency_spectrum);
  gate(out.gates, "trace_A_zero", exact_trace_a == QuadSurd(0), "sum lambda " + exact_trace_a.to_string());
  const auto l = laplacian_matrix(g);
  const auto exact_mu = sum_of_values(oracle.laplacian_spectrum);
  gate(out.gates, "sum_mu_equals_2E", l.trace() == static_cast<double>(two_m) && exact_mu == QuadSurd(two_m),
       "trace(L) " + render_double(l.trace()) + ", sum mu " + exact_mu.to_string());
  gate(out.gates, "spectrum_sizes",
       spectrum_size(oracle.adjacency_spectrum) == g.order() &&
           spectrum_size(oracle.laplacian_spectrum) == g.order(),
       "multiplicities sum to |V|");

  for (const auto& claim : claims_ledger()) {
    out.verdicts.push_back(judge(claim, p, claim.closed_form(p), claim.oracle(oracle)));
    const auto& v = out.verdicts.back();
    if (v.corrected) {
      gate(out.gates, "corrected_form_" + claim.id, v.corrected->matches_oracle,
           v.corrected->form + " = " + render(v.corrected->value) + ", oracle " + render(v.oracle_value));
    }
  }

  for (const auto& g_result : out.gates) {
    if (!g_result.passed) {
      throw ConsistencyGateError("consistency gate '" + g_result.name + "' failed at p=" +
                                 std::to_string(out.p) + ": " + g_result.detail);
    }
  }
  return out;
}

std::string summarize_verdicts(const std::vector<ClaimVerdict>& per_prime) {
  std::vector<std::uint32_t> matched;
  for (const auto& v : per_prime) {
    if (v.verdict == Verdict::Match) matched.push_back(v.p);
  }
  if (matched.size() == per_prime.size()) return "MATCH for all";
  if (matched.empty()) return "MISMATCH for all";
  std::string out = "MATCH only at {";
  for (std::size_t i = 0; i < matched.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(matched[i]);
  }
  return out + "}";
}

VerificationReport verify_range(const std::vector<Prime>& primes, const VerifyOptions& options) {
  if (primes.empty()) throw std::invalid_argument("verify_range needs at least one prime");
  for (auto p : primes) {
    if (!p.is_odd()) throw std::invalid_argument("closed forms assume an odd prime; p = 2 rejected");
  }

  std::vector<std::future<PrimeVerification>> jobs;
  for (auto p : primes) {
    jobs.push_back(std::async(std::launch::async, [p, options] { return verify_prime(p, options); }));
  }
  VerificationReport report;
  for (auto& job : jobs) report.runs.push_back(job.get());
  for (auto p : primes) report.primes.push_back(p.value());

  const auto& ledger = claims_ledger();
  for (std::size_t c = 0; c < ledger.size(); ++c) {
    ClaimRow row;
    row.claim = &ledger[c];
    for (const auto& run : report.runs) row.per_prime.push_back(run.verdicts[c]);
    row.summary = summarize_verdicts(row.per_prime);
    report.claims.push_back(std::move(row));
  }
  return report;
}

}  // namespace zdg
