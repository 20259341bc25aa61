// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "zdg/gf2.hpp"
#include "zdg/indices.hpp"
#include "zdg/invariants.hpp"
#include "zdg/spectra.hpp"
#include "zdg/verify.hpp"

namespace {

using namespace zdg;
using namespace zdg::testing;
using Clock = std::chrono::steady_clock;

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string detail() const {
    std::string out;
    for (std::size_t i = 0; i < failures_.size() && i < 4; ++i) out += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 4) out += "; +" + std::to_string(failures_.size() - 4) + " more";
    return out;
  }

 private:
  std::vector<std::string> failures_;
};

std::string str(std::size_t x) { return std::to_string(x); }

Spectrum ints(std::initializer_list<std::pair<std::int64_t, std::size_t>> xs) {
  Spectrum s;
  for (auto [v, m] : xs) s.push_back({QuadSurd(v), m});
  return normalize_spectrum(s);
}

const char* const kDisplayedIncidenceP3[8] = {
    "1100000000000", "0011000000000", "1111111111111", "1111111111111",
    "0000011000000", "0000000110000", "0000000001100", "0000000000011"};

void reproduction_p3(Checker& c) {
  const Prime p(3);
  const auto zg = build_bruteforce(p);
  const auto& g = zg.graph();
  c.expect(g.order() == 8, "|V| " + str(g.order()));
  c.expect(g.size() == 13, "|E| " + str(g.size()));

  const auto q = incidence_matrix(g);
  std::string displayed;
  for (const auto* row : kDisplayedIncidenceP3) displayed += std::string(row) + "\n";
  const auto text = q.to_text();
  if (text != displayed) {
    std::vector<std::string> rows;
    for (std::size_t r = 0; r < 8; ++r) {
      if (text.substr(r * 14, 13) != kDisplayedIncidenceP3[r]) rows.push_back(str(r));
    }
    std::string list;
    for (const auto& r : rows) list += (list.empty() ? "" : ",") + r;
    c.expect(false, "incidence matrix differs from displayed 8x13 matrix in rows {" + list +
                        "} (displayed all-ones, weight 13; incidence rows have weight " +
                        str(q.row_weight(2)) + " since every column has weight 2)");
  }
  c.expect(gf2_rank(q) == 7, "rank " + str(gf2_rank(q)));
  c.expect(code_parameters(p, MinDistanceMethod::Enumerate).to_string() == "[13, 7, 2]_2", "code params");
  c.expect(exact_adjacency_spectrum(p) == ints({{0, 5}, {4, 1}, {-1, 1}, {-3, 1}}), "adjacency spectrum");
  c.expect(exact_laplacian_spectrum(p) == ints({{0, 1}, {8, 2}, {2, 5}}), "laplacian spectrum");
}

void reproduction_p5(Checker& c) {
  const Prime p(5);
  c.expect(exact_laplacian_spectrum(p) == ints({{0, 1}, {24, 4}, {4, 19}}), "laplacian spectrum");
  const auto en = code_parameters(p, MinDistanceMethod::Enumerate);
  const auto mc = code_parameters(p, MinDistanceMethod::Mincut);
  c.expect(en.to_string() == "[86, 23, 4]_2", "enumerate " + en.to_string());
  c.expect(mc.to_string() == "[86, 23, 4]_2", "mincut " + mc.to_string());
}

void structural(Checker& c) {
  for (std::size_t q : {3u, 5u, 7u, 11u, 13u}) {
    const Prime p(static_cast<std::uint32_t>(q));
    const auto zg = build_bruteforce(p);
    const auto& g = zg.graph();
    const auto inv = compute_invariants(g);
    const std::size_t edges = (2 * q * q * q - 3 * q * q - q + 2) / 2;
    const std::string at = " at p=" + str(q);
    c.expect(inv.diameter == 2u, "diameter" + at);
    c.expect(inv.girth == 3u, "girth" + at);
    c.expect(inv.clique_number == q && inv.chromatic_number == q, "omega/chi" + at);
    c.expect(inv.vertex_connectivity == q - 1 && inv.edge_connectivity == q - 1, "kappa/lambda" + at);
    c.expect(g.order() == q * q - 1, "|V|" + at);
    c.expect(g.size() == edges, "|E| " + str(g.size()) + at);
    const auto s = spectral_summary(p);
    c.expect(s.adjacency_rank == q, "adjacency rank" + at);
    c.expect(s.laplacian_spectral_radius == QuadSurd(static_cast<std::int64_t>(q * q - 1)), "mu" + at);
    const auto code = code_parameters(p);
    c.expect(code.n == edges && code.k == q * q - 2 && code.d == q - 1, "code " + code.to_string() + at);
  }
}

void discrepancies(Checker& c) {
  const std::vector<std::uint32_t> primes = {3, 5, 7, 11, 13};
  std::vector<Prime> ps;
  for (auto p : primes) ps.emplace_back(p);
  const auto report = verify_range(ps);
  std::map<std::string, const ClaimRow*> rows;
  for (const auto& row : report.claims) rows[row.claim->id] = &row;

  for (const auto& run : report.runs) {
    for (const auto& g : run.gates) c.expect(g.passed, g.name + " at p=" + str(run.p));
    bool trace_gate = false;
    for (const auto& g : run.gates) trace_gate |= g.name == "trace_A2_equals_2E" && g.passed;
    c.expect(trace_gate, "trace(A^2) gate missing at p=" + str(run.p));
  }

  for (const auto& v : rows.at("C09_wiener")->per_prime) {
    const std::int64_t q = v.p;
    c.expect(v.verdict == Verdict::Mismatch, "wiener verdict at p=" + str(q));
    c.expect(v.exact_discrepancy == QuadSurd(2 * q * q - 2 * q + 1), "wiener discrepancy " + v.discrepancy);
  }
  const auto& w3 = rows.at("C09_wiener")->per_prime.front();
  c.expect(render(w3.paper_value) == "30" && render(w3.oracle_value) == "43", "wiener p=3 values");

  // Oracle minus claimed; the claimed M1 exceeds the oracle by 2p^2(p-1).
  for (const auto& v : rows.at("C11_zagreb1")->per_prime) {
    const std::int64_t q = v.p;
    c.expect(v.verdict == Verdict::Mismatch, "M1 verdict at p=" + str(q));
    c.expect(v.exact_discrepancy == QuadSurd(-2 * q * q * (q - 1)), "M1 discrepancy " + v.discrepancy);
  }
  const auto& m3 = rows.at("C11_zagreb1")->per_prime.front();
  c.expect(render(m3.paper_value) == "158" && render(m3.oracle_value) == "122", "M1 p=3 values");

  for (const auto& v : rows.at("C18_lap_energy")->per_prime) {
    const std::int64_t q = v.p;
    c.expect(v.verdict == Verdict::Mismatch, "LE verdict at p=" + str(q));
    c.expect(v.exact_discrepancy == QuadSurd(Rational(1, q * q - 1)), "LE discrepancy " + v.discrepancy);
  }
  const auto& le3 = rows.at("C18_lap_energy")->per_prime.front();
  c.expect(render(le3.paper_value) == "151/8" && render(le3.oracle_value) == "19", "LE p=3 values");

  for (const char* id : {"C13_adj_spectrum", "C14_adj_energy", "C16_adj_radius"}) {
    const auto* row = rows.at(id);
    c.expect(row->summary == "MATCH only at {3}", std::string(id) + ": " + row->summary);
    for (const auto& v : row->per_prime) {
      c.expect(v.verdict == (v.p == 3 ? Verdict::Match : Verdict::Mismatch), std::string(id) + " p=" + str(v.p));
    }
  }

  for (const auto& row : report.claims) {
    if (row.claim->comparison == Comparison::FloatRelative) continue;
    for (const auto& v : row.per_prime) {
      c.expect(!std::holds_alternative<double>(v.paper_value) && !std::holds_alternative<double>(v.oracle_value),
               row.claim->id + " compared in floating point");
    }
  }
}

void oracle_consistency(Checker& c) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const Prime p(q);
    const auto g = build_bruteforce(p).graph();
    const double da = max_abs_deviation(exact_adjacency_spectrum(p), numeric_spectrum(adjacency_matrix(g)));
    const double dl = max_abs_deviation(exact_laplacian_spectrum(p), numeric_spectrum(laplacian_matrix(g)));
    c.expect(da <= 1e-9, "adjacency jacobi deviation " + std::to_string(da) + " at p=" + str(q));
    c.expect(dl <= 1e-9, "laplacian jacobi deviation " + std::to_string(dl) + " at p=" + str(q));
  }
  for (std::int64_t q : {3, 5, 7, 11}) {
    const Prime p(static_cast<std::uint32_t>(q));
    const auto g = build_bruteforce(p).graph();
    const auto idx = compute_indices(g);
    const double x = static_cast<double>(q);
    const double d2 = x * x - 2;
    const double closed = (x - 1) / (2 * d2) * (2 * x * std::sqrt((x - 1) * d2) + (x - 2));
    c.expect(std::abs(closed - idx.randic) <= 1e-9 * std::abs(closed), "randic at p=" + str(q));
    const std::int64_t q2 = q * q, q3 = q2 * q;
    const std::int64_t m2 = (3 * q3 * q3 - 9 * q3 * q2 + 22 * q3 - 16 * q2 - 8 * q + 8) / 2;
    std::uint64_t by_edges = 0;
    for (const auto& e : g.edges()) by_edges += g.degree(e.u) * g.degree(e.v);
    c.expect(static_cast<std::int64_t>(by_edges) == m2 && idx.zagreb_second == by_edges, "M2 at p=" + str(q));
  }
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
    c.expect(build_bruteforce(Prime(q)) == build_structured(Prime(q)), "bruteforce != structured at p=" + str(q));
  }
}

void fixtures(Checker& c) {
  const auto corpus = small_corpus();
  c.expect(corpus.size() >= 20, "corpus size " + str(corpus.size()));
  for (const char* required : {"K5", "P5", "C5", "K1,3", "bridge"}) {
    bool found = false;
    for (const auto& [name, g] : corpus) found |= name == required;
    c.expect(found, std::string("missing fixture ") + required);
  }
  for (const auto& [name, g] : corpus) {
    c.expect(g.order() <= 8, name + " too large");
    c.expect(clique_number(g) == brute_clique(g), name + " clique");
    c.expect(chromatic_number(g) == brute_chromatic(g), name + " chromatic");
    c.expect(vertex_connectivity(g) == brute_vertex_connectivity(g), name + " kappa");
    c.expect(edge_connectivity(g) == brute_edge_connectivity(g), name + " lambda");
    const auto gi = girth(g);
    c.expect(gi.value_or(0) == brute_girth(g), name + " girth");
  }
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<void(Checker&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 p=3 reproduction", 1.0, reproduction_p3},
      {"2 p=5 reproduction", 30.0, reproduction_p5},
      {"3 structural suite p in {3,5,7,11,13}", 60.0, structural},
      {"4 discrepancy detection", 0.0, discrepancies},
      {"5 oracle consistency", 0.0, oracle_consistency},
      {"6 fixture sanity", 0.0, fixtures},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checker c;
    const auto start = Clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (cr.budget_seconds > 0 && seconds > cr.budget_seconds) {
      c.expect(false, "runtime " + std::to_string(seconds) + " s over budget");
    }
    std::printf("%s criterion %s (%.3f s)%s%s\n", c.ok() ? "PASS" : "FAIL", cr.name, seconds,
                c.ok() ? "" : ": ", c.detail().c_str());
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
