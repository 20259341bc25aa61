#include "zdg/report.hpp"

#include <cstdio>
#include <sstream>

namespace zdg {

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string graph_to_dot(const ZdGraph& g) {
  std::ostringstream out;
  out << "graph zero_divisor_graph_p" << g.prime().value() << " {\n";
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto& vx = g.vertices()[v];
    out << "  " << v << " [label=\"" << label(vx.elem) << "\", class=\"" << to_string(vx.cls)
        << "\"];\n";
  }
  const auto& edges = g.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << "  " << edges[i].u << " -- " << edges[i].v << " [block=\""
        << to_string(g.edge_blocks()[i]) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_csv(const ZdGraph& g) {
  std::ostringstream out;
  out << "index,source,target,block\n";
  const auto& edges = g.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << i << ',' << label(g.vertices()[edges[i].u].elem) << ','
        << label(g.vertices()[edges[i].v].elem) << ',' << to_string(g.edge_blocks()[i]) << '\n';
  }
  return out.str();
}

Json graph_to_json(const ZdGraph& g) {
  Json j;
  j["p"] = g.prime().value();
  j["vertex_count"] = g.order();
  j["edge_count"] = g.size();
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto& vx = g.vertices()[v];
    vertices.push_back({{"index", v},
                        {"label", label(vx.elem)},
                        {"class", to_string(vx.cls)},
                        {"degree", g.graph().degree(v)}});
  }
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  const auto& es = g.graph().edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    edges.push_back({{"index", i},
                     {"source", es[i].u},
                     {"target", es[i].v},
                     {"block", to_string(g.edge_blocks()[i])}});
  }
  j["edges"] = std::move(edges);
  return j;
}

std::string graph_to_text(const ZdGraph& g) {
  std::ostringstream out;
  out << "p = " << g.prime().value() << "\n";
  out << "vertices: " << g.order() << "\n";
  out << "edges: " << g.size() << "\n";
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto& vx = g.vertices()[v];
    out << "  " << v << ' ' << label(vx.elem) << ' ' << to_string(vx.cls) << " degree "
        << g.graph().degree(v) << '\n';
  }
  return out.str();
}

namespace {

Json optional_size(const std::optional<std::size_t>& x) {
  return x ? Json(*x) : Json(nullptr);
}

Json exact_value(const ClaimValue& v) {
  Json j;
  j["exact"] = render(v);
  if (const auto approx = approximate(v)) j["decimal"] = decimal(*approx);
  return j;
}

}  // namespace

Json invariants_to_json(std::uint32_t p, const InvariantReport& r) {
  return {{"p", p},
          {"diameter", optional_size(r.diameter)},
          {"girth", optional_size(r.girth)},
          {"clique_number", r.clique_number},
          {"chromatic_number", r.chromatic_number},
          {"vertex_connectivity", r.vertex_connectivity},
          {"edge_connectivity", r.edge_connectivity},
          {"min_degree", r.min_degree}};
}

Json indices_to_json(std::uint32_t p, const TopologicalIndices& t) {
  return {{"p", p},
          {"wiener", t.wiener},
          {"randic", decimal(t.randic)},
          {"zagreb_first", t.zagreb_first},
          {"zagreb_second", t.zagreb_second}};
}

Json spectrum_to_json(const Spectrum& s) {
  Json arr = Json::array();
  for (const auto& e : s) {
    const auto parts = e.value.parts();
    arr.push_back({{"value", decimal(e.value.to_double())},
                   {"exact",
                    {{"a", parts.a.str()}, {"b", parts.b.str()}, {"c", parts.c.str()}, {"D", parts.d.str()}}},
                   {"rendered", e.value.to_string()},
                   {"multiplicity", e.multiplicity}});
  }
  return arr;
}

Json spectral_summary_to_json(const SpectralSummary& s) {
  auto both = [](const QuadSurd& x) {
    return Json{{"exact", x.to_string()}, {"decimal", decimal(x.to_double())}};
  };
  return {{"energy", both(s.energy)},
          {"laplacian_energy", both(s.laplacian_energy)},
          {"spectral_radius", both(s.spectral_radius)},
          {"laplacian_spectral_radius", both(s.laplacian_spectral_radius)},
          {"adjacency_rank", s.adjacency_rank}};
}

Json code_to_json(std::uint32_t p, const CodeParams& c) {
  return {{"p", p},   {"n", c.n}, {"k", c.k}, {"d", c.d}, {"field", "GF(2)"},
          {"parameters", c.to_string()}, {"min_distance_method", to_string(c.method)}};
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["generated_for"] = r.primes;
  Json claims = Json::array();
  for (const auto& row : r.claims) {
    Json c;
    c["id"] = row.claim->id;
    c["description"] = row.claim->description;
    c["paper_ref"] = row.claim->paper_ref;
    c["oracle_source"] = row.claim->oracle_source;
    c["comparison"] = to_string(row.claim->comparison);
    Json per = Json::array();
    for (const auto& v : row.per_prime) {
      Json e;
      e["p"] = v.p;
      e["paper_value"] = render(v.paper_value);
      e["oracle_value"] = render(v.oracle_value);
      if (const auto a = approximate(v.paper_value)) e["paper_value_decimal"] = decimal(*a);
      if (const auto a = approximate(v.oracle_value)) e["oracle_value_decimal"] = decimal(*a);
      e["verdict"] = to_string(v.verdict);
      e["discrepancy"] = v.discrepancy;
      if (v.corrected) {
        e["corrected"] = {{"form", v.corrected->form},
                          {"value", exact_value(v.corrected->value)},
                          {"matches_oracle", v.corrected->matches_oracle}};
      }
      per.push_back(std::move(e));
    }
    c["per_prime"] = std::move(per);
    c["summary"] = row.summary;
    claims.push_back(std::move(c));
  }
  j["claims"] = std::move(claims);
  Json gates = Json::array();
  for (const auto& run : r.runs) {
    for (const auto& g : run.gates) {
      gates.push_back({{"p", run.p}, {"gate", g.name}, {"passed", g.passed}, {"detail", g.detail}});
    }
  }
  j["gates"] = std::move(gates);
  return j;
}

std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "id,paper_ref,comparison,p,paper_value,oracle_value,verdict,discrepancy,summary\n";
  for (const auto& row : r.claims) {
    for (const auto& v : row.per_prime) {
      out << csv_field(row.claim->id) << ',' << csv_field(row.claim->paper_ref) << ','
          << csv_field(to_string(row.claim->comparison)) << ',' << v.p << ','
          << csv_field(render(v.paper_value)) << ',' << csv_field(render(v.oracle_value)) << ','
          << to_string(v.verdict) << ',' << csv_field(v.discrepancy) << ',' << csv_field(row.summary)
          << '\n';
    }
  }
  return out.str();
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "primes:";
  for (auto p : r.primes) out << ' ' << p;
  out << "\n\n";
  for (const auto& row : r.claims) {
    out << row.claim->id << "  " << row.claim->paper_ref << "\n";
    for (const auto& v : row.per_prime) {
      out << "  p=" << v.p << "  " << to_string(v.verdict) << "  claimed " << render(v.paper_value)
          << "  oracle " << render(v.oracle_value);
      if (v.verdict == Verdict::Mismatch) out << "  discrepancy " << v.discrepancy;
      out << '\n';
    }
    out << "  summary: " << row.summary << "\n";
  }
  return out.str();
}

}  // namespace zdg
