#include "zdg/cli.hpp"

#include <algorithm>
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "zdg/report.hpp"
#include "zdg/verify.hpp"

namespace zdg::cli {
namespace {

const std::map<std::string, Format>& format_names() {
  static const std::map<std::string, Format> names{{"json", Format::Json}, {"csv", Format::Csv},
                                                   {"dot", Format::Dot},   {"text", Format::Text},
                                                   {"matrix", Format::Matrix}};
  return names;
}

const std::map<std::string, MinDistanceMethod>& method_names() {
  static const std::map<std::string, MinDistanceMethod> names{
      {"auto", MinDistanceMethod::Auto},
      {"enumerate", MinDistanceMethod::Enumerate},
      {"mincut", MinDistanceMethod::Mincut}};
  return names;
}

std::vector<std::uint32_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw UsageError("empty entry in --primes");
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer in --primes: " + item);
    }
    if (used != item.size()) throw UsageError("not an integer in --primes: " + item);
    out.push_back(static_cast<std::uint32_t>(value));
  }
  return out;
}

std::vector<Prime> checked_primes(const CliConfig& config) {
  std::vector<Prime> out;
  for (auto p : config.primes) {
    try {
      out.emplace_back(p);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

bool format_allowed(Command command, Format format) {
  switch (command) {
    case Command::Graph: return format != Format::Matrix;
    case Command::Code: return format == Format::Json || format == Format::Text || format == Format::Matrix;
    default: return format == Format::Json || format == Format::Csv || format == Format::Text;
  }
}

std::string emit_graph(const CliConfig& config, Format format) {
  const auto g = build_bruteforce(Prime(config.primes.front()));
  switch (format) {
    case Format::Dot: return graph_to_dot(g);
    case Format::Csv: return graph_to_csv(g);
    case Format::Json: return graph_to_json(g).dump(2) + "\n";
    default: return graph_to_text(g);
  }
}

std::string emit_invariants(const std::vector<Prime>& primes, Format format) {
  std::ostringstream out;
  Json arr = Json::array();
  if (format == Format::Csv) {
    out << "p,diameter,girth,clique_number,chromatic_number,vertex_connectivity,edge_connectivity,"
           "min_degree\n";
  }
  for (auto p : primes) {
    const auto r = compute_invariants(build_bruteforce(p).graph());
    auto opt = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : "none"; };
    if (format == Format::Json) {
      arr.push_back(invariants_to_json(p.value(), r));
    } else if (format == Format::Csv) {
      out << p.value() << ',' << opt(r.diameter) << ',' << opt(r.girth) << ',' << r.clique_number << ','
          << r.chromatic_number << ',' << r.vertex_connectivity << ',' << r.edge_connectivity << ','
          << r.min_degree << '\n';
    } else {
      out << "p=" << p.value() << "  diameter " << opt(r.diameter) << "  girth " << opt(r.girth)
          << "  clique " << r.clique_number << "  chromatic " << r.chromatic_number
          << "  vertex_connectivity " << r.vertex_connectivity << "  edge_connectivity "
          << r.edge_connectivity << "  min_degree " << r.min_degree << '\n';
    }
  }
  if (format == Format::Json) return arr.dump(2) + "\n";
  return out.str();
}

std::string emit_indices(const std::vector<Prime>& primes, Format format) {
  std::ostringstream out;
  Json arr = Json::array();
  if (format == Format::Csv) out << "p,wiener,randic,zagreb_first,zagreb_second\n";
  for (auto p : primes) {
    const auto t = compute_indices(build_bruteforce(p).graph());
    if (format == Format::Json) {
      arr.push_back(indices_to_json(p.value(), t));
    } else if (format == Format::Csv) {
      out << p.value() << ',' << t.wiener << ',' << decimal(t.randic) << ',' << t.zagreb_first << ','
          << t.zagreb_second << '\n';
    } else {
      out << "p=" << p.value() << "  wiener " << t.wiener << "  randic " << decimal(t.randic)
          << "  zagreb_first " << t.zagreb_first << "  zagreb_second " << t.zagreb_second << '\n';
    }
  }
  if (format == Format::Json) return arr.dump(2) + "\n";
  return out.str();
}

std::string render_spectrum_text(const Spectrum& s) {
  std::string out;
  for (const auto& e : s) {
    out += "    " + e.value.to_string() + " (" + decimal(e.value.to_double()) + ") x" +
           std::to_string(e.multiplicity) + "\n";
  }
  return out;
}

std::string emit_spectra(const std::vector<Prime>& primes, Format format) {
  std::ostringstream out;
  Json arr = Json::array();
  if (format == Format::Csv) out << "p,matrix,value,exact,multiplicity\n";
  for (auto p : primes) {
    const auto a = exact_adjacency_spectrum(p);
    const auto l = exact_laplacian_spectrum(p);
    const auto s = spectral_summary(p);
    if (format == Format::Json) {
      arr.push_back({{"p", p.value()},
                     {"adjacency", spectrum_to_json(a)},
                     {"laplacian", spectrum_to_json(l)},
                     {"summary", spectral_summary_to_json(s)}});
    } else if (format == Format::Csv) {
      auto rows = [&](const char* name, const Spectrum& spec) {
        for (const auto& e : spec) {
          out << p.value() << ',' << name << ',' << decimal(e.value.to_double()) << ','
              << csv_field(e.value.to_string()) << ',' << e.multiplicity << '\n';
        }
      };
      rows("adjacency", a);
      rows("laplacian", l);
    } else {
      out << "p=" << p.value() << "\n  adjacency\n" << render_spectrum_text(a) << "  laplacian\n"
          << render_spectrum_text(l) << "  energy " << s.energy.to_string() << "\n  laplacian_energy "
          << s.laplacian_energy.to_string() << "\n  spectral_radius " << s.spectral_radius.to_string()
          << "\n  laplacian_spectral_radius " << s.laplacian_spectral_radius.to_string()
          << "\n  adjacency_rank " << s.adjacency_rank << '\n';
    }
  }
  if (format == Format::Json) return arr.dump(2) + "\n";
  return out.str();
}

std::string emit_code(const std::vector<Prime>& primes, Format format, MinDistanceMethod method) {
  if (format == Format::Matrix) {
    return incidence_matrix(build_bruteforce(primes.front()).graph()).to_text();
  }
  std::ostringstream out;
  Json arr = Json::array();
  for (auto p : primes) {
    const auto c = code_parameters(p, method);
    if (format == Format::Json) {
      arr.push_back(code_to_json(p.value(), c));
    } else if (primes.size() == 1) {
      out << c.to_string() << '\n';
    } else {
      out << "p=" << p.value() << "  " << c.to_string() << "  (d by " << to_string(c.method) << ")\n";
    }
  }
  if (format == Format::Json) return arr.dump(2) + "\n";
  return out.str();
}

std::string emit_verify(const std::vector<Prime>& primes, Format format) {
  const auto report = verify_range(primes);
  switch (format) {
    case Format::Json: return report_to_json(report).dump(2) + "\n";
    case Format::Csv: return report_to_csv(report);
    default: return report_to_text(report);
  }
}

}  // namespace

std::optional<CliConfig> parse(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Zero-divisor graph of F_p[u]/(u^3): construction, invariants, spectra, codes"};
  app.require_subcommand(1);

  CliConfig config;
  std::optional<std::uint32_t> single;
  std::string prime_list;
  std::string format_name;
  std::string method_name = "auto";
  std::string output_path;

  struct Entry {
    const char* name;
    Command command;
    const char* description;
  };
  const std::vector<Entry> commands{
      {"graph", Command::Graph, "export the graph (dot|csv|json|text)"},
      {"invariants", Command::Invariants, "diameter, girth, clique, chromatic, connectivities"},
      {"indices", Command::Indices, "Wiener, Randic and Zagreb indices"},
      {"spectra", Command::Spectra, "exact adjacency and Laplacian spectra with summary"},
      {"code", Command::Code, "binary incidence code parameters or generator matrix"},
      {"verify", Command::Verify, "claims ledger with verdicts and exact discrepancies (p <= 13)"}};
  std::vector<CLI::App*> subs;
  for (const auto& [name, cmd, description] : commands) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("--prime", single, "single prime p");
    sub->add_option("--primes", prime_list, "comma-separated primes");
    sub->add_option("--format", format_name, "json|csv|dot|text|matrix");
    sub->add_option("--min-distance-method", method_name, "auto|enumerate|mincut");
    sub->add_option("--out", output_path, "write to this file instead of stdout");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    const auto it = std::find_if(subs.begin(), subs.end(), [](const CLI::App* s) { return s->parsed(); });
    out << (it == subs.end() ? app.help() : (*it)->help());
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) config.command = commands[i].command;
  }
  if (single) config.primes.push_back(*single);
  if (!prime_list.empty()) {
    for (auto p : parse_prime_list(prime_list)) config.primes.push_back(p);
  }
  if (!format_name.empty()) {
    const auto it = format_names().find(format_name);
    if (it == format_names().end()) throw UsageError("unknown format: " + format_name);
    config.format = it->second;
  }
  const auto m = method_names().find(method_name);
  if (m == method_names().end()) throw UsageError("unknown min-distance method: " + method_name);
  config.min_distance_method = m->second;
  if (!output_path.empty()) config.output_path = output_path;
  validate(config);
  return config;
}

void validate(const CliConfig& config) {
  if (config.primes.empty()) throw UsageError("at least one prime is required (--prime or --primes)");
  const auto format = config.format.value_or(Format::Text);
  if (!format_allowed(config.command, format)) {
    throw UsageError("format not available for this command");
  }
  const bool single_only =
      config.command == Command::Graph || (config.command == Command::Code && format == Format::Matrix);
  if (single_only && config.primes.size() != 1) {
    throw UsageError("this output takes exactly one prime");
  }
  const auto primes = checked_primes(config);
  const bool odd_only = config.command == Command::Spectra || config.command == Command::Code ||
                        config.command == Command::Verify;
  for (auto p : primes) {
    if (odd_only && !p.is_odd()) throw UsageError("closed forms assume an odd prime; p = 2 rejected");
    if (config.command == Command::Verify && p.value() > VerifyOptions{}.max_prime) {
      throw UsageError("verify accepts primes up to " + std::to_string(VerifyOptions{}.max_prime));
    }
  }
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const auto primes = checked_primes(config);
    const auto format = config.format.value_or(Format::Text);
    std::string artifact;
    switch (config.command) {
      case Command::Graph: artifact = emit_graph(config, format); break;
      case Command::Invariants: artifact = emit_invariants(primes, format); break;
      case Command::Indices: artifact = emit_indices(primes, format); break;
      case Command::Spectra: artifact = emit_spectra(primes, format); break;
      case Command::Code: artifact = emit_code(primes, format, config.min_distance_method); break;
      case Command::Verify: artifact = emit_verify(primes, format); break;
    }
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) throw UsageError("cannot open output file " + *config.output_path);
      file << artifact;
    } else {
      out << artifact;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyGateError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitGate;
  } catch (const SpectralMismatch& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitGate;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<CliConfig> config;
  try {
    config = parse(argc, argv, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!config) return kExitOk;
  return run(*config, out, err);
}

}  // namespace zdg::cli
