#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zdg/gf2.hpp"
#include "zdg/graph.hpp"
#include "zdg/indices.hpp"
#include "zdg/invariants.hpp"
#include "zdg/report.hpp"
#include "zdg/ring.hpp"
#include "zdg/spectra.hpp"
#include "zdg/verify.hpp"

namespace py = pybind11;

namespace {

using namespace zdg;

MinDistanceMethod parse_method(const std::string& name) {
  if (name == "auto") return MinDistanceMethod::Auto;
  if (name == "enumerate") return MinDistanceMethod::Enumerate;
  if (name == "mincut") return MinDistanceMethod::Mincut;
  throw std::invalid_argument("unknown min-distance method " + name);
}

py::tuple elem_tuple(RingElem e) { return py::make_tuple(e.a, e.b, e.c); }

RingElem to_elem(const std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>& t, Prime p) {
  return make_elem(std::get<0>(t), std::get<1>(t), std::get<2>(t), p);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zero-divisor graph of F_p[u]/(u^3): construction, invariants, spectra, codes";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<ConsistencyGateError>(m, "ConsistencyGateError", PyExc_RuntimeError);

  m.def("is_prime", [](std::uint64_t n) { return is_prime(n); });
  m.def(
      "ring_mul",
      [](std::tuple<std::uint32_t, std::uint32_t, std::uint32_t> x,
         std::tuple<std::uint32_t, std::uint32_t, std::uint32_t> y, std::uint32_t p) {
        const Prime q(p);
        return elem_tuple(ring_mul(to_elem(x, q), to_elem(y, q), q));
      },
      py::arg("x"), py::arg("y"), py::arg("p"));
  m.def(
      "zero_divisors",
      [](std::uint32_t p) {
        py::list out;
        for (auto e : nonzero_zero_divisors(Prime(p))) out.append(elem_tuple(e));
        return out;
      },
      py::arg("p"));
  m.def(
      "classify",
      [](std::tuple<std::uint32_t, std::uint32_t, std::uint32_t> x, std::uint32_t p) {
        return std::string(to_string(classify(to_elem(x, Prime(p)))));
      },
      py::arg("x"), py::arg("p"));

  m.def(
      "edges",
      [](std::uint32_t p) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& e : build_bruteforce(Prime(p)).graph().edges()) out.emplace_back(e.u, e.v);
        return out;
      },
      py::arg("p"), "Edge list in canonical order as vertex-index pairs.");
  m.def(
      "graph_json", [](std::uint32_t p) { return graph_to_json(build_bruteforce(Prime(p))).dump(); },
      py::arg("p"));
  m.def(
      "graph_dot", [](std::uint32_t p) { return graph_to_dot(build_bruteforce(Prime(p))); }, py::arg("p"));

  m.def(
      "invariants_json",
      [](std::uint32_t p) {
        return invariants_to_json(p, compute_invariants(build_bruteforce(Prime(p)).graph())).dump();
      },
      py::arg("p"));
  m.def(
      "indices_json",
      [](std::uint32_t p) {
        return indices_to_json(p, compute_indices(build_bruteforce(Prime(p)).graph())).dump();
      },
      py::arg("p"));

  m.def(
      "adjacency_spectrum_json", [](std::uint32_t p) { return spectrum_to_json(exact_adjacency_spectrum(Prime(p))).dump(); },
      py::arg("p"));
  m.def(
      "laplacian_spectrum_json", [](std::uint32_t p) { return spectrum_to_json(exact_laplacian_spectrum(Prime(p))).dump(); },
      py::arg("p"));
  m.def(
      "spectral_summary_json", [](std::uint32_t p) { return spectral_summary_to_json(spectral_summary(Prime(p))).dump(); },
      py::arg("p"));
  m.def(
      "numeric_adjacency_spectrum",
      [](std::uint32_t p) { return numeric_spectrum(adjacency_matrix(build_bruteforce(Prime(p)).graph())); },
      py::arg("p"));

  m.def(
      "incidence_matrix",
      [](std::uint32_t p) { return incidence_matrix(build_bruteforce(Prime(p)).graph()).to_text(); },
      py::arg("p"), "Incidence matrix over GF(2) as lines of '0'/'1'.");
  m.def(
      "code_parameters",
      [](std::uint32_t p, const std::string& method) {
        const auto c = code_parameters(Prime(p), parse_method(method));
        return py::make_tuple(c.n, c.k, c.d, std::string(to_string(c.method)));
      },
      py::arg("p"), py::arg("method") = "auto");

  m.def(
      "verify_json",
      [](const std::vector<std::uint32_t>& primes) {
        std::vector<Prime> ps;
        for (auto p : primes) ps.emplace_back(p);
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = verify_range(ps);
        }
        return report_to_json(report).dump();
      },
      py::arg("primes"));
}
