#include "zdg/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace zdg {

bool DenseSymMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

double DenseSymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double DenseSymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (auto x : data_) s += x * x;
  return std::sqrt(s);
}

DenseSymMatrix adjacency_matrix(const Graph& g) {
  DenseSymMatrix m(g.order());
  for (const auto& e : g.edges()) {
    m(e.u, e.v) = 1.0;
    m(e.v, e.u) = 1.0;
  }
  return m;
}

DenseSymMatrix degree_matrix(const Graph& g) {
  DenseSymMatrix m(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) m(v, v) = static_cast<double>(g.degree(v));
  return m;
}

DenseSymMatrix laplacian_matrix(const Graph& g) {
  DenseSymMatrix m = degree_matrix(g);
  for (const auto& e : g.edges()) {
    m(e.u, e.v) = -1.0;
    m(e.v, e.u) = -1.0;
  }
  return m;
}

std::vector<double> numeric_spectrum(const DenseSymMatrix& input) {
  if (!input.is_symmetric()) throw std::invalid_argument("Jacobi requires a symmetric matrix");
  const auto n = input.dim();
  DenseSymMatrix a = input;
  const double threshold = 1e-12 * std::max(input.frobenius_norm(), 1.0);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    }
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > threshold; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p), arq = a(r, q);
          a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
          a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
        }
      }
    }
  }
  if (off_norm() > threshold) throw std::runtime_error("Jacobi iteration did not converge");

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

Spectrum normalize_spectrum(Spectrum s) {
  std::erase_if(s, [](const ExactEigen& e) { return e.multiplicity == 0; });
  std::sort(s.begin(), s.end(),
            [](const ExactEigen& x, const ExactEigen& y) { return x.value < y.value; });
  Spectrum out;
  for (auto& e : s) {
    if (!out.empty() && out.back().value == e.value) {
      out.back().multiplicity += e.multiplicity;
    } else {
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::size_t spectrum_size(const Spectrum& s) {
  std::size_t n = 0;
  for (const auto& e : s) n += e.multiplicity;
  return n;
}

std::vector<double> expand(const Spectrum& s) {
  std::vector<double> out;
  for (const auto& e : s) out.insert(out.end(), e.multiplicity, e.value.to_double());
  std::sort(out.begin(), out.end());
  return out;
}

Spectrum complete_split_adjacency_spectrum(std::size_t clique, std::size_t independent) {
  if (clique == 0 || independent == 0) {
    throw std::invalid_argument("complete split graph needs a nonempty clique and independent set");
  }
  const auto k = static_cast<std::int64_t>(clique);
  const auto s = static_cast<std::int64_t>(independent);
  // Quotient characteristic polynomial x^2 - (k-1) x - k s.
  const BigInt disc = BigInt(k - 1) * (k - 1) + BigInt(4) * k * s;
  const Rational half(1, 2);
  const QuadSurd root = QuadSurd(Rational(0), half, disc);
  const QuadSurd centre(Rational(k - 1, 2));
  Spectrum out{
      {QuadSurd(0), independent - 1},  // vectors summing to zero on the independent set
      {QuadSurd(-1), clique - 1},      // vectors summing to zero on the clique
      {centre - root, 1},
      {centre + root, 1},
  };
  return normalize_spectrum(std::move(out));
}

Spectrum complete_split_laplacian_spectrum(std::size_t clique, std::size_t independent) {
  if (clique == 0 || independent == 0) {
    throw std::invalid_argument("complete split graph needs a nonempty clique and independent set");
  }
  const auto n = static_cast<std::int64_t>(clique + independent);
  const auto k = static_cast<std::int64_t>(clique);
  // L(G1 ∨ G2): 0, n, μ_i(G1) + |G2|, μ_i(G2) + |G1| for the nontrivial μ_i.
  // K_k contributes μ = k (k-1 times); the empty graph contributes μ = 0.
  Spectrum out{
      {QuadSurd(0), 1},
      {QuadSurd(n), 1},
      {QuadSurd(k + static_cast<std::int64_t>(independent)), clique - 1},
      {QuadSurd(k), independent - 1},
  };
  return normalize_spectrum(std::move(out));
}

namespace {

void require_odd(Prime p) {
  if (p.value() < 3) throw std::invalid_argument("exact spectra require an odd prime");
}

}  // namespace

Spectrum exact_adjacency_spectrum(Prime p) {
  require_odd(p);
  const std::size_t q = p.value();
  return complete_split_adjacency_spectrum(q - 1, q * (q - 1));
}

Spectrum exact_laplacian_spectrum(Prime p) {
  require_odd(p);
  const std::size_t q = p.value();
  return complete_split_laplacian_spectrum(q - 1, q * (q - 1));
}

SpectralSummary summarize(const Spectrum& adjacency, const Spectrum& laplacian,
                          std::size_t order, std::size_t edges) {
  if (order == 0) throw std::invalid_argument("empty graph has no spectrum");
  SpectralSummary out;
  out.energy = QuadSurd(0);
  out.spectral_radius = QuadSurd(0);
  std::size_t zero_multiplicity = 0;
  for (const auto& e : adjacency) {
    const auto m = static_cast<std::int64_t>(e.multiplicity);
    const auto mag = abs(e.value);
    out.energy += QuadSurd(m) * mag;
    if (mag > out.spectral_radius) out.spectral_radius = mag;
    if (e.value.sign() == 0) zero_multiplicity += e.multiplicity;
  }
  out.adjacency_rank = spectrum_size(adjacency) - zero_multiplicity;

  const QuadSurd mean(Rational(2 * static_cast<std::int64_t>(edges), static_cast<std::int64_t>(order)));
  out.laplacian_energy = QuadSurd(0);
  out.laplacian_spectral_radius = QuadSurd(0);
  for (const auto& e : laplacian) {
    const auto m = static_cast<std::int64_t>(e.multiplicity);
    out.laplacian_energy += QuadSurd(m) * abs(e.value - mean);
    const auto mag = abs(e.value);
    if (mag > out.laplacian_spectral_radius) out.laplacian_spectral_radius = mag;
  }
  return out;
}

double max_abs_deviation(const Spectrum& exact, const std::vector<double>& numeric) {
  const auto values = expand(exact);
  if (values.size() != numeric.size()) {
    throw SpectralMismatch("spectrum sizes differ: " + std::to_string(values.size()) + " vs " +
                           std::to_string(numeric.size()));
  }
  auto sorted = numeric;
  std::sort(sorted.begin(), sorted.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    worst = std::max(worst, std::abs(values[i] - sorted[i]));
  }
  return worst;
}

SpectralSummary spectral_summary(Prime p) {
  require_odd(p);
  const auto g = build_bruteforce(p);
  const auto adjacency = exact_adjacency_spectrum(p);
  const auto laplacian = exact_laplacian_spectrum(p);

  constexpr double kTolerance = 1e-9;
  const double dev_a = max_abs_deviation(adjacency, numeric_spectrum(adjacency_matrix(g.graph())));
  const double dev_l = max_abs_deviation(laplacian, numeric_spectrum(laplacian_matrix(g.graph())));
  if (dev_a > kTolerance || dev_l > kTolerance) {
    throw SpectralMismatch("exact and Jacobi spectra disagree at p=" + std::to_string(p.value()));
  }
  return summarize(adjacency, laplacian, g.order(), g.size());
}

}  // namespace zdg
