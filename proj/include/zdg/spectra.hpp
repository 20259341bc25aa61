#pragma once

#include <cstddef>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/surd.hpp"

namespace zdg {

/// Dense symmetric matrix, row-major.
class DenseSymMatrix {
 public:
  explicit DenseSymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t dim() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const;
  double trace() const;
  double frobenius_norm() const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

DenseSymMatrix adjacency_matrix(const Graph& g);
DenseSymMatrix degree_matrix(const Graph& g);
DenseSymMatrix laplacian_matrix(const Graph& g);

/// Cyclic Jacobi rotations until the off-diagonal norm drops below
/// 1e-12 * ||m||_F. Eigenvalues ascending. Throws std::invalid_argument for
/// an asymmetric matrix.
std::vector<double> numeric_spectrum(const DenseSymMatrix& m);

struct ExactEigen {
  QuadSurd value;
  std::size_t multiplicity = 0;
  friend bool operator==(const ExactEigen&, const ExactEigen&) = default;
};

using Spectrum = std::vector<ExactEigen>;

/// Sorts ascending, merges equal values, drops zero multiplicities.
Spectrum normalize_spectrum(Spectrum s);

std::size_t spectrum_size(const Spectrum& s);

/// Eigenvalues with multiplicity, ascending, as doubles.
std::vector<double> expand(const Spectrum& s);

/// Adjacency spectrum of the complete split graph K_clique ∨ (independent set).
/// Quotient of the equitable partition {independent, clique} is
/// [[0, clique], [independent, clique-1]].
Spectrum complete_split_adjacency_spectrum(std::size_t clique, std::size_t independent);

/// Laplacian spectrum of the same graph by the join rule.
Spectrum complete_split_laplacian_spectrum(std::size_t clique, std::size_t independent);

/// Γ(R) is the complete split graph with clique A_{u^2} (p-1 vertices) and
/// independent set A_u ∪ A_{u+u^2} (p^2-p vertices). Both throw for p < 3.
Spectrum exact_adjacency_spectrum(Prime p);
Spectrum exact_laplacian_spectrum(Prime p);

struct SpectralSummary {
  QuadSurd energy;
  QuadSurd laplacian_energy;
  QuadSurd spectral_radius;
  QuadSurd laplacian_spectral_radius;
  std::size_t adjacency_rank = 0;
};

/// Summary from given spectra; `edges` and `order` feed the mean Laplacian value 2|E|/|V|.
SpectralSummary summarize(const Spectrum& adjacency, const Spectrum& laplacian,
                          std::size_t order, std::size_t edges);

/// Thrown when exact and numeric spectra disagree, or a trace identity fails.
class SpectralMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact spectra of Γ(R) checked element-wise (1e-9) against Jacobi on the
/// matrices of the brute-force graph, then summarized.
SpectralSummary spectral_summary(Prime p);

/// Max |exact - numeric| after sorting both; sizes must agree.
double max_abs_deviation(const Spectrum& exact, const std::vector<double>& numeric);

}  // namespace zdg
