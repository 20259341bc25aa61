#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

/// Row-major bit-packed matrix over GF(2).
class BinaryMatrix {
 public:
  BinaryMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);

  std::span<const std::uint64_t> row(std::size_t r) const;
  std::span<std::uint64_t> row(std::size_t r);

  std::size_t row_weight(std::size_t r) const;
  std::size_t col_weight(std::size_t c) const;

  /// One line per row of '0'/'1' characters.
  std::string to_text() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
};

/// Vertex-by-edge incidence matrix, columns in the graph's edge order.
BinaryMatrix incidence_matrix(const Graph& g);

std::size_t gf2_rank(const BinaryMatrix& m);

/// Row-reduced basis of the row space (rank rows).
BinaryMatrix row_space_basis(const BinaryMatrix& m);

enum class MinDistanceMethod { Auto, Enumerate, Mincut };

const char* to_string(MinDistanceMethod method) noexcept;

/// Thrown when exhaustive enumeration is asked for a code of dimension > 24.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxEnumerationDimension = 24;

/// Minimum weight over all nonzero codewords of the row space (Gray-code walk).
std::size_t min_distance_enumerate(const BinaryMatrix& m);

/// Minimum distance of the incidence code of `g` as its smallest bond: the
/// least edge connectivity over components with at least one edge.
std::size_t min_distance_mincut(const Graph& g);

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  MinDistanceMethod method = MinDistanceMethod::Auto;  // the method that produced d

  /// "[n, k, d]_2"
  std::string to_string() const;
};

/// Parameters of the binary code spanned by the rows of the incidence matrix of `g`.
CodeParams incidence_code_parameters(const Graph& g,
                                     MinDistanceMethod method = MinDistanceMethod::Auto);

/// Same for Γ(R). Throws for p < 3.
CodeParams code_parameters(Prime p, MinDistanceMethod method = MinDistanceMethod::Auto);

}  // namespace zdg
