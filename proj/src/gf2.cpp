#include "zdg/gf2.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "zdg/invariants.hpp"

namespace zdg {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), bits_(rows * stride_, 0) {}

bool BinaryMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BinaryMatrix index");
  return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1u;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BinaryMatrix index");
  auto& word = bits_[r * stride_ + c / 64];
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  word = value ? (word | mask) : (word & ~mask);
}

std::span<const std::uint64_t> BinaryMatrix::row(std::size_t r) const {
  return {bits_.data() + r * stride_, stride_};
}

std::span<std::uint64_t> BinaryMatrix::row(std::size_t r) {
  return {bits_.data() + r * stride_, stride_};
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const {
  std::size_t w = 0;
  for (auto word : row(r)) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

std::size_t BinaryMatrix::col_weight(std::size_t c) const {
  std::size_t w = 0;
  for (std::size_t r = 0; r < rows_; ++r) w += get(r, c) ? 1 : 0;
  return w;
}

std::string BinaryMatrix::to_text() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BinaryMatrix incidence_matrix(const Graph& g) {
  BinaryMatrix q(g.order(), g.size());
  const auto& edges = g.edges();
  for (std::size_t j = 0; j < edges.size(); ++j) {
    q.set(edges[j].u, j);
    q.set(edges[j].v, j);
  }
  return q;
}

BinaryMatrix row_space_basis(const BinaryMatrix& m) {
  BinaryMatrix work = m;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    const auto word = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows() && !(work.row(pivot)[word] & mask)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      auto a = work.row(pivot), b = work.row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const auto pivot_row = work.row(rank);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      auto target = work.row(r);
      if (!(target[word] & mask)) continue;
      for (std::size_t w = word; w < work.words_per_row(); ++w) target[w] ^= pivot_row[w];
    }
    ++rank;
  }
  BinaryMatrix basis(rank, m.cols());
  for (std::size_t r = 0; r < rank; ++r) {
    std::copy(work.row(r).begin(), work.row(r).end(), basis.row(r).begin());
  }
  return basis;
}

std::size_t gf2_rank(const BinaryMatrix& m) { return row_space_basis(m).rows(); }

const char* to_string(MinDistanceMethod method) noexcept {
  switch (method) {
    case MinDistanceMethod::Auto: return "auto";
    case MinDistanceMethod::Enumerate: return "enumerate";
    case MinDistanceMethod::Mincut: return "mincut";
  }
  return "?";
}

std::size_t min_distance_enumerate(const BinaryMatrix& m) {
  const auto basis = row_space_basis(m);
  const auto k = basis.rows();
  if (k == 0) throw std::domain_error("zero code has no minimum distance");
  if (k > kMaxEnumerationDimension) {
    throw CapacityError("enumeration needs dimension <= 24 (got " + std::to_string(k) +
                        "); use the mincut method");
  }
  // Gray-code walk: step i flips basis row ctz(i).
  std::vector<std::uint64_t> word(basis.words_per_row(), 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto flip = basis.row(static_cast<std::size_t>(std::countr_zero(i)));
    std::size_t weight = 0;
    for (std::size_t w = 0; w < word.size(); ++w) {
      word[w] ^= flip[w];
      weight += static_cast<std::size_t>(std::popcount(word[w]));
    }
    best = std::min(best, weight);
  }
  return best;
}

std::size_t min_distance_mincut(const Graph& g) {
  const auto comp = g.components();
  const auto count = g.component_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t id = 0; id < count; ++id) {
    std::vector<std::size_t> local(g.order(), std::numeric_limits<std::size_t>::max());
    std::size_t n = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (comp[v] == id) local[v] = n++;
    }
    if (n < 2) continue;
    std::vector<Graph::Edge> edges;
    for (const auto& e : g.edges()) {
      if (comp[e.u] == id) edges.push_back({local[e.u], local[e.v]});
    }
    best = std::min(best, edge_connectivity(Graph(n, std::move(edges))));
  }
  if (best == std::numeric_limits<std::size_t>::max()) {
    throw std::domain_error("edgeless graph gives the zero code");
  }
  return best;
}

std::string CodeParams::to_string() const {
  return "[" + std::to_string(n) + ", " + std::to_string(k) + ", " + std::to_string(d) + "]_2";
}

CodeParams incidence_code_parameters(const Graph& g, MinDistanceMethod method) {
  const auto q = incidence_matrix(g);
  CodeParams out;
  out.n = q.cols();
  out.k = gf2_rank(q);
  if (method == MinDistanceMethod::Auto) {
    method = out.k <= kMaxEnumerationDimension ? MinDistanceMethod::Enumerate
                                               : MinDistanceMethod::Mincut;
  }
  out.method = method;
  out.d = method == MinDistanceMethod::Enumerate ? min_distance_enumerate(q) : min_distance_mincut(g);
  return out;
}

CodeParams code_parameters(Prime p, MinDistanceMethod method) {
  if (p.value() < 3) throw std::invalid_argument("code parameters require an odd prime");
  return incidence_code_parameters(build_bruteforce(p).graph(), method);
}

}  // namespace zdg
