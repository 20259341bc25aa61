#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "zdg/spectra.hpp"

namespace zdg {
namespace {

using namespace zdg::testing;

// Printed 8x8 matrices for p = 3 in canonical vertex order.
const int kAdjacencyP3[8][8] = {
    {0, 0, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0, 0}, {1, 1, 0, 1, 1, 1, 1, 1},
    {1, 1, 1, 0, 1, 1, 1, 1}, {0, 0, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0, 0},
    {0, 0, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0, 0}};
const int kLaplacianP3[8][8] = {
    {2, 0, -1, -1, 0, 0, 0, 0},   {0, 2, -1, -1, 0, 0, 0, 0},   {-1, -1, 7, -1, -1, -1, -1, -1},
    {-1, -1, -1, 7, -1, -1, -1, -1}, {0, 0, -1, -1, 2, 0, 0, 0}, {0, 0, -1, -1, 0, 2, 0, 0},
    {0, 0, -1, -1, 0, 0, 2, 0},   {0, 0, -1, -1, 0, 0, 0, 2}};

Spectrum ints(std::initializer_list<std::pair<std::int64_t, std::size_t>> xs) {
  Spectrum s;
  for (auto [v, m] : xs) s.push_back({QuadSurd(v), m});
  return normalize_spectrum(s);
}

TEST(AdjacencyMatrix, MatchesPrintedMatrixAtThree) {
  const auto g = build_bruteforce(Prime(3)).graph();
  const auto a = adjacency_matrix(g);
  for (std::size_t i = 0; i < 8; ++i) {
    double row = 0;
    for (std::size_t j = 0; j < 8; ++j) {
      EXPECT_EQ(a(i, j), kAdjacencyP3[i][j]) << i << "," << j;
      row += a(i, j);
    }
    EXPECT_EQ(row, static_cast<double>(g.degree(i)));
  }
  EXPECT_EQ(a.trace(), 0.0);
}

TEST(LaplacianMatrix, MatchesPrintedMatrixAtThree) {
  const auto g = build_bruteforce(Prime(3)).graph();
  const auto l = laplacian_matrix(g);
  for (std::size_t i = 0; i < 8; ++i) {
    double row = 0;
    for (std::size_t j = 0; j < 8; ++j) {
      EXPECT_EQ(l(i, j), kLaplacianP3[i][j]) << i << "," << j;
      if (i != j) EXPECT_TRUE(l(i, j) == 0.0 || l(i, j) == -1.0);
      row += l(i, j);
    }
    EXPECT_EQ(row, 0.0);
  }
  EXPECT_EQ(l.trace(), 26.0);
}

TEST(NumericSpectrum, SmallCases) {
  DenseSymMatrix k2(2);
  k2(0, 1) = k2(1, 0) = 1;
  const auto e = numeric_spectrum(k2);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_NEAR(e[0], -1.0, 1e-12);
  EXPECT_NEAR(e[1], 1.0, 1e-12);

  DenseSymMatrix bad(2);
  bad(0, 1) = 1;
  EXPECT_THROW(numeric_spectrum(bad), std::invalid_argument);
}

TEST(NumericSpectrum, CycleSpectrum) {
  // C_n adjacency eigenvalues 2 cos(2 pi k / n).
  const std::size_t n = 7;
  auto got = numeric_spectrum(adjacency_matrix(cycle(n)));
  std::vector<double> want;
  for (std::size_t k = 0; k < n; ++k) want.push_back(2 * std::cos(2 * M_PI * k / n));
  std::sort(want.begin(), want.end());
  for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], want[i], 1e-10);
}

TEST(ExactAdjacencySpectrum, AtThree) {
  EXPECT_EQ(exact_adjacency_spectrum(Prime(3)), ints({{0, 5}, {4, 1}, {-1, 1}, {-3, 1}}));
}

TEST(ExactAdjacencySpectrum, AtFive) {
  const auto s = exact_adjacency_spectrum(Prime(5));
  const Spectrum want = normalize_spectrum({{QuadSurd(0), 19},
                                            {QuadSurd(-1), 3},
                                            {QuadSurd(Rational(3, 2), Rational(1, 2), 329), 1},
                                            {QuadSurd(Rational(3, 2), Rational(-1, 2), 329), 1}});
  EXPECT_EQ(s, want);
  EXPECT_NEAR(s.back().value.to_double(), 10.5692, 1e-4);
  EXPECT_NEAR(s.front().value.to_double(), -7.5692, 1e-4);
}

TEST(ExactAdjacencySpectrum, TraceIdentities) {
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
    const auto s = exact_adjacency_spectrum(Prime(q));
    const auto g = build_bruteforce(Prime(q));
    QuadSurd sum(0), squares(0);
    std::size_t nonzero = 0;
    for (const auto& e : s) {
      const QuadSurd m(static_cast<std::int64_t>(e.multiplicity));
      sum += m * e.value;
      squares += m * e.value * e.value;
      if (e.value.sign() != 0) nonzero += e.multiplicity;
    }
    EXPECT_EQ(sum, QuadSurd(0));
    EXPECT_EQ(squares, QuadSurd(static_cast<std::int64_t>(2 * g.size())));
    EXPECT_EQ(nonzero, q);
    EXPECT_EQ(spectrum_size(s), g.order());
  }
}

TEST(ExactAdjacencySpectrum, DiscriminantSquareOnlyAtThree) {
  for (std::int64_t q : {3, 5, 7, 11, 13}) {
    const BigInt disc = BigInt(q - 2) * (q - 2) + BigInt(4) * q * (q - 1) * (q - 1);
    EXPECT_EQ(is_perfect_square(disc), q == 3) << q;
    const auto s = exact_adjacency_spectrum(Prime(static_cast<std::uint32_t>(q)));
    const auto& top = s.back().value;
    EXPECT_EQ(top == QuadSurd(3 * q - 5), q == 3);
    EXPECT_NEAR(top.to_double(), ((q - 2) + std::sqrt(static_cast<double>(disc))) / 2, 1e-9);
  }
}

TEST(ExactLaplacianSpectrum, Examples) {
  EXPECT_EQ(exact_laplacian_spectrum(Prime(3)), ints({{0, 1}, {8, 2}, {2, 5}}));
  EXPECT_EQ(exact_laplacian_spectrum(Prime(5)), ints({{0, 1}, {24, 4}, {4, 19}}));
  const auto s = exact_laplacian_spectrum(Prime(7));
  EXPECT_EQ(s.front().value, QuadSurd(0));
  EXPECT_EQ(s.front().multiplicity, 1u);
  EXPECT_GT(s[1].value, QuadSurd(0));
}

TEST(ExactSpectra, RejectSmallPrime) {
  EXPECT_THROW(exact_adjacency_spectrum(Prime(2)), std::invalid_argument);
  EXPECT_THROW(exact_laplacian_spectrum(Prime(2)), std::invalid_argument);
  EXPECT_THROW(spectral_summary(Prime(2)), std::invalid_argument);
}

TEST(ExactSpectra, AgreeWithJacobi) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const auto g = build_bruteforce(Prime(q)).graph();
    EXPECT_LT(max_abs_deviation(exact_adjacency_spectrum(Prime(q)), numeric_spectrum(adjacency_matrix(g))), 1e-9);
    EXPECT_LT(max_abs_deviation(exact_laplacian_spectrum(Prime(q)), numeric_spectrum(laplacian_matrix(g))), 1e-9);
  }
  const auto l5 = numeric_spectrum(laplacian_matrix(build_bruteforce(Prime(5)).graph()));
  EXPECT_NEAR(l5.front(), 0.0, 1e-9);
  for (std::size_t i = 1; i < 20; ++i) EXPECT_NEAR(l5[i], 4.0, 1e-9);
  for (std::size_t i = 20; i < 24; ++i) EXPECT_NEAR(l5[i], 24.0, 1e-9);
}

TEST(CompleteSplitSpectra, AgreeWithJacobiOnSmallShapes) {
  for (std::size_t k = 1; k <= 5; ++k) {
    for (std::size_t s = 1; s <= 6; ++s) {
      const auto g = complete_split(k, s);
      EXPECT_LT(max_abs_deviation(complete_split_adjacency_spectrum(k, s),
                                  numeric_spectrum(adjacency_matrix(g))),
                1e-9)
          << k << "," << s;
      EXPECT_LT(max_abs_deviation(complete_split_laplacian_spectrum(k, s),
                                  numeric_spectrum(laplacian_matrix(g))),
                1e-9)
          << k << "," << s;
    }
  }
}

TEST(SpectralSummary, AtThree) {
  const auto s = spectral_summary(Prime(3));
  EXPECT_EQ(s.energy, QuadSurd(8));
  EXPECT_EQ(s.spectral_radius, QuadSurd(4));
  EXPECT_EQ(s.laplacian_spectral_radius, QuadSurd(8));
  EXPECT_EQ(s.adjacency_rank, 3u);
  // |0-3.25| + 2|8-3.25| + 5|2-3.25|
  EXPECT_EQ(s.laplacian_energy, QuadSurd(19));
}

TEST(SpectralSummary, AtFive) {
  const auto s = spectral_summary(Prime(5));
  EXPECT_EQ(s.energy, QuadSurd(Rational(3), Rational(1), 329));
  EXPECT_NEAR(s.energy.to_double(), 21.1384, 1e-4);
  EXPECT_EQ(s.laplacian_energy, QuadSurd(Rational(404, 3)));
  EXPECT_EQ(s.laplacian_spectral_radius, QuadSurd(24));
  EXPECT_EQ(s.adjacency_rank, 5u);
}

TEST(SpectralSummary, LaplacianIdentitiesAcrossPrimes) {
  for (std::int64_t q : {3, 5, 7, 11}) {
    const Prime p(static_cast<std::uint32_t>(q));
    const auto l = exact_laplacian_spectrum(p);
    const auto g = build_bruteforce(p);
    QuadSurd sum(0);
    for (const auto& e : l) sum += QuadSurd(static_cast<std::int64_t>(e.multiplicity)) * e.value;
    EXPECT_EQ(sum, QuadSurd(static_cast<std::int64_t>(2 * g.size())));
    const auto s = spectral_summary(p);
    EXPECT_EQ(s.laplacian_spectral_radius, QuadSurd(q * q - 1));
    EXPECT_LE(s.laplacian_spectral_radius, QuadSurd(static_cast<std::int64_t>(g.order())));
    // LE = (2p^5-6p^4+6p^3-4p+2)/(p^2-1)
    const std::int64_t num = 2 * q * q * q * q * q - 6 * q * q * q * q + 6 * q * q * q - 4 * q + 2;
    EXPECT_EQ(s.laplacian_energy, QuadSurd(Rational(num, q * q - 1)));
  }
}

TEST(Summarize, RejectsEmptyGraph) {
  EXPECT_THROW(summarize({}, {}, 0, 0), std::invalid_argument);
}

}  // namespace
}  // namespace zdg
