#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

namespace zdg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value r + s*sqrt(D) with D squarefree and > 1, or a plain rational
/// (s = 0, D = 0). Arithmetic between two irrational values requires equal D;
/// mixing radicands throws std::domain_error.
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(std::int64_t n) : rational_(n) {}  // NOLINT: implicit from integers is intended
  QuadSurd(Rational r) : rational_(std::move(r)) {}  // NOLINT
  /// r + s*sqrt(radicand); radicand >= 0 is reduced to squarefree form.
  QuadSurd(Rational r, Rational s, const BigInt& radicand);

  static QuadSurd sqrt(const BigInt& n) { return QuadSurd(Rational(0), Rational(1), n); }

  const Rational& rational_part() const noexcept { return rational_; }
  const Rational& surd_coefficient() const noexcept { return coef_; }
  const BigInt& radicand() const noexcept { return radicand_; }
  bool is_rational() const noexcept { return coef_ == 0; }

  /// -1, 0 or +1, decided exactly.
  int sign() const;
  double to_double() const;

  /// (a + b*sqrt(D)) / c with c > 0 and gcd(a, b, c) = 1; D = 0 for rationals.
  struct Parts {
    BigInt a, b, c, d;
  };
  Parts parts() const;

  /// "4", "404/3", "(3+sqrt(329))/2", "-1+sqrt(5)".
  std::string to_string() const;

  QuadSurd operator-() const;
  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  QuadSurd& operator+=(const QuadSurd& y) { return *this = *this + y; }

  friend bool operator==(const QuadSurd& x, const QuadSurd& y);
  friend std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y);

 private:
  void normalize();

  Rational rational_{0};
  Rational coef_{0};
  BigInt radicand_{0};
};

QuadSurd abs(const QuadSurd& x);
QuadSurd divide(const QuadSurd& x, const Rational& by);

/// Integer square root when n is a perfect square.
bool is_perfect_square(const BigInt& n);

}  // namespace zdg
