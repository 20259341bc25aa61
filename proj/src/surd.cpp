#include "zdg/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace zdg {
namespace {

BigInt gcd_big(BigInt x, BigInt y) {
  if (x < 0) x = -x;
  if (y < 0) y = -y;
  while (y != 0) {
    BigInt r = x % y;
    x = y;
    y = r;
  }
  return x;
}

int sign_of(const Rational& r) { return r.sign(); }

// Common radicand for a binary operation; 0 means both rational.
BigInt shared_radicand(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational()) return x.radicand();
  if (x.radicand() != y.radicand()) throw std::domain_error("surds with different radicands");
  return x.radicand();
}

std::string rational_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  const BigInt root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

QuadSurd::QuadSurd(Rational r, Rational s, const BigInt& radicand)
    : rational_(std::move(r)), coef_(std::move(s)), radicand_(radicand) {
  if (radicand_ < 0) throw std::domain_error("negative radicand");
  normalize();
}

void QuadSurd::normalize() {
  if (coef_ == 0 || radicand_ == 0) {
    coef_ = 0;
    radicand_ = 0;
    return;
  }
  // Pull square factors out of the radicand.
  BigInt outside = 1;
  BigInt rest = radicand_;
  for (BigInt f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      outside *= f;
    }
  }
  coef_ *= Rational(outside);
  radicand_ = rest;
  if (radicand_ == 1) {
    rational_ += coef_;
    coef_ = 0;
    radicand_ = 0;
  }
}

int QuadSurd::sign() const {
  const int r = sign_of(rational_);
  const int s = sign_of(coef_);
  if (s == 0) return r;
  if (r == 0 || r == s) return s;
  // Opposite signs: compare r^2 against s^2 * D.
  const Rational lhs = rational_ * rational_;
  const Rational rhs = coef_ * coef_ * Rational(radicand_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? r : s;
}

double QuadSurd::to_double() const {
  const double r = static_cast<double>(rational_);
  if (is_rational()) return r;
  return r + static_cast<double>(coef_) * std::sqrt(static_cast<double>(radicand_));
}

QuadSurd::Parts QuadSurd::parts() const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const BigInt rd = denominator(rational_);
  const BigInt sd = denominator(coef_);
  const BigInt c = rd / gcd_big(rd, sd) * sd;
  BigInt a = numerator(rational_) * (c / rd);
  BigInt b = numerator(coef_) * (c / sd);
  return {a, b, c, radicand_};
}

std::string QuadSurd::to_string() const {
  if (is_rational()) return rational_string(rational_);
  const auto [a, b, c, d] = parts();
  std::string out;
  if (a != 0) out += a.str();
  const BigInt mag = b < 0 ? BigInt(-b) : b;
  if (b < 0) {
    out += "-";
  } else if (a != 0) {
    out += "+";
  }
  if (mag != 1) out += mag.str() + "*";
  out += "sqrt(" + d.str() + ")";
  if (c != 1) out = "(" + out + ")/" + c.str();
  return out;
}

QuadSurd QuadSurd::operator-() const {
  QuadSurd out = *this;
  out.rational_ = -out.rational_;
  out.coef_ = -out.coef_;
  return out;
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  const BigInt d = shared_radicand(x, y);
  return QuadSurd(x.rational_ + y.rational_, x.coef_ + y.coef_, d);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  const BigInt d = shared_radicand(x, y);
  const Rational r = x.rational_ * y.rational_ + x.coef_ * y.coef_ * Rational(d);
  const Rational s = x.rational_ * y.coef_ + x.coef_ * y.rational_;
  return QuadSurd(r, s, d);
}

bool operator==(const QuadSurd& x, const QuadSurd& y) {
  return x.rational_ == y.rational_ && x.coef_ == y.coef_ && x.radicand_ == y.radicand_;
}

std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y) {
  if (x == y) return std::strong_ordering::equal;
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

QuadSurd abs(const QuadSurd& x) { return x.sign() < 0 ? -x : x; }

QuadSurd divide(const QuadSurd& x, const Rational& by) {
  if (by == 0) throw std::domain_error("division by zero");
  return QuadSurd(x.rational_part() / by, x.surd_coefficient() / by,
                  x.is_rational() ? BigInt(0) : x.radicand());
}

}  // namespace zdg
