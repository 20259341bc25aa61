#include "zdg/ring.hpp"

#include <stdexcept>

namespace zdg {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint32_t p) : p_(p) {
  if (p >= kMaxExclusive) {
    throw std::invalid_argument("prime " + std::to_string(p) + " exceeds 2^15");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
}

RingElem make_elem(std::uint32_t a, std::uint32_t b, std::uint32_t c, Prime p) {
  const auto q = p.value();
  if (a >= q || b >= q || c >= q) {
    throw std::invalid_argument("ring element components must lie in [0, p)");
  }
  return {a, b, c};
}

const char* to_string(VertexClass cls) noexcept {
  switch (cls) {
    case VertexClass::Au: return "Au";
    case VertexClass::Au2: return "Au2";
    case VertexClass::AuPlusU2: return "AuPlusU2";
  }
  return "?";
}

RingElem ring_add(RingElem x, RingElem y, Prime p) noexcept {
  const std::uint64_t q = p.value();
  return {static_cast<std::uint32_t>((std::uint64_t{x.a} + y.a) % q),
          static_cast<std::uint32_t>((std::uint64_t{x.b} + y.b) % q),
          static_cast<std::uint32_t>((std::uint64_t{x.c} + y.c) % q)};
}

RingElem ring_mul(RingElem x, RingElem y, Prime p) noexcept {
  const std::uint64_t q = p.value();
  // Truncated product of a1 + b1 u + c1 u^2 and a2 + b2 u + c2 u^2 with u^3 = 0.
  const std::uint64_t a = (std::uint64_t{x.a} * y.a) % q;
  const std::uint64_t b = (std::uint64_t{x.a} * y.b + std::uint64_t{x.b} * y.a) % q;
  const std::uint64_t c =
      (std::uint64_t{x.a} * y.c + std::uint64_t{x.c} * y.a + std::uint64_t{x.b} * y.b) % q;
  return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
          static_cast<std::uint32_t>(c)};
}

std::vector<RingElem> nonzero_zero_divisors(Prime p) {
  const auto q = p.value();
  std::vector<RingElem> out;
  out.reserve(std::size_t{q} * q - 1);
  for (std::uint32_t b = 1; b < q; ++b) out.push_back({0, b, 0});
  for (std::uint32_t c = 1; c < q; ++c) out.push_back({0, 0, c});
  for (std::uint32_t b = 1; b < q; ++b) {
    for (std::uint32_t c = 1; c < q; ++c) out.push_back({0, b, c});
  }
  return out;
}

VertexClass classify(RingElem x) {
  if (is_zero(x)) throw std::invalid_argument("zero is not a vertex of the zero-divisor graph");
  if (is_unit(x)) throw std::invalid_argument("units are not zero-divisors");
  if (x.c == 0) return VertexClass::Au;
  if (x.b == 0) return VertexClass::Au2;
  return VertexClass::AuPlusU2;
}

std::string label(RingElem x) {
  return std::to_string(x.b) + "*u+" + std::to_string(x.c) + "*u^2";
}

}  // namespace zdg
