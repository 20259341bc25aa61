#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

// Arithmetic in the chain ring F_p[u]/(u^3), elements written a + u*b + u^2*c.
namespace zdg {

/// An odd or even prime below 2^15. Construction rejects anything else.
class Prime {
 public:
  static constexpr std::uint32_t kMaxExclusive = 1u << 15;

  explicit Prime(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }
  bool is_odd() const noexcept { return p_ != 2; }

  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

struct RingElem {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;

  friend auto operator<=>(const RingElem&, const RingElem&) = default;
};

/// Checked constructor; throws std::invalid_argument on unreduced components.
RingElem make_elem(std::uint32_t a, std::uint32_t b, std::uint32_t c, Prime p);

enum class VertexClass { Au, Au2, AuPlusU2 };

const char* to_string(VertexClass cls) noexcept;

RingElem ring_add(RingElem x, RingElem y, Prime p) noexcept;
RingElem ring_mul(RingElem x, RingElem y, Prime p) noexcept;

inline bool is_zero(RingElem x) noexcept { return x.a == 0 && x.b == 0 && x.c == 0; }
inline bool is_unit(RingElem x) noexcept { return x.a != 0; }

/// Z*(R) in canonical order: A_u by b, then A_{u^2} by c, then A_{u+u^2} by (b, c).
std::vector<RingElem> nonzero_zero_divisors(Prime p);

/// Throws std::invalid_argument for zero or a unit.
VertexClass classify(RingElem x);

/// Label "b*u+c*u^2" used by every export format.
std::string label(RingElem x);

}  // namespace zdg
