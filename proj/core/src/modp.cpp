#include "satk/modp.hpp"

namespace satk {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t checked_prime(Int p) {
  if (p < 2 || p >= (Int{1} << 31) || !is_prime(static_cast<std::uint64_t>(p)))
    throw DomainError("not-prime", "modulus " + std::to_string(p) + " is not a prime below 2^31");
  return static_cast<std::uint32_t>(p);
}

}  // namespace satk
