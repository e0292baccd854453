#include "starlike/smith.hpp"

namespace starlike {

std::vector<BigInt> prime_power_factors(BigInt n) {
  std::vector<BigInt> out;
  if (n < 0) n = -n;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    BigInt q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.push_back(q);
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<BigInt> SmithInvariants::elementary_divisors() const {
  std::vector<BigInt> out;
  for (const BigInt& f : invariant_factors)
    for (BigInt& q : prime_power_factors(f)) out.push_back(std::move(q));
  std::sort(out.begin(), out.end());
  return out;
}

SmithInvariants smith(const Eigen::SparseMatrix<int>& a) {
  try {
    return detail::smith_with<std::int64_t>(a);
  } catch (const detail::Overflow&) {
    return detail::smith_with<BigInt>(a);
  }
}

}  // namespace starlike
