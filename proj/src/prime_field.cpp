#include "klsc/prime_field.hpp"

#include <ostream>

namespace klsc {

thread_local std::uint32_t Fp::context_ = 0;

Fp Fp::inverse() const {
  if (p_ == 0) {
    if (raw_ == 1 || raw_ == -1) return Fp(raw_);
    throw_unbound();
  }
  if (raw_ == 0) throw std::domain_error("Fp: division by zero");
  long long a = raw_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    long long q = a / m;
    long long t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, p_);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace klsc
