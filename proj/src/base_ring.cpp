#include "skeinforge/base_ring.hpp"

#include "skeinforge/errors.hpp"

namespace skeinforge {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2)
    return false;
  for (std::uint64_t f : {2ull, 3ull, 5ull}) {
    if (n % f == 0)
      return n == f;
  }
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  // Deterministic for 64-bit inputs at this repetition count.
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

BaseRing BaseRing::prime_field(std::uint64_t p) {
  if (!is_prime(p))
    throw ConfigError("field characteristic " + std::to_string(p) + " is not prime");
  return BaseRing(p);
}

mpz_class BaseRing::reduce(mpz_class c) const {
  if (modulus_ != 0) {
    mpz_class m;
    mpz_import(m.get_mpz_t(), 1, 1, sizeof(modulus_), 0, 0, &modulus_);
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  }
  return c;
}

std::optional<mpz_class> BaseRing::divide(const mpz_class& a, const mpz_class& b) const {
  if (modulus_ == 0) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
      return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  mpz_class m;
  mpz_import(m.get_mpz_t(), 1, 1, sizeof(modulus_), 0, 0, &modulus_);
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DivisionByZero("division by zero in " + name());
  return reduce(a * inv);
}

std::string BaseRing::name() const {
  return modulus_ == 0 ? std::string("Z") : "GF(" + std::to_string(modulus_) + ")";
}

} // namespace skeinforge
