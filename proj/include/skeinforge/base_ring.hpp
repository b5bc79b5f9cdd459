#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace skeinforge {

/// Coefficient ring of a Laurent polynomial: the integers or a prime field F_p.
class BaseRing {
public:
  constexpr BaseRing() noexcept = default;

  static constexpr BaseRing integers() noexcept { return BaseRing{}; }
  /// Throws ConfigError unless p is prime.
  static BaseRing prime_field(std::uint64_t p);

  bool is_prime_field() const noexcept { return modulus_ != 0; }
  /// 0 for the integers.
  std::uint64_t characteristic() const noexcept { return modulus_; }

  /// Canonical representative; residues in [0, p) for F_p.
  mpz_class reduce(mpz_class c) const;
  /// q with q * b == a, if it exists. b must be nonzero in this ring.
  std::optional<mpz_class> divide(const mpz_class& a, const mpz_class& b) const;

  std::string name() const;

  friend bool operator==(const BaseRing&, const BaseRing&) = default;

private:
  explicit constexpr BaseRing(std::uint64_t p) noexcept : modulus_(p) {}

  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

} // namespace skeinforge
