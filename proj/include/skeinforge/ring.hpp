#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "skeinforge/base_ring.hpp"
#include "skeinforge/laurent.hpp"

namespace skeinforge {

enum class RingMode { generic, conway, prime_field };

/// The coefficient ring in which skein values live: Laurent polynomials in t, x
/// over Z (generic), over Z with t = 1 (Conway), or over F_p.
///
/// Fixes the symbols t and x and the two derived constants every computation
/// uses: the unlink value delta = x^-1 (t^-1 - t) and the determinant
/// D = (t^-1 - t - x)(t^-1 - t + x).
class Ring {
public:
  Ring() = default;

  static Ring generic() noexcept { return Ring(BaseRing::integers(), RingMode::generic); }
  static Ring conway() noexcept { return Ring(BaseRing::integers(), RingMode::conway); }
  static Ring gf(std::uint64_t p) { return Ring(BaseRing::prime_field(p), RingMode::prime_field); }
  /// `generic`, `conway` or `gf:<p>`. Throws ConfigError.
  static Ring parse(std::string_view text);

  RingMode mode() const noexcept { return mode_; }
  const BaseRing& base() const noexcept { return base_; }
  bool t_is_one() const noexcept { return mode_ == RingMode::conway; }

  LaurentPoly zero() const { return LaurentPoly(base_); }
  LaurentPoly constant(long c) const { return LaurentPoly::constant(base_, c); }
  LaurentPoly one() const { return constant(1); }
  /// c t^et x^ex; in Conway mode t^et collapses to 1.
  LaurentPoly monomial(long c, std::int64_t et, std::int64_t ex) const;
  LaurentPoly t() const { return monomial(1, 1, 0); }
  LaurentPoly t_inv() const { return monomial(1, -1, 0); }
  LaurentPoly x() const { return monomial(1, 0, 1); }
  LaurentPoly x_inv() const { return monomial(1, 0, -1); }
  /// t^-1 - t
  LaurentPoly t_gap() const { return t_inv() - t(); }
  LaurentPoly delta() const { return x_inv() * t_gap(); }
  LaurentPoly determinant() const;

  /// Image of an element of Z[t^+-1, x^+-1] under the homomorphism into this ring.
  LaurentPoly from_integral(const LaurentPoly& p) const;

  std::string name() const;

  friend bool operator==(const Ring&, const Ring&) = default;

private:
  Ring(BaseRing base, RingMode mode) noexcept : base_(base), mode_(mode) {}

  BaseRing base_;
  RingMode mode_ = RingMode::generic;
};

/// A ring homomorphism out of the generic ring: t -> 1, or coefficients mod p.
struct Specialization {
  enum class Kind { conway_t1, to_prime_field };

  Kind kind = Kind::conway_t1;
  std::uint64_t p = 0;

  static Specialization conway_t1() noexcept { return {Kind::conway_t1, 0}; }
  static Specialization to_prime_field(std::uint64_t p) { return {Kind::to_prime_field, p}; }
};

/// conway_t1 sets every t exponent to 0 and collects terms; to_prime_field
/// requires an integer base and reduces coefficients mod p.
LaurentPoly specialize(const LaurentPoly& a, const Specialization& mode);

/// The ring a generic-ring value lands in under `mode`.
Ring specialized_ring(const Specialization& mode);

} // namespace skeinforge
