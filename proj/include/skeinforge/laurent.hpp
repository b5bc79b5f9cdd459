#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "skeinforge/base_ring.hpp"

namespace skeinforge {

/// Exponent pair of a monomial t^t x^x. Ordered lexicographically on (t, x).
struct Monomial {
  std::int64_t t = 0;
  std::int64_t x = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse Laurent polynomial in t and x over a BaseRing.
///
/// Terms are kept sorted by ascending Monomial with no zero coefficients, so two
/// equal values always have identical term lists.
class LaurentPoly {
public:
  struct Term {
    Monomial exp;
    mpz_class coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(BaseRing base) : base_(base) {}

  static LaurentPoly constant(BaseRing base, const mpz_class& c);
  static LaurentPoly monomial(BaseRing base, const mpz_class& c, std::int64_t et, std::int64_t ex);
  /// Canonicalizes arbitrary input: sorts, merges duplicates, reduces and drops zeros.
  static LaurentPoly from_terms(BaseRing base, std::vector<Term> terms);

  const BaseRing& base() const noexcept { return base_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  mpz_class coefficient(Monomial m) const;

  /// Smallest/largest exponent of each variable. Zero polynomial has none.
  std::int64_t min_t() const;
  std::int64_t max_t() const;
  std::int64_t min_x() const;
  std::int64_t max_x() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(unsigned n) const;

  /// Canonical text: `-1 t^4 + 2 t^2 + 1 t^2 x^2`, `0` for zero.
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.base_ == b.base_ && a.terms_ == b.terms_;
  }

private:
  void require_same_base(const LaurentPoly& other) const;

  BaseRing base_;
  std::vector<LaurentPoly::Term> terms_;
};

/// q with q * b == a in the Laurent ring, or nullopt when b does not divide a.
/// Throws DivisionByZero when b is zero.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Parses the canonical text form back into a polynomial (used for JSON round trips).
LaurentPoly parse_laurent(BaseRing base, std::string_view text);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

} // namespace skeinforge
