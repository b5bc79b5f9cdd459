#pragma once

#include <iosfwd>
#include <string>

#include "skeinforge/laurent.hpp"
#include "skeinforge/ring.hpp"

namespace skeinforge {

/// num / D^dpow, where D is the determinant of the ring.
///
/// Always normalized: dpow == 0 or D does not divide num, and zero is (0, 0).
/// Normalized forms are unique, so structural equality is value equality.
class LocalizedScalar {
public:
  LocalizedScalar() = default;
  explicit LocalizedScalar(Ring ring) : ring_(ring), num_(ring.base()) {}
  LocalizedScalar(Ring ring, LaurentPoly num, unsigned dpow = 0);

  static LocalizedScalar zero(Ring ring) { return LocalizedScalar(ring); }
  static LocalizedScalar one(Ring ring) { return LocalizedScalar(ring, ring.one()); }

  const Ring& ring() const noexcept { return ring_; }
  const LaurentPoly& numerator() const noexcept { return num_; }
  unsigned dpow() const noexcept { return dpow_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return dpow_ == 0 && num_.is_one(); }

  LocalizedScalar operator-() const;
  friend LocalizedScalar operator+(const LocalizedScalar& a, const LocalizedScalar& b);
  friend LocalizedScalar operator-(const LocalizedScalar& a, const LocalizedScalar& b);
  friend LocalizedScalar operator*(const LocalizedScalar& a, const LocalizedScalar& b);
  LocalizedScalar& operator+=(const LocalizedScalar& b) { return *this = *this + b; }
  LocalizedScalar& operator-=(const LocalizedScalar& b) { return *this = *this - b; }
  LocalizedScalar& operator*=(const LocalizedScalar& b) { return *this = *this * b; }

  /// `<poly>` or `<poly> / D^k` (`/ D` for k = 1).
  std::string to_string() const;

  friend bool operator==(const LocalizedScalar&, const LocalizedScalar&) = default;

private:
  void normalize();

  Ring ring_;
  LaurentPoly num_;
  unsigned dpow_ = 0;
};

/// Applies a specialization to numerator; the source must be in the generic ring.
LocalizedScalar specialize(const LocalizedScalar& a, const Specialization& mode);

std::ostream& operator<<(std::ostream& os, const LocalizedScalar& s);

} // namespace skeinforge
