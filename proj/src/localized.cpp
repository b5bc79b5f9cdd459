#include "skeinforge/localized.hpp"

#include <ostream>

#include "skeinforge/errors.hpp"

namespace skeinforge {

namespace {

void require_same_ring(const LocalizedScalar& a, const LocalizedScalar& b) {
  if (!(a.ring() == b.ring()))
    throw ConfigError("mismatched rings: " + a.ring().name() + " vs " + b.ring().name());
}

} // namespace

LocalizedScalar::LocalizedScalar(Ring ring, LaurentPoly num, unsigned dpow)
    : ring_(ring), num_(std::move(num)), dpow_(dpow) {
  if (!(num_.base() == ring_.base()))
    throw ConfigError("numerator over " + num_.base().name() + " in ring " + ring_.name());
  normalize();
}

void LocalizedScalar::normalize() {
  if (num_.is_zero()) {
    dpow_ = 0;
    return;
  }
  if (dpow_ == 0)
    return;
  const LaurentPoly d = ring_.determinant();
  while (dpow_ > 0) {
    std::optional<LaurentPoly> q = exact_div(num_, d);
    if (!q)
      break;
    num_ = std::move(*q);
    --dpow_;
  }
}

LocalizedScalar LocalizedScalar::operator-() const {
  LocalizedScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

LocalizedScalar operator+(const LocalizedScalar& a, const LocalizedScalar& b) {
  require_same_ring(a, b);
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  const unsigned k = std::max(a.dpow_, b.dpow_);
  const LaurentPoly d = a.ring_.determinant();
  LaurentPoly num = a.num_ * d.pow(k - a.dpow_) + b.num_ * d.pow(k - b.dpow_);
  return LocalizedScalar(a.ring_, std::move(num), k);
}

LocalizedScalar operator-(const LocalizedScalar& a, const LocalizedScalar& b) { return a + (-b); }

LocalizedScalar operator*(const LocalizedScalar& a, const LocalizedScalar& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero())
    return LocalizedScalar(a.ring_);
  return LocalizedScalar(a.ring_, a.num_ * b.num_, a.dpow_ + b.dpow_);
}

std::string LocalizedScalar::to_string() const {
  std::string s = num_.to_string();
  if (dpow_ == 1)
    s += " / D";
  else if (dpow_ > 1)
    s += " / D^" + std::to_string(dpow_);
  return s;
}

LocalizedScalar specialize(const LocalizedScalar& a, const Specialization& mode) {
  if (a.ring().mode() != RingMode::generic)
    throw PreconditionError("specialization starts from the generic ring, got " + a.ring().name());
  return LocalizedScalar(specialized_ring(mode), specialize(a.numerator(), mode), a.dpow());
}

std::ostream& operator<<(std::ostream& os, const LocalizedScalar& s) { return os << s.to_string(); }

} // namespace skeinforge
