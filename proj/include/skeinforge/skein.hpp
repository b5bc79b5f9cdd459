#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skeinforge/diagram.hpp"
#include "skeinforge/homfly.hpp"
#include "skeinforge/localized.hpp"
#include "skeinforge/ring.hpp"

namespace skeinforge {

/// Coordinates sum_e a_e Z_e of an ordered singular link in the basis of
/// connected sums Z_e = Z_{e_1} * ... * Z_{e_d}, Z_0 = X and Z_1 = Y.
///
/// Stored densely: coordinate of e lives at e.index(). A zero entry is an absent key.
class OrderedSkeinElement {
public:
  OrderedSkeinElement() = default;
  /// The zero element of degree d.
  OrderedSkeinElement(Ring ring, std::size_t d);
  /// Throws PreconditionError unless coords.size() == 2^d.
  OrderedSkeinElement(Ring ring, std::size_t d, std::vector<LocalizedScalar> coords);

  /// Z_e itself.
  static OrderedSkeinElement basis(Ring ring, const ResolutionVector& e);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t degree() const noexcept { return d_; }
  const LocalizedScalar& operator[](const ResolutionVector& e) const;
  const LocalizedScalar& at_index(std::uint64_t index) const { return coords_.at(index); }
  const std::vector<LocalizedScalar>& coords() const noexcept { return coords_; }
  std::size_t nonzero_count() const noexcept;

  /// One `Z[01] = <coeff>` line per nonzero coordinate, `0` when there are none.
  std::string to_string() const;

  friend OrderedSkeinElement operator+(const OrderedSkeinElement& a, const OrderedSkeinElement& b);
  friend OrderedSkeinElement operator-(const OrderedSkeinElement& a, const OrderedSkeinElement& b);
  friend OrderedSkeinElement operator*(const LocalizedScalar& c, const OrderedSkeinElement& a);

  friend bool operator==(const OrderedSkeinElement&, const OrderedSkeinElement&) = default;

private:
  Ring ring_;
  std::size_t d_ = 0;
  std::vector<LocalizedScalar> coords_;
};

/// sum c_ij X^i Y^j in the commutative polynomial algebra; only nonzero terms are stored.
class SkeinPolynomial {
public:
  using Exponents = std::pair<std::uint32_t, std::uint32_t>; // (i, j)

  SkeinPolynomial() = default;
  explicit SkeinPolynomial(Ring ring) : ring_(ring) {}

  static SkeinPolynomial constant(const LocalizedScalar& c);
  static SkeinPolynomial term(const LocalizedScalar& c, std::uint32_t i, std::uint32_t j);
  static SkeinPolynomial X(Ring ring) { return term(LocalizedScalar::one(ring), 1, 0); }
  static SkeinPolynomial Y(Ring ring) { return term(LocalizedScalar::one(ring), 0, 1); }

  const Ring& ring() const noexcept { return ring_; }
  const std::map<Exponents, LocalizedScalar>& coeffs() const noexcept { return coeffs_; }
  LocalizedScalar coefficient(std::uint32_t i, std::uint32_t j) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  SkeinPolynomial& add_term(const LocalizedScalar& c, std::uint32_t i, std::uint32_t j);
  friend SkeinPolynomial operator+(const SkeinPolynomial& a, const SkeinPolynomial& b);
  friend SkeinPolynomial operator-(const SkeinPolynomial& a, const SkeinPolynomial& b);
  friend SkeinPolynomial operator*(const SkeinPolynomial& a, const SkeinPolynomial& b);
  friend SkeinPolynomial operator*(const LocalizedScalar& c, const SkeinPolynomial& a);

  /// Human-readable form, e.g. `X`, `Y - x X`, `t^(-2) Y - t^(-1) x X`, `1`.
  std::string to_string() const;

  friend bool operator==(const SkeinPolynomial&, const SkeinPolynomial&) = default;

private:
  Ring ring_;
  std::map<Exponents, LocalizedScalar> coeffs_;
};

/// M = [[delta, 1], [1, delta]]: row = resolution bit, column = basis letter (X, Y).
using Matrix2 = std::array<std::array<LocalizedScalar, 2>, 2>;
Matrix2 eval_matrix(const Ring& ring);
/// D^-1 [[x(t^-1 - t), -x^2], [-x^2, x(t^-1 - t)]]
Matrix2 eval_matrix_inverse(const Ring& ring);

/// HOMFLY-PT values of the 2^d full resolutions, indexed by ResolutionVector::index().
using EvalVector = std::vector<SkeinValue>;

/// Applies a 2x2 matrix along each of the d tensor axes of a length-2^d vector.
std::vector<LocalizedScalar> apply_kronecker(const Matrix2& m, std::vector<LocalizedScalar> v, std::size_t d,
                                             unsigned jobs = 1);

/// The unique a with M^{(x)d} a = p.
OrderedSkeinElement solve_coordinates(const Ring& ring, std::span<const SkeinValue> p, unsigned jobs = 1);

/// M^{(x)d} a, the resolution values of an element (inverse of solve_coordinates).
std::vector<LocalizedScalar> evaluate_coordinates(const OrderedSkeinElement& a, unsigned jobs = 1);

/// (a * b)_{(e, m)} = a_e b_m
OrderedSkeinElement star(const OrderedSkeinElement& a, const OrderedSkeinElement& b);

/// c_ij = sum of a_e over e with i zeros and j ones.
SkeinPolynomial project_unordered(const OrderedSkeinElement& a);

/// a'_{w e} = a_e, the coordinates of reorder(L, w) given those of L.
OrderedSkeinElement permute_coordinates(const OrderedSkeinElement& a, const Permutation& w);

/// Computes invariants of ordered singular links in one ring.
///
/// Owns a HomflyEngine, so the memo cache is shared by every link evaluated
/// through the same SkeinEngine.
class SkeinEngine {
public:
  struct Options {
    std::size_t max_crossings = 24;
    std::size_t max_singular = 10;
    unsigned jobs = 1;
  };

  explicit SkeinEngine(Ring ring = Ring::generic()) : SkeinEngine(ring, Options{}) {}
  SkeinEngine(Ring ring, Options options);

  const Ring& ring() const noexcept { return homfly_.ring(); }
  const Options& options() const noexcept { return options_; }
  const HomflyEngine& homfly_engine() const noexcept { return homfly_; }

  /// homfly(resolve_all(L, rho)) for every rho. Throws BoundError past max_singular.
  EvalVector eval_vector(const OrderedSingularLink& link) const;
  OrderedSkeinElement invariant_ordered(const OrderedSingularLink& link) const;
  SkeinPolynomial invariant(const OrderedSingularLink& link) const;
  SkeinValue homfly(const BraidWord& word) const { return homfly_.evaluate(word); }

private:
  Options options_;
  HomflyEngine homfly_;
};

} // namespace skeinforge
