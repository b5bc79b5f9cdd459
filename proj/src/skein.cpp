#include "skeinforge/skein.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "skeinforge/errors.hpp"
#include "skeinforge/parallel.hpp"

namespace skeinforge {

namespace {

std::uint64_t cube_size(std::size_t d) {
  if (d >= 63)
    throw BoundError("too many singular points: " + std::to_string(d));
  return std::uint64_t{1} << d;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b))
    throw ConfigError("mismatched rings: " + a.name() + " vs " + b.name());
}

std::string power_text(char var, std::int64_t e) {
  std::string s(1, var);
  if (e < 0)
    s += "^(" + std::to_string(e) + ")";
  else if (e != 1)
    s += "^" + std::to_string(e);
  return s;
}

std::string monomial_text(std::uint32_t i, std::uint32_t j) {
  std::string s;
  if (i > 0)
    s += i == 1 ? "X" : "X^" + std::to_string(i);
  if (j > 0) {
    if (!s.empty())
      s += ' ';
    s += j == 1 ? "Y" : "Y^" + std::to_string(j);
  }
  return s;
}

struct SignedText {
  bool negative = false;
  std::string body;
};

// Monomial coefficients print inline with a separate sign; anything else is parenthesized.
SignedText coefficient_text(const LocalizedScalar& c, bool bare) {
  const LaurentPoly& num = c.numerator();
  if (bare)
    return {false, c.to_string()};
  if (c.dpow() != 0 || !num.is_monomial())
    return {false, "(" + c.to_string() + ")"};
  const LaurentPoly::Term& term = num.terms().front();
  SignedText out;
  mpz_class magnitude = term.coeff;
  if (magnitude < 0) {
    out.negative = true;
    magnitude = -magnitude;
  }
  std::vector<std::string> parts;
  if (magnitude != 1)
    parts.push_back(magnitude.get_str());
  if (term.exp.t != 0)
    parts.push_back(power_text('t', term.exp.t));
  if (term.exp.x != 0)
    parts.push_back(power_text('x', term.exp.x));
  for (std::size_t k = 0; k < parts.size(); ++k)
    out.body += (k ? " " : "") + parts[k];
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// OrderedSkeinElement

OrderedSkeinElement::OrderedSkeinElement(Ring ring, std::size_t d)
    : ring_(ring), d_(d), coords_(cube_size(d), LocalizedScalar::zero(ring)) {}

OrderedSkeinElement::OrderedSkeinElement(Ring ring, std::size_t d, std::vector<LocalizedScalar> coords)
    : ring_(ring), d_(d), coords_(std::move(coords)) {
  if (coords_.size() != cube_size(d))
    throw PreconditionError("expected " + std::to_string(cube_size(d)) + " coordinates, got " +
                            std::to_string(coords_.size()));
  for (const LocalizedScalar& c : coords_)
    require_same_ring(ring_, c.ring());
}

OrderedSkeinElement OrderedSkeinElement::basis(Ring ring, const ResolutionVector& e) {
  OrderedSkeinElement z(ring, e.size());
  z.coords_[e.index()] = LocalizedScalar::one(ring);
  return z;
}

const LocalizedScalar& OrderedSkeinElement::operator[](const ResolutionVector& e) const {
  if (e.size() != d_)
    throw PreconditionError("index of length " + std::to_string(e.size()) + " into degree " + std::to_string(d_));
  return coords_[e.index()];
}

std::size_t OrderedSkeinElement::nonzero_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(coords_.begin(), coords_.end(), [](const LocalizedScalar& c) { return !c.is_zero(); }));
}

std::string OrderedSkeinElement::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::uint64_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero())
      continue;
    if (any)
      os << '\n';
    os << "Z[" << ResolutionVector::from_index(i, d_).to_string() << "] = " << coords_[i].to_string();
    any = true;
  }
  return any ? os.str() : "0";
}

namespace {

void require_same_shape(const OrderedSkeinElement& a, const OrderedSkeinElement& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.degree() != b.degree())
    throw PreconditionError("degrees differ: " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
}

} // namespace

OrderedSkeinElement operator+(const OrderedSkeinElement& a, const OrderedSkeinElement& b) {
  require_same_shape(a, b);
  OrderedSkeinElement r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i)
    r.coords_[i] += b.coords_[i];
  return r;
}

OrderedSkeinElement operator-(const OrderedSkeinElement& a, const OrderedSkeinElement& b) {
  require_same_shape(a, b);
  OrderedSkeinElement r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i)
    r.coords_[i] -= b.coords_[i];
  return r;
}

OrderedSkeinElement operator*(const LocalizedScalar& c, const OrderedSkeinElement& a) {
  require_same_ring(c.ring(), a.ring());
  OrderedSkeinElement r = a;
  for (LocalizedScalar& v : r.coords_)
    v = c * v;
  return r;
}

// ---------------------------------------------------------------------------
// SkeinPolynomial

SkeinPolynomial SkeinPolynomial::constant(const LocalizedScalar& c) { return term(c, 0, 0); }

SkeinPolynomial SkeinPolynomial::term(const LocalizedScalar& c, std::uint32_t i, std::uint32_t j) {
  SkeinPolynomial p(c.ring());
  p.add_term(c, i, j);
  return p;
}

LocalizedScalar SkeinPolynomial::coefficient(std::uint32_t i, std::uint32_t j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? LocalizedScalar::zero(ring_) : it->second;
}

SkeinPolynomial& SkeinPolynomial::add_term(const LocalizedScalar& c, std::uint32_t i, std::uint32_t j) {
  require_same_ring(ring_, c.ring());
  if (c.is_zero())
    return *this;
  auto [it, inserted] = coeffs_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      coeffs_.erase(it);
  }
  return *this;
}

SkeinPolynomial operator+(const SkeinPolynomial& a, const SkeinPolynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  SkeinPolynomial r = a;
  for (const auto& [e, c] : b.coeffs_)
    r.add_term(c, e.first, e.second);
  return r;
}

SkeinPolynomial operator-(const SkeinPolynomial& a, const SkeinPolynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  SkeinPolynomial r = a;
  for (const auto& [e, c] : b.coeffs_)
    r.add_term(-c, e.first, e.second);
  return r;
}

SkeinPolynomial operator*(const SkeinPolynomial& a, const SkeinPolynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  SkeinPolynomial r(a.ring_);
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_)
      r.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
  return r;
}

SkeinPolynomial operator*(const LocalizedScalar& c, const SkeinPolynomial& a) {
  require_same_ring(c.ring(), a.ring_);
  SkeinPolynomial r(a.ring_);
  for (const auto& [e, ca] : a.coeffs_)
    r.add_term(c * ca, e.first, e.second);
  return r;
}

std::string SkeinPolynomial::to_string() const {
  if (coeffs_.empty())
    return "0";
  std::vector<std::pair<Exponents, const LocalizedScalar*>> order;
  for (const auto& [e, c] : coeffs_)
    order.emplace_back(e, &c);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    const auto da = a.first.first + a.first.second;
    const auto db = b.first.first + b.first.second;
    if (da != db)
      return da < db;
    return a.first.second > b.first.second;
  });

  std::string out;
  for (const auto& [e, c] : order) {
    const std::string mono = monomial_text(e.first, e.second);
    SignedText coeff = coefficient_text(*c, mono.empty());
    std::string text = coeff.body;
    if (!mono.empty())
      text = text.empty() ? mono : text + " " + mono;
    if (text.empty())
      text = "1";
    if (out.empty())
      out = (coeff.negative ? "-" : "") + text;
    else
      out += (coeff.negative ? " - " : " + ") + text;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation matrix and tensor solve

Matrix2 eval_matrix(const Ring& ring) {
  const LocalizedScalar delta(ring, ring.delta());
  const LocalizedScalar one = LocalizedScalar::one(ring);
  return {{{delta, one}, {one, delta}}};
}

Matrix2 eval_matrix_inverse(const Ring& ring) {
  const LocalizedScalar diag(ring, ring.x() * ring.t_gap(), 1);
  const LocalizedScalar off(ring, -(ring.x() * ring.x()), 1);
  return {{{diag, off}, {off, diag}}};
}

std::vector<LocalizedScalar> apply_kronecker(const Matrix2& m, std::vector<LocalizedScalar> v, std::size_t d,
                                             unsigned jobs) {
  if (v.size() != cube_size(d))
    throw PreconditionError("vector of length " + std::to_string(v.size()) + " is not 2^" + std::to_string(d));
  const std::uint64_t half = v.size() / 2;
  for (std::size_t axis = 0; axis < d; ++axis) {
    // Axis 0 is the most significant index bit.
    const std::uint64_t stride = std::uint64_t{1} << (d - 1 - axis);
    parallel_for(half, jobs, [&](std::size_t pair) {
      const std::uint64_t low = pair & (stride - 1);
      const std::uint64_t i = ((pair - low) << 1) | low;
      const std::uint64_t j = i | stride;
      LocalizedScalar a = m[0][0] * v[i] + m[0][1] * v[j];
      LocalizedScalar b = m[1][0] * v[i] + m[1][1] * v[j];
      v[i] = std::move(a);
      v[j] = std::move(b);
    });
  }
  return v;
}

OrderedSkeinElement solve_coordinates(const Ring& ring, std::span<const SkeinValue> p, unsigned jobs) {
  if (p.empty() || !std::has_single_bit(p.size()))
    throw PreconditionError("resolution values must have 2^d entries, got " + std::to_string(p.size()));
  const auto d = static_cast<std::size_t>(std::countr_zero(p.size()));
  std::vector<LocalizedScalar> v;
  v.reserve(p.size());
  for (const SkeinValue& value : p)
    v.emplace_back(ring, value);
  return OrderedSkeinElement(ring, d, apply_kronecker(eval_matrix_inverse(ring), std::move(v), d, jobs));
}

std::vector<LocalizedScalar> evaluate_coordinates(const OrderedSkeinElement& a, unsigned jobs) {
  return apply_kronecker(eval_matrix(a.ring()), a.coords(), a.degree(), jobs);
}

OrderedSkeinElement star(const OrderedSkeinElement& a, const OrderedSkeinElement& b) {
  require_same_ring(a.ring(), b.ring());
  const std::size_t d = a.degree() + b.degree();
  std::vector<LocalizedScalar> coords(cube_size(d), LocalizedScalar::zero(a.ring()));
  for (std::uint64_t i = 0; i < a.coords().size(); ++i) {
    if (a.at_index(i).is_zero())
      continue;
    for (std::uint64_t j = 0; j < b.coords().size(); ++j)
      coords[(i << b.degree()) | j] = a.at_index(i) * b.at_index(j);
  }
  return OrderedSkeinElement(a.ring(), d, std::move(coords));
}

SkeinPolynomial project_unordered(const OrderedSkeinElement& a) {
  SkeinPolynomial p(a.ring());
  for (std::uint64_t i = 0; i < a.coords().size(); ++i) {
    const auto ones = static_cast<std::uint32_t>(std::popcount(i));
    p.add_term(a.at_index(i), static_cast<std::uint32_t>(a.degree()) - ones, ones);
  }
  return p;
}

OrderedSkeinElement permute_coordinates(const OrderedSkeinElement& a, const Permutation& w) {
  std::vector<LocalizedScalar> coords(a.coords().size(), LocalizedScalar::zero(a.ring()));
  for (std::uint64_t i = 0; i < coords.size(); ++i) {
    const ResolutionVector e = ResolutionVector::from_index(i, a.degree());
    coords[e.permuted(w).index()] = a.at_index(i);
  }
  return OrderedSkeinElement(a.ring(), a.degree(), std::move(coords));
}

// ---------------------------------------------------------------------------
// SkeinEngine

SkeinEngine::SkeinEngine(Ring ring, Options options)
    : options_(options), homfly_(ring, HomflyEngine::Options{options.max_crossings}) {
  if (options_.jobs == 0)
    options_.jobs = 1;
}

EvalVector SkeinEngine::eval_vector(const OrderedSingularLink& link) const {
  const std::size_t d = link.singular_count();
  if (d > options_.max_singular)
    throw BoundError("link has " + std::to_string(d) + " singular points, limit is " +
                     std::to_string(options_.max_singular));
  if (link.word().length() > options_.max_crossings)
    throw BoundError("word has " + std::to_string(link.word().length()) + " crossings, limit is " +
                     std::to_string(options_.max_crossings));
  EvalVector values(cube_size(d));
  parallel_for(values.size(), options_.jobs, [&](std::size_t i) {
    values[i] = homfly_.evaluate(resolve_all(link, ResolutionVector::from_index(i, d)));
  });
  return values;
}

OrderedSkeinElement SkeinEngine::invariant_ordered(const OrderedSingularLink& link) const {
  const EvalVector values = eval_vector(link);
  return solve_coordinates(ring(), values, options_.jobs);
}

SkeinPolynomial SkeinEngine::invariant(const OrderedSingularLink& link) const {
  return project_unordered(invariant_ordered(link));
}

} // namespace skeinforge
