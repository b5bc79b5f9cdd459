#include "skeinforge/ring.hpp"

#include <charconv>

#include "skeinforge/errors.hpp"

namespace skeinforge {

Ring Ring::parse(std::string_view text) {
  if (text == "generic")
    return generic();
  if (text == "conway")
    return conway();
  if (text.starts_with("gf:")) {
    std::string_view digits = text.substr(3);
    std::uint64_t p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty())
      throw ConfigError("bad field characteristic in '" + std::string(text) + "'");
    return gf(p);
  }
  throw ConfigError("unknown ring '" + std::string(text) + "' (expected generic, conway or gf:<p>)");
}

LaurentPoly Ring::monomial(long c, std::int64_t et, std::int64_t ex) const {
  return LaurentPoly::monomial(base_, c, t_is_one() ? 0 : et, ex);
}

LaurentPoly Ring::determinant() const {
  return (t_gap() - x()) * (t_gap() + x());
}

LaurentPoly Ring::from_integral(const LaurentPoly& p) const {
  if (p.base().is_prime_field())
    throw PreconditionError("from_integral expects an integer polynomial");
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& term : p.terms())
    terms.push_back({{t_is_one() ? 0 : term.exp.t, term.exp.x}, term.coeff});
  return LaurentPoly::from_terms(base_, std::move(terms));
}

std::string Ring::name() const {
  switch (mode_) {
  case RingMode::generic:
    return "generic";
  case RingMode::conway:
    return "conway";
  case RingMode::prime_field:
    return "gf:" + std::to_string(base_.characteristic());
  }
  return "?";
}

LaurentPoly specialize(const LaurentPoly& a, const Specialization& mode) {
  std::vector<LaurentPoly::Term> terms(a.terms().begin(), a.terms().end());
  if (mode.kind == Specialization::Kind::conway_t1) {
    for (auto& term : terms)
      term.exp.t = 0;
    return LaurentPoly::from_terms(a.base(), std::move(terms));
  }
  if (a.base().is_prime_field())
    throw PreconditionError("reduction mod p needs an integer polynomial");
  return LaurentPoly::from_terms(BaseRing::prime_field(mode.p), std::move(terms));
}

Ring specialized_ring(const Specialization& mode) {
  return mode.kind == Specialization::Kind::conway_t1 ? Ring::conway() : Ring::gf(mode.p);
}

} // namespace skeinforge
