#pragma once

#include <random>
#include <tuple>

#include "skeinforge/laurent.hpp"
#include "skeinforge/localized.hpp"
#include "skeinforge/ring.hpp"

namespace skeinforge::testing {

inline LaurentPoly random_poly(std::mt19937_64& rng, const Ring& ring, int max_terms = 4, int spread = 3) {
  std::uniform_int_distribution<int> terms(0, max_terms), exp(-spread, spread), coeff(-9, 9);
  std::vector<LaurentPoly::Term> out;
  const int n = terms(rng);
  for (int k = 0; k < n; ++k)
    out.push_back({{ring.t_is_one() ? 0 : exp(rng), exp(rng)}, coeff(rng)});
  return LaurentPoly::from_terms(ring.base(), std::move(out));
}

inline LocalizedScalar random_scalar(std::mt19937_64& rng, const Ring& ring) {
  return LocalizedScalar(ring, random_poly(rng, ring), std::uniform_int_distribution<unsigned>(0, 2)(rng));
}

/// Builds a polynomial from (coefficient, e_t, e_x) triples.
inline LaurentPoly poly(const Ring& ring, std::initializer_list<std::tuple<long, long, long>> terms) {
  LaurentPoly p = ring.zero();
  for (auto [c, et, ex] : terms)
    p += ring.monomial(c, et, ex);
  return p;
}

} // namespace skeinforge::testing
