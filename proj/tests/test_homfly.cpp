#include <doctest.h>

#include <random>
#include <thread>

#include "skeinforge/errors.hpp"
#include "skeinforge/homfly.hpp"
#include "skeinforge/verify/naive_homfly.hpp"
#include "skeinforge/verify/random_links.hpp"
#include "support.hpp"

using namespace skeinforge;
using skeinforge::testing::poly;

namespace {

const Ring Z = Ring::generic();

BraidWord word(const char* text) { return BraidWord::parse(text); }

BraidWord random_crossing_word(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi, std::size_t max_len) {
  const auto n = std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
  const auto len = n == 1 ? 0 : std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  return BraidWord(n, verify::random_crossings(rng, n, len));
}

} // namespace

TEST_CASE("unlink values") {
  const LaurentPoly delta = (Z.t_inv() - Z.t()) * Z.x_inv();
  CHECK(unlink_value(Z, 1) == Z.one());
  CHECK(unlink_value(Z, 2) == delta);
  CHECK(unlink_value(Z, 3) == delta * delta);
  CHECK_THROWS_AS(unlink_value(Z, 0), PreconditionError);
  CHECK(homfly(word("3:")) == delta * delta);
}

TEST_CASE("small knots and links") {
  // Values worked out by hand from the skein relation; the naive oracle must agree.
  const LaurentPoly hopf = poly(Z, {{1, 1, 1}, {1, 1, -1}, {-1, 3, -1}});
  const LaurentPoly trefoil = poly(Z, {{-1, 4, 0}, {2, 2, 0}, {1, 2, 2}});
  const LaurentPoly negative_hopf = Z.monomial(1, -2, 0) * Z.delta() - Z.monomial(1, -1, 1);
  CHECK(verify::naive_homfly(word("2: s1 s1"), Z) == hopf);
  CHECK(verify::naive_homfly(word("2: s1 s1 s1"), Z) == trefoil);
  CHECK(verify::naive_homfly(word("2: s1^-1 s1^-1"), Z) == negative_hopf);

  CHECK(homfly(word("1:")) == Z.one());
  CHECK(homfly(word("2: s1")) == Z.one());
  CHECK(homfly(word("2: s1 s1")) == hopf);
  CHECK(homfly(word("2: s1 s1 s1")) == trefoil);
  CHECK(homfly(word("2: s1^-1 s1^-1")) == negative_hopf);
  CHECK(homfly(word("2: s1 s1 s1")).to_string() == "-1 t^4 + 2 t^2 + 1 t^2 x^2");
  // Figure-eight knot is amphichiral.
  const LaurentPoly fig8 = homfly(word("3: s1 s2^-1 s1 s2^-1"));
  std::vector<LaurentPoly::Term> mirrored;
  for (const auto& term : fig8.terms())
    mirrored.push_back({{-term.exp.t, term.exp.x}, term.coeff});
  CHECK(LaurentPoly::from_terms(Z.base(), mirrored) == fig8);
}

TEST_CASE("other rings") {
  const Ring conway = Ring::conway();
  CHECK(homfly(word("2:"), conway).is_zero());
  CHECK(homfly(word("2: s1 s1"), conway) == conway.x());
  CHECK(homfly(word("2: s1 s1 s1"), conway) == conway.one() + conway.x() * conway.x());
  const Ring f5 = Ring::gf(5);
  CHECK(homfly(word("2: s1 s1 s1"), f5) == specialize(homfly(word("2: s1 s1 s1")), Specialization::to_prime_field(5)));
}

TEST_CASE("preconditions and bounds") {
  CHECK_THROWS_AS(homfly(word("2: t1")), PreconditionError);
  HomflyEngine small(Z, HomflyEngine::Options{3});
  CHECK_NOTHROW(small.evaluate(word("2: s1 s1 s1")));
  CHECK_THROWS_AS(small.evaluate(word("2: s1 s1 s1 s1")), BoundError);
}

TEST_CASE("skein relation at every crossing") {
  std::mt19937_64 rng(17);
  HomflyEngine engine(Z);
  int checked = 0;
  while (checked < 250) {
    const BraidWord w = random_crossing_word(rng, 2, 5, 10);
    if (w.length() == 0)
      continue;
    const std::size_t k = rng() % w.length();
    std::vector<Letter> plus = w.letters(), minus = w.letters(), zero = w.letters();
    plus[k].kind = LetterKind::pos;
    minus[k].kind = LetterKind::neg;
    zero.erase(zero.begin() + static_cast<std::ptrdiff_t>(k));
    const LaurentPoly p0 = engine.evaluate(BraidWord(w.strands(), zero));
    const LaurentPoly pp = engine.evaluate(BraidWord(w.strands(), plus));
    const LaurentPoly pm = engine.evaluate(BraidWord(w.strands(), minus));
    CHECK(Z.x() * p0 == Z.t_inv() * pp - Z.t() * pm);
    ++checked;
  }
}

TEST_CASE("Markov invariance") {
  std::mt19937_64 rng(23);
  HomflyEngine engine(Z);
  for (int k = 0; k < 200; ++k) {
    const BraidWord w = random_crossing_word(rng, 2, 5, 10);
    const LaurentPoly p = engine.evaluate(w);

    const auto u = verify::random_crossings(rng, w.strands(), 1 + rng() % 3);
    std::vector<Letter> conj = u;
    conj.insert(conj.end(), w.letters().begin(), w.letters().end());
    for (auto it = u.rbegin(); it != u.rend(); ++it)
      conj.push_back(Letter{it->kind == LetterKind::pos ? LetterKind::neg : LetterKind::pos, it->index});
    CHECK(engine.evaluate(BraidWord(w.strands(), conj)) == p);

    std::vector<Letter> stab = w.letters();
    stab.push_back(rng() % 2 ? Letter::pos(w.strands()) : Letter::neg(w.strands()));
    CHECK(engine.evaluate(BraidWord(w.strands() + 1, stab)) == p);
  }
}

TEST_CASE("split union and connected sum") {
  std::mt19937_64 rng(29);
  HomflyEngine engine(Z);
  for (int k = 0; k < 100; ++k) {
    const OrderedSingularLink a(random_crossing_word(rng, 1, 3, 6)), b(random_crossing_word(rng, 1, 3, 6));
    const LaurentPoly pa = engine.evaluate(a.word()), pb = engine.evaluate(b.word());
    CHECK(engine.evaluate(split_union(a, b).word()) == Z.delta() * pa * pb);
    CHECK(engine.evaluate(connected_sum(a, b).word()) == pa * pb);
  }
}

TEST_CASE("memoized engine matches the naive expansion on all short words") {
  HomflyEngine engine(Z);
  std::size_t words = 0;
  for (std::uint32_t n = 2; n <= 3; ++n) {
    const std::uint32_t alphabet = 2 * (n - 1);
    for (std::size_t len = 0; len <= 6; ++len) {
      std::vector<std::uint32_t> digits(len, 0);
      for (;;) {
        std::vector<Letter> letters;
        for (std::uint32_t d : digits)
          letters.push_back(d % 2 ? Letter::neg(d / 2 + 1) : Letter::pos(d / 2 + 1));
        const BraidWord w(n, letters);
        REQUIRE_MESSAGE(engine.evaluate(w) == verify::naive_homfly(w, Z), w.to_string());
        ++words;
        std::size_t i = 0;
        while (i < len && ++digits[i] == alphabet)
          digits[i++] = 0;
        if (i == len)
          break;
      }
    }
  }
  CHECK(words == 127 + 5461);
  CHECK(engine.cache_size() > 0);
}

TEST_CASE("concurrent evaluation agrees with sequential") {
  std::mt19937_64 rng(31);
  std::vector<BraidWord> words;
  for (int k = 0; k < 64; ++k)
    words.push_back(random_crossing_word(rng, 2, 5, 12));
  HomflyEngine sequential(Z);
  std::vector<LaurentPoly> expected;
  for (const BraidWord& w : words)
    expected.push_back(sequential.evaluate(w));

  HomflyEngine shared(Z);
  std::vector<LaurentPoly> got(words.size());
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < 4; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < words.size(); i += 4)
          got[i] = shared.evaluate(words[i]);
      });
  }
  CHECK(got == expected);
}
