#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "skeinforge/diagram.hpp"
#include "skeinforge/errors.hpp"
#include "skeinforge/verify/random_links.hpp"

using namespace skeinforge;

namespace {

OrderedSingularLink link(const char* text) { return OrderedSingularLink::parse(text); }

// Union-find over arc segments between consecutive letters: arc (k, p) is the
// piece of strand position p between letters k-1 and k; the closure glues k = m to k = 0.
std::uint32_t components_by_arcs(const BraidWord& w) {
  const std::size_t m = w.length(), n = w.strands();
  std::vector<std::size_t> parent((m + 1) * n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a)
      a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  auto arc = [n](std::size_t level, std::size_t pos) { return level * n + pos; };
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t i = w.letters()[k].index - 1;
    for (std::size_t p = 0; p < n; ++p) {
      std::size_t q = p;
      if (p == i)
        q = i + 1;
      else if (p == i + 1)
        q = i;
      unite(arc(k, p), arc(k + 1, q));
    }
  }
  for (std::size_t p = 0; p < n; ++p)
    unite(arc(m, p), arc(0, p));
  std::set<std::size_t> roots;
  for (std::size_t p = 0; p < n; ++p)
    roots.insert(find(arc(0, p)));
  return static_cast<std::uint32_t>(roots.size());
}

} // namespace

TEST_CASE("parse words") {
  const BraidWord a = BraidWord::parse("2: s1");
  CHECK(a.strands() == 2);
  CHECK(a.letters() == std::vector<Letter>{Letter::pos(1)});
  CHECK(BraidWord::parse("2: t1 s1").letters() == std::vector<Letter>{Letter::sing(1), Letter::pos(1)});
  CHECK(BraidWord::parse("3: s1 s2^-1 t1").letters() ==
        std::vector<Letter>{Letter::pos(1), Letter::neg(2), Letter::sing(1)});
  CHECK(BraidWord::parse("2:").length() == 0);
  CHECK(BraidWord::parse("  4 :s3   s1^-1 ").to_string() == "4: s3 s1^-1");
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      (void)BraidWord::parse(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected a parse error for " << text);
    return 0;
  };
  CHECK(position_of("2 s1") == 2);
  CHECK(position_of("2: t1^-1") == 3);
  CHECK(position_of("2: s2") == 3);
  CHECK(position_of("3: s1 q1") == 6);
  CHECK(position_of("3: s1s2") == 5);
  CHECK(position_of(": s1") == 0);
  CHECK_THROWS_AS(BraidWord::parse("0:"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("2: s0"), ParseError);
  CHECK_THROWS_AS(OrderedSingularLink::parse("3: t1 t2 | o = 1 1"), ParseError);
  CHECK_THROWS_AS(OrderedSingularLink::parse("3: t1 t2 | o = 1"), ParseError);
  CHECK_THROWS_AS(OrderedSingularLink::parse("3: t1 t2 | 1 2"), ParseError);
}

TEST_CASE("orderings") {
  const OrderedSingularLink l = link("3: t1 s2 t2 | o = 2 1");
  CHECK(l.ordering() == Permutation{2, 1});
  CHECK(l.to_string() == "3: t1 s2 t2 | o = 2 1");
  CHECK(link("3: t1 t2").ordering() == Permutation{1, 2});
  CHECK(link("3: t1 t2 | o = 1 2").to_string() == "3: t1 t2");
  CHECK_THROWS_AS(OrderedSingularLink(BraidWord::parse("2: t1"), Permutation{2}), PreconditionError);
  CHECK_THROWS_AS(BraidWord(2, {Letter::pos(2)}), PreconditionError);
}

TEST_CASE("render and parse round trip") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    const OrderedSingularLink l = verify::random_link(rng, {1, 6, 10, 4});
    CHECK(OrderedSingularLink::parse(l.to_string()) == l);
  }
}

TEST_CASE("closure components") {
  CHECK(closure_components(BraidWord(4, {})) == 4);
  CHECK(closure_components(BraidWord::parse("2: t1")) == 1);
  CHECK(closure_components(BraidWord::parse("2: t1 s1")) == 2);
  CHECK(closure_components(BraidWord::parse("3: s1 s2")) == 1);

  std::mt19937_64 rng(2);
  for (int k = 0; k < 100; ++k) {
    const BraidWord w = verify::random_link(rng, {1, 6, 12, 3}).word();
    CHECK(closure_components(w) == components_by_arcs(w));
  }
}

TEST_CASE("full resolutions") {
  const OrderedSingularLink X = link("2: t1"), Y = link("2: t1 s1");
  CHECK(resolve_all(X, ResolutionVector({0})) == BraidWord::parse("2:"));
  CHECK(resolve_all(X, ResolutionVector({1})) == BraidWord::parse("2: s1^-1"));
  CHECK(resolve_all(Y, ResolutionVector({1})) == BraidWord::parse("2: s1^-1 s1"));
  CHECK(closure_components(resolve_all(X, ResolutionVector({0}))) == 2);
  CHECK(closure_components(resolve_all(X, ResolutionVector({1}))) == 1);
  // Bits are indexed by label, not by position in the word.
  CHECK(resolve_all(link("3: t1 t2 | o = 2 1"), ResolutionVector({1, 0})) == BraidWord::parse("3: s2^-1"));
  CHECK_THROWS_AS(resolve_all(X, ResolutionVector({0, 1})), PreconditionError);
}

TEST_CASE("resolving the first point") {
  const OrderedSingularLink X = link("2: t1"), Y = link("2: t1 s1");
  const OrderedSingularLink x0 = resolve_first(X, 0);
  CHECK(x0.word() == BraidWord::parse("2:"));
  CHECK(x0.ordering().empty());
  CHECK(resolve_first(connected_sum(X, Y), 0) == link("3: t2 s2"));
  CHECK_THROWS_AS(resolve_first(link("2: s1"), 0), PreconditionError);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    OrderedSingularLink l = verify::random_link(rng, {2, 5, 10, 4});
    const std::size_t d = l.singular_count();
    const ResolutionVector rho = ResolutionVector::from_index(rng() % (std::uint64_t{1} << d), d);
    OrderedSingularLink step = l;
    for (std::size_t j = 0; j < d; ++j)
      step = resolve_first(step, rho[j]);
    CHECK(step.singular_count() == 0);
    CHECK(step.word() == resolve_all(l, rho));
  }
}

TEST_CASE("connected sum and split union") {
  const OrderedSingularLink X = link("2: t1"), Y = link("2: t1 s1"), O = link("1:");
  const OrderedSingularLink xy = connected_sum(X, Y);
  CHECK(xy.word() == BraidWord::parse("3: t1 t2 s2"));
  CHECK(xy.ordering() == Permutation{1, 2});
  CHECK(closure_components(xy.word()) == 2);
  CHECK(connected_sum(O, Y) == Y);

  CHECK(split_union(O, O).word() == BraidWord::parse("2:"));
  CHECK(closure_components(split_union(X, Y).word()) == 3);
  CHECK(split_union(link("3: t1 t2 | o = 2 1"), X).ordering() == Permutation{2, 1, 3});

  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const auto a = verify::random_link(rng, {1, 3, 6, 2}), b = verify::random_link(rng, {1, 3, 6, 2});
    CHECK(closure_components(connected_sum(a, b).word()) ==
          closure_components(a.word()) + closure_components(b.word()) - 1);
    CHECK(closure_components(split_union(a, b).word()) == closure_components(a.word()) + closure_components(b.word()));
  }
}

TEST_CASE("reordering") {
  const OrderedSingularLink l = link("4: t1 t2 s3 t3");
  CHECK(reorder(l, identity_permutation(3)) == l);
  const Permutation w{3, 1, 2};
  CHECK(reorder(l, w).ordering() == Permutation{3, 1, 2});
  CHECK(reorder(reorder(l, w), inverse(w)) == l);
  CHECK_THROWS_AS(reorder(l, Permutation{1, 2}), PreconditionError);
}

TEST_CASE("resolution vectors") {
  const ResolutionVector e({0, 1, 1});
  CHECK(e.index() == 3);
  CHECK(ResolutionVector::from_index(3, 3) == e);
  CHECK(e.to_string() == "011");
  CHECK(e.ones() == 2);
  // (w e)_{w(k)} = e_k
  CHECK(e.permuted(Permutation{2, 3, 1}) == ResolutionVector({1, 0, 1}));
  CHECK(ResolutionVector().to_string() == "()");
  CHECK_THROWS_AS(ResolutionVector({2}), PreconditionError);
}
