// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>

#include "skeinforge/skein.hpp"
#include "skeinforge/verify/checks.hpp"
#include "support.hpp"

using namespace skeinforge;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome suite(const char* name) {
  verify::CheckConfig config;
  config.seed = 42;
  const verify::CheckReport r = verify::run_checks(name, config).front();
  return {r.passed, std::to_string(r.cases) + " cases" + (r.passed ? "" : ", " + r.counterexample)};
}

Outcome generators() {
  const Ring Z = Ring::generic();
  SkeinEngine engine(Z);
  const auto inv = [&](const char* w) { return engine.invariant(OrderedSingularLink::parse(w)); };
  const SkeinPolynomial y_prime =
      SkeinPolynomial::term(LocalizedScalar(Z, Z.monomial(1, -2, 0)), 0, 1) +
      SkeinPolynomial::term(LocalizedScalar(Z, Z.monomial(-1, -1, 1)), 1, 0);
  const bool ok = inv("2: t1") == SkeinPolynomial::X(Z) && inv("2: t1 s1") == SkeinPolynomial::Y(Z) &&
                  inv("2: t1 s1^-1") == y_prime;
  return {ok, "Y' = " + inv("2: t1 s1^-1").to_string()};
}

Outcome freeness() {
  const Ring Z = Ring::generic();
  SkeinEngine engine(Z);
  std::size_t checked = 0;
  for (std::size_t d = 0; d <= 3; ++d)
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << d); ++i) {
      const ResolutionVector e = ResolutionVector::from_index(i, d);
      OrderedSingularLink l = OrderedSingularLink::parse("1:");
      for (std::size_t k = 0; k < d; ++k)
        l = connected_sum(l, OrderedSingularLink::parse(e[k] ? "2: t1 s1" : "2: t1"));
      if (engine.invariant_ordered(l) != OrderedSkeinElement::basis(Z, e))
        return {false, "pattern " + e.to_string()};
      ++checked;
    }
  return {true, std::to_string(checked) + " patterns"};
}

Outcome tensor_solve() {
  std::mt19937_64 rng(42);
  const Ring Z = Ring::generic();
  std::size_t checked = 0;
  for (std::size_t d = 0; d <= 5; ++d)
    for (int k = 0; k < 50; ++k) {
      EvalVector p;
      for (std::size_t i = 0; i < (std::size_t{1} << d); ++i)
        p.push_back(testing::random_poly(rng, Z));
      std::vector<LocalizedScalar> expected;
      for (const auto& v : p)
        expected.emplace_back(Z, v);
      if (evaluate_coordinates(solve_coordinates(Z, p)) != expected)
        return {false, "d = " + std::to_string(d)};
      ++checked;
    }
  return {true, std::to_string(checked) + " vectors"};
}

} // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"generators X, Y, Y'", generators},
      {"freeness of star products, d <= 3", freeness},
      {"skein relation, 200 triples x 3 rings", [] { return suite("skein"); }},
      {"isotopy and singular braid moves, 200 each", [] { return suite("markov"); }},
      {"multiplicativity and unit law, 100 pairs", [] { return suite("star"); }},
      {"star/split-union bridge, 100 pairs", [] { return suite("lemma22"); }},
      {"ordering independence, 100 links", [] { return suite("ordering"); }},
      {"specialization coherence, 100 links", [] { return suite("specialize"); }},
      {"HOMFLY oracle, all words of length <= 6 on <= 3 strands", [] { return suite("oracle"); }},
      {"tensor solve round trip, 50 per d <= 5", tensor_solve},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %d. %s (%s)\n", o.passed ? "PASS" : "FAIL", n, name, o.detail.c_str());
    failures += o.passed ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
