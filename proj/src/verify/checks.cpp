#include "skeinforge/verify/checks.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <sstream>

#include "skeinforge/errors.hpp"
#include "skeinforge/skein.hpp"
#include "skeinforge/verify/naive_homfly.hpp"
#include "skeinforge/verify/random_links.hpp"

namespace skeinforge::verify {

namespace {

using Rng = std::mt19937_64;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

SkeinEngine::Options engine_options(const CheckConfig& config) {
  return SkeinEngine::Options{config.max_crossings, 10, config.jobs};
}

std::size_t cases_or(const CheckConfig& config, std::size_t fallback) {
  return config.cases != 0 ? config.cases : fallback;
}

LocalizedScalar scalar(const Ring& ring, const LaurentPoly& p) { return LocalizedScalar(ring, p); }

// Records the first failure; returns true while the suite is still clean.
class Tally {
public:
  explicit Tally(CheckReport& report) : report_(report) {}

  bool expect(bool ok, const std::function<std::string()>& describe) {
    ++report_.cases;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.counterexample = describe();
    }
    return ok;
  }

  bool failed() const { return !report_.passed; }

private:
  CheckReport& report_;
};

std::string show(const OrderedSingularLink& l) { return "\"" + l.to_string() + "\""; }

// ---------------------------------------------------------------------------

void skein_suite(const CheckConfig& config, Rng& rng, CheckReport& report) {
  Tally tally(report);
  const std::vector<Ring> rings{Ring::generic(), Ring::conway(), Ring::gf(config.prime)};
  std::deque<SkeinEngine> engines;
  for (const Ring& r : rings)
    engines.emplace_back(r, engine_options(config));

  const RandomLinkShape shape{2, 5, 12, 4};
  for (std::size_t c = 0; c < cases_or(config, kSkeinCases); ++c) {
    LabeledWord w = random_labeled_word(rng, shape);
    if (std::none_of(w.letters.begin(), w.letters.end(), [](const LabeledLetter& l) { return !l.letter.is_singular(); }))
      w.letters.push_back({random_crossing(rng, w.strands), 0});
    std::vector<std::size_t> crossings;
    for (std::size_t k = 0; k < w.letters.size(); ++k)
      if (!w.letters[k].letter.is_singular())
        crossings.push_back(k);
    const std::size_t k = crossings[uniform(rng, 0, crossings.size() - 1)];

    LabeledWord plus = w, minus = w, zero = w;
    plus.letters[k].letter.kind = LetterKind::pos;
    minus.letters[k].letter.kind = LetterKind::neg;
    zero.letters.erase(zero.letters.begin() + static_cast<std::ptrdiff_t>(k));
    const auto lp = unlabeled(plus), lm = unlabeled(minus), l0 = unlabeled(zero);

    for (std::size_t r = 0; r < rings.size(); ++r) {
      const Ring& ring = rings[r];
      const SkeinEngine& engine = engines[r];
      const auto ip = engine.invariant_ordered(lp), im = engine.invariant_ordered(lm),
                 i0 = engine.invariant_ordered(l0);
      const auto lhs = scalar(ring, ring.x()) * i0;
      const auto rhs = scalar(ring, ring.t_inv()) * ip - scalar(ring, ring.t()) * im;
      const bool ok = lhs == rhs && project_unordered(lhs) == project_unordered(rhs);
      if (!tally.expect(ok, [&] {
            return "ring " + ring.name() + ": L+ = " + show(lp) + ", L- = " + show(lm) + ", L0 = " + show(l0);
          }))
        return;
    }
  }
}

// ---------------------------------------------------------------------------

std::vector<LabeledLetter> crossings_only(Rng& rng, std::uint32_t strands, std::size_t length) {
  std::vector<LabeledLetter> out;
  for (Letter l : random_crossings(rng, strands, length))
    out.push_back({l, 0});
  return out;
}

std::vector<LabeledLetter> inverse_word(const std::vector<LabeledLetter>& u) {
  std::vector<LabeledLetter> out(u.rbegin(), u.rend());
  for (LabeledLetter& l : out)
    l.letter.kind = l.letter.kind == LetterKind::pos ? LetterKind::neg : LetterKind::pos;
  return out;
}

// A random word u P v around a pattern P. Labels are assigned over the whole word.
struct Framed {
  LabeledWord word;
  std::size_t at = 0;
  std::size_t length = 0;
};

Framed frame(Rng& rng, std::uint32_t strands, std::vector<LabeledLetter> pattern) {
  const RandomLinkShape side{strands, strands, 4, 1};
  LabeledWord u = random_labeled_word(rng, side);
  LabeledWord v = random_labeled_word(rng, side);
  Framed f;
  f.word.strands = strands;
  f.word.letters = u.letters;
  f.at = u.letters.size();
  f.length = pattern.size();
  f.word.letters.insert(f.word.letters.end(), pattern.begin(), pattern.end());
  f.word.letters.insert(f.word.letters.end(), v.letters.begin(), v.letters.end());
  assign_random_labels(rng, f.word);
  return f;
}

LabeledWord rewrite(const Framed& f, const std::function<std::vector<LabeledLetter>(std::vector<LabeledLetter>)>& move) {
  LabeledWord out = f.word;
  auto first = out.letters.begin() + static_cast<std::ptrdiff_t>(f.at);
  std::vector<LabeledLetter> segment(first, first + static_cast<std::ptrdiff_t>(f.length));
  std::vector<LabeledLetter> replaced = move(std::move(segment));
  out.letters.erase(first, first + static_cast<std::ptrdiff_t>(f.length));
  out.letters.insert(out.letters.begin() + static_cast<std::ptrdiff_t>(f.at), replaced.begin(), replaced.end());
  return out;
}

LabeledLetter letter(LetterKind kind, std::uint32_t i) { return {Letter{kind, i}, 0}; }

LetterKind random_kind(Rng& rng) { return static_cast<LetterKind>(uniform(rng, 0, 2)); }

// One isotopy move: returns (before, after).
using Move = std::function<std::pair<LabeledWord, LabeledWord>(Rng&, std::size_t)>;

std::vector<std::pair<std::string, Move>> isotopy_moves() {
  std::vector<std::pair<std::string, Move>> moves;

  moves.emplace_back("conjugation", [](Rng& rng, std::size_t c) {
    LabeledWord w = random_labeled_word(rng, RandomLinkShape{2, 5, 10, 3});
    if (c % 2 == 1)
      return std::pair{w, rotated(w, uniform(rng, 0, 8))};
    const auto u = crossings_only(rng, w.strands, uniform(rng, 1, 3));
    LabeledWord after = w;
    after.letters = u;
    after.letters.insert(after.letters.end(), w.letters.begin(), w.letters.end());
    const auto ui = inverse_word(u);
    after.letters.insert(after.letters.end(), ui.begin(), ui.end());
    return std::pair{w, after};
  });

  for (LetterKind sign : {LetterKind::pos, LetterKind::neg}) {
    moves.emplace_back(sign == LetterKind::pos ? "stabilization+" : "stabilization-", [sign](Rng& rng, std::size_t) {
      LabeledWord w = random_labeled_word(rng, RandomLinkShape{1, 4, 12, 4});
      LabeledWord after = w;
      after.strands = w.strands + 1;
      after.letters.push_back(letter(sign, w.strands));
      return std::pair{w, after};
    });
  }

  moves.emplace_back("braid relation", [](Rng& rng, std::size_t) {
    const auto n = static_cast<std::uint32_t>(uniform(rng, 3, 5));
    auto i = static_cast<std::uint32_t>(uniform(rng, 1, n - 2));
    auto j = i + 1;
    if (uniform(rng, 0, 1))
      std::swap(i, j);
    const LetterKind s = uniform(rng, 0, 1) ? LetterKind::pos : LetterKind::neg;
    const Framed f = frame(rng, n, {letter(s, i), letter(s, j), letter(s, i)});
    return std::pair{f.word, rewrite(f, [&](auto) {
                       return std::vector<LabeledLetter>{letter(s, j), letter(s, i), letter(s, j)};
                     })};
  });

  moves.emplace_back("distant commutation", [](Rng& rng, std::size_t) {
    const auto n = static_cast<std::uint32_t>(uniform(rng, 4, 6));
    std::uint32_t i, j;
    do {
      i = static_cast<std::uint32_t>(uniform(rng, 1, n - 1));
      j = static_cast<std::uint32_t>(uniform(rng, 1, n - 1));
    } while ((i > j ? i - j : j - i) < 2);
    const Framed f = frame(rng, n, {letter(random_kind(rng), i), letter(random_kind(rng), j)});
    return std::pair{f.word, rewrite(f, [](std::vector<LabeledLetter> p) {
                       std::swap(p[0], p[1]);
                       return p;
                     })};
  });

  moves.emplace_back("mixed sing-crossing commutation", [](Rng& rng, std::size_t) {
    const auto n = static_cast<std::uint32_t>(uniform(rng, 2, 4));
    const auto i = static_cast<std::uint32_t>(uniform(rng, 1, n - 1));
    const LetterKind s = uniform(rng, 0, 1) ? LetterKind::pos : LetterKind::neg;
    const Framed f = frame(rng, n, {letter(LetterKind::sing, i), letter(s, i)});
    return std::pair{f.word, rewrite(f, [](std::vector<LabeledLetter> p) {
                       std::swap(p[0], p[1]);
                       return p;
                     })};
  });

  moves.emplace_back("mixed sing-braid relation", [](Rng& rng, std::size_t) {
    const auto n = static_cast<std::uint32_t>(uniform(rng, 3, 5));
    auto i = static_cast<std::uint32_t>(uniform(rng, 1, n - 2));
    auto j = i + 1;
    if (uniform(rng, 0, 1))
      std::swap(i, j);
    const Framed f =
        frame(rng, n, {letter(LetterKind::sing, i), letter(LetterKind::pos, j), letter(LetterKind::pos, i)});
    // t_i s_j s_i = s_j s_i t_j; the double point keeps its label.
    return std::pair{f.word, rewrite(f, [j](std::vector<LabeledLetter> p) {
                       LabeledLetter sing = p[0];
                       sing.letter.index = j;
                       return std::vector<LabeledLetter>{p[1], p[2], sing};
                     })};
  });
  return moves;
}

void markov_suite(const CheckConfig& config, Rng& rng, CheckReport& report) {
  Tally tally(report);
  const SkeinEngine engine(Ring::generic(), engine_options(config));
  for (const auto& [name, move] : isotopy_moves()) {
    for (std::size_t c = 0; c < cases_or(config, kMarkovCases); ++c) {
      const auto [before, after] = move(rng, c);
      const auto lb = unlabeled(before), la = unlabeled(after);
      if (!tally.expect(engine.invariant_ordered(lb) == engine.invariant_ordered(la),
                        [&] { return name + ": " + show(lb) + " vs " + show(la); }))
        return;
    }
  }
}

// ---------------------------------------------------------------------------

const RandomLinkShape kFactorShape{1, 3, 7, 3};

void star_suite(const CheckConfig& config, Rng& rng, CheckReport& report) {
  Tally tally(report);
  const SkeinEngine engine(Ring::generic(), engine_options(config));
  const OrderedSingularLink unknot(BraidWord(1, {}));
  for (std::size_t c = 0; c < cases_or(config, kPairCases); ++c) {
    const LabeledWord w1 = random_labeled_word(rng, kFactorShape);
    const LabeledWord w2 = random_labeled_word(rng, kFactorShape);
    const auto l1 = unlabeled(w1), l2 = unlabeled(w2);
    const auto sum = connected_sum(l1, l2);
    const auto o1 = engine.invariant_ordered(l1), o2 = engine.invariant_ordered(l2);
    const auto os = engine.invariant_ordered(sum);
    auto where = [&] { return show(l1) + " * " + show(l2); };

    if (!tally.expect(os == star(o1, o2), [&] { return "ordered multiplicativity: " + where(); }))
      return;
    if (!tally.expect(project_unordered(os) == project_unordered(o1) * project_unordered(o2),
                      [&] { return "polynomial multiplicativity: " + where(); }))
      return;
    if (!tally.expect(engine.invariant_ordered(connected_sum(unknot, l1)) == o1 &&
                          engine.invariant_ordered(connected_sum(l1, unknot)) == o1,
                      [&] { return "unit law: " + show(l1); }))
      return;
    // Band onto other components by rotating either factor first.
    const auto moved1 = unlabeled(rotated(w1, uniform(rng, 0, 6)));
    const auto moved2 = unlabeled(rotated(w2, uniform(rng, 0, 6)));
    if (!tally.expect(engine.invariant_ordered(connected_sum(moved1, moved2)) == os,
                      [&] { return "band site: " + show(moved1) + " * " + show(moved2) + " vs " + where(); }))
      return;
  }
}

void lemma22_suite(const CheckConfig& config, Rng& rng, CheckReport& report) {
  Tally tally(report);
  const Ring generic = Ring::generic(), conway = Ring::conway();
  const SkeinEngine engine(generic, engine_options(config));
  const SkeinEngine conway_engine(conway, engine_options(config));
  for (std::size_t c = 0; c < cases_or(config, kPairCases); ++c) {
    const auto l1 = random_link(rng, kFactorShape), l2 = random_link(rng, kFactorShape);
    const auto sum = connected_sum(l1, l2), split = split_union(l1, l2);
    auto where = [&] { return show(l1) + ", " + show(l2); };

    const auto lhs = scalar(generic, generic.t_gap()) * engine.invariant(sum);
    const auto rhs = scalar(generic, generic.x()) * engine.invariant(split);
    if (!tally.expect(lhs == rhs, [&] { return "generic: " + where(); }))
      return;

    const auto clhs = scalar(conway, conway.t_gap()) * conway_engine.invariant(sum);
    const auto crhs = scalar(conway, conway.x()) * conway_engine.invariant(split);
    if (!tally.expect(clhs.is_zero() && crhs.is_zero(), [&] { return "conway: " + where(); }))
      return;
  }
}

void ordering_suite(const CheckConfig& config, Rng& rng, CheckReport& report) {
  Tally tally(report);
  const SkeinEngine engine(Ring::generic(), engine_options(config));
  for (std::size_t c = 0; c < cases_or(config, kPairCases); ++c) {
    const auto l = random_link(rng, RandomLinkShape{2, 5, 12, 6});
    const auto w = random_permutation(rng, l.singular_count());
    const auto moved = reorder(l, w);
    const auto a = engine.invariant_ordered(l), b = engine.invariant_ordered(moved);
    if (!tally.expect(project_unordered(a) == project_unordered(b) && b == permute_coordinates(a, w),
                      [&] { return show(l) + " reordered to " + show(moved); }))
      return;
  }
}

void specialize_suite(const CheckConfig& config, Rng& rng, CheckReport& report) {
  Tally tally(report);
  const SkeinEngine engine(Ring::generic(), engine_options(config));
  const std::vector<Specialization> modes{Specialization::conway_t1(), Specialization::to_prime_field(config.prime)};
  std::deque<SkeinEngine> native;
  for (const Specialization& m : modes)
    native.emplace_back(specialized_ring(m), engine_options(config));

  for (std::size_t c = 0; c < cases_or(config, kPairCases); ++c) {
    const auto l = random_link(rng, RandomLinkShape{1, 5, 12, 4});
    const auto a = engine.invariant_ordered(l);
    for (std::size_t m = 0; m < modes.size(); ++m) {
      std::vector<LocalizedScalar> coords;
      for (const LocalizedScalar& v : a.coords())
        coords.push_back(specialize(v, modes[m]));
      const OrderedSkeinElement mapped(native[m].ring(), a.degree(), std::move(coords));
      const auto direct = native[m].invariant_ordered(l);
      if (!tally.expect(mapped == direct && project_unordered(mapped) == project_unordered(direct),
                        [&] { return native[m].ring().name() + ": " + show(l); }))
        return;
    }
  }
}

void oracle_suite(const CheckConfig& config, Rng&, CheckReport& report) {
  Tally tally(report);
  const Ring ring = Ring::generic();
  const SkeinEngine engine(ring, engine_options(config));

  for (std::uint32_t n = 1; n <= 3; ++n) {
    const std::uint32_t alphabet = 2 * (n - 1);
    for (std::size_t len = 0; len <= (n == 1 ? 0 : 6); ++len) {
      std::vector<std::uint32_t> digits(len, 0);
      for (;;) {
        std::vector<Letter> letters;
        for (std::uint32_t d : digits)
          letters.push_back(d % 2 == 0 ? Letter::pos(d / 2 + 1) : Letter::neg(d / 2 + 1));
        const BraidWord w(n, std::move(letters));
        if (!tally.expect(engine.homfly(w) == naive_homfly(w, ring), [&] { return "\"" + w.to_string() + "\""; }))
          return;
        std::size_t k = 0;
        while (k < len && ++digits[k] == alphabet)
          digits[k++] = 0;
        if (k == len)
          break;
      }
    }
  }

  const std::pair<const char*, const char*> pinned[] = {
      {"2: s1 s1", "1 t x + 1 t x^(-1) - 1 t^3 x^(-1)"},
      {"2: s1 s1 s1", "-1 t^4 + 2 t^2 + 1 t^2 x^2"},
  };
  for (const auto& [word, expected] : pinned) {
    const BraidWord w = BraidWord::parse(word);
    const LaurentPoly want = parse_laurent(ring.base(), expected);
    if (!tally.expect(engine.homfly(w) == want && naive_homfly(w, ring) == want,
                      [&] { return std::string(word) + " expected " + expected; }))
      return;
  }
}

using Suite = void (*)(const CheckConfig&, Rng&, CheckReport&);

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> suites{
      {"skein", skein_suite},       {"markov", markov_suite},         {"star", star_suite},
      {"lemma22", lemma22_suite},   {"ordering", ordering_suite},     {"specialize", specialize_suite},
      {"oracle", oracle_suite},
  };
  return suites;
}

CheckReport run_one(std::size_t index, const CheckConfig& config) {
  const auto& [name, suite] = registry()[index];
  CheckReport report;
  report.suite = name;
  report.seed = config.seed;
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  Rng rng(seq);
  try {
    suite(config, rng, report);
  } catch (const std::exception& e) {
    report.passed = false;
    if (report.counterexample.empty())
      report.counterexample = std::string("exception: ") + e.what();
  }
  return report;
}

} // namespace

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry())
      out.push_back(entry.first);
    return out;
  }();
  return names;
}

std::vector<CheckReport> run_checks(std::string_view suite, const CheckConfig& config) {
  std::vector<CheckReport> reports;
  for (std::size_t i = 0; i < registry().size(); ++i) {
    if (suite == "all" || suite == registry()[i].first)
      reports.push_back(run_one(i, config));
  }
  if (reports.empty())
    throw ConfigError("unknown check suite '" + std::string(suite) + "'");
  return reports;
}

} // namespace skeinforge::verify
