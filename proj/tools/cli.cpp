#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "skeinforge/errors.hpp"
#include "skeinforge/skein.hpp"
#include "skeinforge/verify/checks.hpp"

namespace skeinforge::cli {

namespace {

using nlohmann::ordered_json;

struct RunConfig {
  std::string ring = "generic";
  unsigned jobs = 1;
  std::size_t crossing_bound = 24;
  std::size_t sing_bound = 10;
  bool json = false;
  bool ordered = false;
  std::uint64_t seed = 42;
  std::size_t cases = 0;
};

void add_common(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--ring", config.ring, "Coefficient ring: generic, conway or gf:<p>")->capture_default_str();
  cmd.add_option("--jobs", config.jobs, "Worker threads")
      ->envname("SKEINFORGE_JOBS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--max-crossings", config.crossing_bound, "Largest accepted word length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--max-sing", config.sing_bound, "Largest accepted number of singular points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_flag("--json", config.json, "Emit JSON");
}

SkeinEngine::Options engine_options(const RunConfig& config) {
  return SkeinEngine::Options{config.crossing_bound, config.sing_bound, config.jobs};
}

ordered_json scalar_json(const LocalizedScalar& c) {
  return ordered_json{{"num", c.numerator().to_string()}, {"dpow", c.dpow()}};
}

int cmd_invariant(const std::string& text, const RunConfig& config, std::ostream& out) {
  const OrderedSingularLink link = OrderedSingularLink::parse(text);
  const SkeinEngine engine(Ring::parse(config.ring), engine_options(config));
  const OrderedSkeinElement ordered = engine.invariant_ordered(link);
  const SkeinPolynomial poly = project_unordered(ordered);

  if (config.json) {
    ordered_json doc;
    doc["d"] = link.singular_count();
    doc["coeffs"] = ordered_json::array();
    for (const auto& [e, c] : poly.coeffs()) {
      ordered_json entry{{"i", e.first}, {"j", e.second}};
      entry.update(scalar_json(c));
      doc["coeffs"].push_back(entry);
    }
    if (config.ordered) {
      doc["ordered"] = ordered_json::array();
      for (std::uint64_t i = 0; i < ordered.coords().size(); ++i) {
        if (ordered.at_index(i).is_zero())
          continue;
        ordered_json entry{{"eps", ResolutionVector::from_index(i, ordered.degree()).to_string()}};
        entry.update(scalar_json(ordered.at_index(i)));
        doc["ordered"].push_back(entry);
      }
    }
    out << doc.dump() << '\n';
    return kOk;
  }
  out << poly.to_string() << '\n';
  if (config.ordered)
    out << ordered.to_string() << '\n';
  return kOk;
}

int cmd_homfly(const std::string& text, const RunConfig& config, std::ostream& out) {
  const BraidWord word = BraidWord::parse(text);
  const SkeinEngine engine(Ring::parse(config.ring), engine_options(config));
  const SkeinValue value = engine.homfly(word);
  if (config.json)
    out << ordered_json{{"homfly", value.to_string()}}.dump() << '\n';
  else
    out << value.to_string() << '\n';
  return kOk;
}

int cmd_check(const std::string& suite, const RunConfig& config, std::ostream& out) {
  verify::CheckConfig check;
  check.seed = config.seed;
  check.jobs = config.jobs;
  check.cases = config.cases;
  check.max_crossings = config.crossing_bound;
  const std::vector<verify::CheckReport> reports = verify::run_checks(suite, check);

  bool all_passed = true;
  if (config.json) {
    ordered_json doc{{"seed", config.seed}, {"suites", ordered_json::array()}};
    for (const auto& r : reports) {
      doc["suites"].push_back(ordered_json{
          {"suite", r.suite}, {"passed", r.passed}, {"cases", r.cases}, {"counterexample", r.counterexample}});
      all_passed = all_passed && r.passed;
    }
    out << doc.dump() << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.passed ? "PASS " : "FAIL ") << r.suite << " (" << r.cases << " cases, seed " << r.seed << ")";
      if (!r.passed)
        out << ": first counterexample: " << r.counterexample;
      out << '\n';
      all_passed = all_passed && r.passed;
    }
  }
  return all_passed ? kOk : kCheckFailed;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skein-module invariants of singular links given as closed singular braids", "skeinforge"};
  app.require_subcommand(1);

  if (const char* env = std::getenv("SKEINFORGE_JOBS")) {
    unsigned jobs = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, jobs);
    if (ec != std::errc() || ptr != end || jobs == 0) {
      err << "configuration error: SKEINFORGE_JOBS must be a positive integer\n";
      return kUsageError;
    }
  }

  RunConfig config;
  std::string word;
  std::string suite;

  CLI::App* invariant = app.add_subcommand("invariant", "Polynomial in X, Y of a singular link");
  add_common(*invariant, config);
  invariant->add_flag("--ordered", config.ordered, "Also print coordinates in the ordered basis Z[e]");
  invariant->add_option("word", word, "Word such as \"3: s1 s2^-1 t1 | o = 1\"")->required();

  CLI::App* homfly_cmd = app.add_subcommand("homfly", "HOMFLY-PT polynomial of a nonsingular closed braid");
  add_common(*homfly_cmd, config);
  homfly_cmd->add_option("word", word, "Word such as \"2: s1 s1 s1\"")->required();

  CLI::App* check = app.add_subcommand("check", "Run a verification suite");
  add_common(*check, config);
  check->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  check->add_option("--cases", config.cases, "Cases per property (0 = suite default)");
  check->add_option("suite", suite, "skein, markov, star, lemma22, ordering, specialize, oracle or all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (invariant->parsed())
      return cmd_invariant(word, config, out);
    if (homfly_cmd->parsed())
      return cmd_homfly(word, config, out);
    return cmd_check(suite, config, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BoundError& e) {
    err << "bound exceeded: " << e.what() << '\n';
    return kBoundExceeded;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  }
}

} // namespace skeinforge::cli
