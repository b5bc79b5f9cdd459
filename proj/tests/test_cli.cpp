#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "skeinforge/laurent.hpp"

using namespace skeinforge;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "skeinforge");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("invariant text output") {
  CHECK(run({"invariant", "2: t1"}).out == "X\n");
  CHECK(run({"invariant", "2: t1 s1"}).out == "Y\n");
  CHECK(run({"invariant", "2: t1 s1^-1"}).out == "t^(-2) Y - t^(-1) x X\n");
  CHECK(run({"invariant", "--ring", "conway", "2: t1 s1^-1"}).out == "Y - x X\n");
  CHECK(run({"invariant", "1:"}).out == "1\n");
  CHECK(run({"invariant", "3: t1 t2 s2"}).out == "X Y\n");
  const Result ordered = run({"invariant", "--ordered", "3: t1 t2 s2 | o = 2 1"});
  CHECK(ordered.code == cli::kOk);
  CHECK(ordered.out == "X Y\nZ[10] = 1\n");
}

TEST_CASE("homfly output") {
  const Result r = run({"homfly", "2: s1 s1 s1"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "-1 t^4 + 2 t^2 + 1 t^2 x^2\n");
  CHECK(run({"homfly", "--ring", "gf:5", "2: s1 s1 s1"}).out == "4 t^4 + 2 t^2 + 1 t^2 x^2\n");
}

TEST_CASE("json output") {
  const auto doc = nlohmann::json::parse(run({"invariant", "--json", "--ordered", "2: t1 s1^-1"}).out);
  CHECK(doc["d"] == 1);
  REQUIRE(doc["coeffs"].size() == 2);
  for (const auto& entry : doc["coeffs"]) {
    const LaurentPoly num = parse_laurent(BaseRing::integers(), entry["num"].get<std::string>());
    CHECK(num.is_monomial());
    CHECK(entry["dpow"] == 0);
    CHECK(entry["i"].get<int>() + entry["j"].get<int>() == 1);
  }
  CHECK(doc["ordered"].size() == 2);
  CHECK(doc["ordered"][0]["eps"] == "0");

  const auto h = nlohmann::json::parse(run({"homfly", "--json", "2: s1 s1"}).out);
  CHECK(h["homfly"] == "-1 t^3 x^(-1) + 1 t x^(-1) + 1 t x");

  const auto c = nlohmann::json::parse(run({"check", "--json", "--cases", "5", "star"}).out);
  CHECK(c["seed"] == 42);
  CHECK(c["suites"][0]["suite"] == "star");
  CHECK(c["suites"][0]["passed"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run({"homfly", "2: t1"}).code == cli::kPrecondition);
  CHECK(run({"invariant", "2: q1"}).code == cli::kUsageError);
  CHECK(run({"invariant", "--ring", "gf:4", "2: t1"}).code == cli::kUsageError);
  CHECK(run({"bogus"}).code == cli::kUsageError);
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"check", "nonexistent"}).code == cli::kUsageError);
  CHECK(run({"invariant", "--max-sing", "1", "3: t1 t2"}).code == cli::kBoundExceeded);
  CHECK(run({"homfly", "--max-crossings", "2", "2: s1 s1 s1"}).code == cli::kBoundExceeded);
  const Result ok = run({"check", "--cases", "3", "markov"});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.rfind("PASS markov (", 0) == 0);
}

TEST_CASE("deterministic for a seed and job count") {
  const Result a = run({"check", "--seed", "9", "--cases", "4", "--jobs", "1", "ordering"});
  const Result b = run({"check", "--seed", "9", "--cases", "4", "--jobs", "3", "ordering"});
  CHECK(a.out == b.out);
  CHECK(run({"invariant", "--jobs", "4", "--ordered", "4: t1 t2 s1 t3"}).out ==
        run({"invariant", "--ordered", "4: t1 t2 s1 t3"}).out);
}

TEST_CASE("jobs from the environment") {
  ::setenv("SKEINFORGE_JOBS", "2", 1);
  const Result r = run({"invariant", "3: t1 t2 s2"});
  ::unsetenv("SKEINFORGE_JOBS");
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "X Y\n");
  ::setenv("SKEINFORGE_JOBS", "zero", 1);
  CHECK(run({"invariant", "2: t1"}).code == cli::kUsageError);
  ::unsetenv("SKEINFORGE_JOBS");
}
