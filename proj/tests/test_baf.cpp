#include "doctest.h"
#include "nfaba/baf.hpp"
#include "nfaba/harness.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include <random>

using namespace nfaba;
using testing::args;
using testing::ids;

namespace {

const Semantics kAll[] = {Semantics::cf, Semantics::ad, Semantics::co,
                          Semantics::gr, Semantics::pr, Semantics::stb};

std::vector<ArgSet> family(const Baf& baf,
                           std::initializer_list<std::initializer_list<const char*>> sets) {
  std::vector<ArgSet> out;
  for (auto s : sets) out.push_back(args(baf, s));
  canonicalize(out);
  return out;
}

Pbaf random_pbaf(const BafParams& params) {
  std::mt19937_64 rng(params.seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t n_premises = 1 + rng() % 4;
  Pbaf out(random_baf(params), n_premises);
  for (ArgId a = 0; a < out.size(); ++a) {
    std::vector<PremiseId> prem;
    for (PremiseId p = 0; p < n_premises; ++p)
      if (rng() % 3 == 0) prem.push_back(p);
    out.set_premises(a, prem);
  }
  return out;
}

}  // namespace

TEST_CASE("closure, range and conflict-freeness") {
  const auto f = testing::baf_file("example3_2.baf");
  CHECK(baf_closure(f, args(f, {"y"})) == args(f, {"y", "z"}));
  CHECK(baf_closure(f, args(f, {"u"})) == args(f, {"u", "v"}));
  CHECK(range(f, args(f, {"y"})) == args(f, {"x", "v"}));
  CHECK(is_conflict_free(f, args(f, {"y", "z"})));
  CHECK_FALSE(is_conflict_free(f, args(f, {"x", "y"})));
  CHECK(is_closed(f, args(f, {"u", "v"})));
  CHECK_FALSE(is_closed(f, args(f, {"u"})));
}

TEST_CASE("closure-aware defense") {
  const auto f = testing::baf_file("example3_2.baf");
  const auto x = *f.find_name("x");
  // the attacker y drags z along, and u attacks z
  CHECK(baf_defends(f, args(f, {"u"}), x));
  CHECK(baf_defends(f, args(f, {"u"}), x, DefenseMode::closed_sets));
  CHECK_FALSE(baf_defends(f, f.empty_set(), x));
  CHECK(characteristic(f, args(f, {"u", "v"})) == args(f, {"x", "u", "v"}));
}

TEST_CASE("example with two preferred extensions") {
  const auto f = testing::baf_file("example3_2.baf");
  const auto pr = baf_extensions(f, Semantics::pr);
  CHECK(pr == family(f, {{"x", "u", "v"}, {"y", "z"}}));
  // {u,v} is admissible but not complete: it defends x.
  CHECK(baf_is_extension(f, Semantics::ad, args(f, {"u", "v"})));
  CHECK_FALSE(baf_is_extension(f, Semantics::co, args(f, {"u", "v"})));
  CHECK(baf_extensions(f, Semantics::co) == family(f, {{"x", "u", "v"}}));
  CHECK(baf_decide(f, Semantics::co, Task::skept, args(f, {"u"})));
  CHECK_FALSE(baf_decide(f, Semantics::pr, Task::skept, args(f, {"u"})));
  CHECK(baf_decide(f, Semantics::pr, Task::cred, args(f, {"y"})));
}

TEST_CASE("example without complete extensions") {
  const auto f = testing::baf_file("example3_8.baf");
  CHECK(baf_extensions(f, Semantics::ad) == family(f, {{}, {"x"}}));
  CHECK(baf_extensions(f, Semantics::co).empty());
  CHECK(baf_extensions(f, Semantics::gr) == family(f, {{}}));
  CHECK(baf_decide(f, Semantics::co, Task::skept, args(f, {"x"})));  // vacuous
  CHECK_FALSE(baf_decide(f, Semantics::co, Task::cred, args(f, {"x"})));
}

TEST_CASE("support-free frameworks") {
  Baf cycle(2);
  cycle.add_attack(0, 1);
  cycle.add_attack(1, 0);
  std::vector<ArgSet> expected{ids(2, {0}), ids(2, {1})};
  CHECK(af_extensions(cycle, Semantics::pr) == expected);
  CHECK(af_extensions(cycle, Semantics::stb) == expected);
  CHECK(af_extensions(cycle, Semantics::gr) == std::vector<ArgSet>{ids(2, {})});
  CHECK(baf_extensions(cycle, Semantics::co).size() == 3);

  Baf supported(2);
  supported.add_support(0, 1);
  CHECK_THROWS_AS(af_extensions(supported, Semantics::co), SupportsPresent);
}

TEST_CASE("single argument and the empty framework") {
  const auto single = testing::baf_file("single.baf");
  CHECK(baf_extensions(single, Semantics::stb) == std::vector<ArgSet>{ids(1, {0})});
  const Baf empty(0);
  CHECK(baf_extensions(empty, Semantics::co) == std::vector<ArgSet>{ArgSet(0)});
  CHECK(baf_extensions(empty, Semantics::stb) == std::vector<ArgSet>{ArgSet(0)});
}

TEST_CASE("guards") {
  const auto big = random_baf(BafParams{30, 0.05, 0.05, 3});
  CHECK_THROWS_AS(baf_defends(big, big.empty_set(), 0, DefenseMode::closed_sets), TooLarge);
  CHECK_THROWS_AS(baf_extensions(big, Semantics::pr), TooLarge);
  CHECK_NOTHROW(baf_extensions(big, Semantics::gr, Limits{30}).size());
  CHECK_THROWS_AS(baf_decide(big, Semantics::co, Task::cred, ids(30, {0, 1}), Limits{30}),
                  std::invalid_argument);
}

TEST_CASE("premises and exhaustiveness") {
  Baf baf(3);
  baf.add_attack(2, 2);
  Pbaf p(baf, 2);
  p.set_premises(0, {0});
  p.set_premises(1, {0});
  p.set_premises(2, {0, 1});
  CHECK(p.premises_of(ids(3, {0, 2})) == ids(2, {0, 1}));
  CHECK_FALSE(is_exhaustive(p, ids(3, {0})));
  CHECK(is_exhaustive(p, ids(3, {0, 1})));
  CHECK(pbaf_extensions(p, Semantics::ad) == std::vector<ArgSet>{ids(3, {}), ids(3, {0, 1})});
  CHECK(pbaf_is_extension(p, Semantics::cf, ids(3, {0})));
  CHECK_FALSE(pbaf_is_extension(p, Semantics::ad, ids(3, {0})));
  CHECK_THROWS_AS(p.set_premises(0, {2}), Error);
}

TEST_CASE("property: BAF semantics agree with the definition-level oracle") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto f = random_baf(BafParams{1 + seed % 7, 0.25, 0.15, seed});
    const oracle::Baf ref(f);
    for (auto sigma : kAll) {
      CAPTURE(seed);
      CAPTURE(to_string(sigma));
      CHECK(baf_extensions(f, sigma) == oracle::sorted_family(f.size(), ref.extensions(sigma)));
    }
    for (oracle::Mask e = 0; e < (oracle::Mask{1} << f.size()); e += 3)
      CHECK(characteristic(f, oracle::to_set(f.size(), e)) ==
            oracle::to_set(f.size(), ref.gamma(e)));
  }
}

TEST_CASE("property: pBAF semantics agree with the definition-level oracle") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto p = random_pbaf(BafParams{1 + seed % 7, 0.25, 0.15, seed});
    const oracle::Baf ref(p);
    for (auto sigma : kAll) {
      CAPTURE(seed);
      CAPTURE(to_string(sigma));
      const auto got = pbaf_extensions(p, sigma);
      CHECK(got == oracle::sorted_family(p.size(), ref.extensions(sigma)));
      for (const auto& e : got) CHECK(pbaf_is_extension(p, sigma, e));
    }
  }
}
