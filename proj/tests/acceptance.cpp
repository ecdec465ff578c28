// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Sizes, corpus seeds and time budgets are fixed here.

#include "nfaba/aba.hpp"
#include "nfaba/baf.hpp"
#include "nfaba/harness.hpp"
#include "nfaba/instantiate.hpp"
#include "nfaba/reductions.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace nfaba;

namespace {

constexpr std::size_t kDefenseBafs = 500;
constexpr std::size_t kDefenseBafMaxArgs = 7;
constexpr std::size_t kDefenseAbas = 300;
constexpr std::size_t kDegenerationBafs = 500;
constexpr std::size_t kDegenerationMaxArgs = 8;
constexpr std::size_t kPropertyBafs = 500;
constexpr std::size_t kPropertyMaxArgs = 8;
constexpr std::size_t kFuzzAbas = 200;
constexpr std::size_t kInstantiationCap = 2000;
constexpr std::size_t kRandomCnfs = 100;
const FuzzBounds kFuzzBounds{8, 5, 10, 3};

constexpr double kGoldenSeconds = 1.0;
constexpr double kDefenseSeconds = 60.0;
constexpr double kDegenerationSeconds = 60.0;
constexpr double kPropertySeconds = 120.0;
constexpr double kFuzzSeconds = 300.0;
constexpr double kConstructionSeconds = 300.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string data(const std::string& file) { return slurp(std::string(NFABA_DATA_DIR) + "/" + file); }

AssumptionSet atoms(const AbaFramework& fw, std::initializer_list<const char*> names) {
  auto s = fw.empty_set();
  for (auto n : names) s.set(*fw.find_name(n));
  return s;
}

ArgSet args(const Baf& baf, std::initializer_list<const char*> names) {
  auto s = baf.empty_set();
  for (auto n : names) s.set(*baf.find_name(n));
  return s;
}

std::vector<ArgSet> family(const Baf& baf,
                           std::initializer_list<std::initializer_list<const char*>> sets) {
  std::vector<ArgSet> out;
  for (auto s : sets) out.push_back(args(baf, s));
  canonicalize(out);
  return out;
}

// Argument of an instantiated framework by support and conclusion names.
ArgId find_arg(const AbaFramework& fw, const ArgumentTable& table,
               std::initializer_list<const char*> support, const char* conclusion) {
  const auto s = atoms(fw, support);
  const auto c = *fw.find_name(conclusion);
  for (std::size_t i = 0; i < table.arguments.size(); ++i)
    if (table.arguments[i].support == s && table.arguments[i].conclusion == c)
      return static_cast<ArgId>(i);
  throw Error(std::string("no argument concluding ") + conclusion);
}

using Edge = std::array<std::string, 2>;

std::string arg_key(const AbaFramework& fw, const Argument& a) {
  std::string out = "{";
  for (auto m : members(a.support)) out += (out.size() > 1 ? "," : "") + fw.label(m);
  return out + "}|-" + fw.label(a.conclusion);
}

std::vector<Edge> named_edges(const AbaFramework& fw, const InstantiatedBaf& inst, bool sup) {
  std::vector<Edge> out;
  for (auto [f, t] : sup ? inst.baf.support_list() : inst.baf.attack_list())
    out.push_back({arg_key(fw, inst.table.arguments[f]), arg_key(fw, inst.table.arguments[t])});
  std::sort(out.begin(), out.end());
  return out;
}

Outcome golden() {
  std::vector<std::pair<std::string, std::function<bool()>>> items;

  const auto ex22 = parse_aba(data("example2_2.aba"));
  items.emplace_back("{b} in ad(D), four-assumption framework",
                     [&] { return aba_is_extension(ex22, Semantics::ad, atoms(ex22, {"b"})); });

  const auto f32 = parse_baf(data("example3_2.baf"));
  items.emplace_back("cl({y}) = {y,z}",
                     [&] { return baf_closure(f32, args(f32, {"y"})) == args(f32, {"y", "z"}); });
  items.emplace_back("co(F) = {{u,v}}", [&] {
    return baf_extensions(f32, Semantics::co) == family(f32, {{"u", "v"}});
  });
  items.emplace_back("{y,z} and {x,u,v} in pr(F)", [&] {
    const auto pr = baf_extensions(f32, Semantics::pr);
    return contains_set(pr, args(f32, {"y", "z"})) && contains_set(pr, args(f32, {"x", "u", "v"}));
  });

  const auto f38 = parse_baf(data("example3_8.baf"));
  items.emplace_back("ad(F) = {{},{x}}", [&] {
    return baf_extensions(f38, Semantics::ad) == family(f38, {{}, {"x"}});
  });
  items.emplace_back("co(F) empty", [&] { return baf_extensions(f38, Semantics::co).empty(); });

  const auto inst22 = instantiate_baf(ex22);
  items.emplace_back("instantiation: the 9 drawn arguments and 9 attacks", [&] {
    std::vector<std::string> names;
    for (const auto& a : inst22.table.arguments) names.push_back(arg_key(ex22, a));
    std::sort(names.begin(), names.end());
    const std::vector<std::string> want{"{a}|-a",  "{a}|-nb", "{b}|-b",  "{b}|-na", "{b}|-nd",
                                        "{c}|-c",  "{c}|-d",  "{c}|-nb", "{d}|-d"};
    const std::vector<Edge> att{{"{a}|-nb", "{b}|-b"},  {"{a}|-nb", "{b}|-na"},
                                {"{a}|-nb", "{b}|-nd"}, {"{b}|-na", "{a}|-a"},
                                {"{b}|-na", "{a}|-nb"}, {"{b}|-nd", "{d}|-d"},
                                {"{c}|-nb", "{b}|-b"},  {"{c}|-nb", "{b}|-na"},
                                {"{c}|-nb", "{b}|-nd"}};
    return names == want && named_edges(ex22, inst22, false) == att;
  });
  items.emplace_back("instantiation: drawn supports plus the two closure supports into c", [&] {
    const std::vector<Edge> sup{{"{a}|-nb", "{a}|-a"}, {"{b}|-na", "{b}|-b"},
                                {"{b}|-nd", "{b}|-b"}, {"{c}|-c", "{d}|-d"},
                                {"{c}|-d", "{c}|-c"},  {"{c}|-d", "{d}|-d"},
                                {"{c}|-nb", "{c}|-c"}, {"{c}|-nb", "{d}|-d"}};
    return named_edges(ex22, inst22, true) == sup;
  });
  items.emplace_back("{A2,A3,b} in ad(F_D)", [&] {
    auto e = inst22.baf.empty_set();
    e.set(find_arg(ex22, inst22.table, {"b"}, "b"));
    e.set(find_arg(ex22, inst22.table, {"b"}, "na"));
    e.set(find_arg(ex22, inst22.table, {"b"}, "nd"));
    return baf_is_extension(inst22.baf, Semantics::ad, e);
  });

  const auto ex44 = parse_aba(data("example4_4.aba"));
  const auto inst44 = instantiate_pbaf(ex44);
  auto witness = inst44.pbaf.baf().empty_set();
  witness.set(find_arg(ex44, inst44.table, {"a"}, "a"));
  witness.set(find_arg(ex44, inst44.table, {"b"}, "b"));
  witness.set(find_arg(ex44, inst44.table, {"a"}, "p"));
  witness.set(find_arg(ex44, inst44.table, {"b"}, "q"));
  items.emplace_back("{a,b,A1,A2} in ad(F_D) while {a,b} not in ad(D)", [&] {
    return baf_is_extension(inst44.pbaf.baf(), Semantics::ad, witness) &&
           !aba_is_extension(ex44, Semantics::ad, atoms(ex44, {"a", "b"}));
  });
  items.emplace_back("{a,b,A1,A2} rejected by pBAF ad", [&] {
    return !pbaf_is_extension(inst44.pbaf, Semantics::ad, witness);
  });
  items.emplace_back("{a,A1} in ad(PF)", [&] {
    auto e = inst44.pbaf.baf().empty_set();
    e.set(find_arg(ex44, inst44.table, {"a"}, "a"));
    e.set(find_arg(ex44, inst44.table, {"a"}, "p"));
    return pbaf_is_extension(inst44.pbaf, Semantics::ad, e);
  });

  const auto mot = parse_aba(data("motivating.aba"));
  items.emplace_back("{cc,mr} in co(D)", [&] {
    return aba_is_extension(mot, Semantics::co, atoms(mot, {"cc", "mr"}));
  });

  Outcome out;
  std::size_t ok = 0;
  for (auto& [name, check] : items) {
    bool pass = false;
    try {
      pass = check();
    } catch (const std::exception&) {
    }
    if (pass) {
      ++ok;
    } else {
      out.pass = false;
      out.detail += " [failed: " + name + "]";
    }
  }
  out.detail = std::to_string(ok) + "/" + std::to_string(items.size()) + " items" + out.detail;
  return out;
}

Outcome from_report(const CheckReport& r) {
  Outcome out;
  out.pass = r.ok();
  out.detail = std::to_string(r.cases_run) + " cases, " + std::to_string(r.records.size()) +
               " checks, " + std::to_string(r.failures()) + " failures, " +
               std::to_string(r.skipped()) + " skipped";
  return out;
}

BafParams baf_params(std::uint64_t seed, std::size_t max_args, double support_density) {
  const std::array<double, 4> densities{0.1, 0.2, 0.3, 0.45};
  return BafParams{1 + seed % max_args, densities[seed % densities.size()],
                   support_density < 0 ? densities[(seed / 4) % densities.size()] : support_density,
                   seed};
}

Outcome defense_baf() {
  CheckReport all;
  for (std::uint64_t seed = 1; seed <= kDefenseBafs; ++seed)
    all.merge(check_defense_equivalence(random_baf(baf_params(seed, kDefenseBafMaxArgs, -1)), seed));
  return from_report(all);
}

Outcome defense_aba() {
  CheckReport all;
  for (std::uint64_t seed = 1; seed <= kDefenseAbas; ++seed)
    all.merge(check_aba_defense_equivalence(random_aba(fuzz_params(kFuzzBounds, seed)), seed));
  return from_report(all);
}

Outcome degeneration() {
  CheckReport all;
  for (std::uint64_t seed = 1; seed <= kDegenerationBafs; ++seed)
    all.merge(check_degeneration(random_baf(baf_params(seed, kDegenerationMaxArgs, 0.0)), seed));
  return from_report(all);
}

Outcome properties() {
  CheckReport all;
  for (std::uint64_t seed = 1; seed <= kPropertyBafs; ++seed) {
    all.merge(check_baf_properties(random_baf(baf_params(seed, kPropertyMaxArgs, -1)), seed));
    all.merge(check_aba_properties(random_aba(fuzz_params(kFuzzBounds, seed)), seed));
  }
  return from_report(all);
}

// Keeps records whose direction starts with `prefix`, and notes how many
// failing grounded cases have no complete assumption extension.
Outcome correspondence(const std::string& prefix, std::initializer_list<Semantics> sigmas) {
  CheckReport kept;
  std::map<std::string, std::size_t> by_class;
  std::size_t gr_without_co = 0;
  for (std::uint64_t seed = 1; seed <= kFuzzAbas; ++seed) {
    const auto fw = random_aba(fuzz_params(kFuzzBounds, seed));
    ++kept.cases_run;
    for (auto sigma : sigmas) {
      auto r = check_correspondence(fw, sigma, seed,
                                    CheckLimits{kInstantiationCap, kInstantiationCap, {}});
      for (auto& rec : r.records) {
        if (rec.direction.rfind(prefix, 0) != 0) continue;
        if (rec.status == Status::fail) {
          ++by_class[rec.sigma + " " + rec.direction];
          if (sigma == Semantics::gr && aba_extensions(fw, Semantics::co).empty()) ++gr_without_co;
        }
        kept.records.push_back(std::move(rec));
      }
    }
  }
  auto out = from_report(kept);
  for (const auto& [cls, n] : by_class) out.detail += "; " + cls + ": " + std::to_string(n);
  if (gr_without_co > 0)
    out.detail += "; gr failures with co(D) empty: " + std::to_string(gr_without_co);
  return out;
}

Outcome constructions() {
  CheckReport all;
  std::uint64_t seed = 0;
  for (const auto& cnf : all_cnfs(3, 3, 3)) all.merge(check_construction_lemmas(cnf, ++seed));
  for (std::uint64_t s = 1; s <= kRandomCnfs; ++s)
    all.merge(check_construction_lemmas(random_cnf(4, 1 + s % 5, 3, s), 10000 + s));
  return from_report(all);
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(NFABA_CLI) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw Error("cannot run " + cmd);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return out + "\nstatus " + std::to_string(status);
}

Outcome round_trip() {
  Outcome out;
  std::size_t checked = 0, bad = 0;
  auto note = [&](bool ok, const std::string& what, std::uint64_t seed) {
    ++checked;
    if (ok) return;
    ++bad;
    out.detail += " [" + what + " seed " + std::to_string(seed) + "]";
  };
  for (std::uint64_t seed = 1; seed <= kFuzzAbas; ++seed) {
    const auto fw = random_aba(fuzz_params(kFuzzBounds, seed));
    const auto aba_text = serialize_aba(fw);
    note(parse_aba(aba_text) == fw && serialize_aba(parse_aba(aba_text)) == aba_text, "aba", seed);
    InstantiatedPbaf inst;
    try {
      inst = instantiate_pbaf(fw, kInstantiationCap);
    } catch (const CapExceeded&) {
      continue;
    }
    const auto baf_text = serialize_baf(inst.pbaf.baf());
    note(parse_baf(baf_text) == inst.pbaf.baf() && serialize_baf(parse_baf(baf_text)) == baf_text,
         "baf", seed);
    const auto pbaf_text = serialize_pbaf(inst.pbaf);
    note(parse_pbaf(pbaf_text) == inst.pbaf && serialize_pbaf(parse_pbaf(pbaf_text)) == pbaf_text,
         "pbaf", seed);
  }

  const std::string dir = NFABA_DATA_DIR;
  const std::vector<std::string> commands{
      "solve aba " + dir + "/example2_2.aba --sigma pr",
      "solve baf " + dir + "/example3_2.baf --sigma co --format json",
      "translate " + dir + "/example4_4.aba --target pbaf",
      "reduce " + dir + "/fig.cnf --construction skept-baf",
      "export-dot baf " + dir + "/example3_2.baf",
      "fuzz --count 30 --seed 11 --format json --verbose",
  };
  for (std::size_t i = 0; i < commands.size(); ++i)
    note(run_cli(commands[i]) == run_cli(commands[i]), "cli run " + std::to_string(i), 0);

  out.pass = bad == 0;
  out.detail = std::to_string(checked) + " checks, " + std::to_string(bad) + " mismatches" + out.detail;
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "worked-example golden suite", kGoldenSeconds, golden},
      {2, "BAF defense modes agree (500 BAFs, <= 7 args)", kDefenseSeconds, defense_baf},
      {3, "ABA defense modes agree (300 ABAFs)", kDefenseSeconds, defense_aba},
      {4, "support-free BAFs match the classic AF semantics", kDegenerationSeconds, degeneration},
      {5, "structural properties and closure laws", kPropertySeconds, properties},
      {6, "ABA vs instantiated BAF (200 ABAFs)", kFuzzSeconds,
       [] {
         return correspondence("baf-",
                               {Semantics::ad, Semantics::co, Semantics::gr, Semantics::stb});
       }},
      {7, "ABA vs instantiated pBAF (200 ABAFs)", kFuzzSeconds,
       [] {
         return correspondence("pbaf-", {Semantics::ad, Semantics::co, Semantics::pr,
                                         Semantics::gr, Semantics::stb});
       }},
      {8, "gadget constructions vs brute-force SAT", kConstructionSeconds, constructions},
      {9, "round trip and deterministic CLI output", 0, round_trip},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && secs > c.budget) {
      o.pass = false;
      o.detail += "; over time budget";
    }
    char timing[64];
    if (c.budget > 0)
      std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.budget);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title
              << "  (" << timing << ")  " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
