// nfaba: solve, translate, reduce, fuzz and export-dot front end.
//
// Exit codes: 0 success, 1 general failure, 2 parse error, 3 guard tripped.

#include "nfaba/aba.hpp"
#include "nfaba/baf.hpp"
#include "nfaba/dot.hpp"
#include "nfaba/harness.hpp"
#include "nfaba/instantiate.hpp"
#include "nfaba/reductions.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace nfaba;

namespace {

constexpr int kFailure = 1;
constexpr int kParse = 2;
constexpr int kGuard = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "a,b", "{a,b}", "[a,b]" or a single token; each item a name or an id.
std::vector<std::string> split_query(std::string text) {
  for (char& c : text)
    if (c == '{' || c == '}' || c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream words(text);
  std::vector<std::string> out;
  for (std::string w; words >> w;) out.push_back(w);
  return out;
}

std::optional<long long> as_number(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

AtomSet aba_query(const AbaFramework& fw, const std::string& text) {
  AtomSet out = fw.empty_set();
  for (const auto& item : split_query(text)) {
    std::optional<AtomId> atom = fw.find_name(item);
    if (!atom) {
      const auto v = as_number(item);
      if (!v || *v < 1 || static_cast<std::size_t>(*v) > fw.atom_count())
        throw UsageError("unknown atom '" + item + "'");
      atom = static_cast<AtomId>(*v - 1);
    }
    if (!fw.is_assumption(*atom)) throw UsageError("'" + item + "' is not an assumption");
    out.set(*atom);
  }
  return out;
}

ArgSet baf_query(const Baf& baf, const std::string& text) {
  ArgSet out = baf.empty_set();
  for (const auto& item : split_query(text)) {
    std::optional<ArgId> arg = baf.find_name(item);
    if (!arg) {
      const auto v = as_number(item);
      if (!v || *v < 0 || static_cast<std::size_t>(*v) >= baf.size())
        throw UsageError("unknown argument '" + item + "'");
      arg = static_cast<ArgId>(*v);
    }
    out.set(*arg);
  }
  return out;
}

struct SolveOptions {
  std::string formalism, input, sigma = "co", task = "enumerate", query, format = "text";
  std::size_t limit = 24;
};

int run_solve(const SolveOptions& o) {
  const Semantics sigma = parse_semantics(o.sigma);
  const Task task = parse_task(o.task);
  const Limits limits{o.limit};
  if (task != Task::enumerate && o.query.empty() && task != Task::ver)
    throw UsageError("--query is required for " + std::string(to_string(task)));
  const std::string text = read_input(o.input);

  std::vector<std::vector<std::string>> named;
  std::optional<bool> answer;
  if (o.formalism == "aba") {
    const auto fw = parse_aba(text);
    if (task == Task::enumerate) {
      for (const auto& s : aba_extensions(fw, sigma, limits)) {
        named.emplace_back();
        for (auto a : members(s)) named.back().push_back(fw.label(a));
      }
    } else {
      answer = aba_decide(fw, sigma, task, aba_query(fw, o.query), limits);
    }
  } else if (o.formalism == "baf" || o.formalism == "pbaf") {
    std::istringstream in(text);
    auto doc = parse_baf_document(in);
    if (doc.has_premises != (o.formalism == "pbaf"))
      throw ParseError(1, "header does not declare a " + o.formalism);
    const auto& pbaf = doc.framework;
    const auto& baf = pbaf.baf();
    if (task == Task::enumerate) {
      const auto family = o.formalism == "pbaf" ? pbaf_extensions(pbaf, sigma, limits)
                                                : baf_extensions(baf, sigma, limits);
      for (const auto& e : family) {
        named.emplace_back();
        for (auto a : members(e)) named.back().push_back(baf.label(a));
      }
    } else {
      const auto query = baf_query(baf, o.query);
      answer = o.formalism == "pbaf" ? pbaf_decide(pbaf, sigma, task, query, limits)
                                     : baf_decide(baf, sigma, task, query, limits);
    }
  } else {
    throw UsageError("unknown formalism '" + o.formalism + "'");
  }

  if (o.format == "json") {
    nlohmann::json doc;
    doc["semantics"] = to_string(sigma);
    doc["task"] = to_string(task);
    if (answer) {
      doc["answer"] = *answer;
    } else {
      doc["extensions"] = named;
      doc["count"] = named.size();
    }
    std::cout << doc.dump(2) << '\n';
  } else if (answer) {
    std::cout << (*answer ? "YES" : "NO") << '\n';
  } else {
    for (const auto& e : named) {
      std::cout << '[';
      for (std::size_t i = 0; i < e.size(); ++i) std::cout << (i ? "," : "") << e[i];
      std::cout << "]\n";
    }
    std::cout << "count " << named.size() << '\n';
  }
  return 0;
}

int run_translate(const std::string& input, const std::string& target, std::size_t cap) {
  const auto fw = parse_aba(read_input(input));
  if (target == "baf") {
    const auto inst = instantiate_baf(fw, cap);
    const auto origins = inst.table.origins();
    write_baf(std::cout, inst.baf, &origins);
  } else if (target == "pbaf") {
    const auto inst = instantiate_pbaf(fw, cap);
    const auto origins = inst.table.origins();
    write_pbaf(std::cout, inst.pbaf, &origins);
  } else {
    throw UsageError("unknown target '" + target + "'");
  }
  return 0;
}

int run_reduce(const std::string& input, const std::string& construction) {
  const auto cnf = parse_dimacs(read_input(input));
  if (construction == "sat-baf")
    write_baf(std::cout, construct_sat_baf(cnf).baf);
  else if (construction == "gr-baf")
    write_baf(std::cout, construct_gr_baf(cnf).baf);
  else if (construction == "skept-baf")
    write_baf(std::cout, construct_skept_baf(cnf).baf);
  else if (construction == "skept-pbaf")
    write_pbaf(std::cout, construct_skept_pbaf(cnf).pbaf);
  else
    throw UsageError("unknown construction '" + construction + "'");
  return 0;
}

struct FuzzOptions {
  std::size_t count = 20;
  std::uint64_t seed = 1;
  std::vector<std::string> checks{"correspondence"};
  std::vector<std::string> sigmas;
  FuzzBounds bounds;
  std::size_t max_args = 7;
  std::size_t cnf_vars = 4;
  std::size_t cnf_clauses = 5;
  std::size_t cap = 2000;
  std::string format = "text";
  bool verbose = false;
};

int run_fuzz(const FuzzOptions& o) {
  std::vector<Semantics> sigmas;
  for (const auto& s : o.sigmas) sigmas.push_back(parse_semantics(s));
  if (sigmas.empty())
    sigmas = {Semantics::ad, Semantics::co, Semantics::pr, Semantics::gr, Semantics::stb};
  CheckLimits limits;
  limits.cap = o.cap;
  limits.max_enumeration = o.cap;

  CheckReport report;
  for (const auto& check : o.checks) {
    if (check != "correspondence" && check != "defense-eq" && check != "aba-defense-eq" &&
        check != "constructions" && check != "degeneration" && check != "properties")
      throw UsageError("unknown check '" + check + "'");
  }
  for (std::size_t i = 0; i < o.count; ++i) {
    const std::uint64_t seed = o.seed + i;
    for (const auto& check : o.checks) {
      if (check == "correspondence") {
        const auto fw = random_aba(fuzz_params(o.bounds, seed));
        CheckReport one;
        for (Semantics sigma : sigmas) one.merge(check_correspondence(fw, sigma, seed, limits));
        one.cases_run = 1;
        report.merge(std::move(one));
      } else if (check == "aba-defense-eq") {
        report.merge(check_aba_defense_equivalence(random_aba(fuzz_params(o.bounds, seed)), seed));
      } else if (check == "properties") {
        report.merge(check_aba_properties(random_aba(fuzz_params(o.bounds, seed)), seed));
        BafParams bp{1 + seed % o.max_args, 0.25, 0.15, seed};
        report.merge(check_baf_properties(random_baf(bp), seed));
      } else if (check == "defense-eq" || check == "degeneration") {
        BafParams bp{1 + seed % o.max_args, 0.25, check == "degeneration" ? 0.0 : 0.15, seed};
        const Baf baf = random_baf(bp);
        report.merge(check == "defense-eq" ? check_defense_equivalence(baf, seed)
                                           : check_degeneration(baf, seed));
      } else {
        const auto cnf = random_cnf(o.cnf_vars, 1 + seed % o.cnf_clauses, 3, seed);
        report.merge(check_construction_lemmas(cnf, seed));
      }
    }
  }
  std::cout << (o.format == "json" ? report.json() : report.text(o.verbose));
  return report.ok() ? 0 : kFailure;
}

int run_export(const std::string& formalism, const std::string& input) {
  std::istringstream in(read_input(input));
  auto doc = parse_baf_document(in);
  if (formalism != "baf" && formalism != "pbaf")
    throw UsageError("export-dot takes a baf or pbaf input");
  if (doc.has_premises != (formalism == "pbaf"))
    throw ParseError(1, "header does not declare a " + formalism);
  std::cout << (doc.has_premises ? to_dot(doc.framework) : to_dot(doc.framework.baf()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-flat ABA and closed-extension (p)BAF solver"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Enumerate extensions or answer a decision task");
  s->add_option("formalism", solve.formalism, "aba, baf or pbaf")
      ->required()
      ->check(CLI::IsMember({"aba", "baf", "pbaf"}));
  s->add_option("input", solve.input, "Input file, - for stdin")->required();
  s->add_option("--sigma", solve.sigma, "cf, ad, co, gr, pr or stb")->capture_default_str();
  s->add_option("--task", solve.task, "enumerate, cred, skept or ver")->capture_default_str();
  s->add_option("--query", solve.query, "Name, id or set such as {a,b}");
  s->add_option("--limit,--cap", solve.limit, "Enumeration guard")->capture_default_str();
  s->add_option("--format", solve.format)->check(CLI::IsMember({"text", "json"}));

  std::string t_input, t_target = "baf";
  std::size_t t_cap = 5000;
  auto* t = app.add_subcommand("translate", "Instantiate an ABA framework as a BAF or pBAF");
  t->add_option("input", t_input)->required();
  t->add_option("--target", t_target)->check(CLI::IsMember({"baf", "pbaf"}))->capture_default_str();
  t->add_option("--cap", t_cap, "Argument cap")->capture_default_str();

  std::string r_input, r_construction;
  auto* r = app.add_subcommand("reduce", "Build a gadget framework from a DIMACS formula");
  r->add_option("input", r_input)->required();
  r->add_option("--construction", r_construction)
      ->required()
      ->check(CLI::IsMember({"sat-baf", "gr-baf", "skept-baf", "skept-pbaf"}));

  FuzzOptions fuzz;
  auto* f = app.add_subcommand("fuzz", "Run seeded checks");
  f->add_option("--count", fuzz.count)->capture_default_str();
  f->add_option("--seed", fuzz.seed)->capture_default_str();
  f->add_option("--checks", fuzz.checks,
                "correspondence, defense-eq, aba-defense-eq, constructions, degeneration, properties")
      ->delimiter(',');
  f->add_option("--sigma", fuzz.sigmas, "Semantics for correspondence (default: all five)")
      ->delimiter(',');
  f->add_option("--atoms", fuzz.bounds.max_atoms)->capture_default_str();
  f->add_option("--assumptions", fuzz.bounds.max_assumptions)->capture_default_str();
  f->add_option("--rules", fuzz.bounds.max_rules)->capture_default_str();
  f->add_option("--body", fuzz.bounds.max_body)->capture_default_str();
  f->add_option("--args", fuzz.max_args, "Largest random BAF")->capture_default_str();
  f->add_option("--vars", fuzz.cnf_vars)->capture_default_str();
  f->add_option("--clauses", fuzz.cnf_clauses)->capture_default_str();
  f->add_option("--cap", fuzz.cap, "Instantiation cap")->capture_default_str();
  f->add_option("--format", fuzz.format)->check(CLI::IsMember({"text", "json"}));
  f->add_flag("--verbose", fuzz.verbose, "List passing checks too");

  std::string d_formalism, d_input;
  auto* d = app.add_subcommand("export-dot", "Write a Graphviz rendering");
  d->add_option("formalism", d_formalism)->required()->check(CLI::IsMember({"baf", "pbaf"}));
  d->add_option("input", d_input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kFailure;
  }

  try {
    if (*s) return run_solve(solve);
    if (*t) return run_translate(t_input, t_target, t_cap);
    if (*r) return run_reduce(r_input, r_construction);
    if (*f) return run_fuzz(fuzz);
    if (*d) return run_export(d_formalism, d_input);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const TooLarge& e) {
    std::cerr << "guard " << e.guard() << ": " << e.what() << '\n';
    return kGuard;
  } catch (const CapExceeded& e) {
    std::cerr << "guard argument-cap: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
