#include "nfaba/harness.hpp"

#include "json.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace nfaba {

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string show(const IdSet& set, const auto& label) {
  std::string out = "{";
  bool first = true;
  for (auto id : members(set)) {
    if (!first) out += ',';
    out += label(id);
    first = false;
  }
  return out + "}";
}

std::string show_args(const Baf& baf, const ArgSet& e) {
  return show(e, [&](std::uint32_t a) { return baf.label(a); });
}

std::string show_atoms(const AbaFramework& fw, const AssumptionSet& s) {
  return show(s, [&](std::uint32_t a) { return fw.label(a); });
}

ArgSet from_mask(std::size_t n, std::uint64_t mask) {
  ArgSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1U) s.set(i);
  return s;
}

AssumptionSet assumptions_from_mask(const AbaFramework& fw, std::uint64_t mask) {
  AssumptionSet s = fw.empty_set();
  const auto& asms = fw.assumptions();
  for (std::size_t i = 0; i < asms.size(); ++i)
    if ((mask >> i) & 1U) s.set(asms[i]);
  return s;
}

class Recorder {
 public:
  Recorder(CheckReport& report, std::uint64_t seed, std::string input)
      : report_(report), seed_(seed), input_(std::move(input)) {}

  void add(std::string_view sigma, std::string direction, Status status, std::string detail = {}) {
    CheckRecord r;
    r.seed = seed_;
    r.sigma = std::string(sigma);
    r.direction = std::move(direction);
    r.status = status;
    if (status != Status::pass) r.witness = input_ + detail;
    report_.records.push_back(std::move(r));
  }

  // One record for a check that passes unless a detail was collected.
  void verdict(std::string_view sigma, std::string direction, const std::string& problem) {
    add(sigma, std::move(direction), problem.empty() ? Status::pass : Status::fail, problem);
  }

 private:
  CheckReport& report_;
  std::uint64_t seed_;
  std::string input_;
};

std::vector<Clause> all_clauses(std::size_t n_vars, std::size_t max_width) {
  std::vector<Clause> out;
  for (std::uint64_t vars = 1; vars < (std::uint64_t{1} << n_vars); ++vars) {
    const auto width = static_cast<std::size_t>(__builtin_popcountll(vars));
    if (width > max_width) continue;
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << width); ++signs) {
      Clause c;
      std::size_t k = 0;
      for (std::size_t v = 0; v < n_vars; ++v)
        if ((vars >> v) & 1U) {
          const auto lit = static_cast<Literal>(v + 1);
          c.push_back(((signs >> k++) & 1U) ? -lit : lit);
        }
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AbaFramework random_aba(const GenParams& p) {
  if (p.n_atoms == 0 || p.n_assumptions == 0 || p.n_assumptions > p.n_atoms)
    throw std::invalid_argument("need 1 <= n_assumptions <= n_atoms");
  std::mt19937_64 rng(p.seed);
  AbaFramework fw(p.n_atoms);
  for (std::size_t a = 0; a < p.n_assumptions; ++a)
    fw.add_assumption(static_cast<AtomId>(a), static_cast<AtomId>(draw(rng, 0, p.n_atoms - 1)));
  std::vector<AtomId> atoms(p.n_atoms);
  for (std::size_t i = 0; i < p.n_atoms; ++i) atoms[i] = static_cast<AtomId>(i);
  for (std::size_t r = 0; r < p.n_rules; ++r) {
    const auto head = static_cast<AtomId>(draw(rng, 0, p.n_atoms - 1));
    const std::size_t size = draw(rng, 0, std::min(p.max_body, p.n_atoms));
    std::shuffle(atoms.begin(), atoms.end(), rng);
    fw.add_rule(head, std::vector<AtomId>(atoms.begin(), atoms.begin() + static_cast<long>(size)));
  }
  return fw;
}

GenParams fuzz_params(const FuzzBounds& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 1);
  GenParams p;
  p.seed = seed;
  p.n_atoms = draw(rng, std::min<std::size_t>(2, b.max_atoms), b.max_atoms);
  p.n_assumptions = draw(rng, 1, std::max<std::size_t>(1, std::min(b.max_assumptions, p.n_atoms)));
  p.n_rules = draw(rng, 0, b.max_rules);
  p.max_body = draw(rng, std::min<std::size_t>(1, b.max_body), b.max_body);
  return p;
}

Baf random_baf(const BafParams& p) {
  std::mt19937_64 rng(p.seed);
  std::bernoulli_distribution attack(p.attack_density), support(p.support_density);
  Baf baf(p.n_args);
  for (std::size_t i = 0; i < p.n_args; ++i)
    for (std::size_t j = 0; j < p.n_args; ++j) {
      if (attack(rng)) baf.add_attack(static_cast<ArgId>(i), static_cast<ArgId>(j));
      if (support(rng)) baf.add_support(static_cast<ArgId>(i), static_cast<ArgId>(j));
    }
  return baf;
}

Cnf random_cnf(std::size_t n_vars, std::size_t n_clauses, std::size_t max_width,
               std::uint64_t seed) {
  const auto pool = all_clauses(n_vars, max_width);
  n_clauses = std::min(n_clauses, pool.size());
  std::mt19937_64 rng(seed);
  std::vector<Clause> picked;
  while (picked.size() < n_clauses) {
    const std::size_t width = draw(rng, 1, std::min(max_width, n_vars));
    std::vector<Literal> vars(n_vars);
    for (std::size_t v = 0; v < n_vars; ++v) vars[v] = static_cast<Literal>(v + 1);
    std::shuffle(vars.begin(), vars.end(), rng);
    Clause c(vars.begin(), vars.begin() + static_cast<long>(width));
    for (auto& l : c)
      if (draw(rng, 0, 1)) l = -l;
    std::sort(c.begin(), c.end(), [](Literal a, Literal b) { return std::abs(a) < std::abs(b); });
    if (std::find(picked.begin(), picked.end(), c) == picked.end()) picked.push_back(std::move(c));
  }
  return make_cnf(n_vars, picked);
}

std::vector<Cnf> all_cnfs(std::size_t n_vars, std::size_t max_clauses, std::size_t max_width) {
  const auto pool = all_clauses(n_vars, max_width);
  std::vector<Cnf> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    std::vector<Clause> clauses;
    for (auto i : pick) clauses.push_back(pool[i]);
    out.push_back(make_cnf(n_vars, clauses));
    if (pick.size() == max_clauses) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skip:
      return "skip";
  }
  return "?";
}

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [](const CheckRecord& r) { return r.status == Status::fail; }));
}

std::size_t CheckReport::skipped() const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [](const CheckRecord& r) { return r.status == Status::skip; }));
}

void CheckReport::merge(CheckReport other) {
  cases_run += other.cases_run;
  records.insert(records.end(), std::make_move_iterator(other.records.begin()),
                 std::make_move_iterator(other.records.end()));
}

std::string CheckReport::text(bool all_records) const {
  std::ostringstream out;
  for (const auto& r : records) {
    if (!all_records && r.status == Status::pass) continue;
    out << to_string(r.status) << " seed=" << r.seed << " sigma=" << r.sigma
        << " direction=" << r.direction << '\n';
    std::istringstream lines(r.witness);
    for (std::string line; std::getline(lines, line);) out << "  | " << line << '\n';
  }
  out << "cases " << cases_run << " checks " << records.size() << " failures " << failures()
      << " skipped " << skipped() << '\n';
  return out.str();
}

std::string CheckReport::json() const {
  nlohmann::json doc;
  doc["cases_run"] = cases_run;
  doc["failures"] = failures();
  doc["skipped"] = skipped();
  doc["records"] = nlohmann::json::array();
  for (const auto& r : records)
    doc["records"].push_back({{"seed", r.seed},
                              {"sigma", r.sigma},
                              {"direction", r.direction},
                              {"status", to_string(r.status)},
                              {"witness", r.witness}});
  return doc.dump(2) + "\n";
}

std::vector<ArgSet> forward_violations(const AbaFramework& fw, const InstantiatedBaf& inst,
                                       Semantics sigma, const CheckLimits& limits) {
  const auto aba = aba_extensions(fw, sigma, limits.aba);
  std::vector<ArgSet> out;
  for (const auto& e : baf_extensions(inst.baf, sigma, Limits{limits.max_enumeration}))
    if (!contains_set(aba, assumptions_of(inst.table, e))) out.push_back(e);
  return out;
}

CheckReport check_correspondence(const AbaFramework& fw, Semantics sigma, std::uint64_t seed,
                                 const CheckLimits& limits) {
  CheckReport report;
  report.cases_run = 1;
  Recorder rec(report, seed, serialize_aba(fw));
  const auto name = to_string(sigma);
  InstantiatedPbaf inst;
  try {
    inst = instantiate_pbaf(fw, limits.cap);
  } catch (const CapExceeded& e) {
    rec.add(name, "instantiate", Status::skip, e.what());
    return report;
  }
  const Baf& baf = inst.pbaf.baf();
  const Limits big{limits.max_enumeration};
  const auto aba = aba_extensions(fw, sigma, limits.aba);

  auto forward = [&](const std::vector<ArgSet>& family) {
    for (const auto& e : family) {
      const auto s = assumptions_of(inst.table, e);
      if (!contains_set(aba, s))
        return "E = " + show_args(baf, e) + " but asms(E) = " + show_atoms(fw, s) +
               " is not an extension\n";
    }
    return std::string();
  };
  auto backward = [&](auto&& member) {
    for (const auto& s : aba) {
      const auto e = arguments_for(inst.table, s);
      if (!member(e))
        return "S = " + show_atoms(fw, s) + " but its arguments " + show_args(baf, e) +
               " are not an extension\n";
    }
    return std::string();
  };
  const bool enumerable = sigma == Semantics::gr || sigma == Semantics::pr;

  if (sigma == Semantics::co || sigma == Semantics::gr || sigma == Semantics::stb ||
      sigma == Semantics::ad) {
    std::vector<ArgSet> family;
    if (sigma != Semantics::ad) {
      family = baf_extensions(baf, sigma, big);
      rec.verdict(name, "baf-forward", forward(family));
    }
    rec.verdict(name, "baf-backward", backward([&](const ArgSet& e) {
                  return enumerable ? contains_set(family, e)
                                    : baf_is_extension(baf, sigma, e, big);
                }));
  }
  if (sigma != Semantics::cf) {
    const auto family = pbaf_extensions(inst.pbaf, sigma, big);
    rec.verdict(name, "pbaf-forward", forward(family));
    rec.verdict(name, "pbaf-backward", backward([&](const ArgSet& e) {
                  return enumerable ? contains_set(family, e)
                                    : pbaf_is_extension(inst.pbaf, sigma, e, big);
                }));
  }
  return report;
}

CheckReport check_instantiation_lemmas(const AbaFramework& fw, std::uint64_t seed,
                                       const CheckLimits& limits) {
  CheckReport report;
  report.cases_run = 1;
  Recorder rec(report, seed, serialize_aba(fw));
  InstantiatedBaf inst;
  try {
    inst = instantiate_baf(fw, limits.cap);
  } catch (const CapExceeded& e) {
    rec.add("-", "instantiate", Status::skip, e.what());
    return report;
  }
  for (Semantics sigma : {Semantics::co, Semantics::stb}) {
    std::string problem;
    for (const auto& e : baf_extensions(inst.baf, sigma, Limits{limits.max_enumeration}))
      if (!is_assumption_exhaustive(inst.table, e)) {
        problem = "E = " + show_args(inst.baf, e) + " is not assumption-exhaustive\n";
        break;
      }
    rec.verdict(to_string(sigma), "exhaustive", problem);
  }
  std::string problem;
  for (std::size_t x = 0; x < inst.table.arguments.size(); ++x) {
    ArgSet one(inst.table.arguments.size());
    one.set(x);
    const auto lhs = assumptions_of(inst.table, baf_closure(inst.baf, one));
    const auto rhs = aba_closure(fw, inst.table.arguments[x].support);
    if (lhs != rhs) {
      problem = "argument " + std::to_string(x) + ": asms(cl({x})) = " + show_atoms(fw, lhs) +
                " but cl(asms(x)) = " + show_atoms(fw, rhs) + "\n";
      break;
    }
  }
  rec.verdict("-", "single-closure", problem);
  return report;
}

CheckReport check_defense_equivalence(const Baf& baf, std::uint64_t seed) {
  const std::size_t n = baf.size();
  if (n > 8) throw TooLarge("defense-check", n, 8);
  CheckReport report;
  report.cases_run = 1;
  Recorder rec(report, seed, serialize_baf(baf));
  std::string problem;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && problem.empty(); ++mask) {
    const ArgSet e = from_mask(n, mask);
    for (std::size_t a = 0; a < n; ++a) {
      const bool lhs = baf_defends(baf, e, static_cast<ArgId>(a), DefenseMode::closed_sets);
      const bool rhs = baf_defends(baf, e, static_cast<ArgId>(a), DefenseMode::attacker_closure);
      if (lhs != rhs) {
        problem = "E = " + show_args(baf, e) + ", a = " + baf.label(static_cast<ArgId>(a)) +
                  ": closed-sets " + (lhs ? "yes" : "no") + ", attacker-closure " +
                  (rhs ? "yes" : "no") + "\n";
        break;
      }
    }
  }
  rec.verdict("-", "defense-modes", problem);
  return report;
}

CheckReport check_aba_defense_equivalence(const AbaFramework& fw, std::uint64_t seed,
                                          std::size_t max_assumptions) {
  const auto& asms = fw.assumptions();
  if (asms.size() > max_assumptions)
    throw TooLarge("defense-check", asms.size(), max_assumptions);
  CheckReport report;
  report.cases_run = 1;
  Recorder rec(report, seed, serialize_aba(fw));
  std::string problem;
  try {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << asms.size()) && problem.empty();
         ++mask) {
      const auto s = assumptions_from_mask(fw, mask);
      for (auto a : asms) {
        const bool lhs = aba_defends(fw, s, a, DefenseMode::closed_sets);
        const bool rhs = aba_defends(fw, s, a, DefenseMode::attacker_closure);
        if (lhs != rhs) {
          problem = "S = " + show_atoms(fw, s) + ", a = " + fw.label(a) + ": closed-sets " +
                    (lhs ? "yes" : "no") + ", attacker-closure " + (rhs ? "yes" : "no") + "\n";
          break;
        }
      }
    }
  } catch (const CapExceeded& e) {
    rec.add("-", "defense-modes", Status::skip, e.what());
    return report;
  }
  rec.verdict("-", "defense-modes", problem);
  return report;
}

CheckReport check_degeneration(const Baf& baf, std::uint64_t seed) {
  CheckReport report;
  report.cases_run = 1;
  Recorder rec(report, seed, serialize_baf(baf));
  const Limits limits{30};
  for (Semantics sigma :
       {Semantics::cf, Semantics::ad, Semantics::co, Semantics::gr, Semantics::pr, Semantics::stb}) {
    const auto closed = baf_extensions(baf, sigma, limits);
    const auto classic = af_extensions(baf, sigma, limits);
    std::string problem;
    if (closed != classic) {
      problem = "closed semantics:";
      for (const auto& e : closed) problem += " " + show_args(baf, e);
      problem += "\nclassic semantics:";
      for (const auto& e : classic) problem += " " + show_args(baf, e);
      problem += "\n";
    }
    rec.verdict(to_string(sigma), "degeneration", problem);
  }
  return report;
}

CheckReport check_baf_properties(const Baf& baf, std::uint64_t seed) {
  const std::size_t n = baf.size();
  if (n > 16) throw TooLarge("property-check", n, 16);
  CheckReport report;
  report.cases_run = 1;
  Recorder rec(report, seed, serialize_baf(baf));
  const Limits limits{30};

  rec.verdict("ad", "empty-admissible",
              baf_is_extension(baf, Semantics::ad, baf.empty_set(), limits) ? ""
                                                                            : "{} rejected\n");

  const auto co = baf_extensions(baf, Semantics::co, limits);
  std::string problem;
  for (const auto& e : baf_extensions(baf, Semantics::stb, limits))
    if (!contains_set(co, e)) problem = "stable " + show_args(baf, e) + " is not complete\n";
  rec.verdict("stb", "stable-complete", problem);

  const auto ad = baf_extensions(baf, Semantics::ad, limits);
  problem.clear();
  for (const auto& p : baf_extensions(baf, Semantics::pr, limits)) {
    if (!contains_set(ad, p)) problem = "preferred " + show_args(baf, p) + " not admissible\n";
    for (const auto& e : ad)
      if (e != p && p.is_subset_of(e))
        problem = "preferred " + show_args(baf, p) + " below admissible " + show_args(baf, e) + "\n";
  }
  rec.verdict("pr", "maximal-admissible", problem);

  problem.clear();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && problem.empty(); ++mask) {
    const ArgSet e = from_mask(n, mask);
    const ArgSet c = baf_closure(baf, e);
    if (!e.is_subset_of(c) || baf_closure(baf, c) != c || !is_closed(baf, c))
      problem = "closure of " + show_args(baf, e) + " not extensive or not idempotent\n";
    for (std::size_t x = 0; x < n && problem.empty(); ++x) {
      ArgSet more = e;
      more.set(x);
      if (!c.is_subset_of(baf_closure(baf, more)))
        problem = "closure not monotone at " + show_args(baf, e) + "\n";
    }
  }
  rec.verdict("-", "closure-laws", problem);
  return report;
}

CheckReport check_aba_properties(const AbaFramework& fw, std::uint64_t seed) {
  const auto& asms = fw.assumptions();
  if (asms.size() > 12) throw TooLarge("property-check", asms.size(), 12);
  CheckReport report;
  report.cases_run = 1;
  Recorder rec(report, seed, serialize_aba(fw));
  std::string problem;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << asms.size()) && problem.empty();
       ++mask) {
    const auto s = assumptions_from_mask(fw, mask);
    const auto c = aba_closure(fw, s);
    if (!s.is_subset_of(c) || aba_closure(fw, c) != c)
      problem = "closure of " + show_atoms(fw, s) + " not extensive or not idempotent\n";
    const auto th = theory(fw, s);
    for (auto a : asms) {
      if (!problem.empty()) break;
      auto more = s;
      more.set(a);
      if (!c.is_subset_of(aba_closure(fw, more)) || !th.is_subset_of(theory(fw, more)))
        problem = "closure or theory not monotone at " + show_atoms(fw, s) + "\n";
    }
  }
  rec.verdict("-", "closure-laws", problem);
  return report;
}

CheckReport check_construction_lemmas(const Cnf& cnf, std::uint64_t seed, const Limits& limits) {
  CheckReport report;
  report.cases_run = 1;
  Recorder rec(report, seed, serialize_dimacs(cnf));
  const bool sat = brute_force_sat(cnf);
  const std::string branch = sat ? "sat" : "unsat";

  {
    const auto f = construct_sat_baf(cnf);
    const auto co = baf_extensions(f.baf, Semantics::co, limits);
    std::string problem;
    for (const auto& e : co)
      if (!e.test(f.top) || !e.test(f.phi))
        problem = "complete " + show_args(f.baf, e) + " misses top or phi\n";
    if (co.empty() == sat)
      problem += "co is " + std::string(co.empty() ? "empty" : "non-empty") + " on a " + branch +
                 " formula\n";
    rec.verdict("co", "sat-baf-" + branch, problem);
  }
  {
    const auto g = construct_gr_baf(cnf);
    const auto gr = baf_extensions(g.baf, Semantics::gr, limits);
    ArgSet expected = g.baf.empty_set();
    if (sat) {
      expected.set(g.top);
      expected.set(g.phi);
    }
    std::string problem;
    if (gr.size() != 1 || gr.front() != expected)
      problem = "grounded " + (gr.empty() ? std::string("missing") : show_args(g.baf, gr.front())) +
                ", expected " + show_args(g.baf, expected) + "\n";
    rec.verdict("gr", "gr-baf-" + branch, problem);
  }
  {
    const auto h = construct_skept_baf(cnf);
    const auto co = baf_extensions(h.baf, Semantics::co, limits);
    std::string problem;
    bool all_npsi = true;
    for (const auto& e : co) {
      all_npsi = all_npsi && e.test(h.npsi);
      for (std::size_t i = 0; i < cnf.n_vars; ++i)
        if (!e.test(h.tops[i]) || !e.test(h.ds[i]) ||
            e.test(h.lits.pos[i]) == e.test(h.lits.neg[i]))
          problem = "complete " + show_args(h.baf, e) + " breaks the variable gadget " +
                    std::to_string(i + 1) + "\n";
    }
    if (all_npsi == sat)
      problem += std::string("npsi is ") + (all_npsi ? "" : "not ") +
                 "skeptically complete-accepted on a " + branch + " formula\n";
    ArgSet g_expected = h.baf.empty_set();
    for (std::size_t i = 0; i < cnf.n_vars; ++i) {
      g_expected.set(h.tops[i]);
      g_expected.set(h.ds[i]);
    }
    g_expected.set(h.npsi);
    const auto gr = baf_extensions(h.baf, Semantics::gr, limits);
    if ((gr.front() == g_expected) == sat)
      problem += "grounded " + show_args(h.baf, gr.front()) + " on a " + branch + " formula\n";
    rec.verdict("co", "skept-baf-" + branch, problem);
  }
  {
    const auto p = construct_skept_pbaf(cnf);
    ArgSet query = p.pbaf.baf().empty_set();
    query.set(p.npsi);
    const bool skept = pbaf_decide(p.pbaf, Semantics::ad, Task::skept, query, limits);
    rec.verdict("ad", "skept-pbaf-" + branch,
                skept == sat ? std::string("npsi skeptical ad answer ") + (skept ? "yes" : "no") +
                                   " on a " + branch + " formula\n"
                             : std::string());
  }
  return report;
}

}  // namespace nfaba
