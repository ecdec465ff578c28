#include "nfaba/reductions.hpp"
#include "text_lines.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace nfaba {

namespace {

// Normalizes one clause; returns false if it holds a literal and its negation.
bool normalize(Clause& clause) {
  std::sort(clause.begin(), clause.end(), [](Literal a, Literal b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
  });
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  for (std::size_t i = 1; i < clause.size(); ++i)
    if (clause[i] == -clause[i - 1]) return false;
  return true;
}

void push_unique(std::vector<Clause>& out, Clause clause) {
  if (std::find(out.begin(), out.end(), clause) == out.end()) out.push_back(std::move(clause));
}

class Builder {
 public:
  ArgId add(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<ArgId>(names_.size() - 1);
  }
  void attack(ArgId from, ArgId to) { att_.emplace_back(from, to); }
  void support(ArgId from, ArgId to) { sup_.emplace_back(from, to); }

  Baf finish() const {
    Baf baf(names_.size());
    for (auto [f, t] : att_) baf.add_attack(f, t);
    for (auto [f, t] : sup_) baf.add_support(f, t);
    for (std::size_t i = 0; i < names_.size(); ++i) baf.set_name(static_cast<ArgId>(i), names_[i]);
    return baf;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<ArgId, ArgId>> att_, sup_;
};

std::string idx(const char* stem, std::size_t i) { return stem + std::to_string(i + 1); }

// Clause arguments plus the literal-to-clause attacks of one literal family.
std::vector<ArgId> add_clauses(Builder& b, const Cnf& cnf) {
  std::vector<ArgId> out;
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) out.push_back(b.add(idx("c", j)));
  return out;
}

void attack_clauses(Builder& b, const Cnf& cnf, const LiteralArgs& lits,
                    const std::vector<ArgId>& clauses) {
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j)
    for (Literal l : cnf.clauses[j]) {
      const auto v = static_cast<std::size_t>(std::abs(l)) - 1;
      b.attack(l > 0 ? lits.pos[v] : lits.neg[v], clauses[j]);
    }
}

void literal_pairs(Builder& b, const Cnf& cnf, LiteralArgs& lits) {
  for (std::size_t i = 0; i < cnf.n_vars; ++i) {
    lits.pos.push_back(b.add(idx("x", i)));
    lits.neg.push_back(b.add(idx("nx", i)));
    b.attack(lits.pos[i], lits.neg[i]);
    b.attack(lits.neg[i], lits.pos[i]);
  }
}

}  // namespace

Cnf make_cnf(std::size_t n_vars, const std::vector<Clause>& clauses) {
  Cnf cnf;
  cnf.n_vars = n_vars;
  for (auto clause : clauses) {
    if (clause.empty()) throw Error("empty clause");
    for (Literal l : clause)
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) > n_vars)
        throw Error("literal " + std::to_string(l) + " out of range");
    if (!normalize(clause)) throw Error("clause contains complementary literals");
    push_unique(cnf.clauses, std::move(clause));
  }
  return cnf;
}

Cnf parse_dimacs(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  std::optional<std::size_t> declared;
  Cnf cnf;
  Clause current;
  std::size_t clause_count = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream words(raw);
    std::string first;
    if (!(words >> first) || first[0] == 'c') continue;
    if (first[0] == '%') break;  // SATLIB trailer
    if (first == "p") {
      std::string kind;
      long long vars = -1, count = -1;
      if (header || !(words >> kind >> vars >> count) || kind != "cnf" || vars < 0 || count < 0)
        throw ParseError(line, "malformed header: expected 'p cnf <vars> <clauses>'");
      std::string extra;
      if (words >> extra) throw ParseError(line, "malformed header: trailing input");
      cnf.n_vars = static_cast<std::size_t>(vars);
      declared = static_cast<std::size_t>(count);
      header = true;
      continue;
    }
    if (!header) throw ParseError(line, "missing header 'p cnf <vars> <clauses>'");
    words.clear();
    words.str(raw);
    for (std::string w; words >> w;) {
      const long long lit = detail::Tokens({w}, line).integer(0);
      if (lit == 0) {
        if (current.empty()) throw EmptyClause(line);
        if (!normalize(current)) throw ParseError(line, "clause contains complementary literals");
        push_unique(cnf.clauses, std::move(current));
        current.clear();
        ++clause_count;
        continue;
      }
      if (static_cast<std::size_t>(std::llabs(lit)) > cnf.n_vars)
        throw ParseError(line, "literal " + std::to_string(lit) + " out of range");
      current.push_back(static_cast<Literal>(lit));
    }
  }
  if (!header) throw ParseError(line, "missing header 'p cnf <vars> <clauses>'");
  if (!current.empty()) throw ParseError(line, "last clause is not terminated by 0");
  if (clause_count != *declared)
    throw ParseError(line, "header declares " + std::to_string(*declared) + " clauses, found " +
                               std::to_string(clause_count));
  return cnf;
}

Cnf parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string serialize_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.n_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (Literal l : clause) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

bool brute_force_sat(const Cnf& cnf, std::size_t max_vars) {
  if (cnf.n_vars > max_vars) throw TooLarge("sat-oracle", cnf.n_vars, max_vars);
  for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << cnf.n_vars); ++assignment) {
    const bool ok = std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const Clause& c) {
      return std::any_of(c.begin(), c.end(), [&](Literal l) {
        const bool value = (assignment >> (std::abs(l) - 1)) & 1U;
        return l > 0 ? value : !value;
      });
    });
    if (ok) return true;
  }
  return false;
}

SatBaf construct_sat_baf(const Cnf& cnf) {
  Builder b;
  SatBaf out;
  literal_pairs(b, cnf, out.lits);
  out.clauses = add_clauses(b, cnf);
  out.top = b.add("top");
  out.phi = b.add("phi");
  attack_clauses(b, cnf, out.lits, out.clauses);
  for (ArgId c : out.clauses) b.attack(c, out.phi);
  b.support(out.top, out.phi);
  out.baf = b.finish();
  return out;
}

GrBaf construct_gr_baf(const Cnf& cnf) {
  Builder b;
  GrBaf out;
  for (std::size_t i = 0; i < cnf.n_vars; ++i) {
    const ArgId group[4] = {b.add(idx("x", i)), b.add(idx("nx", i)), b.add(idx("xp", i)),
                            b.add(idx("nxp", i))};
    out.lits.pos.push_back(group[0]);
    out.lits.neg.push_back(group[1]);
    out.copies.pos.push_back(group[2]);
    out.copies.neg.push_back(group[3]);
    for (ArgId from : group)
      for (ArgId to : group)
        if (from != to) b.attack(from, to);
  }
  out.clauses = add_clauses(b, cnf);
  out.top = b.add("top");
  out.phi = b.add("phi");
  attack_clauses(b, cnf, out.lits, out.clauses);
  attack_clauses(b, cnf, out.copies, out.clauses);
  for (ArgId c : out.clauses) b.attack(c, out.phi);
  b.support(out.top, out.phi);
  out.baf = b.finish();
  return out;
}

SkeptBaf construct_skept_baf(const Cnf& cnf) {
  Builder b;
  SkeptBaf out;
  literal_pairs(b, cnf, out.lits);
  out.clauses = add_clauses(b, cnf);
  for (std::size_t i = 0; i < cnf.n_vars; ++i) {
    out.tops.push_back(b.add(idx("top", i)));
    out.bots.push_back(b.add(idx("bot", i)));
    out.ds.push_back(b.add(idx("d", i)));
  }
  out.npsi = b.add("npsi");
  out.psi = b.add("psi");
  attack_clauses(b, cnf, out.lits, out.clauses);
  for (std::size_t i = 0; i < cnf.n_vars; ++i) {
    b.attack(out.lits.pos[i], out.bots[i]);
    b.attack(out.lits.neg[i], out.bots[i]);
    b.attack(out.bots[i], out.bots[i]);
    b.attack(out.bots[i], out.ds[i]);
    b.support(out.tops[i], out.ds[i]);
  }
  for (ArgId c : out.clauses) b.attack(c, out.psi);
  b.attack(out.psi, out.npsi);
  out.baf = b.finish();
  return out;
}

SkeptPbaf construct_skept_pbaf(const Cnf& cnf) {
  Builder b;
  SkeptPbaf out;
  literal_pairs(b, cnf, out.lits);
  out.clauses = add_clauses(b, cnf);
  for (std::size_t i = 0; i < cnf.n_vars; ++i) {
    out.bots.push_back(b.add(idx("bot", i)));
    out.ds.push_back(b.add(idx("d", i)));
  }
  out.psi = b.add("psi");
  out.npsi = b.add("npsi");
  out.t = b.add("t");
  out.bott = b.add("bott");
  attack_clauses(b, cnf, out.lits, out.clauses);
  for (std::size_t i = 0; i < cnf.n_vars; ++i) {
    b.attack(out.lits.pos[i], out.bots[i]);
    b.attack(out.lits.neg[i], out.bots[i]);
    b.attack(out.bots[i], out.ds[i]);
  }
  for (ArgId c : out.clauses) b.attack(c, out.psi);
  b.attack(out.psi, out.npsi);
  b.attack(out.bott, out.t);
  b.attack(out.psi, out.bott);
  b.attack(out.npsi, out.bott);

  Baf baf = b.finish();
  const std::size_t n = baf.size();
  out.pbaf = Pbaf(std::move(baf), n);
  for (std::size_t a = 0; a < n; ++a) {
    const bool bare = a == out.t || std::find(out.ds.begin(), out.ds.end(), a) != out.ds.end();
    if (!bare) out.pbaf.set_premises(static_cast<ArgId>(a), {static_cast<PremiseId>(a)});
  }
  return out;
}

}  // namespace nfaba
