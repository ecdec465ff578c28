#pragma once

// CNF formulas, a brute-force SAT oracle and the four gadget constructions
// that turn a formula into a BAF or pBAF.

#include "nfaba/baf.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nfaba {

/// Literal +v / -v for variable v in 1..n_vars.
using Literal = int;
using Clause = std::vector<Literal>;

struct Cnf {
  std::size_t n_vars = 0;
  std::vector<Clause> clauses;

  bool operator==(const Cnf&) const = default;
};

class EmptyClause : public ParseError {
 public:
  explicit EmptyClause(std::size_t line) : ParseError(line, "empty clause") {}
};

/// Literals are sorted by variable, duplicates dropped; repeated clauses
/// collapse onto their first occurrence. Complementary literals in one
/// clause are rejected.
Cnf parse_dimacs(std::istream& in);
Cnf parse_dimacs(const std::string& text);
std::string serialize_dimacs(const Cnf& cnf);

/// Checks and normalizes a clause list the same way the parser does.
Cnf make_cnf(std::size_t n_vars, const std::vector<Clause>& clauses);

bool brute_force_sat(const Cnf& cnf, std::size_t max_vars = 20);

/// Argument ids of a literal pair for each variable (index v-1).
struct LiteralArgs {
  std::vector<ArgId> pos, neg;
};

struct SatBaf {
  Baf baf;
  LiteralArgs lits;
  std::vector<ArgId> clauses;
  ArgId top = 0, phi = 0;
};

struct GrBaf {
  Baf baf;
  LiteralArgs lits, copies;
  std::vector<ArgId> clauses;
  ArgId top = 0, phi = 0;
};

struct SkeptBaf {
  Baf baf;
  LiteralArgs lits;
  std::vector<ArgId> clauses;
  std::vector<ArgId> tops, bots, ds;
  ArgId npsi = 0, psi = 0;
};

struct SkeptPbaf {
  Pbaf pbaf;
  LiteralArgs lits;
  std::vector<ArgId> clauses;
  std::vector<ArgId> bots, ds;
  ArgId psi = 0, npsi = 0, t = 0, bott = 0;
};

/// Literal/clause attacks, clauses attack phi, top supports phi.
SatBaf construct_sat_baf(const Cnf& cnf);
/// As above with a primed copy of each literal; the four per variable attack
/// each other.
GrBaf construct_gr_baf(const Cnf& cnf);
/// Per-variable top_i/bot_i/d_i gadget; clauses attack psi, psi attacks npsi.
SkeptBaf construct_skept_baf(const Cnf& cnf);
/// Support-free variant with premises; d_i and t have none.
SkeptPbaf construct_skept_pbaf(const Cnf& cnf);

}  // namespace nfaba
