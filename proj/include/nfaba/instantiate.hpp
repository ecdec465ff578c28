#pragma once

// ABA -> BAF / pBAF instantiation and the maps between assumption sets and
// argument sets.

#include "nfaba/aba.hpp"
#include "nfaba/baf.hpp"

#include <vector>

namespace nfaba {

/// Abstract argument ids mapped back to ABA arguments.
struct ArgumentTable {
  std::vector<Argument> arguments;  // indexed by ArgId
  std::vector<ArgId> base_index;    // indexed by assumption position
  std::size_t atom_count = 0;

  /// Sidecar `arg` lines in 1-based atom numbering.
  OriginTable origins() const;
};

struct InstantiatedBaf {
  Baf baf;
  ArgumentTable table;
};

struct InstantiatedPbaf {
  Pbaf pbaf;
  ArgumentTable table;
};

/// Att: conclusion of x is the contrary of some assumption in support(y).
/// Sup: x supports {a}|-a whenever a is in cl(support(x)), except a base
/// argument supporting itself.
InstantiatedBaf instantiate_baf(const AbaFramework& framework, std::size_t cap = 5000);

/// Same graph; premises are support assumptions, numbered by their position
/// in framework.assumptions().
InstantiatedPbaf instantiate_pbaf(const AbaFramework& framework, std::size_t cap = 5000);

/// {x : support(x) subset of S}.
ArgSet arguments_for(const ArgumentTable& table, const AssumptionSet& s);

/// Union of the supports of the members of E.
AssumptionSet assumptions_of(const ArgumentTable& table, const ArgSet& e);

bool is_assumption_exhaustive(const ArgumentTable& table, const ArgSet& e);

}  // namespace nfaba
