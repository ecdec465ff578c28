#pragma once

// Assumption-based argumentation: frameworks (possibly non-flat), derivations,
// closure, attack, defense and the five standard semantics computed by
// subset search over the assumptions.

#include "nfaba/common.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nfaba {

struct Rule {
  AtomId head = 0;
  std::vector<AtomId> body;  // sorted, no duplicates

  bool operator==(const Rule&) const = default;
};

/// Members are atoms, each of which must be an assumption of the owning framework.
using AssumptionSet = AtomSet;

/// A deduplicated derivation `support |- conclusion`. Tree shape is forgotten;
/// two arguments are the same iff support and conclusion agree.
struct Argument {
  AssumptionSet support;
  AtomId conclusion = 0;

  bool operator==(const Argument&) const = default;
};

/// The tuple (L, R, A, contrary). Atoms are 0-based internally; the text
/// format numbers them from 1.
class AbaFramework {
 public:
  AbaFramework() = default;
  explicit AbaFramework(std::size_t n_atoms);

  void add_assumption(AtomId atom, AtomId contrary);
  void add_rule(AtomId head, std::vector<AtomId> body);
  void set_name(AtomId atom, std::string name);

  /// Throws Error unless the framework has at least one assumption.
  void validate() const;

  std::size_t atom_count() const { return n_atoms_; }
  const std::vector<Rule>& rules() const { return rules_; }
  /// Assumptions in increasing atom order.
  const std::vector<AtomId>& assumptions() const { return assumptions_; }
  bool is_assumption(AtomId atom) const;
  /// Position of an assumption within assumptions().
  std::size_t assumption_index(AtomId atom) const;
  AtomId contrary(AtomId assumption) const;

  const std::vector<std::string>& names() const { return names_; }
  /// Name if one was given, otherwise the 1-based id.
  std::string label(AtomId atom) const;
  std::optional<AtomId> find_name(std::string_view name) const;

  AtomSet empty_set() const { return AtomSet(n_atoms_); }
  AssumptionSet all_assumptions() const;

  bool operator==(const AbaFramework&) const = default;

 private:
  void check_atom(AtomId atom) const;

  std::size_t n_atoms_ = 0;
  std::vector<Rule> rules_;
  std::vector<AtomId> assumptions_;
  std::vector<std::optional<AtomId>> contrary_;
  std::vector<int> assumption_pos_;
  std::vector<std::string> names_;
};

AbaFramework parse_aba(std::istream& in);
AbaFramework parse_aba(const std::string& text);
void write_aba(std::ostream& out, const AbaFramework& framework);
std::string serialize_aba(const AbaFramework& framework);

/// Th_D(S): everything derivable from subsets of S (forward-chaining fixpoint).
AtomSet theory(const AbaFramework& framework, const AssumptionSet& s);

/// cl(S) = Th_D(S) restricted to assumptions.
AssumptionSet aba_closure(const AbaFramework& framework, const AssumptionSet& s);

/// S attacks T iff the contrary of some member of T is derivable from S.
bool attacks(const AbaFramework& framework, const AssumptionSet& s, const AssumptionSet& t);

/// Saturates the set of arguments. Order: by support size, then support
/// members, then conclusion. Throws CapExceeded once more than `cap` exist.
std::vector<Argument> enumerate_arguments(const AbaFramework& framework, std::size_t cap);

/// Whether S defends assumption `a`. closed_sets quantifies over every closed
/// attacking assumption set; attacker_closure over the closures of argument
/// supports concluding the contrary of `a`.
bool aba_defends(const AbaFramework& framework, const AssumptionSet& s, AtomId a,
                 DefenseMode mode = DefenseMode::closed_sets, const Limits& limits = {},
                 std::size_t cap = 5000);

std::vector<AssumptionSet> aba_extensions(const AbaFramework& framework, Semantics sigma,
                                          const Limits& limits = {});

/// Direct membership test for cf/ad/co/stb; pr and gr fall back to enumeration.
bool aba_is_extension(const AbaFramework& framework, Semantics sigma, const AssumptionSet& s,
                      const Limits& limits = {});

bool aba_credulous(const AbaFramework& framework, Semantics sigma, AtomId query,
                   const Limits& limits = {});
bool aba_skeptical(const AbaFramework& framework, Semantics sigma, AtomId query,
                   const Limits& limits = {});
bool aba_verify(const AbaFramework& framework, Semantics sigma, const AssumptionSet& query,
                const Limits& limits = {});
/// Cred/Skept take a singleton query set; Ver takes any assumption set.
bool aba_decide(const AbaFramework& framework, Semantics sigma, Task task,
                const AssumptionSet& query, const Limits& limits = {});

}  // namespace nfaba
