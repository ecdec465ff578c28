#pragma once

// Bipolar argumentation frameworks under closed-extension semantics, their
// premise-augmented variant, and a classic Dung-AF oracle.

#include "nfaba/common.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nfaba {

/// (A, Att, Sup) with A = {0, ..., n-1}. Relations are stored as adjacency
/// bitsets in both directions, so they are sets by construction.
class Baf {
 public:
  Baf() = default;
  explicit Baf(std::size_t n_args);

  void add_attack(ArgId from, ArgId to);
  void add_support(ArgId from, ArgId to);
  void set_name(ArgId arg, std::string name);

  std::size_t size() const { return n_; }
  bool has_attack(ArgId from, ArgId to) const { return att_out_[from].test(to); }
  bool has_support(ArgId from, ArgId to) const { return sup_out_[from].test(to); }
  bool has_supports() const;

  const ArgSet& attackers(ArgId a) const { return att_in_[a]; }
  const ArgSet& attacked_by(ArgId a) const { return att_out_[a]; }
  const ArgSet& supporters(ArgId a) const { return sup_in_[a]; }
  const ArgSet& supported_by(ArgId a) const { return sup_out_[a]; }

  /// Sorted (from, to) pairs.
  std::vector<std::pair<ArgId, ArgId>> attack_list() const;
  std::vector<std::pair<ArgId, ArgId>> support_list() const;

  const std::vector<std::string>& names() const { return names_; }
  std::string label(ArgId a) const;
  std::optional<ArgId> find_name(std::string_view name) const;

  ArgSet empty_set() const { return ArgSet(n_); }
  ArgSet full_set() const { return ArgSet(n_).set(); }

  bool operator==(const Baf&) const = default;

 private:
  void check(ArgId a) const;

  std::size_t n_ = 0;
  std::vector<ArgSet> att_out_, att_in_, sup_out_, sup_in_;
  std::vector<std::string> names_;
};

/// A BAF plus a premise function pi: A -> 2^P with P = {0, ..., n_premises-1}.
class Pbaf {
 public:
  Pbaf() = default;
  Pbaf(Baf baf, std::size_t n_premises);

  void set_premises(ArgId arg, const std::vector<PremiseId>& premises);

  const Baf& baf() const { return baf_; }
  Baf& baf() { return baf_; }
  std::size_t size() const { return baf_.size(); }
  std::size_t premise_count() const { return n_premises_; }
  const PremiseSet& premises(ArgId a) const { return premises_[a]; }
  /// pi(E): union of the members' premises.
  PremiseSet premises_of(const ArgSet& e) const;

  bool operator==(const Pbaf&) const = default;

 private:
  Baf baf_;
  std::size_t n_premises_ = 0;
  std::vector<PremiseSet> premises_;
};

/// Origin of an instantiated argument, as written in an `arg` line: the
/// conclusion and support atoms in the 1-based numbering of the ABA file.
struct ArgOrigin {
  std::uint32_t conclusion = 0;
  std::vector<std::uint32_t> support;

  bool operator==(const ArgOrigin&) const = default;
};

/// Parsed BAF or pBAF text, including optional `arg` sidecar lines.
struct BafDocument {
  Pbaf framework;
  bool has_premises = false;
  std::vector<std::optional<ArgOrigin>> origins;
};

BafDocument parse_baf_document(std::istream& in);
Baf parse_baf(const std::string& text);
Pbaf parse_pbaf(const std::string& text);

using OriginTable = std::vector<std::optional<ArgOrigin>>;
void write_baf(std::ostream& out, const Baf& baf, const OriginTable* origins = nullptr);
void write_pbaf(std::ostream& out, const Pbaf& pbaf, const OriginTable* origins = nullptr);
std::string serialize_baf(const Baf& baf);
std::string serialize_pbaf(const Pbaf& pbaf);

/// Least superset of E closed under outgoing supports.
ArgSet baf_closure(const Baf& baf, const ArgSet& e);

/// E+: every argument attacked by a member of E.
ArgSet range(const Baf& baf, const ArgSet& e);

bool is_conflict_free(const Baf& baf, const ArgSet& e);
bool is_closed(const Baf& baf, const ArgSet& e);

/// attacker_closure: E attacks cl({b}) for every attacker b of a.
/// closed_sets: E attacks every closed set that attacks a (2^n, guarded).
bool baf_defends(const Baf& baf, const ArgSet& e, ArgId a,
                 DefenseMode mode = DefenseMode::attacker_closure, const Limits& limits = {});

/// Gamma(E): all arguments E defends.
ArgSet characteristic(const Baf& baf, const ArgSet& e);

std::vector<ArgSet> baf_extensions(const Baf& baf, Semantics sigma, const Limits& limits = {});
bool baf_is_extension(const Baf& baf, Semantics sigma, const ArgSet& e, const Limits& limits = {});

/// pi(a) subset of pi(E) implies a in E.
bool is_exhaustive(const Pbaf& pbaf, const ArgSet& e);

std::vector<ArgSet> pbaf_extensions(const Pbaf& pbaf, Semantics sigma, const Limits& limits = {});
bool pbaf_is_extension(const Pbaf& pbaf, Semantics sigma, const ArgSet& e,
                       const Limits& limits = {});

/// Cred/Skept take a singleton query; Ver any set. Skept over an empty
/// family is vacuously true.
bool baf_decide(const Baf& baf, Semantics sigma, Task task, const ArgSet& query,
                const Limits& limits = {});
bool pbaf_decide(const Pbaf& pbaf, Semantics sigma, Task task, const ArgSet& query,
                 const Limits& limits = {});

/// Textbook Dung semantics by plain subset enumeration. Only for frameworks
/// without supports; used as an independent oracle.
std::vector<ArgSet> af_extensions(const Baf& baf, Semantics sigma, const Limits& limits = {});

}  // namespace nfaba
