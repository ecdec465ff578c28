#pragma once

// Seeded generators and brute-force checks of the ABA/BAF correspondences,
// the defense characterizations and the reduction gadgets.

#include "nfaba/aba.hpp"
#include "nfaba/baf.hpp"
#include "nfaba/instantiate.hpp"
#include "nfaba/reductions.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nfaba {

struct GenParams {
  std::size_t n_atoms = 6;
  std::size_t n_assumptions = 3;
  std::size_t n_rules = 5;
  std::size_t max_body = 2;
  std::uint64_t seed = 1;
};

/// Atoms 0..n_assumptions-1 are the assumptions; contraries and rule heads
/// are drawn from all atoms, bodies are random subsets of size <= max_body.
AbaFramework random_aba(const GenParams& params);

/// Upper bounds for a fuzz corpus; the concrete sizes of case `seed` are
/// drawn from [1, bound] (rules and body from [0, bound]).
struct FuzzBounds {
  std::size_t max_atoms = 8;
  std::size_t max_assumptions = 5;
  std::size_t max_rules = 10;
  std::size_t max_body = 3;
};
GenParams fuzz_params(const FuzzBounds& bounds, std::uint64_t seed);

struct BafParams {
  std::size_t n_args = 6;
  double attack_density = 0.2;
  double support_density = 0.1;
  std::uint64_t seed = 1;
};
Baf random_baf(const BafParams& params);

/// Distinct non-tautological clauses of width 1..max_width.
Cnf random_cnf(std::size_t n_vars, std::size_t n_clauses, std::size_t max_width,
               std::uint64_t seed);
/// Every set of at most max_clauses distinct non-tautological clauses of
/// width 1..max_width over n_vars variables, the empty formula included.
std::vector<Cnf> all_cnfs(std::size_t n_vars, std::size_t max_clauses, std::size_t max_width);

enum class Status { pass, fail, skip };
std::string_view to_string(Status s);

struct CheckRecord {
  std::uint64_t seed = 0;
  std::string sigma;
  std::string direction;
  Status status = Status::pass;
  std::string witness;  // re-runnable input plus the offending set
};

struct CheckReport {
  std::size_t cases_run = 0;
  std::vector<CheckRecord> records;

  std::size_t failures() const;
  std::size_t skipped() const;
  bool ok() const { return failures() == 0; }
  void merge(CheckReport other);

  /// Non-passing records with their witnesses, then a summary line.
  std::string text(bool all_records = false) const;
  std::string json() const;
};

struct CheckLimits {
  std::size_t cap = 2000;              // instantiated argument cap
  std::size_t max_enumeration = 2000;  // argument guard for (p)BAF enumeration
  Limits aba{};                        // assumption guard
};

/// Both directions on the instantiated BAF for co/gr/stb, the backward
/// direction for ad, both directions on the instantiated pBAF for
/// ad/co/pr/gr/stb. CapExceeded yields a skipped record.
CheckReport check_correspondence(const AbaFramework& framework, Semantics sigma,
                                 std::uint64_t seed = 0, const CheckLimits& limits = {});

/// E in sigma(F_D) with asms(E) outside sigma(D).
std::vector<ArgSet> forward_violations(const AbaFramework& framework,
                                       const InstantiatedBaf& inst, Semantics sigma,
                                       const CheckLimits& limits = {});

/// Complete and stable extensions of F_D are assumption-exhaustive, and
/// asms(cl({x})) = cl(asms(x)) for every argument x.
CheckReport check_instantiation_lemmas(const AbaFramework& framework, std::uint64_t seed = 0,
                                       const CheckLimits& limits = {});

/// Both BAF defense modes over every (E, a). At most 8 arguments.
CheckReport check_defense_equivalence(const Baf& baf, std::uint64_t seed = 0);

/// Both ABA defense modes over every (S, a).
CheckReport check_aba_defense_equivalence(const AbaFramework& framework, std::uint64_t seed = 0,
                                          std::size_t max_assumptions = 8);

/// Support-free BAF: closed semantics against the classic AF oracle.
CheckReport check_degeneration(const Baf& baf, std::uint64_t seed = 0);

/// Empty set admissible, stb within co, pr admissible and maximal, closure
/// operator laws.
CheckReport check_baf_properties(const Baf& baf, std::uint64_t seed = 0);
CheckReport check_aba_properties(const AbaFramework& framework, std::uint64_t seed = 0);

/// The four gadget lemmas against brute_force_sat.
CheckReport check_construction_lemmas(const Cnf& cnf, std::uint64_t seed = 0,
                                      const Limits& limits = {64});

}  // namespace nfaba
