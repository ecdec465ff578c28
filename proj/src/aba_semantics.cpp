#include "nfaba/aba.hpp"

#include <algorithm>
#include <stdexcept>

namespace nfaba {

namespace {

using Mask = std::uint32_t;

// Per-subset tables over assumption positions: which assumptions each subset
// attacks and its closure. Built once per query, 2^|A| entries.
class AbaTables {
 public:
  AbaTables(const AbaFramework& framework, const Limits& limits) : framework_(framework) {
    k_ = framework.assumptions().size();
    const std::size_t limit = std::min<std::size_t>(limits.max_enumeration, 30);
    if (k_ > limit) throw TooLarge("enumeration-limit", k_, limit);
    const std::size_t count = std::size_t{1} << k_;
    attacked_.resize(count);
    closure_.resize(count);
    for (std::size_t m = 0; m < count; ++m) {
      const AtomSet th = theory(framework, to_set(static_cast<Mask>(m)));
      Mask att = 0;
      Mask cl = 0;
      for (std::size_t i = 0; i < k_; ++i) {
        const AtomId a = framework.assumptions()[i];
        if (th.test(framework.contrary(a))) att |= Mask{1} << i;
        if (th.test(a)) cl |= Mask{1} << i;
      }
      attacked_[m] = att;
      closure_[m] = cl;
    }
    // For every assumption keep the subset-minimal closed attackers; attacking
    // a superset of one of them is implied, so these suffice for defense.
    min_attackers_.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      std::vector<Mask> closed;
      for (std::size_t m = 0; m < count; ++m)
        if (closure_[m] == m && (attacked_[m] >> i & 1U)) closed.push_back(static_cast<Mask>(m));
      std::stable_sort(closed.begin(), closed.end(), [](Mask a, Mask b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
      });
      auto& kept = min_attackers_[i];
      for (Mask t : closed) {
        const bool minimal =
            std::none_of(kept.begin(), kept.end(), [t](Mask u) { return (u & t) == u; });
        if (minimal) kept.push_back(t);
      }
    }
  }

  std::size_t size() const { return k_; }
  Mask full() const { return k_ == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << k_) - 1); }

  bool conflict_free(Mask s) const { return (attacked_[s] & s) == 0; }
  bool closed(Mask s) const { return closure_[s] == s; }
  bool defends(Mask s, std::size_t i) const {
    return std::all_of(min_attackers_[i].begin(), min_attackers_[i].end(),
                       [&](Mask t) { return (attacked_[s] & t) != 0; });
  }
  Mask defended(Mask s) const {
    Mask out = 0;
    for (std::size_t i = 0; i < k_; ++i)
      if (defends(s, i)) out |= Mask{1} << i;
    return out;
  }
  bool admissible(Mask s) const {
    return conflict_free(s) && closed(s) && (defended(s) & s) == s;
  }
  bool complete(Mask s) const { return admissible(s) && defended(s) == s; }
  bool stable(Mask s) const {
    return conflict_free(s) && closed(s) && (attacked_[s] | s) == full();
  }

  AssumptionSet to_set(Mask m) const {
    AssumptionSet out = framework_.empty_set();
    for (std::size_t i = 0; i < k_; ++i)
      if (m >> i & 1U) out.set(framework_.assumptions()[i]);
    return out;
  }
  Mask to_mask(const AssumptionSet& s) const {
    Mask m = 0;
    for (std::size_t i = 0; i < k_; ++i)
      if (s.test(framework_.assumptions()[i])) m |= Mask{1} << i;
    return m;
  }

 private:
  const AbaFramework& framework_;
  std::size_t k_ = 0;
  std::vector<Mask> attacked_;
  std::vector<Mask> closure_;
  std::vector<std::vector<Mask>> min_attackers_;
};

std::vector<Mask> masks_where(const AbaTables& tables, auto&& pred) {
  std::vector<Mask> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << tables.size()); ++m)
    if (pred(static_cast<Mask>(m))) out.push_back(static_cast<Mask>(m));
  return out;
}

std::vector<Mask> extension_masks(const AbaTables& t, Semantics sigma) {
  switch (sigma) {
    case Semantics::cf:
      return masks_where(t, [&](Mask s) { return t.conflict_free(s); });
    case Semantics::ad:
      return masks_where(t, [&](Mask s) { return t.admissible(s); });
    case Semantics::co:
      return masks_where(t, [&](Mask s) { return t.complete(s); });
    case Semantics::stb:
      return masks_where(t, [&](Mask s) { return t.stable(s); });
    case Semantics::pr: {
      const auto ad = extension_masks(t, Semantics::ad);
      std::vector<Mask> out;
      for (Mask s : ad) {
        const bool maximal = std::none_of(ad.begin(), ad.end(), [s](Mask u) {
          return u != s && (u & s) == s;
        });
        if (maximal) out.push_back(s);
      }
      return out;
    }
    case Semantics::gr: {
      // Empty intersection is read as the empty set.
      const auto co = extension_masks(t, Semantics::co);
      if (co.empty()) return {0};
      Mask meet = t.full();
      for (Mask s : co) meet &= s;
      return {meet};
    }
  }
  return {};
}

void require_assumption_set(const AbaFramework& framework, const AssumptionSet& s) {
  if (s.size() != framework.atom_count() || !s.is_subset_of(framework.all_assumptions()))
    throw std::invalid_argument("query is not a set of assumptions");
}

}  // namespace

std::vector<AssumptionSet> aba_extensions(const AbaFramework& framework, Semantics sigma,
                                          const Limits& limits) {
  const AbaTables tables(framework, limits);
  std::vector<AssumptionSet> out;
  for (Mask m : extension_masks(tables, sigma)) out.push_back(tables.to_set(m));
  canonicalize(out);
  return out;
}

bool aba_is_extension(const AbaFramework& framework, Semantics sigma, const AssumptionSet& s,
                      const Limits& limits) {
  require_assumption_set(framework, s);
  const AbaTables tables(framework, limits);
  const Mask m = tables.to_mask(s);
  switch (sigma) {
    case Semantics::cf: return tables.conflict_free(m);
    case Semantics::ad: return tables.admissible(m);
    case Semantics::co: return tables.complete(m);
    case Semantics::stb: return tables.stable(m);
    case Semantics::pr:
    case Semantics::gr: {
      const auto family = extension_masks(tables, sigma);
      return std::find(family.begin(), family.end(), m) != family.end();
    }
  }
  return false;
}

bool aba_credulous(const AbaFramework& framework, Semantics sigma, AtomId query,
                   const Limits& limits) {
  if (!framework.is_assumption(query)) throw NotAnAssumption(query);
  const auto family = aba_extensions(framework, sigma, limits);
  return std::any_of(family.begin(), family.end(),
                     [query](const AssumptionSet& s) { return s.test(query); });
}

bool aba_skeptical(const AbaFramework& framework, Semantics sigma, AtomId query,
                   const Limits& limits) {
  if (!framework.is_assumption(query)) throw NotAnAssumption(query);
  const auto family = aba_extensions(framework, sigma, limits);
  return std::all_of(family.begin(), family.end(),
                     [query](const AssumptionSet& s) { return s.test(query); });
}

bool aba_verify(const AbaFramework& framework, Semantics sigma, const AssumptionSet& query,
                const Limits& limits) {
  return aba_is_extension(framework, sigma, query, limits);
}

bool aba_decide(const AbaFramework& framework, Semantics sigma, Task task,
                const AssumptionSet& query, const Limits& limits) {
  switch (task) {
    case Task::cred:
    case Task::skept: {
      if (query.count() != 1) throw std::invalid_argument("acceptance query needs one assumption");
      const auto atom = static_cast<AtomId>(query.find_first());
      return task == Task::cred ? aba_credulous(framework, sigma, atom, limits)
                                : aba_skeptical(framework, sigma, atom, limits);
    }
    case Task::ver:
      return aba_verify(framework, sigma, query, limits);
    case Task::enumerate:
      break;
  }
  throw std::invalid_argument("enumerate is not a decision task");
}

}  // namespace nfaba
