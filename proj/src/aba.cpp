#include "nfaba/aba.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace nfaba {

AbaFramework::AbaFramework(std::size_t n_atoms)
    : n_atoms_(n_atoms), contrary_(n_atoms), assumption_pos_(n_atoms, -1), names_(n_atoms) {}

void AbaFramework::check_atom(AtomId atom) const {
  if (atom >= n_atoms_)
    throw Error("atom " + std::to_string(atom + 1) + " out of range 1.." +
                std::to_string(n_atoms_));
}

void AbaFramework::add_assumption(AtomId atom, AtomId contrary) {
  check_atom(atom);
  check_atom(contrary);
  if (contrary_[atom]) throw Error("duplicate contrary for atom " + std::to_string(atom + 1));
  contrary_[atom] = contrary;
  assumptions_.insert(std::upper_bound(assumptions_.begin(), assumptions_.end(), atom), atom);
  for (std::size_t i = 0; i < assumptions_.size(); ++i)
    assumption_pos_[assumptions_[i]] = static_cast<int>(i);
}

void AbaFramework::add_rule(AtomId head, std::vector<AtomId> body) {
  check_atom(head);
  for (auto b : body) check_atom(b);
  std::sort(body.begin(), body.end());
  body.erase(std::unique(body.begin(), body.end()), body.end());
  rules_.push_back(Rule{head, std::move(body)});
}

void AbaFramework::set_name(AtomId atom, std::string name) {
  check_atom(atom);
  names_[atom] = std::move(name);
}

void AbaFramework::validate() const {
  if (assumptions_.empty()) throw Error("framework has no assumptions");
}

bool AbaFramework::is_assumption(AtomId atom) const {
  return atom < n_atoms_ && assumption_pos_[atom] >= 0;
}

std::size_t AbaFramework::assumption_index(AtomId atom) const {
  if (!is_assumption(atom)) throw NotAnAssumption(atom);
  return static_cast<std::size_t>(assumption_pos_[atom]);
}

AtomId AbaFramework::contrary(AtomId assumption) const {
  if (!is_assumption(assumption)) throw NotAnAssumption(assumption);
  return *contrary_[assumption];
}

std::string AbaFramework::label(AtomId atom) const {
  if (atom < names_.size() && !names_[atom].empty()) return names_[atom];
  return std::to_string(atom + 1);
}

std::optional<AtomId> AbaFramework::find_name(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<AtomId>(i);
  return std::nullopt;
}

AssumptionSet AbaFramework::all_assumptions() const {
  AssumptionSet out(n_atoms_);
  for (auto a : assumptions_) out.set(a);
  return out;
}

namespace {

void require_assumption_set(const AbaFramework& framework, const AssumptionSet& s) {
  if (s.size() != framework.atom_count())
    throw std::invalid_argument("assumption set has the wrong universe size");
  if (!s.is_subset_of(framework.all_assumptions()))
    throw std::invalid_argument("set contains atoms that are not assumptions");
}

}  // namespace

AtomSet theory(const AbaFramework& framework, const AssumptionSet& s) {
  require_assumption_set(framework, s);
  const auto& rules = framework.rules();
  AtomSet derived = s;

  // Counter-based forward chaining: a rule fires once all body atoms are in.
  std::vector<std::size_t> missing(rules.size());
  std::vector<std::vector<std::size_t>> watchers(framework.atom_count());
  std::vector<AtomId> queue;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    missing[r] = rules[r].body.size();
    for (auto b : rules[r].body) watchers[b].push_back(r);
  }
  auto derive = [&](AtomId atom) {
    if (!derived.test(atom)) {
      derived.set(atom);
      queue.push_back(atom);
    }
  };
  for (auto a = s.find_first(); a != AtomSet::npos; a = s.find_next(a))
    queue.push_back(static_cast<AtomId>(a));
  for (std::size_t r = 0; r < rules.size(); ++r)
    if (missing[r] == 0) derive(rules[r].head);
  while (!queue.empty()) {
    const AtomId atom = queue.back();
    queue.pop_back();
    for (auto r : watchers[atom])
      if (--missing[r] == 0) derive(rules[r].head);
  }
  return derived;
}

AssumptionSet aba_closure(const AbaFramework& framework, const AssumptionSet& s) {
  return theory(framework, s) & framework.all_assumptions();
}

bool attacks(const AbaFramework& framework, const AssumptionSet& s, const AssumptionSet& t) {
  require_assumption_set(framework, t);
  const AtomSet th = theory(framework, s);
  for (auto a = t.find_first(); a != AtomSet::npos; a = t.find_next(a))
    if (th.test(framework.contrary(static_cast<AtomId>(a)))) return true;
  return false;
}

namespace {

class Saturation {
 public:
  Saturation(const AbaFramework& framework, std::size_t cap)
      : framework_(framework), cap_(cap), found_(framework.atom_count()),
        seen_(framework.atom_count()) {}

  std::vector<Argument> run() {
    const auto n = framework_.atom_count();
    for (auto a : framework_.assumptions()) {
      AtomSet s(n);
      s.set(a);
      add(a, std::move(s));
    }
    for (const auto& rule : framework_.rules())
      if (rule.body.empty()) add(rule.head, AtomSet(n));

    // Semi-naive rounds: a combination is new only if one body position draws
    // from the previous round's delta.
    std::vector<std::size_t> old_end(n, 0);
    for (;;) {
      std::vector<std::size_t> cur_end(n);
      bool delta = false;
      for (std::size_t i = 0; i < n; ++i) {
        cur_end[i] = found_[i].size();
        delta = delta || cur_end[i] > old_end[i];
      }
      if (!delta) break;
      for (const auto& rule : framework_.rules()) {
        const auto& body = rule.body;
        if (body.empty()) continue;
        for (std::size_t j = 0; j < body.size(); ++j) {
          if (cur_end[body[j]] == old_end[body[j]]) continue;
          std::vector<std::pair<std::size_t, std::size_t>> ranges(body.size());
          bool empty_range = false;
          for (std::size_t i = 0; i < body.size(); ++i) {
            const auto b = body[i];
            if (i < j) ranges[i] = {0, old_end[b]};
            else if (i == j) ranges[i] = {old_end[b], cur_end[b]};
            else ranges[i] = {0, cur_end[b]};
            empty_range = empty_range || ranges[i].first == ranges[i].second;
          }
          if (!empty_range) combine(rule, ranges, 0, AtomSet(n));
        }
      }
      old_end = cur_end;
    }

    std::vector<Argument> out;
    out.reserve(total_);
    for (std::size_t atom = 0; atom < n; ++atom)
      for (auto& support : found_[atom])
        out.push_back(Argument{std::move(support), static_cast<AtomId>(atom)});
    std::vector<std::tuple<std::size_t, std::vector<std::uint32_t>, AtomId, std::size_t>> keys;
    keys.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
      keys.emplace_back(out[i].support.count(), members(out[i].support), out[i].conclusion, i);
    std::sort(keys.begin(), keys.end());
    std::vector<Argument> sorted;
    sorted.reserve(out.size());
    for (const auto& key : keys) sorted.push_back(std::move(out[std::get<3>(key)]));
    return sorted;
  }

 private:
  void add(AtomId atom, AtomSet support) {
    if (seen_[atom].insert(support).second) {
      found_[atom].push_back(std::move(support));
      if (++total_ > cap_) throw CapExceeded(cap_);
    }
  }

  void combine(const Rule& rule, const std::vector<std::pair<std::size_t, std::size_t>>& ranges,
               std::size_t pos, const AtomSet& acc) {
    if (pos == rule.body.size()) {
      add(rule.head, acc);
      return;
    }
    const auto b = rule.body[pos];
    for (std::size_t k = ranges[pos].first; k < ranges[pos].second; ++k) {
      AtomSet next = acc | found_[b][k];
      combine(rule, ranges, pos + 1, next);
    }
  }

  const AbaFramework& framework_;
  std::size_t cap_;
  std::size_t total_ = 0;
  std::vector<std::vector<AtomSet>> found_;
  std::vector<std::set<AtomSet>> seen_;
};

}  // namespace

std::vector<Argument> enumerate_arguments(const AbaFramework& framework, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("argument cap must be positive");
  return Saturation(framework, cap).run();
}

bool aba_defends(const AbaFramework& framework, const AssumptionSet& s, AtomId a,
                 DefenseMode mode, const Limits& limits, std::size_t cap) {
  require_assumption_set(framework, s);
  if (!framework.is_assumption(a)) throw NotAnAssumption(a);
  AssumptionSet target = framework.empty_set();
  target.set(a);

  if (mode == DefenseMode::attacker_closure) {
    const AtomId contrary = framework.contrary(a);
    for (const auto& arg : enumerate_arguments(framework, cap))
      if (arg.conclusion == contrary && !attacks(framework, s, aba_closure(framework, arg.support)))
        return false;
    return true;
  }

  const auto& asms = framework.assumptions();
  if (asms.size() > limits.max_enumeration)
    throw TooLarge("enumeration-limit", asms.size(), limits.max_enumeration);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << asms.size()); ++mask) {
    AssumptionSet t = framework.empty_set();
    for (std::size_t i = 0; i < asms.size(); ++i)
      if (mask >> i & 1U) t.set(asms[i]);
    if (aba_closure(framework, t) != t) continue;
    if (attacks(framework, t, target) && !attacks(framework, s, t)) return false;
  }
  return true;
}

}  // namespace nfaba
