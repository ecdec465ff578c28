#include "nfaba/instantiate.hpp"

namespace nfaba {

OriginTable ArgumentTable::origins() const {
  OriginTable out;
  out.reserve(arguments.size());
  for (const auto& arg : arguments) {
    ArgOrigin origin;
    origin.conclusion = arg.conclusion + 1;
    for (auto a : members(arg.support)) origin.support.push_back(a + 1);
    out.emplace_back(std::move(origin));
  }
  return out;
}

InstantiatedBaf instantiate_baf(const AbaFramework& framework, std::size_t cap) {
  const auto& asms = framework.assumptions();
  ArgumentTable table;
  table.atom_count = framework.atom_count();
  table.arguments = enumerate_arguments(framework, cap);
  const auto& args = table.arguments;
  const std::size_t n = args.size();

  table.base_index.assign(asms.size(), 0);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& arg = args[x];
    if (arg.support.count() == 1 && arg.support.test(arg.conclusion))
      table.base_index[framework.assumption_index(arg.conclusion)] = static_cast<ArgId>(x);
  }

  Baf baf(n);
  // Contraries of each argument's support, as a set of atoms.
  std::vector<AtomSet> targets(n, framework.empty_set());
  for (std::size_t y = 0; y < n; ++y)
    for (auto a : members(args[y].support)) targets[y].set(framework.contrary(a));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (targets[y].test(args[x].conclusion))
        baf.add_attack(static_cast<ArgId>(x), static_cast<ArgId>(y));

  for (std::size_t x = 0; x < n; ++x) {
    const AssumptionSet closed = aba_closure(framework, args[x].support);
    for (auto a : members(closed)) {
      const ArgId base = table.base_index[framework.assumption_index(a)];
      if (base != x) baf.add_support(static_cast<ArgId>(x), base);
    }
  }

  for (std::size_t i = 0; i < asms.size(); ++i) {
    const auto& name = framework.names()[asms[i]];
    if (!name.empty()) baf.set_name(table.base_index[i], name);
  }
  return {std::move(baf), std::move(table)};
}

InstantiatedPbaf instantiate_pbaf(const AbaFramework& framework, std::size_t cap) {
  auto inst = instantiate_baf(framework, cap);
  Pbaf pbaf(std::move(inst.baf), framework.assumptions().size());
  for (std::size_t x = 0; x < inst.table.arguments.size(); ++x) {
    std::vector<PremiseId> premises;
    for (auto a : members(inst.table.arguments[x].support))
      premises.push_back(static_cast<PremiseId>(framework.assumption_index(a)));
    pbaf.set_premises(static_cast<ArgId>(x), premises);
  }
  return {std::move(pbaf), std::move(inst.table)};
}

ArgSet arguments_for(const ArgumentTable& table, const AssumptionSet& s) {
  ArgSet out(table.arguments.size());
  for (std::size_t x = 0; x < table.arguments.size(); ++x)
    if (table.arguments[x].support.is_subset_of(s)) out.set(x);
  return out;
}

AssumptionSet assumptions_of(const ArgumentTable& table, const ArgSet& e) {
  AssumptionSet out(table.atom_count);
  for (auto x = e.find_first(); x != ArgSet::npos; x = e.find_next(x))
    out |= table.arguments[x].support;
  return out;
}

bool is_assumption_exhaustive(const ArgumentTable& table, const ArgSet& e) {
  const AssumptionSet have = assumptions_of(table, e);
  for (std::size_t x = 0; x < table.arguments.size(); ++x)
    if (!e.test(x) && table.arguments[x].support.is_subset_of(have)) return false;
  return true;
}

}  // namespace nfaba
