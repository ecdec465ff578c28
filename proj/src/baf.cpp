#include "nfaba/baf.hpp"

#include <stdexcept>

namespace nfaba {

Baf::Baf(std::size_t n_args)
    : n_(n_args),
      att_out_(n_args, ArgSet(n_args)),
      att_in_(n_args, ArgSet(n_args)),
      sup_out_(n_args, ArgSet(n_args)),
      sup_in_(n_args, ArgSet(n_args)),
      names_(n_args) {}

void Baf::check(ArgId a) const {
  if (a >= n_)
    throw Error("argument " + std::to_string(a) + " out of range 0.." +
                std::to_string(n_ == 0 ? 0 : n_ - 1));
}

void Baf::add_attack(ArgId from, ArgId to) {
  check(from);
  check(to);
  att_out_[from].set(to);
  att_in_[to].set(from);
}

void Baf::add_support(ArgId from, ArgId to) {
  check(from);
  check(to);
  sup_out_[from].set(to);
  sup_in_[to].set(from);
}

void Baf::set_name(ArgId arg, std::string name) {
  check(arg);
  names_[arg] = std::move(name);
}

bool Baf::has_supports() const {
  for (const auto& row : sup_out_)
    if (row.any()) return true;
  return false;
}

namespace {

std::vector<std::pair<ArgId, ArgId>> edge_list(const std::vector<ArgSet>& rows) {
  std::vector<std::pair<ArgId, ArgId>> out;
  for (std::size_t from = 0; from < rows.size(); ++from)
    for (auto to = rows[from].find_first(); to != ArgSet::npos; to = rows[from].find_next(to))
      out.emplace_back(static_cast<ArgId>(from), static_cast<ArgId>(to));
  return out;
}

}  // namespace

std::vector<std::pair<ArgId, ArgId>> Baf::attack_list() const { return edge_list(att_out_); }
std::vector<std::pair<ArgId, ArgId>> Baf::support_list() const { return edge_list(sup_out_); }

std::string Baf::label(ArgId a) const {
  if (a < names_.size() && !names_[a].empty()) return names_[a];
  return std::to_string(a);
}

std::optional<ArgId> Baf::find_name(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<ArgId>(i);
  return std::nullopt;
}

Pbaf::Pbaf(Baf baf, std::size_t n_premises)
    : baf_(std::move(baf)), n_premises_(n_premises),
      premises_(baf_.size(), PremiseSet(n_premises)) {}

void Pbaf::set_premises(ArgId arg, const std::vector<PremiseId>& premises) {
  if (arg >= baf_.size()) throw Error("argument " + std::to_string(arg) + " out of range");
  PremiseSet set(n_premises_);
  for (auto p : premises) {
    if (p >= n_premises_)
      throw Error("premise " + std::to_string(p) + " out of range 0.." +
                  std::to_string(n_premises_ == 0 ? 0 : n_premises_ - 1));
    set.set(p);
  }
  premises_[arg] = std::move(set);
}

PremiseSet Pbaf::premises_of(const ArgSet& e) const {
  PremiseSet out(n_premises_);
  for (auto a = e.find_first(); a != ArgSet::npos; a = e.find_next(a)) out |= premises_[a];
  return out;
}

}  // namespace nfaba
