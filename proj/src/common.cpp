#include "nfaba/common.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace nfaba {

namespace {

std::string lowered(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

constexpr std::array<std::pair<Semantics, std::string_view>, 6> kSemantics{{
    {Semantics::cf, "cf"},
    {Semantics::ad, "ad"},
    {Semantics::co, "co"},
    {Semantics::gr, "gr"},
    {Semantics::pr, "pr"},
    {Semantics::stb, "stb"},
}};

constexpr std::array<std::pair<Task, std::string_view>, 4> kTasks{{
    {Task::enumerate, "enumerate"},
    {Task::cred, "cred"},
    {Task::skept, "skept"},
    {Task::ver, "ver"},
}};

}  // namespace

std::string_view to_string(Semantics s) {
  for (const auto& [value, name] : kSemantics)
    if (value == s) return name;
  return "?";
}

std::string_view to_string(Task t) {
  for (const auto& [value, name] : kTasks)
    if (value == t) return name;
  return "?";
}

Semantics parse_semantics(std::string_view text) {
  const std::string key = lowered(text);
  for (const auto& [value, name] : kSemantics)
    if (name == key) return value;
  throw Error("unknown semantics '" + std::string(text) + "'");
}

Task parse_task(std::string_view text) {
  const std::string key = lowered(text);
  for (const auto& [value, name] : kTasks)
    if (name == key) return value;
  throw Error("unknown task '" + std::string(text) + "'");
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

TooLarge::TooLarge(std::string guard, std::size_t size, std::size_t limit)
    : Error(guard + ": " + std::to_string(size) + " exceeds limit " + std::to_string(limit)),
      guard_(std::move(guard)) {}

CapExceeded::CapExceeded(std::size_t cap)
    : Error("argument-cap: more than " + std::to_string(cap) + " arguments"), cap_(cap) {}

NotAnAssumption::NotAnAssumption(AtomId atom)
    : Error("atom " + std::to_string(atom + 1) + " is not an assumption") {}

SupportsPresent::SupportsPresent()
    : Error("framework has supports; the classic AF oracle needs Sup = {}") {}

std::vector<std::uint32_t> members(const IdSet& set) {
  std::vector<std::uint32_t> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != IdSet::npos; i = set.find_next(i))
    out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

IdSet make_set(std::size_t universe, const std::vector<std::uint32_t>& ids) {
  IdSet out(universe);
  for (auto id : ids) out.set(id);
  return out;
}

void canonicalize(std::vector<IdSet>& family) {
  std::vector<std::pair<std::vector<std::uint32_t>, IdSet>> keyed;
  keyed.reserve(family.size());
  for (auto& s : family) keyed.emplace_back(members(s), std::move(s));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  family.clear();
  for (auto& [key, s] : keyed) family.push_back(std::move(s));
}

bool contains_set(const std::vector<IdSet>& family, const IdSet& set) {
  return std::any_of(family.begin(), family.end(), [&](const IdSet& s) { return s == set; });
}

}  // namespace nfaba
