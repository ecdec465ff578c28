#pragma once

// Shared vocabulary: id types, set representation, semantics tags and the
// error hierarchy used by every module.

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nfaba {

using AtomId = std::uint32_t;
using ArgId = std::uint32_t;
using PremiseId = std::uint32_t;

/// Set of dense ids (atoms, arguments or premises) backed by a bitset.
using IdSet = boost::dynamic_bitset<std::uint64_t>;
using AtomSet = IdSet;
using ArgSet = IdSet;
using PremiseSet = IdSet;

enum class Semantics { cf, ad, co, gr, pr, stb };
enum class Task { enumerate, cred, skept, ver };
enum class DefenseMode { closed_sets, attacker_closure };

std::string_view to_string(Semantics s);
std::string_view to_string(Task t);
Semantics parse_semantics(std::string_view text);
Task parse_task(std::string_view text);

/// Guard on the number of objects a subset enumeration may range over.
struct Limits {
  std::size_t max_enumeration = 24;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An enumeration guard tripped.
class TooLarge : public Error {
 public:
  TooLarge(std::string guard, std::size_t size, std::size_t limit);
  const std::string& guard() const { return guard_; }

 private:
  std::string guard_;
};

/// Argument saturation produced more arguments than the caller allowed.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class NotAnAssumption : public Error {
 public:
  explicit NotAnAssumption(AtomId atom);
};

class SupportsPresent : public Error {
 public:
  SupportsPresent();
};

/// Sorted member ids of a set.
std::vector<std::uint32_t> members(const IdSet& set);
IdSet make_set(std::size_t universe, const std::vector<std::uint32_t>& ids);

/// Sorts a family of sets lexicographically by member-id list and drops
/// duplicates. This is the canonical output order everywhere.
void canonicalize(std::vector<IdSet>& family);

bool contains_set(const std::vector<IdSet>& family, const IdSet& set);

}  // namespace nfaba
