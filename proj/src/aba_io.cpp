#include "nfaba/aba.hpp"
#include "text_lines.hpp"

#include <map>
#include <sstream>

namespace nfaba {

AbaFramework parse_aba(std::istream& in) {
  std::optional<std::size_t> n_atoms;
  std::vector<std::pair<std::size_t, AtomId>> assumption_lines;
  std::map<AtomId, std::pair<std::size_t, AtomId>> contrary_lines;
  std::vector<std::pair<AtomId, std::vector<AtomId>>> rule_lines;
  std::vector<std::pair<AtomId, std::string>> name_lines;

  detail::LineReader reader(in);
  while (auto line = reader.next()) {
    auto& tok = *line;
    const std::size_t no = reader.line_number();
    auto atom = [&](std::size_t i) -> AtomId {
      const auto value = tok.integer(i);
      if (value < 1 || static_cast<std::size_t>(value) > *n_atoms)
        throw ParseError(no, "atom index " + std::to_string(value) + " out of range 1.." +
                                 std::to_string(*n_atoms));
      return static_cast<AtomId>(value - 1);
    };

    if (!n_atoms) {
      if (tok.size() != 3 || tok[0] != "p" || tok[1] != "aba")
        throw ParseError(no, "expected header 'p aba <n_atoms>'");
      const auto n = tok.integer(2);
      if (n < 0) throw ParseError(no, "negative atom count");
      n_atoms = static_cast<std::size_t>(n);
      continue;
    }
    const auto& kind = tok[0];
    if (kind == "a") {
      tok.expect_size(2, "a <atom>");
      assumption_lines.emplace_back(no, atom(1));
    } else if (kind == "c") {
      tok.expect_size(3, "c <assumption> <contrary>");
      const AtomId a = atom(1);
      if (contrary_lines.count(a)) throw ParseError(no, "duplicate contrary declaration");
      contrary_lines[a] = {no, atom(2)};
    } else if (kind == "r") {
      if (tok.size() < 2) throw ParseError(no, "malformed line: expected 'r <head> <body...>'");
      std::vector<AtomId> body;
      for (std::size_t i = 2; i < tok.size(); ++i) body.push_back(atom(i));
      rule_lines.emplace_back(atom(1), std::move(body));
    } else if (kind == "name") {
      tok.expect_size(3, "name <atom> <string>");
      name_lines.emplace_back(atom(1), tok[2]);
    } else {
      throw ParseError(no, "malformed line: unknown kind '" + kind + "'");
    }
  }
  if (!n_atoms) throw ParseError(reader.line_number(), "missing header 'p aba <n_atoms>'");

  AbaFramework framework(*n_atoms);
  std::map<AtomId, std::size_t> declared;
  for (const auto& [no, a] : assumption_lines) {
    if (declared.count(a)) throw ParseError(no, "duplicate assumption declaration");
    declared[a] = no;
  }
  for (const auto& [a, entry] : contrary_lines)
    if (!declared.count(a)) throw ParseError(entry.first, "contrary on non-assumption");
  for (const auto& [a, no] : declared) {
    auto it = contrary_lines.find(a);
    if (it == contrary_lines.end()) throw ParseError(no, "assumption without contrary");
    framework.add_assumption(a, it->second.second);
  }
  if (declared.empty()) throw ParseError(reader.line_number(), "framework has no assumptions");
  for (auto& [head, body] : rule_lines) framework.add_rule(head, std::move(body));
  for (auto& [a, name] : name_lines) framework.set_name(a, std::move(name));
  return framework;
}

AbaFramework parse_aba(const std::string& text) {
  std::istringstream in(text);
  return parse_aba(in);
}

void write_aba(std::ostream& out, const AbaFramework& framework) {
  out << "p aba " << framework.atom_count() << '\n';
  for (auto a : framework.assumptions()) out << "a " << a + 1 << '\n';
  for (auto a : framework.assumptions())
    out << "c " << a + 1 << ' ' << framework.contrary(a) + 1 << '\n';
  for (const auto& rule : framework.rules()) {
    out << "r " << rule.head + 1;
    for (auto b : rule.body) out << ' ' << b + 1;
    out << '\n';
  }
  const auto& names = framework.names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!names[i].empty()) out << "name " << i + 1 << ' ' << names[i] << '\n';
}

std::string serialize_aba(const AbaFramework& framework) {
  std::ostringstream out;
  write_aba(out, framework);
  return out.str();
}

}  // namespace nfaba
