#include "nfaba/baf.hpp"
#include "text_lines.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nfaba {

BafDocument parse_baf_document(std::istream& in) {
  std::optional<std::size_t> n_args;
  std::optional<std::size_t> n_premises;
  bool pbaf = false;
  std::vector<std::pair<ArgId, ArgId>> attacks, supports;
  std::map<ArgId, std::vector<PremiseId>> premises;
  std::vector<std::pair<ArgId, std::string>> names;
  std::map<ArgId, ArgOrigin> origins;
  PremiseId max_premise = 0;
  bool any_premise = false;

  detail::LineReader reader(in);
  while (auto line = reader.next()) {
    auto& tok = *line;
    const std::size_t no = reader.line_number();
    auto arg = [&](std::size_t i) -> ArgId {
      const auto v = tok.integer(i);
      if (v < 0 || static_cast<std::size_t>(v) >= *n_args)
        throw ParseError(no, "argument index " + std::to_string(v) + " out of range");
      return static_cast<ArgId>(v);
    };
    auto natural = [&](std::size_t i) -> std::uint32_t {
      const auto v = tok.integer(i);
      if (v < 0 || v > 0xffffffffLL) throw ParseError(no, "negative or oversized index");
      return static_cast<std::uint32_t>(v);
    };

    if (!n_args) {
      if (tok.size() < 3 || tok[0] != "p" || (tok[1] != "baf" && tok[1] != "pbaf"))
        throw ParseError(no, "expected header 'p baf <n>' or 'p pbaf <n> [<premises>]'");
      pbaf = tok[1] == "pbaf";
      if (tok.size() > (pbaf ? 4U : 3U)) throw ParseError(no, "malformed header");
      n_args = natural(2);
      if (tok.size() == 4) n_premises = natural(3);
      continue;
    }
    const auto& kind = tok[0];
    if (kind == "att" || kind == "sup") {
      tok.expect_size(3, "att|sup <from> <to>");
      (kind == "att" ? attacks : supports).emplace_back(arg(1), arg(2));
    } else if (kind == "prem") {
      if (!pbaf) throw ParseError(no, "premise line in a plain BAF");
      if (tok.size() < 2) throw ParseError(no, "malformed line: expected 'prem <arg> <p...>'");
      const ArgId a = arg(1);
      if (premises.count(a)) throw ParseError(no, "duplicate premise line");
      auto& list = premises[a];
      for (std::size_t i = 2; i < tok.size(); ++i) {
        const PremiseId p = natural(i);
        if (n_premises && p >= *n_premises)
          throw ParseError(no, "premise " + std::to_string(p) + " out of range");
        max_premise = std::max(max_premise, p);
        any_premise = true;
        list.push_back(p);
      }
    } else if (kind == "name") {
      tok.expect_size(3, "name <arg> <string>");
      names.emplace_back(arg(1), tok[2]);
    } else if (kind == "arg") {
      if (tok.size() < 3) throw ParseError(no, "malformed line: expected 'arg <id> <conclusion> <support...>'");
      ArgOrigin origin;
      origin.conclusion = natural(2);
      for (std::size_t i = 3; i < tok.size(); ++i) origin.support.push_back(natural(i));
      std::sort(origin.support.begin(), origin.support.end());
      origins[arg(1)] = std::move(origin);
    } else {
      throw ParseError(no, "malformed line: unknown kind '" + kind + "'");
    }
  }
  if (!n_args) throw ParseError(reader.line_number(), "missing header");

  Baf baf(*n_args);
  for (auto [f, t] : attacks) baf.add_attack(f, t);
  for (auto [f, t] : supports) baf.add_support(f, t);
  for (auto& [a, name] : names) baf.set_name(a, std::move(name));

  const std::size_t premise_count =
      n_premises ? *n_premises : (any_premise ? std::size_t{max_premise} + 1 : 0);
  BafDocument doc{Pbaf(std::move(baf), premise_count), pbaf, {}};
  for (auto& [a, list] : premises) doc.framework.set_premises(a, list);
  if (!origins.empty()) {
    doc.origins.resize(*n_args);
    for (auto& [a, origin] : origins) doc.origins[a] = std::move(origin);
  }
  return doc;
}

Baf parse_baf(const std::string& text) {
  std::istringstream in(text);
  auto doc = parse_baf_document(in);
  if (doc.has_premises) throw ParseError(1, "expected a plain BAF, found a pBAF");
  return doc.framework.baf();
}

Pbaf parse_pbaf(const std::string& text) {
  std::istringstream in(text);
  auto doc = parse_baf_document(in);
  if (!doc.has_premises) throw ParseError(1, "expected a pBAF header 'p pbaf'");
  return std::move(doc.framework);
}

namespace {

void write_body(std::ostream& out, const Baf& baf) {
  for (auto [f, t] : baf.attack_list()) out << "att " << f << ' ' << t << '\n';
  for (auto [f, t] : baf.support_list()) out << "sup " << f << ' ' << t << '\n';
}

void write_tail(std::ostream& out, const Baf& baf, const OriginTable* origins) {
  const auto& names = baf.names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!names[i].empty()) out << "name " << i << ' ' << names[i] << '\n';
  if (!origins) return;
  for (std::size_t i = 0; i < origins->size(); ++i) {
    const auto& origin = (*origins)[i];
    if (!origin) continue;
    out << "arg " << i << ' ' << origin->conclusion;
    for (auto s : origin->support) out << ' ' << s;
    out << '\n';
  }
}

}  // namespace

void write_baf(std::ostream& out, const Baf& baf, const OriginTable* origins) {
  out << "p baf " << baf.size() << '\n';
  write_body(out, baf);
  write_tail(out, baf, origins);
}

void write_pbaf(std::ostream& out, const Pbaf& pbaf, const OriginTable* origins) {
  out << "p pbaf " << pbaf.size() << ' ' << pbaf.premise_count() << '\n';
  write_body(out, pbaf.baf());
  for (std::size_t a = 0; a < pbaf.size(); ++a) {
    const auto& prem = pbaf.premises(static_cast<ArgId>(a));
    if (prem.none()) continue;
    out << "prem " << a;
    for (auto p : members(prem)) out << ' ' << p;
    out << '\n';
  }
  write_tail(out, pbaf.baf(), origins);
}

std::string serialize_baf(const Baf& baf) {
  std::ostringstream out;
  write_baf(out, baf);
  return out.str();
}

std::string serialize_pbaf(const Pbaf& pbaf) {
  std::ostringstream out;
  write_pbaf(out, pbaf);
  return out.str();
}

}  // namespace nfaba
