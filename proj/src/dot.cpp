#include "nfaba/dot.hpp"

#include <sstream>

namespace nfaba {

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string render(const Baf& baf, const Pbaf* pbaf) {
  std::ostringstream out;
  out << "digraph baf {\n";
  for (std::size_t a = 0; a < baf.size(); ++a) {
    const auto id = static_cast<ArgId>(a);
    std::string label = baf.label(id);
    if (pbaf) {
      label += "\n{";
      bool first = true;
      for (auto p : members(pbaf->premises(id))) {
        if (!first) label += ',';
        label += std::to_string(p);
        first = false;
      }
      label += '}';
    }
    out << "  " << a << " [label=" << quoted(label) << "];\n";
  }
  for (auto [f, t] : baf.attack_list()) out << "  " << f << " -> " << t << ";\n";
  for (auto [f, t] : baf.support_list()) out << "  " << f << " -> " << t << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const Baf& baf) { return render(baf, nullptr); }
std::string to_dot(const Pbaf& pbaf) { return render(pbaf.baf(), &pbaf); }

}  // namespace nfaba
