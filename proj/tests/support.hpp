#pragma once

#include "nfaba/aba.hpp"
#include "nfaba/baf.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testing {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string data(const std::string& file) { return slurp(std::string(NFABA_DATA_DIR) + "/" + file); }

inline nfaba::AbaFramework aba_file(const std::string& file) { return nfaba::parse_aba(data(file)); }
inline nfaba::Baf baf_file(const std::string& file) { return nfaba::parse_baf(data(file)); }

inline nfaba::AssumptionSet atoms(const nfaba::AbaFramework& fw,
                                  std::initializer_list<const char*> names) {
  auto s = fw.empty_set();
  for (auto n : names) s.set(*fw.find_name(n));
  return s;
}

inline nfaba::ArgSet args(const nfaba::Baf& baf, std::initializer_list<const char*> names) {
  auto s = baf.empty_set();
  for (auto n : names) s.set(*baf.find_name(n));
  return s;
}

inline nfaba::ArgSet ids(std::size_t n, std::initializer_list<std::uint32_t> list) {
  return nfaba::make_set(n, list);
}

}  // namespace testing
