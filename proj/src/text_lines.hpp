#pragma once

// Line tokenizer shared by the text-format parsers. '#' starts a comment,
// blank lines are skipped.

#include "nfaba/common.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace nfaba::detail {

class Tokens {
 public:
  Tokens(std::vector<std::string> words, std::size_t line)
      : words_(std::move(words)), line_(line) {}

  std::size_t size() const { return words_.size(); }
  const std::string& operator[](std::size_t i) const { return words_[i]; }

  long long integer(std::size_t i) const {
    if (i >= words_.size()) throw ParseError(line_, "malformed line: missing field");
    const auto& w = words_[i];
    long long value = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (ec != std::errc() || ptr != w.data() + w.size())
      throw ParseError(line_, "malformed line: '" + w + "' is not an integer");
    return value;
  }

  void expect_size(std::size_t n, const char* shape) const {
    if (words_.size() != n) throw ParseError(line_, std::string("malformed line: expected '") +
                                                        shape + "'");
  }

 private:
  std::vector<std::string> words_;
  std::size_t line_;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<Tokens> next() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream words(raw);
      std::vector<std::string> out;
      for (std::string w; words >> w;) out.push_back(std::move(w));
      if (!out.empty()) return Tokens(std::move(out), line_);
    }
    return std::nullopt;
  }

  std::size_t line_number() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

}  // namespace nfaba::detail
