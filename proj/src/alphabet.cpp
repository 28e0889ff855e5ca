#include "hedge/alphabet.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hedge {

bool valid_symbol_name(std::string_view name) {
  if (name.empty()) return false;
  if (name == "<" || name == ">") return false;
  for (unsigned char c : name) {
    if (std::isspace(c) || !std::isprint(c)) return false;
  }
  return true;
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  for (SymbolId i = 0; i < symbols_.size(); ++i) {
    const std::string& s = symbols_[i];
    if (!valid_symbol_name(s)) {
      throw std::invalid_argument("invalid symbol name: '" + s + "'");
    }
    if (!index_.emplace(s, i).second) {
      throw std::invalid_argument("duplicate symbol: '" + s + "'");
    }
  }
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SymbolId Alphabet::require(std::string_view name) const {
  auto s = find(name);
  if (!s) throw std::invalid_argument("unknown letter: '" + std::string(name) + "'");
  return *s;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) w.push_back(require(tok));
  return w;
}

}  // namespace hedge
