#ifndef HEDGE_ALPHABET_HPP
#define HEDGE_ALPHABET_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hedge {

using StateId = uint32_t;
using SymbolId = uint32_t;

// A word over an alphabet, letters as symbol indices.
using Word = std::vector<SymbolId>;

// Finite ordered alphabet. The declaration order is fixed and drives all
// iteration order downstream (determinization, products, serialization).
class Alphabet {
 public:
  Alphabet() = default;

  // Throws std::invalid_argument on duplicates, empty names, whitespace or
  // non-printable characters, or the reserved tokens "<" and ">".
  explicit Alphabet(std::vector<std::string> symbols);

  size_t size() const { return symbols_.size(); }
  const std::string& name(SymbolId s) const { return symbols_.at(s); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  std::optional<SymbolId> find(std::string_view name) const;

  // As find(), but throws std::invalid_argument naming the letter.
  SymbolId require(std::string_view name) const;

  bool contains(std::string_view name) const { return find(name).has_value(); }

  // Same symbols in the same order.
  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

  // Tokenizes a whitespace-separated word and resolves every letter.
  Word parse_word(std::string_view text) const;

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, SymbolId> index_;
};

// True if the token is usable as a symbol name (also used by the parser).
bool valid_symbol_name(std::string_view name);

}  // namespace hedge

#endif
