#ifndef HEDGE_NESTED_WORD_HPP
#define HEDGE_NESTED_WORD_HPP

#include <string>
#include <variant>
#include <vector>

namespace hedge {

// A nested word (hedge): a sequence of internal letters and trees over
// nested words. Stored flattened, so concatenation is associative and the
// empty word is neutral by construction; there is exactly one
// representation per abstract nested word.
class NestedWord {
 public:
  class Item;

  NestedWord() = default;

  static NestedWord letter(std::string name);
  static NestedWord tree(NestedWord inner);

  // Concatenation; splices the items of `w` onto this one.
  NestedWord& append(NestedWord w);
  // Drops the last item; used by builders and enumerators.
  void pop_back();
  friend NestedWord operator+(NestedWord a, NestedWord b) {
    a.append(std::move(b));
    return a;
  }

  const std::vector<Item>& items() const { return items_; }
  bool empty() const { return items_.empty(); }

  // Letters and trees, counted recursively.
  size_t total_items() const;
  // Maximum nesting depth; 0 for a flat word.
  size_t depth() const;
  // Occurrences of a letter anywhere in the hedge.
  size_t count_letter(const std::string& name) const;

  bool operator==(const NestedWord& other) const;

 private:
  std::vector<Item> items_;
};

class NestedWord::Item {
 public:
  explicit Item(std::string letter) : value_(std::move(letter)) {}
  explicit Item(NestedWord tree) : value_(std::move(tree)) {}

  bool is_letter() const { return std::holds_alternative<std::string>(value_); }
  bool is_tree() const { return !is_letter(); }
  const std::string& letter() const { return std::get<std::string>(value_); }
  const NestedWord& tree() const { return std::get<NestedWord>(value_); }
  NestedWord& tree() { return std::get<NestedWord>(value_); }

  bool operator==(const Item& other) const { return value_ == other.value_; }

 private:
  std::variant<std::string, NestedWord> value_;
};

}  // namespace hedge

#endif
