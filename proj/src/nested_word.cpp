#include "hedge/nested_word.hpp"

#include <algorithm>

namespace hedge {

NestedWord NestedWord::letter(std::string name) {
  NestedWord w;
  w.items_.emplace_back(Item(std::move(name)));
  return w;
}

NestedWord NestedWord::tree(NestedWord inner) {
  NestedWord w;
  w.items_.emplace_back(Item(std::move(inner)));
  return w;
}

NestedWord& NestedWord::append(NestedWord w) {
  items_.insert(items_.end(), std::make_move_iterator(w.items_.begin()),
                std::make_move_iterator(w.items_.end()));
  return *this;
}

void NestedWord::pop_back() { items_.pop_back(); }

size_t NestedWord::total_items() const {
  size_t n = 0;
  for (const Item& it : items_) {
    n += 1;
    if (it.is_tree()) n += it.tree().total_items();
  }
  return n;
}

size_t NestedWord::depth() const {
  size_t d = 0;
  for (const Item& it : items_) {
    if (it.is_tree()) d = std::max(d, 1 + it.tree().depth());
  }
  return d;
}

size_t NestedWord::count_letter(const std::string& name) const {
  size_t n = 0;
  for (const Item& it : items_) {
    if (it.is_letter()) {
      if (it.letter() == name) ++n;
    } else {
      n += it.tree().count_letter(name);
    }
  }
  return n;
}

bool NestedWord::operator==(const NestedWord& other) const { return items_ == other.items_; }

}  // namespace hedge
