#ifndef HEDGE_QUERIES_HPP
#define HEDGE_QUERIES_HPP

#include <string>
#include <vector>

#include "hedge/nested_word.hpp"
#include "hedge/nfa.hpp"
#include "hedge/sha.hpp"

namespace hedge {

// The selection variable and its negation as they appear in alphabets and
// serialized files.
inline const std::string kVarX = "x";
inline const std::string kVarNotX = "not-x";

// Schema accepting exactly the words over sigma + {x} with one occurrence
// of x (the V-structures): states {0,1}, rules 0 -s-> 0, 1 -s-> 1 for s in
// sigma and 0 -x-> 1; partial on x from state 1. Throws if sigma contains x.
Dfa one_x_dfa(const Alphabet& sigma);

// Schema accepting exactly the nested words over sigma + {x, not-x} with
// one occurrence of x at any depth; apply rules (0,0,0), (0,1,1), (1,0,1),
// tree initial state 0. Throws if sigma contains a reserved symbol.
Dsha one_x_sha(const Alphabet& sigma);

// Positions of a word are 0..|w| (0 is the start label). Inserting x after
// position pi. Throws on pi out of range.
std::vector<std::string> insert_word(const std::vector<std::string>& w, size_t pi);

// Positions pi with w*[pi/x] in L(a). The query automaton's alphabet must
// contain x; w must not.
StateSet select_word(const Nfa& a, const std::vector<std::string>& w);

// Node ids 1..k assigned to tree items in preorder (document order);
// letters are not nodes.
std::vector<uint32_t> nodes(const NestedWord& h);

// Prepends x to the hedge of node pi and not-x to the hedge of every other
// node. Throws on an invalid node id.
NestedWord annotate(const NestedWord& h, uint32_t pi);

// Nodes pi with the annotated hedge in L(a). The subject must not contain
// x or not-x.
std::vector<uint32_t> select_nodes(const Sha& a, const NestedWord& h);

}  // namespace hedge

#endif
