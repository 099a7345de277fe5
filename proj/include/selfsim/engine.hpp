#pragma once

#include <map>
#include <string>
#include <vector>

#include "selfsim/machine.hpp"

namespace selfsim {

// Vertex of the rooted tree: branch indices from the root, root = {}.
using Word = std::vector<unsigned>;

// perm[x] is the image of branch x at this vertex.
using Perm = std::vector<unsigned>;

bool is_identity_perm(const Perm& p);

// Cycle notation; identity renders as "()".
std::string perm_cycles(const Perm& p);

// Words as strings over 0-9a-z, one character per branch index.
Word word_from_string(const std::string& s, unsigned degree);
std::string word_to_string(const Word& w);

struct Decomposition {
  Perm perm;
  std::vector<Elem> restrictions;
};

// One level of unfolding: route each coset through the transversal and
// push what remains through the subgroup map. Exactly one representative
// must absorb each product into the subgroup; otherwise the machine's
// data is inconsistent.
Decomposition decompose(const Machine& m, const Elem& g);

// Image of a vertex under the (right) action of g.
Word act_word(const Machine& m, Elem g, const Word& w);

// The element governing the subtree at w.
Elem restriction(const Machine& m, Elem g, const Word& w);

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using PortraitMap = std::map<Word, Perm, WordLess>;

// Vertex permutations for every vertex of depth < depth.
PortraitMap portrait(const Machine& m, const Elem& g, unsigned depth);

// True when g fixes every vertex down to the given depth.
bool trivial_to_depth(const Machine& m, const Elem& g, unsigned depth);

struct StatesResult {
  std::vector<Elem> states;  // discovery order, starting from the element itself
  bool budget_exhausted = false;
};

// Closure of {g} under taking restrictions, cut off at the budget.
StatesResult states(const Machine& m, const Elem& g, unsigned budget);

struct StateCount {
  std::string name;
  std::size_t count = 0;
  bool budget_exhausted = false;
};

std::vector<StateCount> finite_state_report(const Machine& m, unsigned budget);

}  // namespace selfsim
