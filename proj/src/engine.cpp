#include "selfsim/engine.hpp"

#include <deque>
#include <sstream>

#include "selfsim/errors.hpp"

namespace selfsim {

bool is_identity_perm(const Perm& p) {
  for (unsigned i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

std::string perm_cycles(const Perm& p) {
  std::ostringstream s;
  std::vector<char> seen(p.size(), 0);
  bool any = false;
  for (unsigned start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    any = true;
    s << "(";
    unsigned x = start;
    bool first = true;
    do {
      if (!first) s << " ";
      first = false;
      s << x;
      seen[x] = 1;
      x = p[x];
    } while (x != start);
    s << ")";
  }
  if (!any) return "()";
  return s.str();
}

namespace {

unsigned char_branch(char c) {
  if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<unsigned>(c - 'a' + 10);
  throw InvalidInput(std::string("bad branch character '") + c + "'");
}

char branch_char(unsigned x) {
  if (x < 10) return static_cast<char>('0' + x);
  if (x < 36) return static_cast<char>('a' + (x - 10));
  throw InvalidInput("branch index too large to print");
}

}  // namespace

Word word_from_string(const std::string& s, unsigned degree) {
  Word w;
  w.reserve(s.size());
  for (char c : s) {
    unsigned x = char_branch(c);
    if (x >= degree) throw InvalidInput("branch index out of range for this machine");
    w.push_back(x);
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (unsigned x : w) s += branch_char(x);
  return s;
}

Decomposition decompose(const Machine& m, const Elem& g) {
  unsigned d = m.degree();
  Decomposition out;
  out.perm.resize(d);
  out.restrictions.resize(d);
  for (unsigned x = 0; x < d; ++x) {
    Elem txg = m.mul(m.transversal(x), g);
    unsigned hits = 0;
    for (unsigned j = 0; j < d; ++j) {
      Elem c = m.mul(txg, m.inv(m.transversal(j)));
      if (m.in_domain(c)) {
        ++hits;
        if (hits > 1)
          throw MalformedMachine("more than one coset representative absorbs " + m.render(g));
        out.perm[x] = j;
        out.restrictions[x] = m.descend(c);
      }
    }
    if (hits == 0)
      throw MalformedMachine("no coset representative absorbs " + m.render(g));
  }
  return out;
}

Word act_word(const Machine& m, Elem g, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (unsigned x : w) {
    if (x >= m.degree()) throw InvalidInput("branch index out of range for this machine");
    Decomposition dec = decompose(m, g);
    out.push_back(dec.perm[x]);
    g = dec.restrictions[x];
  }
  return out;
}

Elem restriction(const Machine& m, Elem g, const Word& w) {
  for (unsigned x : w) {
    if (x >= m.degree()) throw InvalidInput("branch index out of range for this machine");
    Decomposition dec = decompose(m, g);
    g = dec.restrictions[x];
  }
  return g;
}

PortraitMap portrait(const Machine& m, const Elem& g, unsigned depth) {
  PortraitMap out;
  if (depth == 0) return out;
  std::deque<std::pair<Word, Elem>> queue;
  queue.push_back({Word{}, g});
  while (!queue.empty()) {
    auto [w, e] = queue.front();
    queue.pop_front();
    Decomposition dec = decompose(m, e);
    out.emplace(w, std::move(dec.perm));
    if (w.size() + 1 < depth) {
      for (unsigned x = 0; x < m.degree(); ++x) {
        Word child = w;
        child.push_back(x);
        queue.push_back({std::move(child), dec.restrictions[x]});
      }
    }
  }
  return out;
}

bool trivial_to_depth(const Machine& m, const Elem& g, unsigned depth) {
  if (depth == 0) return true;
  Decomposition dec = decompose(m, g);
  if (!is_identity_perm(dec.perm)) return false;
  // Equal restrictions head identical subtrees; deduplicating keeps the
  // probe linear on machines whose restrictions collapse.
  std::vector<Elem> distinct;
  for (const Elem& r : dec.restrictions) {
    bool seen = false;
    for (const Elem& s : distinct)
      if (m.equal(r, s)) {
        seen = true;
        break;
      }
    if (!seen) distinct.push_back(r);
  }
  for (const Elem& r : distinct)
    if (!trivial_to_depth(m, r, depth - 1)) return false;
  return true;
}

StatesResult states(const Machine& m, const Elem& g, unsigned budget) {
  StatesResult out;
  if (budget == 0) {
    out.budget_exhausted = true;
    return out;
  }
  out.states.push_back(g);
  std::deque<Elem> queue{g};
  while (!queue.empty()) {
    Elem e = queue.front();
    queue.pop_front();
    Decomposition dec = decompose(m, e);
    for (const Elem& r : dec.restrictions) {
      bool seen = false;
      for (const Elem& s : out.states)
        if (m.equal(r, s)) {
          seen = true;
          break;
        }
      if (seen) continue;
      if (out.states.size() >= budget) {
        out.budget_exhausted = true;
        return out;
      }
      out.states.push_back(r);
      queue.push_back(r);
    }
  }
  return out;
}

std::vector<StateCount> finite_state_report(const Machine& m, unsigned budget) {
  std::vector<StateCount> out;
  for (const Generator& gen : m.generators()) {
    StatesResult r = states(m, gen.g, budget);
    out.push_back({gen.name, r.states.size(), r.budget_exhausted});
  }
  return out;
}

}  // namespace selfsim
