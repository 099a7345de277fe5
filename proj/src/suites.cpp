#include "selfsim/suites.hpp"

#include <sstream>

#include "selfsim/engine.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/machines.hpp"
#include "selfsim/verification.hpp"

namespace selfsim {

Elem random_element(const Machine& m, Rng& rng, unsigned max_syms) {
  std::vector<Elem> symbols;
  for (const Generator& g : m.generators()) {
    symbols.push_back(g.g);
    symbols.push_back(m.inv(g.g));
  }
  Elem acc = m.identity();
  if (symbols.empty()) return acc;
  unsigned len = static_cast<unsigned>(rng.below(max_syms + 1));
  for (unsigned i = 0; i < len; ++i)
    acc = m.mul(acc, symbols[rng.below(symbols.size())]);
  return acc;
}

Elem random_subgroup_element(const Machine& m, Rng& rng, unsigned max_syms) {
  for (int tries = 0; tries < 256; ++tries) {
    Elem e = random_element(m, rng, max_syms);
    if (m.in_domain(e)) return e;
  }
  throw Error("could not sample a subgroup element; is the subgroup reachable?");
}

namespace {

Word random_word(Rng& rng, unsigned degree, unsigned len) {
  Word w;
  w.reserve(len);
  for (unsigned i = 0; i < len; ++i) w.push_back(static_cast<unsigned>(rng.below(degree)));
  return w;
}

BigRat random_odd_denominator_rational(Rng& rng) {
  long long num = rng.range(-1000000, 1000000);
  long long den = 2 * rng.range(0, 500000) + 1;
  return BigRat(num, den);
}

std::string stats(unsigned trials, unsigned depth) {
  std::ostringstream s;
  s << "trials=" << trials << " depth=" << depth;
  return s.str();
}

// The boundary point a word names: exact for exact bases, windowed at the
// base's precision otherwise.
Padic2 word_value(const Word& w, const Eta& eta) {
  std::vector<int> digits(w.begin(), w.end());
  if (eta.kind() != Eta::Kind::Stream)
    return Padic2::exact(eta_value(digits, eta));
  unsigned bits = eta.precision();
  return Padic2::windowed(eta_value_residue(digits, eta, bits), bits);
}

}  // namespace

SuiteResult suite_digits_roundtrip(const Eta& eta, unsigned trials, unsigned depth,
                                   std::uint64_t seed) {
  SuiteResult res{"digits-roundtrip", true, stats(trials, depth)};
  for (unsigned t = 0; t < trials && res.passed; ++t) {
    Rng rng(seed + t);
    BigRat a = random_odd_denominator_rational(rng);
    std::vector<int> w = eta_digits(Padic2::exact(a), eta, depth);
    if (eta.kind() != Eta::Kind::Stream) {
      BigRat diff = a - eta_value(w, eta);
      if (diff != 0) {
        BigInt num = numerator(diff);
        BigInt an = abs(num);
        res.passed = lsb(an) >= depth;
      }
    } else {
      BigInt back = eta_value_residue(w, eta, depth);
      res.passed = mod2n(Padic2::exact(a).residue_mod(depth) - back, depth) == 0;
    }
  }
  return res;
}

SuiteResult suite_action_axioms(const Machine& m, unsigned trials, unsigned depth,
                                std::uint64_t seed) {
  SuiteResult res{"action-axioms", true, stats(trials, depth)};
  for (unsigned t = 0; t < trials && res.passed; ++t) {
    Rng rng(seed + t);
    Elem a = random_element(m, rng);
    Elem b = random_element(m, rng);
    Word w = random_word(rng, m.degree(), depth);

    bool ok = act_word(m, m.identity(), w) == w;

    Word ab = act_word(m, m.mul(a, b), w);
    ok = ok && ab == act_word(m, b, act_word(m, a, w));

    if (depth > 0) {
      Decomposition dec = decompose(m, a);
      Word img = act_word(m, a, w);
      Word tail(w.begin() + 1, w.end());
      Word img_tail(img.begin() + 1, img.end());
      ok = ok && img[0] == dec.perm[w[0]];
      ok = ok && img_tail == act_word(m, dec.restrictions[w[0]], tail);

      unsigned cut = static_cast<unsigned>(rng.below(depth + 1));
      Word prefix(w.begin(), w.begin() + cut);
      Word img_prefix(img.begin(), img.begin() + cut);
      ok = ok && act_word(m, a, prefix) == img_prefix;
    }
    res.passed = ok;
  }
  return res;
}

SuiteResult suite_corefree(const Machine& m, unsigned max_len, unsigned depth) {
  std::vector<CorefreeEntry> found = corefree_probe(m, max_len, depth);
  SuiteResult res{"corefree", found.empty(), ""};
  std::ostringstream s;
  s << "max_len=" << max_len << " depth=" << depth << " hidden=" << found.size();
  if (!found.empty()) s << " first=" << found[0].word;
  res.detail = s.str();
  return res;
}

SuiteResult suite_transitivity(const Machine& m, unsigned depth) {
  TransitivityReport rep = level_transitive(m, depth);
  SuiteResult res{"transitivity", rep.transitive, ""};
  std::ostringstream s;
  s << "depth=" << depth << " orbit=" << rep.orbit << "/" << rep.full;
  res.detail = s.str();
  return res;
}

SuiteResult suite_intertwining(const Eta& eta, unsigned trials, std::uint64_t seed) {
  MachinePtr m = zomega_machine(eta);
  const auto& zm = dynamic_cast<const ZomegaMachine&>(*m);
  SuiteResult res{"intertwining", true, "trials=" + std::to_string(trials)};
  for (unsigned t = 0; t < trials && res.passed; ++t) {
    Rng rng(seed + t);
    Elem h = random_subgroup_element(*m, rng, 8);
    Padic2 lhs = zm.embed(zm.vect_of(m->descend(h)));
    Padic2 rhs = div_eta(zm.embed(zm.vect_of(h)), eta);
    if (eta.kind() == Eta::Kind::Stream) {
      res.passed = std::min(lhs.precision(), rhs.precision()) >= 96 && lhs == rhs;
    } else {
      res.passed = lhs.rational() == rhs.rational();
    }
  }
  return res;
}

SuiteResult suite_boundary(const Eta& eta, unsigned trials, unsigned depth,
                           std::uint64_t seed) {
  MachinePtr m = zomega_machine(eta);
  const auto& zm = dynamic_cast<const ZomegaMachine&>(*m);
  SuiteResult res{"boundary", true, stats(trials, depth)};
  for (unsigned t = 0; t < trials && res.passed; ++t) {
    Rng rng(seed + t);
    Elem g = random_element(*m, rng);
    Word w = random_word(rng, 2, depth);
    Word img = act_word(*m, g, w);
    Padic2 shifted = word_value(w, eta) + zm.embed(zm.vect_of(g));
    std::vector<int> want = eta_digits(shifted, eta, depth);
    res.passed = img == Word(want.begin(), want.end());
  }
  return res;
}

SuiteResult suite_block_chi(unsigned trials, std::uint64_t seed) {
  SuiteResult res{"block-chi", true, ""};
  std::ostringstream s;
  s << "trials=" << trials << " max_deg=4 max_dim=4";
  res.detail = s.str();
  for (unsigned t = 0; t < trials && res.passed; ++t) {
    Rng rng(seed + t);
    unsigned deg = 1 + static_cast<unsigned>(rng.below(4));
    IntPoly chi;
    for (unsigned i = 0; i < deg; ++i) chi.c.push_back(rng.range(-3, 3));
    chi.c.push_back(1);
    unsigned n1 = 1 + static_cast<unsigned>(rng.below(4));
    IntMatrix f1(n1, n1), g(n1, deg);
    for (unsigned i = 0; i < n1; ++i)
      for (unsigned j = 0; j < n1; ++j) f1.at(i, j) = rng.range(-3, 3);
    for (unsigned i = 0; i < n1; ++i)
      for (unsigned j = 0; j < deg; ++j) g.at(i, j) = rng.range(-3, 3);
    unsigned n = static_cast<unsigned>(rng.below(4));
    res.passed = block_chi_check(chi, g, f1, n) &&
                 chi_derivation_identity(chi, companion(chi), g, f1);
  }
  return res;
}

SuiteResult suite_abelian_portraits(const Machine& m, unsigned trials, unsigned depth,
                                    std::uint64_t seed) {
  SuiteResult res{"abelian-portraits", true, stats(trials, depth)};
  for (unsigned t = 0; t < trials && res.passed; ++t) {
    Rng rng(seed + t);
    Elem g = random_element(m, rng);
    Elem h = random_element(m, rng);
    Elem gh = m.mul(g, h);

    // one level of the wreath recursion: permutations compose, restrictions
    // multiply across the permuted slot
    Decomposition dg = decompose(m, g);
    Decomposition dh = decompose(m, h);
    Decomposition dgh = decompose(m, gh);
    bool ok = true;
    for (unsigned x = 0; x < m.degree() && ok; ++x) {
      ok = dgh.perm[x] == dh.perm[dg.perm[x]] &&
           m.equal(dgh.restrictions[x],
                   m.mul(dg.restrictions[x], dh.restrictions[dg.perm[x]]));
    }

    // commuting pairs share portraits
    Elem hg = m.mul(h, g);
    if (ok && m.equal(gh, hg)) ok = portrait(m, gh, depth) == portrait(m, hg, depth);
    res.passed = ok;
  }
  return res;
}

}  // namespace selfsim
