#include "selfsim/verification.hpp"

#include <deque>
#include <set>

#include "selfsim/errors.hpp"

namespace selfsim {

IntMatrix::IntMatrix(unsigned rows, unsigned cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

IntMatrix IntMatrix::identity(unsigned n) {
  IntMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeMismatch("matrix product dimensions disagree");
  IntMatrix out(rows_, o.cols_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned k = 0; k < cols_; ++k) {
      long long v = at(i, k);
      if (v == 0) continue;
      for (unsigned j = 0; j < o.cols_; ++j) out.at(i, j) += v * o.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum dimensions disagree");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch("matrix difference dimensions disagree");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

IntMatrix IntMatrix::scaled(long long s) const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
  return out;
}

IntMatrix IntMatrix::pow(unsigned e) const {
  if (rows_ != cols_) throw ShapeMismatch("powers need a square matrix");
  IntMatrix acc = identity(rows_);
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool IntMatrix::is_zero() const {
  for (long long v : a_)
    if (v != 0) return false;
  return true;
}

IntMatrix IntPoly::eval(const IntMatrix& m) const {
  if (m.rows() != m.cols()) throw ShapeMismatch("polynomial evaluation needs a square matrix");
  IntMatrix acc(m.rows(), m.cols());
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * m + IntMatrix::identity(m.rows()).scaled(c[i]);
  }
  return acc;
}

IntMatrix companion(const IntPoly& monic) {
  if (monic.c.size() < 2 || monic.c.back() != 1)
    throw InvalidInput("companion form needs a monic polynomial of positive degree");
  unsigned n = monic.degree();
  IntMatrix m(n, n);
  for (unsigned i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
  for (unsigned j = 0; j < n; ++j) m.at(n - 1, j) = -monic.c[j];
  return m;
}

IntMatrix block_lower(const IntMatrix& f0, const IntMatrix& g, const IntMatrix& f1) {
  if (f0.rows() != f0.cols() || f1.rows() != f1.cols())
    throw ShapeMismatch("diagonal blocks must be square");
  if (g.rows() != f1.rows() || g.cols() != f0.rows())
    throw ShapeMismatch("coupling block has the wrong shape");
  unsigned n0 = f0.rows(), n1 = f1.rows();
  IntMatrix out(n0 + n1, n0 + n1);
  for (unsigned i = 0; i < n0; ++i)
    for (unsigned j = 0; j < n0; ++j) out.at(i, j) = f0.at(i, j);
  for (unsigned i = 0; i < n1; ++i) {
    for (unsigned j = 0; j < n0; ++j) out.at(n0 + i, j) = g.at(i, j);
    for (unsigned j = 0; j < n1; ++j) out.at(n0 + i, n0 + j) = f1.at(i, j);
  }
  return out;
}

IntMatrix d_power(const IntMatrix& f0, const IntMatrix& g, const IntMatrix& f1, unsigned i) {
  IntMatrix acc(g.rows(), g.cols());
  for (unsigned j = 0; j < i; ++j) acc = acc + f1.pow(j) * g * f0.pow(i - 1 - j);
  return acc;
}

IntMatrix d_poly(const IntPoly& chi, const IntMatrix& f0, const IntMatrix& g,
                 const IntMatrix& f1) {
  IntMatrix acc(g.rows(), g.cols());
  for (std::size_t i = 1; i < chi.c.size(); ++i)
    acc = acc + d_power(f0, g, f1, static_cast<unsigned>(i)).scaled(chi.c[i]);
  return acc;
}

bool block_chi_identity(const IntPoly& chi, const IntMatrix& f0, const IntMatrix& g,
                        const IntMatrix& f1, unsigned n) {
  IntMatrix f = block_lower(f0, g, f1);
  IntMatrix lhs = chi.eval(f) * f.pow(n);
  IntMatrix dchi = d_poly(chi, f0, g, f1);
  IntMatrix rhs = block_lower(IntMatrix(f0.rows(), f0.cols()), f1.pow(n) * dchi,
                              f1.pow(n) * chi.eval(f1));
  return lhs == rhs;
}

bool block_chi_check(const IntPoly& chi, const IntMatrix& g, const IntMatrix& f1,
                     unsigned n) {
  return block_chi_identity(chi, companion(chi), g, f1, n);
}

bool chi_derivation_identity(const IntPoly& chi, const IntMatrix& f0, const IntMatrix& g,
                             const IntMatrix& f1) {
  IntMatrix dchi = d_poly(chi, f0, g, f1);
  return f1 * dchi == chi.eval(f1) * g + dchi * f0;
}

namespace {

struct Candidate {
  std::string word;
  Elem e;
};

// Distinct elements reachable as products of at most max_len symbols,
// where the symbols are the generators and their inverses.
std::vector<Candidate> short_products(const Machine& m, unsigned max_len) {
  std::vector<std::pair<std::string, Elem>> symbols;
  for (const Generator& g : m.generators()) {
    symbols.push_back({g.name, g.g});
    symbols.push_back({g.name + "'", m.inv(g.g)});
  }
  std::vector<Candidate> found{{"", m.identity()}};
  std::size_t layer_begin = 0;
  for (unsigned len = 1; len <= max_len; ++len) {
    std::size_t layer_end = found.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& [name, s] : symbols) {
        Elem next = m.mul(found[i].e, s);
        bool seen = false;
        for (const Candidate& c : found)
          if (m.equal(c.e, next)) {
            seen = true;
            break;
          }
        if (!seen)
          found.push_back({found[i].word.empty() ? name : found[i].word + "." + name, next});
      }
    }
    layer_begin = layer_end;
  }
  return found;
}

}  // namespace

std::vector<CorefreeEntry> corefree_probe(const Machine& m, unsigned max_len,
                                          unsigned depth) {
  std::vector<CorefreeEntry> out;
  for (const Candidate& c : short_products(m, max_len)) {
    if (c.word.empty()) continue;  // identity
    if (trivial_to_depth(m, c.e, depth)) out.push_back({c.word, m.render(c.e)});
  }
  return out;
}

TransitivityReport level_transitive(const Machine& m, unsigned depth) {
  TransitivityReport rep;
  rep.full = 1;
  for (unsigned i = 0; i < depth; ++i) rep.full *= m.degree();

  std::vector<Elem> symbols;
  for (const Generator& g : m.generators()) {
    symbols.push_back(g.g);
    symbols.push_back(m.inv(g.g));
  }
  std::set<Word> orbit;
  std::deque<Word> queue;
  Word start(depth, 0);
  orbit.insert(start);
  queue.push_back(start);
  while (!queue.empty() && orbit.size() < rep.full) {
    Word w = queue.front();
    queue.pop_front();
    for (const Elem& s : symbols) {
      Word img = act_word(m, s, w);
      if (orbit.insert(img).second) queue.push_back(img);
    }
  }
  rep.orbit = orbit.size();
  rep.transitive = rep.orbit == rep.full;
  return rep;
}

std::vector<CorefreeEntry> parabolic_probe(const Machine& m, unsigned max_len,
                                           unsigned depth) {
  std::vector<CorefreeEntry> out;
  Word start(depth, 0);
  for (const Candidate& c : short_products(m, max_len)) {
    if (c.word.empty()) continue;
    if (act_word(m, c.e, start) == start) out.push_back({c.word, m.render(c.e)});
  }
  return out;
}

}  // namespace selfsim
