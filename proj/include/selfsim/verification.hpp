#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "selfsim/engine.hpp"

namespace selfsim {

// Dense integer matrix, row-vector convention: composing maps left to
// right multiplies matrices left to right. Entries stay far below
// overflow at the small dimensions and coefficient bounds used here.
class IntMatrix {
 public:
  IntMatrix(unsigned rows, unsigned cols);
  static IntMatrix identity(unsigned n);

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  long long& at(unsigned r, unsigned c) { return a_[r * cols_ + c]; }
  long long at(unsigned r, unsigned c) const { return a_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix scaled(long long s) const;
  IntMatrix pow(unsigned e) const;
  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

 private:
  unsigned rows_, cols_;
  std::vector<long long> a_;
};

// Polynomial c[0] + c[1] t + ... with integer coefficients.
struct IntPoly {
  std::vector<long long> c;
  unsigned degree() const { return c.empty() ? 0 : static_cast<unsigned>(c.size() - 1); }
  IntMatrix eval(const IntMatrix& m) const;
};

// Companion matrix of a monic polynomial: basis vector i maps to i+1, the
// last one folds back through the coefficients, so the polynomial
// annihilates it.
IntMatrix companion(const IntPoly& monic);

// [[f0, 0], [g, f1]]; g must have f1's rows and f0's columns.
IntMatrix block_lower(const IntMatrix& f0, const IntMatrix& g, const IntMatrix& f1);

// Off-diagonal block of the i-th power of the block matrix.
IntMatrix d_power(const IntMatrix& f0, const IntMatrix& g, const IntMatrix& f1, unsigned i);

// Off-diagonal block of chi evaluated at the block matrix.
IntMatrix d_poly(const IntPoly& chi, const IntMatrix& f0, const IntMatrix& g,
                 const IntMatrix& f1);

// With f the block matrix, checks
//   chi(f) * f^n  ==  [[0, 0], [f1^n * dchi, f1^n * chi(f1)]],
// which holds for every n exactly when chi annihilates f0.
bool block_chi_identity(const IntPoly& chi, const IntMatrix& f0, const IntMatrix& g,
                        const IntMatrix& f1, unsigned n);

// The identity with f0 taken to be the companion matrix of monic chi, so
// the annihilation hypothesis holds by construction.
bool block_chi_check(const IntPoly& chi, const IntMatrix& g, const IntMatrix& f1,
                     unsigned n);

// The one-step form of the same fact: f1 * dchi == chi(f1) * g + dchi * f0.
bool chi_derivation_identity(const IntPoly& chi, const IntMatrix& f0, const IntMatrix& g,
                             const IntMatrix& f1);

// ---- probes on machines ----

struct CorefreeEntry {
  std::string word;     // generator word that produced the element
  std::string element;  // its rendering
};

// Products of generators and inverses up to the given length, deduplicated;
// reports every non-identity element acting trivially down to the depth.
// An empty report is the healthy outcome.
std::vector<CorefreeEntry> corefree_probe(const Machine& m, unsigned max_len,
                                          unsigned depth);

struct TransitivityReport {
  bool transitive = false;
  std::size_t orbit = 0;
  std::size_t full = 0;
};

// Orbit of the leftmost depth-n vertex under generators and inverses.
TransitivityReport level_transitive(const Machine& m, unsigned depth);

// Non-identity short products fixing the leftmost depth-n vertex.
std::vector<CorefreeEntry> parabolic_probe(const Machine& m, unsigned max_len,
                                           unsigned depth);

}  // namespace selfsim
