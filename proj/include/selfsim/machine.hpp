#pragma once

#include <memory>
#include <string>
#include <vector>

#include "selfsim/element.hpp"

namespace selfsim {

struct Generator {
  std::string name;
  Elem g;
};

// A group G with a finite-index subgroup H, a transversal of the right
// cosets of H, and a homomorphism from H back into G. That data is enough
// to unfold every element into a rooted-tree automorphism; the engine does
// the unfolding generically.
//
// Conventions: transversal(i) enumerates coset representatives with
// transversal(0) the identity, so H itself is coset 0. descend() is only
// defined on elements satisfying in_domain(); machines throw OddArgument
// when handed anything else.
class Machine {
 public:
  virtual ~Machine() = default;

  virtual unsigned degree() const = 0;

  virtual Elem identity() const = 0;
  virtual Elem mul(const Elem& a, const Elem& b) const = 0;
  virtual Elem inv(const Elem& a) const = 0;
  virtual bool equal(const Elem& a, const Elem& b) const = 0;
  virtual std::string render(const Elem& a) const = 0;

  virtual Elem transversal(unsigned i) const = 0;
  virtual bool in_domain(const Elem& a) const = 0;
  virtual Elem descend(const Elem& a) const = 0;

  virtual std::vector<Generator> generators() const = 0;

  // Whether the subgroup meets every vertex stabilizer only in elements
  // acting trivially below; constructions that re-spread material along an
  // orbit need this.
  virtual bool parabolic_trivial() const = 0;

  virtual std::string describe() const = 0;
};

using MachinePtr = std::shared_ptr<const Machine>;

}  // namespace selfsim
