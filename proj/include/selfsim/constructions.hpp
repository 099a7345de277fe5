#pragma once

#include <map>
#include <utility>
#include <vector>

#include "selfsim/machine.hpp"

namespace selfsim {

// ---- direct product ----

struct PairElem : ElemBase {
  Elem left, right;
  PairElem(Elem l, Elem r) : left(std::move(l)), right(std::move(r)) {}
};

class DirectProduct final : public Machine {
 public:
  DirectProduct(MachinePtr left, MachinePtr right);

  static Elem element(Elem l, Elem r);
  const MachinePtr& left() const { return left_; }
  const MachinePtr& right() const { return right_; }

  unsigned degree() const override { return ldeg_ * rdeg_; }
  Elem identity() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool equal(const Elem& a, const Elem& b) const override;
  std::string render(const Elem& a) const override;
  Elem transversal(unsigned i) const override;
  bool in_domain(const Elem& a) const override;
  Elem descend(const Elem& a) const override;
  std::vector<Generator> generators() const override;
  bool parabolic_trivial() const override;
  std::string describe() const override;

 private:
  MachinePtr left_, right_;
  unsigned ldeg_, rdeg_;
};

MachinePtr direct_product(MachinePtr left, MachinePtr right);

// ---- power with a rotating descent ----
//
// d copies of the base over the base's own tree. The subgroup constrains
// only the first coordinate; descending rotates the tuple left and sends
// the absorbed first coordinate through the base map to the back.

struct TupleElem : ElemBase {
  std::vector<Elem> parts;
  explicit TupleElem(std::vector<Elem> p) : parts(std::move(p)) {}
};

class EconomicalPower final : public Machine {
 public:
  EconomicalPower(MachinePtr base, unsigned dimension);

  static Elem element(std::vector<Elem> parts);
  const MachinePtr& base() const { return base_; }
  unsigned dimension() const { return dim_; }

  unsigned degree() const override;
  Elem identity() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool equal(const Elem& a, const Elem& b) const override;
  std::string render(const Elem& a) const override;
  Elem transversal(unsigned i) const override;
  bool in_domain(const Elem& a) const override;
  Elem descend(const Elem& a) const override;
  std::vector<Generator> generators() const override;
  bool parabolic_trivial() const override { return base_->parabolic_trivial(); }
  std::string describe() const override;

 private:
  const TupleElem& get(const Elem& a) const;
  MachinePtr base_;
  unsigned dim_;
};

MachinePtr economical_power(MachinePtr base, unsigned dimension);

// ---- order-two extension ----
//
// A direct sum of base copies indexed by the non-negative integers,
// extended by the involution swapping slots 2n and 2n+1. Descending sends
// slot 0 through the base map and flips the pairing one step over:
// slot 0 stays, odd slots move up by one, even slots come back down.

struct C2Elem : ElemBase {
  std::map<unsigned, Elem> slots;  // no identity entries
  bool flip;
  C2Elem(std::map<unsigned, Elem> s, bool f) : slots(std::move(s)), flip(f) {}
};

class C2Extension final : public Machine {
 public:
  explicit C2Extension(MachinePtr base);

  Elem make(std::map<unsigned, Elem> slots, bool flip) const;
  Elem sigma() const { return make({}, true); }
  const MachinePtr& base() const { return base_; }

  unsigned degree() const override { return 2 * bdeg_; }
  Elem identity() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool equal(const Elem& a, const Elem& b) const override;
  std::string render(const Elem& a) const override;
  Elem transversal(unsigned i) const override;
  bool in_domain(const Elem& a) const override;
  Elem descend(const Elem& a) const override;
  std::vector<Generator> generators() const override;
  bool parabolic_trivial() const override { return false; }
  std::string describe() const override;

 private:
  MachinePtr base_;
  unsigned bdeg_;
};

MachinePtr c2_extension(MachinePtr base);

// ---- lamplighter over a base machine ----
//
// Mod-k lamps indexed by the base group itself, twisted by base
// translation. Lamp positions are keyed by the base's canonical rendering,
// which must therefore be injective. Descending keeps exactly the lamps
// sitting at subgroup positions, relocates them through the base map, and
// discards the rest; two kept lamps may never land on the same spot.

struct LampElem : ElemBase {
  // key: base render of the position; value: the position and its lamp value
  std::map<std::string, std::pair<Elem, int>> lamps;
  Elem base;
  LampElem(std::map<std::string, std::pair<Elem, int>> l, Elem b)
      : lamps(std::move(l)), base(std::move(b)) {}
};

class Lamplighter final : public Machine {
 public:
  Lamplighter(MachinePtr base, unsigned modulus);

  Elem make(const std::vector<std::pair<Elem, int>>& lamps, Elem base) const;
  // single lamp of value 1 at the identity position
  Elem lamp_generator() const;
  const MachinePtr& base() const { return base_; }
  unsigned modulus() const { return k_; }

  unsigned degree() const override { return k_ * bdeg_; }
  Elem identity() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool equal(const Elem& a, const Elem& b) const override;
  std::string render(const Elem& a) const override;
  Elem transversal(unsigned i) const override;
  bool in_domain(const Elem& a) const override;
  Elem descend(const Elem& a) const override;
  std::vector<Generator> generators() const override;
  bool parabolic_trivial() const override { return false; }
  std::string describe() const override;

 private:
  MachinePtr base_;
  unsigned k_;
  unsigned bdeg_;
};

MachinePtr lamplighter(MachinePtr base, unsigned modulus);

}  // namespace selfsim
