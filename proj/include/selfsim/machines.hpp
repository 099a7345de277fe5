#pragma once

#include <map>

#include "selfsim/machine.hpp"
#include "selfsim/padic.hpp"

namespace selfsim {

// ---- integer shifts on the binary tree ----

struct AddingElem : ElemBase {
  long long shift;
  explicit AddingElem(long long s) : shift(s) {}
};

class AddingMachine final : public Machine {
 public:
  static Elem element(long long shift);

  unsigned degree() const override { return 2; }
  Elem identity() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool equal(const Elem& a, const Elem& b) const override;
  std::string render(const Elem& a) const override;
  Elem transversal(unsigned i) const override;
  bool in_domain(const Elem& a) const override;
  Elem descend(const Elem& a) const override;
  std::vector<Generator> generators() const override;
  bool parabolic_trivial() const override { return true; }
  std::string describe() const override { return "adding"; }
};

MachinePtr adding_machine();

// ---- 2-adic translations carried digit-by-digit in base eta ----

struct DyadicElem : ElemBase {
  Padic2 value;
  explicit DyadicElem(Padic2 v) : value(std::move(v)) {}
};

class DyadicMachine final : public Machine {
 public:
  explicit DyadicMachine(const Eta& eta) : eta_(eta) {}

  static Elem element(const Padic2& v);
  const Eta& eta() const { return eta_; }

  unsigned degree() const override { return 2; }
  Elem identity() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool equal(const Elem& a, const Elem& b) const override;
  std::string render(const Elem& a) const override;
  Elem transversal(unsigned i) const override;
  bool in_domain(const Elem& a) const override;
  Elem descend(const Elem& a) const override;
  std::vector<Generator> generators() const override;
  bool parabolic_trivial() const override { return true; }
  std::string describe() const override { return "dyadic(" + eta_.render() + ")"; }

 private:
  Eta eta_;
};

MachinePtr dyadic_machine(const Eta& eta);

// ---- free abelian group of countable rank, one summand per digit level ----

// Sparse integer vector; invariant: no zero entries stored.
using Vect = std::map<unsigned, long long>;

Vect vect_normalized(Vect v);
Vect vect_add(const Vect& a, const Vect& b);
Vect vect_neg(const Vect& a);
std::string vect_render(const Vect& v);

struct VectElem : ElemBase {
  Vect v;
  explicit VectElem(Vect w) : v(std::move(w)) {}
};

class ZomegaMachine final : public Machine {
 public:
  explicit ZomegaMachine(const Eta& eta, unsigned max_index = 4);

  static Elem element(Vect v);
  const Vect& vect_of(const Elem& e) const;
  const Eta& eta() const { return eta_; }
  unsigned max_index() const { return max_index_; }

  // The group homomorphism onto 2-adic values that the subgroup map
  // divides by the base: basis vector 0 goes to 1, basis vector n to the
  // n-th orbit value of the digit stream.
  Padic2 embed(const Vect& v) const;

  unsigned degree() const override { return 2; }
  Elem identity() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool equal(const Elem& a, const Elem& b) const override;
  std::string render(const Elem& a) const override;
  Elem transversal(unsigned i) const override;
  bool in_domain(const Elem& a) const override;
  Elem descend(const Elem& a) const override;
  std::vector<Generator> generators() const override;
  bool parabolic_trivial() const override { return !eta_.is_two(); }
  std::string describe() const override { return "zomega(" + eta_.render() + ")"; }

 private:
  Eta eta_;
  unsigned max_index_;
  mutable AlphaStream alphas_;
};

MachinePtr zomega_machine(const Eta& eta, unsigned max_index = 4);

}  // namespace selfsim
