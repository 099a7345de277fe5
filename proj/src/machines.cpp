#include "selfsim/machines.hpp"

#include <sstream>

namespace selfsim {

// ---- adding ----

Elem AddingMachine::element(long long shift) {
  return std::make_shared<AddingElem>(shift);
}

Elem AddingMachine::identity() const { return element(0); }

Elem AddingMachine::mul(const Elem& a, const Elem& b) const {
  return element(elem_as<AddingElem>(a).shift + elem_as<AddingElem>(b).shift);
}

Elem AddingMachine::inv(const Elem& a) const {
  return element(-elem_as<AddingElem>(a).shift);
}

bool AddingMachine::equal(const Elem& a, const Elem& b) const {
  return elem_as<AddingElem>(a).shift == elem_as<AddingElem>(b).shift;
}

std::string AddingMachine::render(const Elem& a) const {
  return std::to_string(elem_as<AddingElem>(a).shift);
}

Elem AddingMachine::transversal(unsigned i) const {
  if (i >= 2) throw MalformedMachine("transversal index out of range");
  return element(i);
}

bool AddingMachine::in_domain(const Elem& a) const {
  return elem_as<AddingElem>(a).shift % 2 == 0;
}

Elem AddingMachine::descend(const Elem& a) const {
  long long s = elem_as<AddingElem>(a).shift;
  if (s % 2 != 0) throw OddArgument("halving an odd shift");
  return element(s / 2);
}

std::vector<Generator> AddingMachine::generators() const {
  return {{"a", element(1)}};
}

MachinePtr adding_machine() { return std::make_shared<AddingMachine>(); }

// ---- dyadic ----

Elem DyadicMachine::element(const Padic2& v) {
  return std::make_shared<DyadicElem>(v);
}

Elem DyadicMachine::identity() const { return element(Padic2::from_int(0)); }

Elem DyadicMachine::mul(const Elem& a, const Elem& b) const {
  return element(elem_as<DyadicElem>(a).value + elem_as<DyadicElem>(b).value);
}

Elem DyadicMachine::inv(const Elem& a) const {
  return element(-elem_as<DyadicElem>(a).value);
}

bool DyadicMachine::equal(const Elem& a, const Elem& b) const {
  return elem_as<DyadicElem>(a).value == elem_as<DyadicElem>(b).value;
}

std::string DyadicMachine::render(const Elem& a) const {
  return elem_as<DyadicElem>(a).value.render();
}

Elem DyadicMachine::transversal(unsigned i) const {
  if (i >= 2) throw MalformedMachine("transversal index out of range");
  return element(Padic2::from_int(i));
}

bool DyadicMachine::in_domain(const Elem& a) const {
  return elem_as<DyadicElem>(a).value.parity() == 0;
}

Elem DyadicMachine::descend(const Elem& a) const {
  return element(div_eta(elem_as<DyadicElem>(a).value, eta_));
}

std::vector<Generator> DyadicMachine::generators() const {
  return {{"b", element(Padic2::from_int(1))}};
}

MachinePtr dyadic_machine(const Eta& eta) {
  return std::make_shared<DyadicMachine>(eta);
}

// ---- zomega ----

Vect vect_normalized(Vect v) {
  for (auto it = v.begin(); it != v.end();) {
    if (it->second == 0)
      it = v.erase(it);
    else
      ++it;
  }
  return v;
}

Vect vect_add(const Vect& a, const Vect& b) {
  Vect out = a;
  for (const auto& [i, c] : b) {
    long long s = (out.count(i) ? out[i] : 0) + c;
    if (s == 0)
      out.erase(i);
    else
      out[i] = s;
  }
  return out;
}

Vect vect_neg(const Vect& a) {
  Vect out;
  for (const auto& [i, c] : a) out[i] = -c;
  return out;
}

std::string vect_render(const Vect& v) {
  if (v.empty()) return "0";
  std::ostringstream s;
  bool first = true;
  for (const auto& [i, c] : v) {
    if (!first && c > 0) s << "+";
    first = false;
    s << c << "e" << i;
  }
  return s.str();
}

ZomegaMachine::ZomegaMachine(const Eta& eta, unsigned max_index)
    : eta_(eta), max_index_(max_index), alphas_(eta) {}

Elem ZomegaMachine::element(Vect v) {
  return std::make_shared<VectElem>(vect_normalized(std::move(v)));
}

const Vect& ZomegaMachine::vect_of(const Elem& e) const {
  return elem_as<VectElem>(e).v;
}

Padic2 ZomegaMachine::embed(const Vect& v) const {
  Padic2 acc = Padic2::from_int(0);
  for (const auto& [i, c] : v) {
    Padic2 weight = i == 0 ? Padic2::from_int(1) : alphas_.p(i);
    acc = acc + Padic2::from_int(c) * weight;
  }
  return acc;
}

Elem ZomegaMachine::identity() const { return element({}); }

Elem ZomegaMachine::mul(const Elem& a, const Elem& b) const {
  return element(vect_add(elem_as<VectElem>(a).v, elem_as<VectElem>(b).v));
}

Elem ZomegaMachine::inv(const Elem& a) const {
  return element(vect_neg(elem_as<VectElem>(a).v));
}

bool ZomegaMachine::equal(const Elem& a, const Elem& b) const {
  return elem_as<VectElem>(a).v == elem_as<VectElem>(b).v;
}

std::string ZomegaMachine::render(const Elem& a) const {
  return vect_render(elem_as<VectElem>(a).v);
}

Elem ZomegaMachine::transversal(unsigned i) const {
  if (i >= 2) throw MalformedMachine("transversal index out of range");
  if (i == 0) return identity();
  return element({{0, 1}});
}

bool ZomegaMachine::in_domain(const Elem& a) const {
  const Vect& v = elem_as<VectElem>(a).v;
  auto it = v.find(0);
  return it == v.end() || it->second % 2 == 0;
}

Elem ZomegaMachine::descend(const Elem& a) const {
  const Vect& v = elem_as<VectElem>(a).v;
  auto it0 = v.find(0);
  long long h0 = it0 == v.end() ? 0 : it0->second;
  if (h0 % 2 != 0) throw OddArgument("halving a vector with odd leading entry");
  // Divide the leading entry by two, shift everything one level deeper,
  // and fold the digit stream back into the leading slot so the embedded
  // value is exactly divided by the base.
  long long lead = h0 / 2;
  Vect out;
  if (lead != 0) out[1] = lead;
  for (const auto& [i, c] : v) {
    if (i == 0) continue;
    out[i + 1] = c;
    if (alphas_.alpha(i + 1)) lead += c;
  }
  if (lead != 0) out[0] = lead;
  return element(std::move(out));
}

std::vector<Generator> ZomegaMachine::generators() const {
  std::vector<Generator> out;
  for (unsigned i = 0; i <= max_index_; ++i)
    out.push_back({"e" + std::to_string(i), element({{i, 1}})});
  return out;
}

MachinePtr zomega_machine(const Eta& eta, unsigned max_index) {
  return std::make_shared<ZomegaMachine>(eta, max_index);
}

}  // namespace selfsim
