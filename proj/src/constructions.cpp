#include "selfsim/constructions.hpp"

#include <sstream>

#include "selfsim/errors.hpp"

namespace selfsim {

// ---- direct product ----

DirectProduct::DirectProduct(MachinePtr left, MachinePtr right)
    : left_(std::move(left)),
      right_(std::move(right)),
      ldeg_(left_->degree()),
      rdeg_(right_->degree()) {}

Elem DirectProduct::element(Elem l, Elem r) {
  return std::make_shared<PairElem>(std::move(l), std::move(r));
}

Elem DirectProduct::identity() const {
  return element(left_->identity(), right_->identity());
}

Elem DirectProduct::mul(const Elem& a, const Elem& b) const {
  const PairElem& x = elem_as<PairElem>(a);
  const PairElem& y = elem_as<PairElem>(b);
  return element(left_->mul(x.left, y.left), right_->mul(x.right, y.right));
}

Elem DirectProduct::inv(const Elem& a) const {
  const PairElem& x = elem_as<PairElem>(a);
  return element(left_->inv(x.left), right_->inv(x.right));
}

bool DirectProduct::equal(const Elem& a, const Elem& b) const {
  const PairElem& x = elem_as<PairElem>(a);
  const PairElem& y = elem_as<PairElem>(b);
  return left_->equal(x.left, y.left) && right_->equal(x.right, y.right);
}

std::string DirectProduct::render(const Elem& a) const {
  const PairElem& x = elem_as<PairElem>(a);
  return "(" + left_->render(x.left) + ", " + right_->render(x.right) + ")";
}

Elem DirectProduct::transversal(unsigned i) const {
  if (i >= degree()) throw MalformedMachine("transversal index out of range");
  return element(left_->transversal(i / rdeg_), right_->transversal(i % rdeg_));
}

bool DirectProduct::in_domain(const Elem& a) const {
  const PairElem& x = elem_as<PairElem>(a);
  return left_->in_domain(x.left) && right_->in_domain(x.right);
}

Elem DirectProduct::descend(const Elem& a) const {
  const PairElem& x = elem_as<PairElem>(a);
  return element(left_->descend(x.left), right_->descend(x.right));
}

std::vector<Generator> DirectProduct::generators() const {
  std::vector<Generator> out;
  for (const Generator& g : left_->generators())
    out.push_back({"l:" + g.name, element(g.g, right_->identity())});
  for (const Generator& g : right_->generators())
    out.push_back({"r:" + g.name, element(left_->identity(), g.g)});
  return out;
}

bool DirectProduct::parabolic_trivial() const {
  return left_->parabolic_trivial() && right_->parabolic_trivial();
}

std::string DirectProduct::describe() const {
  return "product(" + left_->describe() + "," + right_->describe() + ")";
}

MachinePtr direct_product(MachinePtr left, MachinePtr right) {
  return std::make_shared<DirectProduct>(std::move(left), std::move(right));
}

// ---- economical power ----

EconomicalPower::EconomicalPower(MachinePtr base, unsigned dimension)
    : base_(std::move(base)), dim_(dimension) {
  if (dim_ == 0) throw InvalidInput("power needs at least one coordinate");
}

Elem EconomicalPower::element(std::vector<Elem> parts) {
  return std::make_shared<TupleElem>(std::move(parts));
}

const TupleElem& EconomicalPower::get(const Elem& a) const {
  const TupleElem& t = elem_as<TupleElem>(a);
  if (t.parts.size() != dim_)
    throw MalformedMachine("tuple width does not match this machine");
  return t;
}

unsigned EconomicalPower::degree() const { return base_->degree(); }

Elem EconomicalPower::identity() const {
  return element(std::vector<Elem>(dim_, base_->identity()));
}

Elem EconomicalPower::mul(const Elem& a, const Elem& b) const {
  const TupleElem& x = get(a);
  const TupleElem& y = get(b);
  std::vector<Elem> parts;
  parts.reserve(dim_);
  for (unsigned i = 0; i < dim_; ++i) parts.push_back(base_->mul(x.parts[i], y.parts[i]));
  return element(std::move(parts));
}

Elem EconomicalPower::inv(const Elem& a) const {
  const TupleElem& x = get(a);
  std::vector<Elem> parts;
  parts.reserve(dim_);
  for (const Elem& p : x.parts) parts.push_back(base_->inv(p));
  return element(std::move(parts));
}

bool EconomicalPower::equal(const Elem& a, const Elem& b) const {
  const TupleElem& x = get(a);
  const TupleElem& y = get(b);
  for (unsigned i = 0; i < dim_; ++i)
    if (!base_->equal(x.parts[i], y.parts[i])) return false;
  return true;
}

std::string EconomicalPower::render(const Elem& a) const {
  const TupleElem& x = get(a);
  std::string s = "(";
  for (unsigned i = 0; i < dim_; ++i) {
    if (i) s += ", ";
    s += base_->render(x.parts[i]);
  }
  return s + ")";
}

Elem EconomicalPower::transversal(unsigned i) const {
  if (i >= degree()) throw MalformedMachine("transversal index out of range");
  std::vector<Elem> parts(dim_, base_->identity());
  parts[0] = base_->transversal(i);
  return element(std::move(parts));
}

bool EconomicalPower::in_domain(const Elem& a) const {
  return base_->in_domain(get(a).parts[0]);
}

Elem EconomicalPower::descend(const Elem& a) const {
  const TupleElem& x = get(a);
  std::vector<Elem> parts;
  parts.reserve(dim_);
  for (unsigned i = 1; i < dim_; ++i) parts.push_back(x.parts[i]);
  parts.push_back(base_->descend(x.parts[0]));
  return element(std::move(parts));
}

std::vector<Generator> EconomicalPower::generators() const {
  std::vector<Generator> out;
  for (const Generator& g : base_->generators()) {
    for (unsigned i = 0; i < dim_; ++i) {
      std::vector<Elem> parts(dim_, base_->identity());
      parts[i] = g.g;
      out.push_back({g.name + "@" + std::to_string(i), element(std::move(parts))});
    }
  }
  return out;
}

std::string EconomicalPower::describe() const {
  return "economical(" + base_->describe() + "," + std::to_string(dim_) + ")";
}

MachinePtr economical_power(MachinePtr base, unsigned dimension) {
  return std::make_shared<EconomicalPower>(std::move(base), dimension);
}

// ---- order-two extension ----

namespace {

// the involution pairing slot 2n with 2n+1
inline unsigned flip_slot(unsigned i) { return i ^ 1u; }

}  // namespace

C2Extension::C2Extension(MachinePtr base)
    : base_(std::move(base)), bdeg_(base_->degree()) {}

Elem C2Extension::make(std::map<unsigned, Elem> slots, bool flip) const {
  for (auto it = slots.begin(); it != slots.end();) {
    if (base_->equal(it->second, base_->identity()))
      it = slots.erase(it);
    else
      ++it;
  }
  return std::make_shared<C2Elem>(std::move(slots), flip);
}

Elem C2Extension::identity() const { return make({}, false); }

Elem C2Extension::mul(const Elem& a, const Elem& b) const {
  const C2Elem& x = elem_as<C2Elem>(a);
  const C2Elem& y = elem_as<C2Elem>(b);
  std::map<unsigned, Elem> slots = x.slots;
  for (const auto& [i, g] : y.slots) {
    unsigned target = x.flip ? flip_slot(i) : i;
    auto it = slots.find(target);
    if (it == slots.end())
      slots.emplace(target, g);
    else
      it->second = base_->mul(it->second, g);
  }
  return make(std::move(slots), x.flip != y.flip);
}

Elem C2Extension::inv(const Elem& a) const {
  const C2Elem& x = elem_as<C2Elem>(a);
  std::map<unsigned, Elem> slots;
  for (const auto& [i, g] : x.slots)
    slots.emplace(x.flip ? flip_slot(i) : i, base_->inv(g));
  return make(std::move(slots), x.flip);
}

bool C2Extension::equal(const Elem& a, const Elem& b) const {
  const C2Elem& x = elem_as<C2Elem>(a);
  const C2Elem& y = elem_as<C2Elem>(b);
  if (x.flip != y.flip || x.slots.size() != y.slots.size()) return false;
  auto it = x.slots.begin();
  auto jt = y.slots.begin();
  for (; it != x.slots.end(); ++it, ++jt)
    if (it->first != jt->first || !base_->equal(it->second, jt->second)) return false;
  return true;
}

std::string C2Extension::render(const Elem& a) const {
  const C2Elem& x = elem_as<C2Elem>(a);
  std::ostringstream s;
  s << "[";
  bool first = true;
  for (const auto& [i, g] : x.slots) {
    if (!first) s << ",";
    first = false;
    s << i << ":" << base_->render(g);
  }
  s << "]";
  if (x.flip) s << "s";
  return s.str();
}

Elem C2Extension::transversal(unsigned idx) const {
  if (idx >= degree()) throw MalformedMachine("transversal index out of range");
  std::map<unsigned, Elem> slots;
  slots.emplace(0, base_->transversal(idx / 2));
  return make(std::move(slots), idx % 2 != 0);
}

bool C2Extension::in_domain(const Elem& a) const {
  const C2Elem& x = elem_as<C2Elem>(a);
  if (x.flip) return false;
  auto it = x.slots.find(0);
  return it == x.slots.end() || base_->in_domain(it->second);
}

Elem C2Extension::descend(const Elem& a) const {
  const C2Elem& x = elem_as<C2Elem>(a);
  if (x.flip) throw OddArgument("descending a flipped element");
  std::map<unsigned, Elem> slots;
  for (const auto& [i, g] : x.slots) {
    if (i == 0)
      slots.emplace(0, base_->descend(g));
    else if (i % 2 == 1)
      slots.emplace(i + 1, g);
    else
      slots.emplace(i - 1, g);
  }
  return make(std::move(slots), false);
}

std::vector<Generator> C2Extension::generators() const {
  std::vector<Generator> out;
  out.push_back({"s", sigma()});
  for (const Generator& g : base_->generators()) {
    std::map<unsigned, Elem> slots;
    slots.emplace(0, g.g);
    out.push_back({g.name + "@0", make(std::move(slots), false)});
  }
  return out;
}

std::string C2Extension::describe() const { return "c2(" + base_->describe() + ")"; }

MachinePtr c2_extension(MachinePtr base) {
  return std::make_shared<C2Extension>(std::move(base));
}

// ---- lamplighter ----

Lamplighter::Lamplighter(MachinePtr base, unsigned modulus)
    : base_(std::move(base)), k_(modulus), bdeg_(base_->degree()) {
  if (k_ < 2) throw InvalidInput("lamp values need a modulus of at least 2");
  if (bdeg_ < 2) throw InvalidInput("lamplighter needs a branching base");
  if (!base_->parabolic_trivial())
    throw ParabolicRequired("lamplighter base must act with trivial parabolics");
}

Elem Lamplighter::make(const std::vector<std::pair<Elem, int>>& lamps, Elem base) const {
  std::map<std::string, std::pair<Elem, long long>> acc;
  for (const auto& [pos, val] : lamps) {
    std::string key = base_->render(pos);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(std::move(key), std::make_pair(pos, static_cast<long long>(val)));
    else
      it->second.second += val;
  }
  std::map<std::string, std::pair<Elem, int>> out;
  long long k = k_;
  for (auto& [key, pv] : acc) {
    int v = static_cast<int>(((pv.second % k) + k) % k);
    if (v != 0) out.emplace(key, std::make_pair(pv.first, v));
  }
  return std::make_shared<LampElem>(std::move(out), std::move(base));
}

Elem Lamplighter::lamp_generator() const {
  return make({{base_->identity(), 1}}, base_->identity());
}

Elem Lamplighter::identity() const { return make({}, base_->identity()); }

Elem Lamplighter::mul(const Elem& a, const Elem& b) const {
  const LampElem& x = elem_as<LampElem>(a);
  const LampElem& y = elem_as<LampElem>(b);
  std::vector<std::pair<Elem, int>> lamps;
  for (const auto& [key, pv] : x.lamps) lamps.push_back(pv);
  // right factor's lamps get carried backwards along the left translation
  Elem shift = base_->inv(x.base);
  for (const auto& [key, pv] : y.lamps)
    lamps.push_back({base_->mul(pv.first, shift), pv.second});
  return make(lamps, base_->mul(x.base, y.base));
}

Elem Lamplighter::inv(const Elem& a) const {
  const LampElem& x = elem_as<LampElem>(a);
  std::vector<std::pair<Elem, int>> lamps;
  for (const auto& [key, pv] : x.lamps)
    lamps.push_back({base_->mul(pv.first, x.base), -pv.second});
  return make(lamps, base_->inv(x.base));
}

bool Lamplighter::equal(const Elem& a, const Elem& b) const {
  const LampElem& x = elem_as<LampElem>(a);
  const LampElem& y = elem_as<LampElem>(b);
  if (!base_->equal(x.base, y.base) || x.lamps.size() != y.lamps.size()) return false;
  auto it = x.lamps.begin();
  auto jt = y.lamps.begin();
  for (; it != x.lamps.end(); ++it, ++jt)
    if (it->first != jt->first || it->second.second != jt->second.second) return false;
  return true;
}

std::string Lamplighter::render(const Elem& a) const {
  const LampElem& x = elem_as<LampElem>(a);
  std::ostringstream s;
  s << "{";
  bool first = true;
  for (const auto& [key, pv] : x.lamps) {
    if (!first) s << ",";
    first = false;
    s << key << ":" << pv.second;
  }
  s << "}|" << base_->render(x.base);
  return s.str();
}

Elem Lamplighter::transversal(unsigned idx) const {
  if (idx >= degree()) throw MalformedMachine("transversal index out of range");
  unsigned a = idx / bdeg_;
  unsigned i = idx % bdeg_;
  std::vector<std::pair<Elem, int>> lamps;
  // coset lamps sit at a non-subgroup position so that descending a
  // subgroup element never mixes them into the kept material
  if (a != 0) lamps.push_back({base_->transversal(1), static_cast<int>(a)});
  return make(lamps, base_->transversal(i));
}

bool Lamplighter::in_domain(const Elem& a) const {
  const LampElem& x = elem_as<LampElem>(a);
  if (!base_->in_domain(x.base)) return false;
  long long sum = 0;
  for (const auto& [key, pv] : x.lamps) sum += pv.second;
  return sum % k_ == 0;
}

Elem Lamplighter::descend(const Elem& a) const {
  const LampElem& x = elem_as<LampElem>(a);
  std::map<std::string, std::pair<Elem, int>> kept;
  for (const auto& [key, pv] : x.lamps) {
    if (!base_->in_domain(pv.first)) continue;
    Elem moved = base_->descend(pv.first);
    std::string nkey = base_->render(moved);
    if (kept.count(nkey))
      throw FiberViolation("two lamps landed on the same position");
    kept.emplace(std::move(nkey), std::make_pair(moved, pv.second));
  }
  return std::make_shared<LampElem>(std::move(kept), base_->descend(x.base));
}

std::vector<Generator> Lamplighter::generators() const {
  std::vector<Generator> out;
  out.push_back({"lamp", lamp_generator()});
  for (const Generator& g : base_->generators())
    out.push_back({g.name, make({}, g.g)});
  return out;
}

std::string Lamplighter::describe() const {
  return "lamplighter(" + base_->describe() + "," + std::to_string(k_) + ")";
}

MachinePtr lamplighter(MachinePtr base, unsigned modulus) {
  return std::make_shared<Lamplighter>(std::move(base), modulus);
}

}  // namespace selfsim
