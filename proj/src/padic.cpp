#include "selfsim/padic.hpp"

#include <algorithm>
#include <sstream>

namespace selfsim {

BigInt mod2n(BigInt v, unsigned bits) {
  BigInt m = BigInt(1) << bits;
  v %= m;
  if (v < 0) v += m;
  return v;
}

BigInt inv_odd(const BigInt& u, unsigned bits) {
  // Newton lifting doubles the valid width each round.
  BigInt x = 1;
  unsigned have = 1;
  while (have < bits) {
    have = std::min(bits, have * 2);
    BigInt m = BigInt(1) << have;
    x = x * (2 - u * x) % m;
    if (x < 0) x += m;
  }
  return mod2n(x, bits);
}

namespace {

// Residue of p/q mod 2^bits, q odd.
BigInt rat_residue(const BigRat& v, unsigned bits) {
  BigInt num = numerator(v);
  BigInt den = denominator(v);
  return mod2n(mod2n(num, bits) * inv_odd(mod2n(den, bits), bits), bits);
}

unsigned v2_exact(const BigInt& n) {
  BigInt a = abs(n);
  return lsb(a);
}

}  // namespace

Padic2 Padic2::exact(const BigRat& v) {
  BigInt den = denominator(v);
  if (den % 2 == 0) throw InvalidInput("2-adic integer needs an odd denominator");
  Padic2 r;
  r.value_ = v;
  r.prec_ = kExact;
  return r;
}

Padic2 Padic2::from_int(long long v) { return exact(BigRat(v)); }

Padic2 Padic2::windowed(const BigInt& residue, unsigned precision) {
  if (precision == kExact) throw InvalidInput("window width out of range");
  Padic2 r;
  r.residue_ = mod2n(residue, precision);
  r.prec_ = precision;
  return r;
}

const BigRat& Padic2::rational() const {
  if (!is_exact()) throw PrecisionExhausted("windowed value has no exact form");
  return value_;
}

BigInt Padic2::residue_mod(unsigned bits) const {
  if (is_exact()) return rat_residue(value_, bits);
  if (bits > prec_) throw PrecisionExhausted("window narrower than requested residue");
  return mod2n(residue_, bits);
}

int Padic2::parity() const {
  if (is_exact()) {
    BigInt num = numerator(value_);
    return num % 2 != 0 ? 1 : 0;
  }
  if (prec_ < 1) throw PrecisionExhausted("no bits left for parity");
  return static_cast<int>(residue_ & 1);
}

bool Padic2::v2_at_least(unsigned n) const {
  if (n == 0) return true;
  if (is_exact()) {
    if (value_ == 0) return true;
    BigInt num = numerator(value_);
    return v2_exact(num) >= n;
  }
  if (residue_ != 0) return lsb(residue_) >= n;
  if (n <= prec_) return true;
  throw PrecisionExhausted("all known bits zero, valuation undecidable");
}

Padic2 Padic2::to_window(unsigned bits) const {
  return windowed(residue_mod(bits), bits);
}

namespace {

template <typename Op>
Padic2 combine(const Padic2& a, const Padic2& b, Op op) {
  if (a.is_exact() && b.is_exact()) {
    BigRat r = op(a.rational(), b.rational());
    return Padic2::exact(r);
  }
  unsigned p = std::min(a.precision(), b.precision());
  BigInt r = op(a.residue_mod(p), b.residue_mod(p));
  return Padic2::windowed(mod2n(r, p), p);
}

}  // namespace

Padic2 Padic2::operator+(const Padic2& o) const {
  return combine(*this, o, [](const auto& x, const auto& y) { return x + y; });
}

Padic2 Padic2::operator-(const Padic2& o) const {
  return combine(*this, o, [](const auto& x, const auto& y) { return x - y; });
}

Padic2 Padic2::operator*(const Padic2& o) const {
  return combine(*this, o, [](const auto& x, const auto& y) { return x * y; });
}

Padic2 Padic2::operator-() const {
  if (is_exact()) {
    BigRat r = -value_;
    return exact(r);
  }
  return windowed(mod2n(-residue_, prec_), prec_);
}

bool Padic2::operator==(const Padic2& o) const {
  if (is_exact() && o.is_exact()) return value_ == o.value_;
  unsigned p = std::min(prec_, o.prec_);
  return residue_mod(p) == o.residue_mod(p);
}

std::string Padic2::render() const {
  std::ostringstream s;
  if (is_exact()) {
    BigInt num = numerator(value_);
    BigInt den = denominator(value_);
    s << num;
    if (den != 1) s << "/" << den;
  } else {
    s << "w:";
    for (unsigned i = 0; i < prec_; ++i) s << (bit_test(residue_, i) ? '1' : '0');
  }
  return s.str();
}

Eta Eta::integer(long long v) {
  if (((v % 4) + 4) % 4 != 2) throw InvalidEta("integer base must be 2 mod 4");
  Eta e;
  e.kind_ = Kind::Integer;
  e.value_ = v;
  return e;
}

Eta Eta::rational(const BigRat& v) {
  BigInt num = numerator(v);
  BigInt den = denominator(v);
  if (den % 2 == 0 || num == 0 || v2_exact(num) != 1)
    throw InvalidEta("rational base must be 2*(unit) with odd denominator");
  Eta e;
  e.kind_ = Kind::Rational;
  e.value_ = v;
  return e;
}

Eta Eta::stream(std::uint64_t seed, unsigned precision) {
  if (precision < 2 || precision == Padic2::kExact)
    throw InvalidEta("seeded base needs a window of at least 2 bits");
  Eta e;
  e.kind_ = Kind::Stream;
  e.seed_ = seed;
  e.prec_ = precision;
  e.digits_.assign(precision, 0);
  e.digits_[1] = 1;
  std::uint64_t x = seed;
  for (unsigned k = 1; k < precision; ++k) {
    x = 6364136223846793005ULL * x + 1442695040888963407ULL;
    if (k >= 2) e.digits_[k] = static_cast<char>((x >> 63) & 1);
  }
  return e;
}

const BigRat& Eta::value() const {
  if (kind_ == Kind::Stream) throw PrecisionExhausted("seeded base has no exact value");
  return value_;
}

unsigned Eta::precision() const { return prec_; }

BigInt Eta::residue(unsigned bits) const {
  if (kind_ != Kind::Stream) return rat_residue(value_, bits);
  if (bits > prec_) throw PrecisionExhausted("window narrower than requested residue");
  BigInt r = 0;
  for (unsigned i = 0; i < bits; ++i)
    if (digits_[i]) bit_set(r, i);
  return r;
}

std::string Eta::render() const {
  std::ostringstream s;
  switch (kind_) {
    case Kind::Integer: {
      BigInt num = numerator(value_);
      s << "int:" << num;
      break;
    }
    case Kind::Rational: {
      BigInt num = numerator(value_);
      BigInt den = denominator(value_);
      s << "rat:" << num << "/" << den;
      break;
    }
    case Kind::Stream:
      s << "seed:" << seed_ << ":" << prec_;
      break;
  }
  return s.str();
}

Padic2 div_eta(const Padic2& a, const Eta& eta) {
  if (a.parity() != 0) throw OddArgument("division by the base needs an even argument");
  if (a.is_exact() && eta.kind() != Eta::Kind::Stream) {
    BigRat r = a.rational() / eta.value();
    return Padic2::exact(r);
  }
  unsigned p = a.is_exact() ? eta.precision() : a.precision();
  if (eta.kind() == Eta::Kind::Stream) p = std::min(p, eta.precision());
  // a and eta are both even with eta/2 odd, so divide both by 2 first:
  // a/eta = (a/2) * (eta/2)^{-1}, valid one bit narrower.
  unsigned q = p - 1;
  BigInt half_a = a.residue_mod(p) >> 1;
  BigInt half_u = eta.residue(p) >> 1;
  return Padic2::windowed(half_a * inv_odd(mod2n(half_u, q), q), q);
}

std::vector<int> eta_digits(Padic2 a, const Eta& eta, unsigned n) {
  std::vector<int> w;
  w.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    int x = a.parity();
    w.push_back(x);
    if (i + 1 < n) {
      Padic2 even = x ? a - Padic2::from_int(x) : a;
      a = div_eta(even, eta);
    }
  }
  return w;
}

BigRat eta_value(const std::vector<int>& w, const Eta& eta) {
  BigRat acc = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    acc = acc * eta.value() + w[i];
  }
  return acc;
}

BigInt eta_value_residue(const std::vector<int>& w, const Eta& eta, unsigned bits) {
  BigInt u = eta.residue(bits);
  BigInt acc = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    acc = mod2n(acc * u + w[i], bits);
  }
  return acc;
}

AlphaStream::AlphaStream(const Eta& eta) : eta_(eta) {
  ps_.push_back(Padic2::from_int(2));
}

int AlphaStream::alpha(unsigned k) {
  if (k == 0) throw InvalidInput("digit index starts at 1");
  ensure(k);
  return alphas_[k - 1];
}

const Padic2& AlphaStream::p(unsigned k) {
  ensure(k);
  return ps_[k];
}

void AlphaStream::ensure(unsigned k) {
  while (ps_.size() <= k) {
    Padic2 q = div_eta(ps_.back(), eta_);
    int a = q.parity();
    alphas_.push_back(a);
    ps_.push_back(a ? q - Padic2::from_int(1) : q);
  }
}

std::vector<int> alpha_prefix(const Eta& eta, unsigned n) {
  AlphaStream s(eta);
  std::vector<int> out;
  out.reserve(n);
  for (unsigned k = 1; k <= n; ++k) out.push_back(s.alpha(k));
  return out;
}

}  // namespace selfsim
