#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "selfsim/errors.hpp"

namespace selfsim {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// v mod 2^bits, canonicalized into [0, 2^bits).
BigInt mod2n(BigInt v, unsigned bits);

// Inverse of an odd residue mod 2^bits.
BigInt inv_odd(const BigInt& u, unsigned bits);

// A 2-adic integer, carried either exactly (rational with odd denominator)
// or as a window: the residue mod 2^precision with nothing known above.
// Mixed-mode arithmetic coerces exact operands to the partner's window;
// two windows combine at the smaller precision.
class Padic2 {
 public:
  static constexpr unsigned kExact = std::numeric_limits<unsigned>::max();

  Padic2() : value_(0), prec_(kExact) {}

  static Padic2 exact(const BigRat& v);
  static Padic2 from_int(long long v);
  static Padic2 windowed(const BigInt& residue, unsigned precision);

  bool is_exact() const { return prec_ == kExact; }
  // Window width in bits; kExact for exact values.
  unsigned precision() const { return prec_; }

  const BigRat& rational() const;

  // Value mod 2^bits. Windowed values must have precision >= bits.
  BigInt residue_mod(unsigned bits) const;

  // Low bit. Needs at least one known bit.
  int parity() const;

  // Whether 2^n divides the value. A windowed all-zero residue narrower
  // than n cannot decide and throws PrecisionExhausted.
  bool v2_at_least(unsigned n) const;

  Padic2 to_window(unsigned bits) const;

  Padic2 operator+(const Padic2& o) const;
  Padic2 operator-(const Padic2& o) const;
  Padic2 operator*(const Padic2& o) const;
  Padic2 operator-() const;

  // Exact pairs compare as rationals; anything windowed compares as
  // congruence at the smaller precision.
  bool operator==(const Padic2& o) const;
  bool operator!=(const Padic2& o) const { return !(*this == o); }

  std::string render() const;

 private:
  BigRat value_;    // exact payload
  BigInt residue_;  // windowed payload, in [0, 2^prec_)
  unsigned prec_;
};

// Base parameter for digit expansions: congruent to 2 mod 4. Integer and
// rational forms are exact; the seeded form fixes low bit 0, next bit 1,
// and fills the rest of the window from an LCG bit stream.
class Eta {
 public:
  enum class Kind { Integer, Rational, Stream };

  static Eta integer(long long v);
  static Eta rational(const BigRat& v);
  static Eta stream(std::uint64_t seed, unsigned precision);

  Kind kind() const { return kind_; }
  bool is_two() const { return kind_ != Kind::Stream && value_ == 2; }

  const BigRat& value() const;

  // Window width for the seeded form; kExact otherwise.
  unsigned precision() const;

  // Base value mod 2^bits. Seeded form requires bits <= precision().
  BigInt residue(unsigned bits) const;

  std::string render() const;

 private:
  Eta() = default;
  Kind kind_ = Kind::Integer;
  BigRat value_;
  std::uint64_t seed_ = 0;
  unsigned prec_ = Padic2::kExact;
  std::vector<char> digits_;  // seeded window bits, digits_[i] = bit i
};

// a / eta for even a. Exact when both sides are exact; otherwise windowed,
// losing one bit of precision.
Padic2 div_eta(const Padic2& a, const Eta& eta);

// First n digits of a in base eta: repeatedly strip the low bit and divide.
std::vector<int> eta_digits(Padic2 a, const Eta& eta, unsigned n);

// Horner evaluation of a digit word. Exact bases only.
BigRat eta_value(const std::vector<int>& w, const Eta& eta);

// Horner evaluation mod 2^bits; works for every base kind.
BigInt eta_value_residue(const std::vector<int>& w, const Eta& eta, unsigned bits);

// The canonical digit sequence of the orbit of 2 under strip-and-divide:
// p_0 = 2, alpha_{k+1} = parity(p_k / eta), p_{k+1} = p_k / eta - alpha_{k+1}.
// Every p_k is even, so the recursion never stalls; windowed bases lose one
// bit per step.
class AlphaStream {
 public:
  explicit AlphaStream(const Eta& eta);

  AlphaStream(const AlphaStream&) = delete;
  AlphaStream& operator=(const AlphaStream&) = delete;

  // k >= 1.
  int alpha(unsigned k);
  // k >= 0; p(0) == 2.
  const Padic2& p(unsigned k);

  const Eta& eta() const { return eta_; }

 private:
  void ensure(unsigned k);

  Eta eta_;
  std::vector<int> alphas_;  // alphas_[i] holds alpha_{i+1}
  std::vector<Padic2> ps_;   // ps_[k] holds p_k
};

std::vector<int> alpha_prefix(const Eta& eta, unsigned n);

}  // namespace selfsim
