#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "selfsim/padic.hpp"
#include "selfsim/rng.hpp"

#include <vector>

using namespace selfsim;

namespace {

// Independent valuation: lsb of the numerator, denominator odd by invariant.
unsigned v2_of(const BigRat& r) {
  REQUIRE(r != 0);
  BigInt n = numerator(r);
  BigInt a = abs(n);
  return lsb(a);
}

BigRat rat(long long p, long long q) { return BigRat(p, q); }

std::vector<int> bits(const std::string& s) {
  std::vector<int> w;
  for (char c : s) w.push_back(c - '0');
  return w;
}

BigRat random_odd_denominator_rational(Rng& rng) {
  long long num = rng.range(-100000, 100000);
  long long den = 2 * rng.range(0, 50000) + 1;
  return BigRat(num, den);
}

}  // namespace

TEST_CASE("base admissibility") {
  CHECK_NOTHROW(Eta::integer(2));
  CHECK_NOTHROW(Eta::integer(6));
  CHECK_NOTHROW(Eta::integer(-2));
  CHECK_NOTHROW(Eta::integer(-6));
  CHECK_THROWS_AS(Eta::integer(0), InvalidEta);
  CHECK_THROWS_AS(Eta::integer(3), InvalidEta);
  CHECK_THROWS_AS(Eta::integer(4), InvalidEta);
  CHECK_THROWS_AS(Eta::integer(-4), InvalidEta);

  CHECK_NOTHROW(Eta::rational(rat(6, 5)));
  CHECK_NOTHROW(Eta::rational(rat(-2, 7)));
  CHECK_THROWS_AS(Eta::rational(rat(4, 3)), InvalidEta);
  CHECK_THROWS_AS(Eta::rational(rat(3, 5)), InvalidEta);
  CHECK_THROWS_AS(Eta::rational(rat(1, 2)), InvalidEta);
  CHECK_THROWS_AS(Eta::rational(BigRat(0)), InvalidEta);

  CHECK_NOTHROW(Eta::stream(1, 2));
  CHECK_THROWS_AS(Eta::stream(1, 1), InvalidEta);
  CHECK_THROWS_AS(Eta::stream(1, 0), InvalidEta);

  CHECK(Eta::integer(2).is_two());
  CHECK(!Eta::integer(6).is_two());
  CHECK(!Eta::stream(7, 16).is_two());
}

TEST_CASE("seeded base bit stream is frozen") {
  // First bits fixed, the rest from the 64-bit LCG
  // x <- 6364136223846793005*x + 1442695040888963407, taking bit 63.
  Eta e = Eta::stream(0xC0FFEE, 128);
  BigInt r = e.residue(24);
  std::string got;
  for (unsigned i = 0; i < 24; ++i) got += bit_test(r, i) ? '1' : '0';
  CHECK(got == "011001110111101111001001");
  CHECK(r == 9690854);

  Eta e1 = Eta::stream(1, 16);
  BigInt r1 = e1.residue(16);
  std::string got1;
  for (unsigned i = 0; i < 16; ++i) got1 += bit_test(r1, i) ? '1' : '0';
  CHECK(got1 == "0111011101011100");

  // Same seed, different window: digit prefixes agree.
  Eta wide = Eta::stream(0xC0FFEE, 80);
  CHECK(wide.residue(24) == r);
}

TEST_CASE("windowed residues and parities") {
  Padic2 third = Padic2::exact(rat(1, 3));
  CHECK(third.residue_mod(8) == 171);  // 3*171 = 513 = 2*256 + 1
  Padic2 neg_third = Padic2::exact(rat(-1, 3));
  CHECK(neg_third.residue_mod(8) == 85);  // 3*85 = 255 = 256 - 1

  CHECK(third.parity() == 1);
  CHECK(Padic2::from_int(-5).parity() == 1);
  CHECK(Padic2::from_int(10).parity() == 0);

  Padic2 w = Padic2::windowed(BigInt(0b101100), 6);
  CHECK(w.parity() == 0);
  CHECK(w.residue_mod(3) == 4);
  CHECK_THROWS_AS(w.residue_mod(7), PrecisionExhausted);
  CHECK_THROWS_AS(Padic2::windowed(BigInt(0), 0).parity(), PrecisionExhausted);

  CHECK_THROWS_AS(Padic2::exact(rat(1, 2)), InvalidInput);
  CHECK_THROWS_AS(Padic2::exact(rat(3, 10)), InvalidInput);
}

TEST_CASE("valuation queries") {
  CHECK(Padic2::from_int(0).v2_at_least(1000));
  CHECK(Padic2::from_int(48).v2_at_least(4));
  CHECK(!Padic2::from_int(48).v2_at_least(5));
  CHECK(Padic2::exact(rat(-256, 3)).v2_at_least(8));
  CHECK(!Padic2::exact(rat(-256, 3)).v2_at_least(9));

  Padic2 w = Padic2::windowed(BigInt(8), 6);
  CHECK(w.v2_at_least(3));
  CHECK(!w.v2_at_least(4));
  Padic2 z = Padic2::windowed(BigInt(0), 6);
  CHECK(z.v2_at_least(6));
  CHECK_THROWS_AS(z.v2_at_least(7), PrecisionExhausted);
}

TEST_CASE("arithmetic coercion rules") {
  Padic2 a = Padic2::from_int(5);
  Padic2 b = Padic2::exact(rat(1, 3));
  Padic2 s = a + b;
  CHECK(s.is_exact());
  CHECK(s.rational() == rat(16, 3));

  Padic2 w1 = Padic2::windowed(BigInt(13), 8);
  Padic2 w2 = Padic2::windowed(BigInt(7), 5);
  Padic2 t = w1 * w2;
  CHECK(t.precision() == 5);
  CHECK(t.residue_mod(5) == (13 * 7) % 32);

  Padic2 m = a + w1;  // exact coerces to the window
  CHECK(m.precision() == 8);
  CHECK(m.residue_mod(8) == 18);

  CHECK(Padic2::from_int(269) == w1);  // 269 = 13 + 256, congruent in the window
  CHECK(Padic2::from_int(14) != w1);
  CHECK(-w1 == Padic2::from_int(-13));
}

TEST_CASE("division by the base") {
  Eta six = Eta::integer(6);
  Padic2 q = div_eta(Padic2::from_int(2), six);
  CHECK(q.rational() == rat(1, 3));
  CHECK_THROWS_AS(div_eta(Padic2::from_int(3), six), OddArgument);

  // Windowed path: 2/6 = 1/3, residue 171 mod 2^8.
  Padic2 wq = div_eta(Padic2::from_int(2).to_window(9), six);
  CHECK(wq.precision() == 8);
  CHECK(wq.residue_mod(8) == 171);

  // Seeded base: divide and check the product comes back in the window.
  Eta e = Eta::stream(42, 32);
  Padic2 a = Padic2::from_int(2026);
  Padic2 d = div_eta(a, e);
  CHECK(d.precision() == 31);
  Padic2 back = d * Padic2::windowed(e.residue(31), 31);
  CHECK(back == a);

  CHECK_THROWS_AS(div_eta(Padic2::windowed(BigInt(0), 0), six), PrecisionExhausted);
}

TEST_CASE("digit expansions match frozen words") {
  Eta six = Eta::integer(6);
  std::vector<int> w = eta_digits(Padic2::from_int(2), six, 5);
  CHECK(w == bits("01110"));
  CHECK(eta_value(w, six) == 258);

  Eta two = Eta::integer(2);
  CHECK(eta_digits(Padic2::from_int(3), two, 4) == bits("1100"));

  CHECK(eta_digits(Padic2::from_int(0), six, 6) == bits("000000"));
  CHECK(eta_digits(Padic2::from_int(1), six, 1) == bits("1"));
}

TEST_CASE("digit round trip over random inputs") {
  Rng rng(0x5eed0001ULL);
  const unsigned n = 40;
  for (Eta e : {Eta::integer(2), Eta::integer(6), Eta::integer(-2),
                Eta::rational(rat(6, 5))}) {
    for (int trial = 0; trial < 60; ++trial) {
      BigRat a = random_odd_denominator_rational(rng);
      std::vector<int> w = eta_digits(Padic2::exact(a), e, n);
      BigRat diff = a - eta_value(w, e);
      if (diff != 0) CHECK(v2_of(diff) >= n);
    }
  }
}

TEST_CASE("digit round trip for the seeded base") {
  Rng rng(0x5eed0002ULL);
  Eta e = Eta::stream(0xC0FFEE, 128);
  const unsigned n = 40;
  for (int trial = 0; trial < 40; ++trial) {
    BigRat a = random_odd_denominator_rational(rng);
    std::vector<int> w = eta_digits(Padic2::exact(a), e, n);
    BigInt got = eta_value_residue(w, e, n);
    CHECK(mod2n(Padic2::exact(a).residue_mod(n) - got, n) == 0);
  }
}

TEST_CASE("windowed and exact digit paths agree") {
  Rng rng(0x5eed0003ULL);
  Eta six = Eta::integer(6);
  for (int trial = 0; trial < 30; ++trial) {
    BigRat a = random_odd_denominator_rational(rng);
    std::vector<int> exact_digits = eta_digits(Padic2::exact(a), six, 40);
    std::vector<int> window_digits = eta_digits(Padic2::exact(a).to_window(70), six, 40);
    CHECK(exact_digits == window_digits);
  }
}

TEST_CASE("distinct digit words name distinct residues") {
  Rng rng(0x5eed0004ULL);
  Eta six = Eta::integer(6);
  const unsigned n = 8;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> u, v;
    for (unsigned i = 0; i < n; ++i) {
      u.push_back(static_cast<int>(rng.below(2)));
      v.push_back(static_cast<int>(rng.below(2)));
    }
    if (u == v) continue;
    BigRat diff = eta_value(u, six) - eta_value(v, six);
    REQUIRE(diff != 0);
    CHECK(v2_of(diff) < n);
  }
}

TEST_CASE("alpha stream frozen prefixes") {
  CHECK(alpha_prefix(Eta::integer(6), 12) ==
        std::vector<int>{1, 1, 1, 0, 0, 0, 0, 1, 1, 0, 1, 0});
  CHECK(alpha_prefix(Eta::integer(2), 8) ==
        std::vector<int>{1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(alpha_prefix(Eta::integer(-2), 8) ==
        std::vector<int>{1, 1, 0, 0, 0, 0, 0, 0});
  CHECK(alpha_prefix(Eta::rational(rat(6, 5)), 8) ==
        std::vector<int>{1, 1, 0, 1, 1, 0, 1, 1});
  CHECK(alpha_prefix(Eta::stream(0xC0FFEE, 128), 16) ==
        std::vector<int>{1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 1});

  AlphaStream s(Eta::integer(6));
  CHECK(s.p(0).rational() == 2);
  CHECK(s.p(1).rational() == rat(-2, 3));
  CHECK(s.p(2).rational() == rat(-10, 9));
  CHECK(s.p(3).rational() == rat(-32, 27));
  CHECK(s.p(4).rational() == rat(-16, 81));

  AlphaStream s65(Eta::rational(rat(6, 5)));
  CHECK(s65.p(1).rational() == rat(2, 3));

  AlphaStream s2(Eta::integer(2));
  for (unsigned k = 1; k <= 8; ++k) CHECK(s2.p(k).rational() == 0);
}

TEST_CASE("alpha stream properties") {
  // First digit is always 1 and every orbit value stays even.
  for (Eta e : {Eta::integer(6), Eta::integer(-2), Eta::integer(10),
                Eta::rational(rat(6, 5)), Eta::rational(rat(-2, 9))}) {
    AlphaStream s(e);
    CHECK(s.alpha(1) == 1);
    for (unsigned k = 0; k <= 20; ++k) CHECK(s.p(k).parity() == 0);
  }
  AlphaStream seeded(Eta::stream(0xC0FFEE, 128));
  CHECK(seeded.alpha(1) == 1);
  for (unsigned k = 0; k <= 64; ++k) CHECK(seeded.p(k).parity() == 0);
  CHECK(seeded.p(64).precision() == 64);

  // Windowed stream loses a bit per step and eventually gives out.
  AlphaStream narrow(Eta::stream(9, 8));
  CHECK_THROWS_AS(narrow.alpha(8), PrecisionExhausted);

  // Same seed at two windows agrees while both are defined.
  CHECK(alpha_prefix(Eta::stream(0xC0FFEE, 80), 60) ==
        alpha_prefix(Eta::stream(0xC0FFEE, 128), 60));
}

TEST_CASE("recursion identity links alpha to the orbit values") {
  // p_k = p_{k-1}/eta - alpha_k, checked in plain rational arithmetic.
  for (Eta e : {Eta::integer(6), Eta::integer(-6), Eta::rational(rat(6, 5))}) {
    AlphaStream s(e);
    for (unsigned k = 1; k <= 16; ++k) {
      BigRat lhs = s.p(k).rational();
      BigRat rhs = s.p(k - 1).rational() / e.value() - s.alpha(k);
      CHECK(lhs == rhs);
    }
  }
}
