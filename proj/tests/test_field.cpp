#include <catch_amalgamated.hpp>

#include <random>

#include <plethysm/field.hpp>

using namespace plethysm;

namespace {

// Pascal's triangle in big integers.
Integer pascal(int n, int k) {
  std::vector<Integer> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> next(i + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = next;
  }
  return k < 0 || k > n ? Integer(0) : row[k];
}

std::vector<Elem> sample(Field F, std::mt19937_64& rng, int n) {
  std::vector<Elem> out;
  if (F.is_finite()) {
    auto all = F.elements();
    std::uniform_int_distribution<std::size_t> d(0, all.size() - 1);
    for (int i = 0; i < n; ++i) out.push_back(all[d(rng)]);
  } else {
    std::uniform_int_distribution<int> d(-20, 20);
    for (int i = 0; i < n; ++i) out.push_back(F.from_rational(Rational(d(rng), (d(rng) + 21) % 7 + 1)));
  }
  return out;
}

}  // namespace

TEST_CASE("field parsing and sizes") {
  CHECK(Field::parse("GF(4)").order() == 4);
  CHECK(Field::parse("GF(2^3)").order() == 8);
  CHECK(Field::parse("GF(25)").characteristic() == 5);
  CHECK_FALSE(Field::parse("QQ").is_finite());
  CHECK(Field::parse("GF(4)") == Field::parse("GF(2^2)"));
  CHECK_THROWS_AS(Field::parse("GF(6)"), Error);
  CHECK_THROWS_AS(Field::parse("GF(8; 1,1,1)"), Error);  // x^3+x^2+x+1 is reducible
  CHECK_THROWS_AS(Field::parse("GF(2^2; 1)"), Error);
  CHECK_THROWS_AS(Field::parse("nonsense"), Error);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (const char* fs : {"GF(2)", "GF(3)", "GF(4)", "GF(9)", "GF(25)", "GF(256)", "QQ"}) {
    Field F = Field::parse(fs);
    auto xs = sample(F, rng, 60);
    for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
      const Elem &a = xs[i], &b = xs[i + 1], &c = xs[i + 2];
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == F.zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == F.one());
    }
  }
}

TEST_CASE("extension field: multiplicative group is cyclic of order q-1") {
  for (const char* fs : {"GF(4)", "GF(8)", "GF(9)", "GF(16)"}) {
    Field F = Field::parse(fs);
    for (const auto& x : F.elements()) {
      if (!x.is_zero()) CHECK(x.pow(F.order() - 1).is_one());
    }
    CHECK(F.elements().size() == static_cast<std::size_t>(F.order()));
  }
}

TEST_CASE("division by zero and cross-field arithmetic are errors") {
  Field F = Field::make(5), G = Field::make(7);
  CHECK_THROWS_AS(F.zero().inverse(), Error);
  CHECK_THROWS_AS(F.one() + G.one(), Error);
}

TEST_CASE("element strings round-trip") {
  for (const char* fs : {"GF(7)", "GF(9)", "QQ"}) {
    Field F = Field::parse(fs);
    std::vector<Elem> xs;
    if (F.is_finite()) xs = F.elements();
    else xs = {F.from_rational(Rational(-3, 4)), F.from_int(5), F.zero()};
    for (const auto& x : xs) CHECK(F.parse_element(x.to_string()) == x);
  }
}

TEST_CASE("polynomials in the indeterminate") {
  Field F2 = Field::make(2), F5 = Field::make(5);
  Poly g = Poly::gamma(F2), one = Poly::constant(F2.one());
  Poly sq = (one + g) * (one + g);
  CHECK(sq == one + g * g);
  CHECK(sq.eval(F2.one()).is_zero());
  Poly q = Poly::constant(F5.from_int(2)) + Poly::constant(F5.from_int(3)) * Poly::gamma(F5);
  CHECK(q.coeff(1) == F5.from_int(3));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(0, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Elem> a, b;
    for (int i = 0; i < 4; ++i) {
      a.push_back(F5.from_int(d(rng)));
      b.push_back(F5.from_int(d(rng)));
    }
    Poly pa(F5, a), pb(F5, b);
    for (const auto& x : F5.elements()) CHECK((pa * pb).eval(x) == pa.eval(x) * pb.eval(x));
  }
  CHECK(Poly(F5).is_zero());
}

TEST_CASE("exact binomials agree with Pascal's triangle") {
  for (int n = 0; n <= 64; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(binomial_exact(n, k) == pascal(n, k));
  }
}

TEST_CASE("carry-free summands agree with big-integer binomials mod p") {
  for (int p : {2, 3, 5, 7}) {
    for (int l = 0; l <= 64; ++l) {
      for (int a = 0; a <= l; ++a) {
        bool nonzero = pascal(l, a) % p != 0;
        CHECK(carry_free_summand(a, l, p) == nonzero);
        CHECK((binomial_mod_p(l, a, p) != 0) == nonzero);
      }
    }
  }
  CHECK_FALSE(carry_free_summand(2, 4, 2));
  CHECK_FALSE(carry_free_summand(5, 4, 2));
  for (int e = 1; e <= 4; ++e) {
    int l = (1 << e) - 1;
    for (int a = 0; a <= l; ++a) CHECK(carry_free_summand(a, l, 2));
  }
  CHECK(carry_free_summand(4, 8 + 4, 2));
  CHECK(carry_free_summand(9, 27 + 9, 3));
}

TEST_CASE("multinomial nonvanishing mod p") {
  CHECK_FALSE(multinomial_nonzero_mod_p({1, 1}, 2));
  CHECK(multinomial_nonzero_mod_p({4}, 2));
  CHECK(multinomial_nonzero_mod_p({1, 1, 1}, 5));
  // against the factorial formula
  for (int p : {2, 3}) {
    for (int a = 0; a <= 6; ++a) {
      for (int b = 0; b <= 6; ++b) {
        for (int c = 0; c <= 6; ++c) {
          Integer m = pascal(a + b + c, a) * pascal(b + c, b);
          CHECK(multinomial_nonzero_mod_p({a, b, c}, p) == (m % p != 0));
        }
      }
    }
  }
}

TEST_CASE("field binomials reduce the exact value") {
  Field F = Field::parse("GF(9)");
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(F.binomial(n, k) == F.from_integer(pascal(n, k)));
  }
}
