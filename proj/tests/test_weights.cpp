#include <catch_amalgamated.hpp>

#include <plethysm/vecio.hpp>
#include <plethysm/weights.hpp>

using namespace plethysm;

namespace {

std::set<std::int64_t> upto(int n) {
  std::set<std::int64_t> s;
  for (int k = 0; k <= n; ++k) s.insert(k);
  return s;
}

}  // namespace

TEST_CASE("weights and folding") {
  Field F8 = Field::parse("GF(8)");
  Rep S = sym_upper_E(4, F8);
  auto mode = WeightMode::of_order(8);
  auto r = weight_report(S, mode);
  CHECK(weight_of(S, S->label(0), mode) == -3);  // X^4
  CHECK(r.highest.weight == 3);
  CHECK(r.highest.unique());
  CHECK(r.weights.size() == 5);
  // GF(5): the window has room for 4 weights, sym^2 has two on top
  Field F5 = Field::make(5);
  auto h = highest_weight(sym_upper_E(2, F5), WeightMode::of_order(5));
  CHECK_FALSE(h.unique());
  CHECK_FALSE(defect_set(sym_upper_E(2, F5), WeightMode::of_order(5)).defined);
  CHECK(defect_set(sym_upper_E(2, F5), WeightMode::of_order(5)).to_string() == "undefined");
  for (std::int64_t q : {3, 4, 5, 8, 9, 16}) {
    auto m = WeightMode::of_order(q);
    for (std::int64_t w = -40; w <= 40; ++w) {
      std::int64_t f = m.fold(w);
      CHECK(f >= m.lo());
      CHECK(f <= m.hi());
      CHECK((w - f) % (q - 1) == 0);
    }
  }
  CHECK_THROWS_AS(WeightMode::of_order(2), Error);
}

TEST_CASE("borel support of the highest weight vector of a symmetric power") {
  for (int p : {2, 3}) {
    Field F = Field::make(p);
    for (int a = 0; a <= 3; ++a) {
      int n = 1;
      for (int i = 0; i < a; ++i) n *= p;
      Rep S = sym_upper_E(n, F);
      auto sup = borel_weight_support(S, parse_vector(S, "X^" + std::to_string(n)), WeightMode::generic());
      CHECK(sup == std::set<std::int64_t>{n, -n});
    }
  }
  Field F = Field::make(3);
  Rep S = sym_upper_E(2, F);
  CHECK_THROWS_AS(borel_weight_support(S, parse_vector(S, "X^2 + Y^2"), WeightMode::generic()), Error);
  CHECK_THROWS_AS(borel_weight_support(S, Terms<Elem>{}, WeightMode::generic()), Error);
  // the generic top space of sym^2 sym^2 over GF(2) meets only weights 4, 0 mod 4
  Rep T = parse_rep("sym^2(sym^2(E))", Field::make(2));
  for (auto w : weight_space_support(T, 0, WeightMode::generic())) CHECK(w % 4 == 0);
}

TEST_CASE("computed defect sets match the closed forms") {
  auto gen = WeightMode::generic();
  for (int p : {2, 3, 5}) {
    Field F = Field::make(p);
    for (int l = 0; l <= 10; ++l) {
      CHECK(defect_set(sym_upper_E(l, F), gen).elements == defect_oracle(OracleKind::SymUpper, l, 0, p).elements);
      CHECK(defect_set(sym_lower_E(l, F), gen).elements == defect_oracle(OracleKind::SymLower, l, 0, p).elements);
      CHECK(defect_oracle(OracleKind::SymLower, l, 0, p).elements == upto(l));
    }
    for (int l = 1; l <= 4; ++l) {
      for (int m = 1; m <= 4; ++m) {
        Rep up = sym_upper_E(l, F), lo = sym_lower_E(l, F);
        CHECK(defect_set(sym_lower(m, up), gen).elements == defect_oracle(OracleKind::LowerUpper, l, m, p).elements);
        CHECK(defect_set(sym_upper(m, up), gen).elements == defect_oracle(OracleKind::UpperUpper, l, m, p).elements);
        CHECK(defect_set(sym_lower(m, lo), gen).elements == defect_oracle(OracleKind::LowerLower, l, m, p).elements);
        CHECK(defect_set(sym_upper(m, lo), gen).elements == defect_oracle(OracleKind::UpperLower, l, m, p).elements);
      }
    }
  }
  CHECK(defect_oracle(OracleKind::SymUpper, 4, 0, 2).elements == std::set<std::int64_t>{0, 4});
  CHECK(defect_oracle(OracleKind::SymUpper, 7, 0, 2).elements == upto(7));
  CHECK_THROWS_AS(parse_oracle_kind("symsym_XX"), Error);
}

TEST_CASE("concrete defects agree with generic ones when nothing folds") {
  for (const char* fs : {"GF(9)", "GF(16)", "GF(27)"}) {
    Field F = Field::parse(fs);
    auto mode = WeightMode::of_order(F.order());
    const std::int64_t n = F.order() - 1;
    for (int l = 0; l <= std::min(mode.hi(), -mode.lo()); ++l) {
      Rep S = sym_upper_E(l, F);
      auto conc = defect_set(S, mode).elements;
      auto gen = defect_set(S, WeightMode::generic()).elements;
      for (auto g : gen) CHECK(conc.count(g));
      // anything extra differs from a generic defect by a multiple of (q-1)/2
      for (auto k : conc) {
        bool alias = false;
        for (auto g : gen) alias = alias || (2 * (k - g)) % n == 0;
        CHECK(alias);
      }
    }
  }
}

TEST_CASE("tensor products add defect sets") {
  auto gen = WeightMode::generic();
  for (int p : {2, 3}) {
    Field F = Field::make(p);
    std::vector<Rep> pieces{sym_upper_E(2, F), sym_upper_E(3, F), sym_lower_E(2, F), sym_upper_E(4, F)};
    for (const auto& a : pieces) {
      for (const auto& b : pieces) {
        auto want = defect_sum(defect_set(a, gen), defect_set(b, gen));
        CHECK(defect_set(tensor(a, b), gen).elements == want.elements);
      }
    }
  }
  DefectSet a, b;
  a.defined = b.defined = true;
  a.elements = {0, 1};
  b.elements = {0, 2};
  CHECK(defect_sum(a, b).elements == std::set<std::int64_t>{0, 1, 2, 3});
  b.mode = WeightMode::of_order(5);
  try {
    defect_sum(a, b);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ModeMismatch);
  }
}

TEST_CASE("both routes for hook delta modules agree") {
  auto gen = WeightMode::generic();
  for (int p : {2, 3}) {
    Field F = Field::make(p);
    for (const char* lam : {"2,1", "3,1", "2,1,1", "3,1,1"}) {
      for (int n = 2; n <= 3; ++n) {
        Rep D = delta(parse_partition(lam), sym_upper_E(n, F));
        CHECK(defect_set(D, gen, DefectRoute::Direct).elements == defect_set(D, gen, DefectRoute::Wedge).elements);
      }
    }
    CHECK_THROWS_AS(defect_set(delta(parse_partition("2,2"), sym_upper_E(2, F)), gen, DefectRoute::Wedge), Error);
  }
}

TEST_CASE("mode must match the field") {
  Field F = Field::make(3);
  try {
    defect_set(sym_upper_E(2, F), WeightMode::of_order(5));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ModeMismatch);
  }
  CHECK_THROWS_AS(defect_set(sym_upper_E(2, Field::rationals()), WeightMode::of_order(4)), Error);
}
