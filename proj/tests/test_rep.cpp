#include <catch_amalgamated.hpp>

#include <random>

#include <plethysm/isomaps.hpp>
#include <plethysm/serialize.hpp>

using namespace plethysm;

namespace {

GroupElement random_element(Field F, std::mt19937_64& rng) {
  if (F.is_finite()) {
    auto all = F.elements();
    std::uniform_int_distribution<std::size_t> d(0, all.size() - 1);
    for (;;) {
      GroupElement g{all[d(rng)], all[d(rng)], all[d(rng)], all[d(rng)]};
      if (!g.det().is_zero()) return g;
    }
  }
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    GroupElement g{F.from_int(d(rng)), F.from_int(d(rng)), F.from_int(d(rng)), F.from_int(d(rng))};
    if (!g.det().is_zero()) return g;
  }
}

// Number of SSYT of shape lam with entries 1..n, by the hook content formula.
Integer hook_content(const Partition& lam, int n) {
  Partition c = conjugate(lam);
  Rational r = 1;
  for (int i = 0; i < lam.length(); ++i) {
    for (int j = 0; j < lam.parts[i]; ++j) {
      int hook = lam.parts[i] - j + c.parts[j] - i - 1;
      r *= Rational(n + j - i, hook);
    }
  }
  return numerator(r);
}

using Poly2 = std::map<std::vector<int>, Elem>;  // row monomials (rows sorted, concatenated) -> coefficient

// g acting on Sym^{lam_1}V (x) ... (x) Sym^{lam_k}V; entries are 1-based indices into V's basis.
Poly2 act_on_rows(const Matrix<Elem>& A, const Partition& lam, const Poly2& x, Field F) {
  Poly2 out;
  for (const auto& [mono, c] : x) {
    // expand product of columns of A factor by factor
    std::vector<std::pair<std::vector<int>, Elem>> partial{{{}, c}};
    for (int v : mono) {
      std::vector<std::pair<std::vector<int>, Elem>> next;
      for (const auto& [pre, k] : partial) {
        for (std::size_t r = 0; r < A.rows; ++r) {
          const Elem& a = A(r, v - 1);
          if (a.is_zero()) continue;
          auto w = pre;
          w.push_back(static_cast<int>(r) + 1);
          next.emplace_back(w, k * a);
        }
      }
      partial = std::move(next);
    }
    for (auto& [w, k] : partial) {
      std::size_t off = 0;
      for (int len : lam.parts) {
        std::sort(w.begin() + off, w.begin() + off + len);
        off += len;
      }
      auto it = out.find(w);
      if (it == out.end()) out.emplace(w, k);
      else it->second += k;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// symmetric power label with k factors Y among n
Label ylabel(int n, int k) {
  Label l(n, 0);
  std::fill(l.end() - k, l.end(), 1);
  return l;
}

Poly2 expand_in_field(const Tableau& t, int dim, Field F) {
  Poly2 out;
  for (const auto& [m, k] : polytabloid_expand(t, dim)) {
    Elem x = F.from_int(k);
    if (!x.is_zero()) out.emplace(m, x);
  }
  return out;
}

}  // namespace

TEST_CASE("dimensions") {
  Field F = Field::make(2);
  for (int l = 0; l <= 6; ++l) CHECK(sym_upper_E(l, F)->dimension() == l + 1);
  for (int l = 1; l <= 4; ++l) {
    for (int m = 1; m <= 4; ++m) {
      Rep R = sym_lower(m, sym_upper_E(l, F));
      CHECK(R->dimension() == binomial_exact(l + m, m));
      CHECK(static_cast<std::int64_t>(R->basis().size()) == R->dimension());
    }
  }
  CHECK(parse_rep("sym_3(sym^3(E))", F)->dimension() == 20);
  Partition hook = parse_partition("3,1^4");
  CHECK(nabla(hook, sym_upper_E(12, F))->dimension() == hook_content(hook, 13));
  CHECK(hook_content(hook, 13) == 96525);
  for (const auto& lam : partitions_in_box(3, 3)) {
    for (int n = 1; n <= 4; ++n) {
      Rep V = n == 1 ? det_power(1, F) : sym_upper_E(n - 1, F);
      Rep N = nabla(lam, V);
      CHECK(N->dimension() == hook_content(lam, n));
      CHECK(static_cast<std::int64_t>(N->basis().size()) == N->dimension());
      CHECK(delta(lam, V)->dimension() == N->dimension());
    }
  }
  CHECK(wedge(2, sym_upper_E(3, F))->dimension() == 6);
  CHECK(tensor(natural(F), sym_upper_E(2, F))->dimension() == 6);
}

TEST_CASE("rep specs parse and print") {
  Field F = Field::make(3);
  for (const char* s : {"E", "dual(sym^2(E))", "cdual(E)", "sym_3(sym^3(E))", "wedge^2(sym^3(E))", "nabla[2,1](sym^2(E))",
                        "delta[2,1](E)", "det^2", "tensor(E,sym^2(E))"}) {
    Rep R = parse_rep(s, F);
    CHECK(parse_rep(R->spec(), F)->spec() == R->spec());
  }
  CHECK_THROWS_AS(parse_rep("sym^2(F)", F), Error);
  CHECK_THROWS_AS(parse_rep("sym^2(E", F), Error);
  CHECK_THROWS_AS(parse_rep("nabla[1,2](E)", F), Error);
}

TEST_CASE("group action on E and symmetric powers") {
  Field F = Field::make(2);
  for (int a = 1; a <= 3; ++a) {
    int n = 1 << a;
    Rep S = sym_upper_E(n, F);
    auto v = act(lower_unipotent(F.one()), S, parse_vector(S, "X^" + std::to_string(n)));
    CHECK(format_vector<Elem>(S, v, VecStyle::Ascii) == "X^" + std::to_string(n) + " + Y^" + std::to_string(n));
  }
  Field Q = Field::rationals();
  for (int s = 1; s <= 5; ++s) {
    Rep S = sym_upper_E(s, Q);
    for (int i = 0; i <= s; ++i) {
      Terms<Elem> x{{ylabel(s, s - i), Q.one()}};
      auto y = act(weyl_element(Q), S, x);
      // J X^i Y^(s-i) = (-1)^i Y^i X^(s-i)
      CHECK(y.size() == 1);
      CHECK(y.begin()->first == ylabel(s, i));
      CHECK(y.begin()->second == (i % 2 ? -Q.one() : Q.one()));
    }
  }
}

TEST_CASE("lower unipotent on the symmetrised tensors") {
  Field F = Field::make(5);
  for (int l = 1; l <= 4; ++l) {
    Rep S = sym_lower_E(l, F);
    for (const auto& gam : F.elements()) {
      for (int i = 0; i <= l; ++i) {
        auto y = act(lower_unipotent(gam), S, Terms<Elem>{{ylabel(l, l - i), F.one()}});
        Terms<Elem> want;
        for (int j = 0; j <= i; ++j) add_term(want, ylabel(l, l - j), gam.pow(i - j) * F.binomial(l - j, l - i));
        CHECK(y == want);
      }
    }
  }
}

TEST_CASE("action is a homomorphism") {
  std::mt19937_64 rng(5);
  for (const char* fs : {"GF(2)", "GF(3)", "GF(25)", "QQ"}) {
    Field F = Field::parse(fs);
    for (const char* spec : {"sym^3(E)", "sym_2(sym^2(E))", "wedge^2(sym^3(E))", "nabla[2,1](sym^2(E))", "delta[2,1](E)",
                             "dual(sym^2(E))", "cdual(sym^3(E))", "tensor(E,sym_2(E))", "tensor(det^1,E)"}) {
      Rep R = parse_rep(spec, F);
      REQUIRE(R->dimension() <= 30);
      for (int trial = 0; trial < 20; ++trial) {
        GroupElement g = random_element(F, rng), h = random_element(F, rng);
        auto lhs = matmul(action_matrix(g, R), action_matrix(h, R), F.zero());
        CHECK(lhs == action_matrix(g * h, R));
      }
      CHECK(action_matrix(group_element(F.one(), F.zero(), F.zero(), F.one()), R) ==
            to_matrix(*identity_map<Elem>(R, Ring<Elem>{F})));
    }
  }
}

TEST_CASE("dual and contravariant dual matrices") {
  Field F = Field::make(5);
  std::mt19937_64 rng(9);
  Rep V = sym_upper_E(2, F);
  Matrix<Elem> Ymat = transpose(action_matrix(weyl_element(F).inverse(), V));
  Matrix<Elem> Yinv = transpose(action_matrix(weyl_element(F), V));
  for (int trial = 0; trial < 20; ++trial) {
    GroupElement g = random_element(F, rng);
    CHECK(action_matrix(g, dual(V)) == transpose(action_matrix(g.inverse(), V)));
    CHECK(action_matrix(g, contra_dual(V)) == transpose(action_matrix(g.transpose(), V)));
    Elem dt = g.det();
    GroupElement s{g.a, g.b * dt.inverse(), g.c, g.d * dt.inverse()};  // determinant 1
    auto conj = matmul(matmul(Ymat, action_matrix(s, dual(V)), F.zero()), Yinv, F.zero());
    CHECK(conj == action_matrix(s, contra_dual(V)));
  }
  CHECK_THROWS_AS(group_element(F.one(), F.one(), F.one(), F.one()), Error);
}

TEST_CASE("polytabloid expansion") {
  auto e = polytabloid_expand(parse_tableau("1 2 2 / 3 3"), 3);
  std::map<std::vector<int>, std::int64_t> want = {
      {{1, 2, 2, 3, 3}, 1}, {{1, 2, 3, 2, 3}, -1}, {{2, 2, 3, 1, 3}, -1}, {{2, 3, 3, 1, 2}, 1}};
  CHECK(e == want);
  CHECK(polytabloid_expand(parse_tableau("1 2 / 1 3"), 3).empty());
  CHECK(polytabloid_expand(parse_tableau("1 1 2"), 2).size() == 1);
  CHECK_THROWS_AS(polytabloid_expand(parse_tableau("1 4"), 3), Error);
}

TEST_CASE("straightening examples") {
  auto r = garnir_straighten(parse_tableau("1 1 2 / 3 2"), 3, 0);
  REQUIRE(r.size() == 1);
  CHECK(tableau_of(parse_partition("3,2"), r[0].first).to_string() == "1 1 2 / 2 3");
  CHECK(r[0].second == 1);
  // column permutation changes the sign
  auto a = garnir_straighten(parse_tableau("2 1 / 3 3 / 4"), 4, 0);
  auto b = garnir_straighten(parse_tableau("3 1 / 2 3 / 4"), 4, 0);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first);
    CHECK(a[i].second == -b[i].second);
  }
  // semistandard input is fixed
  for (const auto& t : enumerate_tableaux(parse_partition("3,2"), 3, TableauKind::SSYT)) {
    auto s = garnir_straighten(t, 3, 0);
    REQUIRE(s.size() == 1);
    CHECK(tableau_of(t.shape, s[0].first).rows == t.rows);
    CHECK(s[0].second == 1);
  }
}

TEST_CASE("straightening agrees with the polytabloid expansion") {
  for (const auto& lam : partitions_in_box(3, 3)) {
    if (lam.empty()) continue;
    for (int n = 1; n <= 4; ++n) {
      for (const auto& t : enumerate_tableaux(lam, n, TableauKind::CSYT)) {
        auto lhs = polytabloid_expand(t, n);
        std::map<std::vector<int>, std::int64_t> rhs;
        for (const auto& [w, c] : garnir_straighten(t, n, 0)) {
          for (const auto& [m, k] : polytabloid_expand(tableau_of(lam, w), n)) rhs[m] += c * k;
        }
        for (auto it = rhs.begin(); it != rhs.end();) it = it->second == 0 ? rhs.erase(it) : std::next(it);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("nabla action matches the action inside the row-symmetric tensor") {
  std::mt19937_64 rng(21);
  Field F = Field::make(3);
  for (const auto& lam : partitions_in_box(2, 3)) {
    if (lam.empty()) continue;
    for (int n = 2; n <= 3; ++n) {
      Rep V = sym_upper_E(n - 1, F);
      Rep N = nabla(lam, V);
      for (int trial = 0; trial < 3; ++trial) {
        GroupElement g = random_element(F, rng);
        auto A = action_matrix(g, V);
        auto M = action_map(N, g);
        for (const auto& l : N->basis()) {
          Tableau t = tableau_of(lam, l);
          Poly2 want = act_on_rows(A, lam, expand_in_field(t, n, F), F);
          Poly2 got;
          for (const auto& [s, c] : M->column(l)) {
            for (const auto& [m, x] : expand_in_field(tableau_of(lam, s), n, F)) {
              auto it = got.find(m);
              if (it == got.end()) got.emplace(m, c * x);
              else it->second += c * x;
            }
          }
          for (auto it = got.begin(); it != got.end();) it = it->second.is_zero() ? got.erase(it) : std::next(it);
          CHECK(got == want);
        }
      }
    }
  }
}

TEST_CASE("lowering operator") {
  Field Q = Field::rationals();
  Rep S = sym_upper_E(2, Q);
  CHECK(format_vector<Elem>(S, act_f(S, parse_vector(S, "X^2")), VecStyle::Ascii) == "2XY");
  CHECK(act_f(S, parse_vector(S, "Y^2")).empty());
  CHECK_THROWS_AS(act_f(dual(S), parse_vector(dual(S), "X^2")), Error);
  // f on pure tensors of monomials: sum_k i_k F(i - e_k)
  Rep T = tensor(sym_upper_E(2, Q), sym_upper_E(3, Q));
  auto got = act_f(T, parse_vector(T, "F_⊗(2,1)"));
  auto want = parse_vector(T, "2*F_⊗(1,1) + F_⊗(2,0)");
  CHECK(got == want);
}

TEST_CASE("vectors and matrices round-trip through JSON") {
  std::mt19937_64 rng(4);
  for (const char* fs : {"GF(3)", "GF(4)", "QQ"}) {
    Field F = Field::parse(fs);
    for (const char* spec : {"sym^3(E)", "sym_2(sym^2(E))", "wedge^2(sym^3(E))", "nabla[2,1](sym^2(E))", "tensor(E,E)",
                             "dual(sym^2(E))"}) {
      Rep R = parse_rep(spec, F);
      GroupElement g = random_element(F, rng);
      auto v = action_map(R, g)->column(R->label(0));
      auto j = vector_to_json(R, v);
      CHECK(vector_from_json(R, nlohmann::json::parse(j.dump())) == v);
      auto m = action_matrix(g, R);
      CHECK(matrix_from_json(nlohmann::json::parse(matrix_to_json(m).dump()), F) == m);
    }
  }
}
