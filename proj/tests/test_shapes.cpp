#include <catch_amalgamated.hpp>

#include <set>

#include <plethysm/shapes.hpp>

using namespace plethysm;

namespace {

Tableau rows_of(std::vector<std::vector<int>> rows) {
  Tableau t;
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  t.shape = Partition{parts};
  t.rows = std::move(rows);
  return t;
}

// All fillings of lam with entries 1..n, filtered by the predicate.
std::vector<Tableau> brute_force(const Partition& lam, int n, bool semistandard) {
  int boxes = lam.size();
  std::vector<int> fill(boxes, 1);
  std::vector<Tableau> out;
  for (;;) {
    Tableau t;
    t.shape = lam;
    int k = 0;
    for (int len : lam.parts) {
      t.rows.emplace_back(fill.begin() + k, fill.begin() + k + len);
      k += len;
    }
    auto c = classify_tableau(t);
    if (c.column_standard && (!semistandard || c.row_semistandard)) out.push_back(t);
    int i = 0;
    while (i < boxes && fill[i] == n) fill[i++] = 1;
    if (i == boxes) break;
    ++fill[i];
  }
  return out;
}

}  // namespace

TEST_CASE("conjugate partitions") {
  CHECK(conjugate(parse_partition("3,2")).parts == std::vector<int>{2, 2, 1});
  CHECK(conjugate(parse_partition("1^4")).parts == std::vector<int>{4});
  CHECK(conjugate(parse_partition("3,1^4")).parts == std::vector<int>{5, 1, 1});
  for (int n = 0; n <= 12; ++n) {
    for (const auto& lam : partitions_of(n)) CHECK(conjugate(conjugate(lam)).parts == lam.parts);
  }
}

TEST_CASE("partition parsing") {
  CHECK(parse_partition("3,1,1").parts == std::vector<int>{3, 1, 1});
  CHECK(parse_partition("2^2,1").parts == std::vector<int>{2, 2, 1});
  CHECK(parse_partition("").empty());
  CHECK_THROWS_AS(parse_partition("1,2"), Error);
  CHECK_THROWS_AS(parse_partition("a"), Error);
}

TEST_CASE("complement partitions") {
  CHECK(complement_partition(parse_partition("3,1"), 3, 4).parts == std::vector<int>{4, 3, 1});
  CHECK(complement_partition(parse_partition("4,4,4"), 3, 4).empty());
  CHECK(complement_partition(Partition{}, 2, 3).parts == std::vector<int>{3, 3});
  CHECK_THROWS_AS(complement_partition(parse_partition("5"), 3, 4), Error);
  for (int d = 0; d <= 4; ++d) {
    for (int s = 0; s <= 4; ++s) {
      for (const auto& lam : partitions_in_box(d, s)) {
        CHECK(complement_partition(complement_partition(lam, d, s), d, s).parts == lam.parts);
        CHECK(lam.size() + complement_partition(lam, d, s).size() == d * s);
      }
    }
  }
}

TEST_CASE("tableau classification") {
  auto a = classify_tableau(rows_of({{2, 1, 3}, {3, 2}}));
  CHECK((a.column_standard && !a.row_semistandard));
  auto b = classify_tableau(rows_of({{1, 2, 3}, {2, 2}}));
  CHECK((!b.column_standard && b.row_semistandard));
  auto c = classify_tableau(rows_of({{1, 2, 2}, {3, 3}}));
  CHECK(c.semistandard);
}

TEST_CASE("tableau text round-trips") {
  Tableau t = parse_tableau("1 2 2 / 3 3");
  CHECK(t.to_string() == "1 2 2 / 3 3");
  CHECK(t.shape.parts == std::vector<int>{3, 2});
  CHECK_THROWS_AS(parse_tableau("1 2 / 3 3 3"), Error);
}

TEST_CASE("tableau enumeration matches brute force") {
  CHECK(count_tableaux(parse_partition("2,1"), 3, TableauKind::SSYT) == 8);
  for (int n = 1; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      Partition col{std::vector<int>(r, 1)};
      std::int64_t b = 1;
      for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
      CHECK(count_tableaux(col, n, TableauKind::SSYT) == b);
    }
  }
  for (int size = 1; size <= 6; ++size) {
    for (const auto& lam : partitions_of(size)) {
      for (int n = 1; n <= 4; ++n) {
        for (auto kind : {TableauKind::SSYT, TableauKind::CSYT}) {
          auto got = enumerate_tableaux(lam, n, kind);
          auto want = brute_force(lam, n, kind == TableauKind::SSYT);
          CHECK(got.size() == want.size());
          for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].word() < got[i].word());
        }
      }
    }
  }
}

TEST_CASE("complement tableaux") {
  Tableau t = parse_tableau("1 1 2 / 2");
  CHECK(complement_tableau(t, 3, 4).to_string() == "1 1 2 3 / 2 3 3 / 3");
  CHECK(surplus(t) == 1);
  CHECK(complement_tableau(parse_tableau("1 / 2 / 3"), 3, 1).shape.empty());
  CHECK_THROWS_AS(complement_tableau(parse_tableau("2 / 1"), 3, 1), Error);
  for (const auto& u : enumerate_tableaux(parse_partition("2,1"), 3, TableauKind::CSYT)) {
    CHECK(complement_tableau(complement_tableau(u, 3, 2), 3, 2).rows == u.rows);
  }
  // bijection CSYT(lam) -> CSYT(lam°) carrying SSYT onto SSYT
  for (const auto& lam : partitions_in_box(3, 3)) {
    for (int d = std::max(lam.length(), 1); d <= 4; ++d) {
      int s = 3;
      Partition comp = complement_partition(lam, d, s);
      std::set<std::vector<int>> seen;
      auto all = enumerate_tableaux(lam, d, TableauKind::CSYT);
      for (const auto& u : all) {
        Tableau c = complement_tableau(u, d, s);
        CHECK(c.shape.parts == comp.parts);
        CHECK(is_column_standard(c));
        CHECK(is_row_semistandard(c) == is_row_semistandard(u));
        seen.insert(c.word());
      }
      CHECK(seen.size() == all.size());
      CHECK(static_cast<std::int64_t>(all.size()) == count_tableaux(comp, d, TableauKind::CSYT));
    }
  }
}

TEST_CASE("surplus") {
  CHECK(surplus(parse_tableau("1 1 / 2 2 / 3")) == 0);
  Tableau t = parse_tableau("1 3 / 2 4");
  Tableau u = parse_tableau("4 2 / 3 1");
  CHECK(surplus(t) == surplus(u));
}

TEST_CASE("column sorting") {
  auto r = column_sort(parse_tableau("1 2 / 3 4"));
  CHECK((r.ok && r.sign == 1));
  auto s = column_sort(parse_tableau("3 2 / 1 4"));
  CHECK((s.ok && s.sign == -1 && s.tableau.to_string() == "1 2 / 3 4"));
  CHECK_FALSE(column_sort(parse_tableau("1 2 / 1 4")).ok);
}

TEST_CASE("stabilizer coset representatives") {
  CHECK(stabilizer_coset_reps({3, 1, 1}).size() == 3);
  CHECK(stabilizer_coset_reps({2, 2, 2}).size() == 1);
  CHECK(stabilizer_coset_reps({3, 2, 1}).size() == 6);
  // rearrangements are distinct and exhaust the orbit
  MultiIndex i{2, 2, 1, 0};
  std::set<MultiIndex> orbit;
  for (const auto& s : stabilizer_coset_reps(i)) orbit.insert(apply_place_permutation(i, s));
  CHECK(orbit.size() == 12);
}

TEST_CASE("column place permutations carry their parity") {
  for (const auto& bp : column_place_permutations(parse_partition("3,2,1"))) {
    CHECK((bp.sign == 1 || bp.sign == -1));
  }
  CHECK(column_place_permutations(parse_partition("3,2,1")).size() == 12);
}
