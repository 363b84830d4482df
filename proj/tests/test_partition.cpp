#include <doctest.h>

#include <stdexcept>

#include <set>

#include "classinv/partition.hpp"

using namespace classinv;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

std::vector<Partition> all_partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_size; ++w)
    for (const Partition& p : enumerate_partitions(w, w == 0 ? 1 : w))
      out.push_back(p);
  return out;
}
}  // namespace

TEST_CASE("partition normalization and validation") {
  CHECK(P({3, 1, 0, 0}) == P({3, 1}));
  CHECK(P({}).empty());
  CHECK(P({2, 2}).weight() == 4);
  CHECK(P({3, 1}).length() == 2);
  CHECK(P({3, 1}).part(5) == 0);
  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({1, -1}), std::invalid_argument);
}

TEST_CASE("partition string round-trip") {
  CHECK(P({3, 1}).to_string() == "[3,1]");
  CHECK(P({}).to_string() == "[]");
  CHECK(Partition::from_string("[3,1]") == P({3, 1}));
  CHECK(Partition::from_string("[]") == P({}));
  CHECK(Partition::from_string(" [ 2 , 2 ] ") == P({2, 2}));
  CHECK_THROWS_AS(Partition::from_string("3,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_string("[1,2]"), std::invalid_argument);
}

TEST_CASE("conjugate") {
  CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
  CHECK(P({}).conjugate() == P({}));
  CHECK(P({2, 2}).conjugate() == P({2, 2}));
  for (const Partition& p : all_partitions_up_to(12))
    CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("frobenius coordinates") {
  CHECK(frobenius_to_partition({{1}, {0}}) == P({2}));
  CHECK(frobenius_to_partition({{2, 1}, {1, 0}}) == P({3, 3}));
  CHECK(frobenius_to_partition({{0}, {1}}) == P({1, 1}));
  CHECK_THROWS_AS(frobenius_to_partition({{1, 1}, {1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(frobenius_to_partition({{1}, {1, 0}}), std::invalid_argument);
  for (const Partition& p : all_partitions_up_to(12)) {
    FrobeniusCoords f = frobenius_coords(p);
    CHECK(frobenius_to_partition(f) == p);
    int diag = static_cast<int>(f.arms.size());
    int total = diag;
    for (int a : f.arms) total += a;
    for (int l : f.legs) total += l;
    CHECK(total == p.weight());
  }
}

namespace {
// Independent rim walk used to cross-check the removal: boundary boxes of mu
// ordered from the bottom box of column 1 toward the end of row 1.
std::vector<std::pair<int, int>> reference_rim(const Partition& mu) {
  std::vector<std::pair<int, int>> rim;
  for (int i = mu.length(); i >= 1; --i)
    for (int j = std::max(mu.part(i), 1); j <= mu.part(i - 1); ++j)
      rim.emplace_back(i, j);
  return rim;
}

std::set<std::pair<int, int>> boxes(const Partition& p) {
  std::set<std::pair<int, int>> b;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i - 1); ++j) b.emplace(i, j);
  return b;
}
}  // namespace

TEST_CASE("boundary hook removal") {
  auto r = remove_boundary_hook(P({2, 2}), 2);
  REQUIRE(r.has_value());
  CHECK(r->result == P({2}));
  CHECK(r->columns_spanned == 2);
  CHECK(r->rows_spanned == 1);

  CHECK_FALSE(remove_boundary_hook(P({2, 2}), 1).has_value());

  auto r2 = remove_boundary_hook(P({1, 1, 1}), 2);
  REQUIRE(r2.has_value());
  CHECK(r2->result == P({1}));
  CHECK(r2->columns_spanned == 1);
  CHECK(r2->rows_spanned == 2);

  CHECK_THROWS_AS(remove_boundary_hook(P({}), 1), std::invalid_argument);
  CHECK_THROWS_AS(remove_boundary_hook(P({2}), 0), std::invalid_argument);
}

TEST_CASE("boundary hook removal reconstructs the input") {
  for (const Partition& mu : all_partitions_up_to(8)) {
    if (mu.empty()) continue;
    auto rim = reference_rim(mu);
    for (int L = 1; L <= mu.weight(); ++L) {
      auto r = remove_boundary_hook(mu, L);
      if (!r) continue;
      CHECK(r->result.weight() == mu.weight() - L);
      CHECK(mu.contains(r->result));
      CHECK(r->columns_spanned <= L);
      CHECK(r->rows_spanned <= L);
      // removed boxes = the first L boxes of the independently built rim path
      auto removed = boxes(mu);
      for (auto& b : boxes(r->result)) removed.erase(b);
      std::set<std::pair<int, int>> expected(rim.begin(), rim.begin() + L);
      CHECK(removed == expected);
    }
  }
}

TEST_CASE("parity predicates") {
  CHECK(is_even_partition(P({4, 2})));
  CHECK_FALSE(is_even_partition(P({3, 2})));
  CHECK(is_even_partition(P({})));

  CHECK(is_odd_partition(P({3, 1, 1}), 3));
  CHECK_FALSE(is_odd_partition(P({3, 1}), 3));
  CHECK_FALSE(is_odd_partition(P({}), 2));
  CHECK_THROWS_AS(is_odd_partition(P({1, 1, 1}), 2), std::invalid_argument);

  CHECK(has_even_columns(P({3, 3, 1, 1}), 4));
  CHECK_FALSE(has_even_columns(P({2}), 2));
  CHECK(has_even_columns(P({}), 2));
  CHECK_THROWS_AS(has_even_columns(P({1}), 3), std::invalid_argument);
  CHECK_THROWS_AS(has_even_columns(P({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("even columns means conjugate of an even partition") {
  for (int n : {2, 4}) {
    // all conjugates of even partitions with at most n rows
    std::set<Partition> doubled;
    for (int w = 0; w <= 6; ++w)
      for (const Partition& d : enumerate_partitions(w, std::max(w, 1))) {
        std::vector<int> twice;
        for (int p : d.parts()) twice.push_back(2 * p);
        Partition even(std::move(twice));
        if (even.conjugate().length() <= n) doubled.insert(even.conjugate());
      }
    for (const Partition& lam : all_partitions_up_to(12)) {
      if (lam.length() > n || lam.weight() > 12) continue;
      CHECK(has_even_columns(lam, n) == (doubled.count(lam) > 0));
    }
  }
}

TEST_CASE("odd partition means even plus a full column") {
  for (int n : {1, 2, 3, 4}) {
    for (const Partition& lam : all_partitions_up_to(10)) {
      if (lam.length() > n) continue;
      bool constructible = false;
      if (lam.length() == n || (n > 0 && lam.part(n - 1) >= 1)) {
        std::vector<int> delta;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
          int v = lam.part(i) - 1;
          if (v < 0 || v % 2 != 0) ok = false;
          delta.push_back(v / 2);
        }
        constructible = ok;
      }
      CHECK(is_odd_partition(lam, n) == constructible);
    }
  }
}

TEST_CASE("partition enumeration") {
  auto p3 = enumerate_partitions(3, 2);
  REQUIRE(p3.size() == 2);
  CHECK(p3[0] == P({3}));
  CHECK(p3[1] == P({2, 1}));

  auto p0 = enumerate_partitions(0, 5);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0] == P({}));

  CHECK(enumerate_partitions(4, 4).size() == 5);

  // decreasing lexicographic order
  auto p6 = enumerate_partitions(6, 6);
  for (size_t i = 0; i + 1 < p6.size(); ++i) CHECK(p6[i + 1] < p6[i]);
}

TEST_CASE("strict partition enumeration") {
  auto s1 = enumerate_strict_partitions(1, 1);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0] == std::vector<int>{0});
  CHECK(s1[1] == std::vector<int>{1});

  auto s2 = enumerate_strict_partitions(1, 2);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0] == std::vector<int>{1, 0});

  auto s0 = enumerate_strict_partitions(2, 0);
  REQUIRE(s0.size() == 1);
  CHECK(s0[0].empty());

  auto pos = enumerate_strict_partitions(3, 2, true);
  REQUIRE(pos.size() == 3);  // (2,1), (3,1), (3,2)
  for (auto& a : pos) CHECK(a.back() > 0);
}
