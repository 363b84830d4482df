#include <doctest.h>

#include <stdexcept>

#include "classinv/exterior.hpp"

using namespace classinv;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

HilbertPolynomial HP(std::vector<long> v) {
  std::vector<Int> c(v.begin(), v.end());
  return HilbertPolynomial(std::move(c));
}
}  // namespace

TEST_CASE("exterior power decompositions") {
  auto d1 = exterior_decomposition(ExteriorKind::SYM2, 2, 3);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0] == P({3, 3}));

  for (int n : {2, 3, 5}) {
    auto d = exterior_decomposition(ExteriorKind::SYM2, n, 1);
    REQUIRE(d.size() == 1);
    CHECK(d[0] == P({2}));
  }

  auto d2 = exterior_decomposition(ExteriorKind::ALT2, 2, 1);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0] == P({1, 1}));

  CHECK(exterior_decomposition(ExteriorKind::SYM2, 3, 0) ==
        std::vector<Partition>{P({})});
  CHECK_THROWS_AS(exterior_decomposition(ExteriorKind::ALT2, 2, 2),
                  std::invalid_argument);
}

TEST_CASE("exterior decompositions carry the right total dimension") {
  // sum over i of dim Lambda^i(W) = 2^{dim W}
  for (int n : {2, 3, 4}) {
    for (ExteriorKind kind : {ExteriorKind::SYM2, ExteriorKind::ALT2}) {
      int dim_w = kind == ExteriorKind::SYM2 ? n * (n + 1) / 2 : n * (n - 1) / 2;
      Int total = 0;
      for (int i = 0; i <= exterior_degree_bound(kind, n); ++i) {
        Int level = 0;
        for (const Partition& lam : exterior_decomposition(kind, n, i))
          level += gl_dimension(lam, n);
        CHECK(level == binomial(dim_w, i));
        total += level;
      }
      Int two_pow = 1;
      for (int b = 0; b < dim_w; ++b) two_pow *= 2;
      CHECK(total == two_pow);
    }
  }
}

TEST_CASE("exterior invariant polynomials, filter path") {
  CHECK(exterior_invariant_poly(ExteriorKind::SYM2, GroupId::sp(2)) ==
        HP({1, 0, 0, 1}));
  CHECK(exterior_invariant_poly(ExteriorKind::ALT2, GroupId::so(2)) ==
        HP({1, 1}));
  CHECK(exterior_invariant_poly(ExteriorKind::ALT2, GroupId::sp(2)) ==
        HP({1, 1}));
}

TEST_CASE("closed forms") {
  CHECK(closed_form_exterior(ExteriorKind::SYM2, GroupId::sp(2)) ==
        HP({1, 0, 0, 1}));
  CHECK(closed_form_exterior(ExteriorKind::SYM2, GroupId::o(3)) ==
        exterior_invariant_poly(ExteriorKind::SYM2, GroupId::o(3)));
  CHECK(closed_form_exterior(ExteriorKind::ALT2, GroupId::o(5)) ==
        exterior_generator_product({3, 7}));
}

TEST_CASE("generator products") {
  CHECK(exterior_generator_product({3}) == HP({1, 0, 0, 1}));
  CHECK(exterior_generator_product({3, 7}) ==
        HP({1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}));
  CHECK(exterior_generator_product({}) == HP({1}));
}

TEST_CASE("filter path equals closed form for all groups up to n = 8") {
  for (int n = 2; n <= 8; ++n) {
    for (ExteriorKind kind : {ExteriorKind::SYM2, ExteriorKind::ALT2}) {
      CHECK(exterior_invariant_poly(kind, GroupId::o(n)) ==
            closed_form_exterior(kind, GroupId::o(n)));
      CHECK(exterior_invariant_poly(kind, GroupId::so(n)) ==
            closed_form_exterior(kind, GroupId::so(n)));
      if (n % 2 == 0)
        CHECK(exterior_invariant_poly(kind, GroupId::sp(n)) ==
              closed_form_exterior(kind, GroupId::sp(n)));
    }
  }
}

TEST_CASE("cross-identities between the two exterior families") {
  for (int k = 1; k <= 4; ++k) {
    CHECK(closed_form_exterior(ExteriorKind::SYM2, GroupId::sp(2 * k)) ==
          closed_form_exterior(ExteriorKind::ALT2, GroupId::o(2 * k + 1)));
    if (k >= 2) {
      CHECK(closed_form_exterior(ExteriorKind::ALT2, GroupId::sp(2 * k)) ==
            closed_form_exterior(ExteriorKind::SYM2, GroupId::o(2 * k - 1)));
      CHECK(closed_form_exterior(ExteriorKind::ALT2, GroupId::sp(2 * k)) ==
            closed_form_exterior(ExteriorKind::SYM2, GroupId::so(2 * k - 1)));
    }
  }
}

TEST_CASE("free exterior algebra structures") {
  for (int k = 1; k <= 4; ++k) {
    auto sp_degrees =
        exterior_generator_degrees(ExteriorKind::SYM2, GroupId::sp(2 * k));
    REQUIRE(sp_degrees.has_value());
    CHECK(static_cast<int>(sp_degrees->size()) == k);
    CHECK(closed_form_exterior(ExteriorKind::SYM2, GroupId::sp(2 * k)) ==
          exterior_generator_product(*sp_degrees));

    auto o_odd =
        exterior_generator_degrees(ExteriorKind::ALT2, GroupId::o(2 * k + 1));
    REQUIRE(o_odd.has_value());
    CHECK(closed_form_exterior(ExteriorKind::ALT2, GroupId::o(2 * k + 1)) ==
          exterior_generator_product(*o_odd));

    auto o_even =
        exterior_generator_degrees(ExteriorKind::ALT2, GroupId::o(2 * k));
    REQUIRE(o_even.has_value());
    CHECK(closed_form_exterior(ExteriorKind::ALT2, GroupId::o(2 * k)) ==
          exterior_generator_product(*o_even));

    if (k >= 2) {
      auto so_even =
          exterior_generator_degrees(ExteriorKind::ALT2, GroupId::so(2 * k));
      REQUIRE(so_even.has_value());
      CHECK(closed_form_exterior(ExteriorKind::ALT2, GroupId::so(2 * k)) ==
            exterior_generator_product(*so_even));
    }
  }
  CHECK_FALSE(
      exterior_generator_degrees(ExteriorKind::SYM2, GroupId::o(3)).has_value());
}

TEST_CASE("odd orthogonal and special orthogonal invariants coincide") {
  for (int k = 1; k <= 4; ++k) {
    int n = 2 * k + 1;
    CHECK(closed_form_exterior(ExteriorKind::SYM2, GroupId::o(n)) ==
          closed_form_exterior(ExteriorKind::SYM2, GroupId::so(n)));
    CHECK(closed_form_exterior(ExteriorKind::ALT2, GroupId::o(n)) ==
          closed_form_exterior(ExteriorKind::ALT2, GroupId::so(n)));
  }
}

TEST_CASE("lowest-degree invariants") {
  for (int k = 1; k <= 4; ++k) {
    auto sp = closed_form_exterior(ExteriorKind::SYM2, GroupId::sp(2 * k));
    CHECK(sp.coeff(1) == 0);
    CHECK(sp.coeff(2) == 0);
    CHECK(sp.coeff(3) == 1);
    auto alt_sp = closed_form_exterior(ExteriorKind::ALT2, GroupId::sp(2 * k));
    CHECK(alt_sp.coeff(1) == 1);
  }
  for (int n = 2; n <= 8; ++n) {
    CHECK(closed_form_exterior(ExteriorKind::SYM2, GroupId::o(n)).coeff(1) == 1);
    CHECK(closed_form_exterior(ExteriorKind::SYM2, GroupId::so(n)).coeff(1) ==
          1);
  }
}

TEST_CASE("exterior invariant polynomials start at 1") {
  for (int n = 2; n <= 6; ++n)
    for (ExteriorKind kind : {ExteriorKind::SYM2, ExteriorKind::ALT2})
      for (GroupKind gk : {GroupKind::O, GroupKind::SO}) {
        GroupId g(gk, n);
        CHECK(exterior_invariant_poly(kind, g).coeff(0) == 1);
        CHECK(closed_form_exterior(kind, g).coeff(0) == 1);
      }
}
