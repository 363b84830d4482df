#include <doctest.h>

#include <stdexcept>

#include "classinv/hilbert.hpp"
#include "testutil.hpp"

using namespace classinv;
using testutil::series_from;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

ModuleSpec spec_of(const std::string& text, int n) {
  return ModuleSpec::parse(text, n);
}
}  // namespace

TEST_CASE("module character") {
  CHECK(module_character(spec_of("S2(V)", 2)) == schur_polynomial(P({2}), 2));
  CHECK(module_character(spec_of("L2(V)", 2)) ==
        SymPoly::monomial({1, 1}, 1));
  CHECK(module_character(spec_of("V + L2(V)", 2)) ==
        SymPoly::monomial({1, 0}, 1) + SymPoly::monomial({0, 1}, 1) +
            SymPoly::monomial({1, 1}, 1));
}

TEST_CASE("symmetric algebra characters") {
  auto chars = symmetric_algebra_characters(spec_of("S2(V)", 2), 2);
  CHECK(chars[0] == SymPoly::constant(2, 1));
  CHECK(chars[1] == schur_polynomial(P({2}), 2));
  CHECK(chars[2] ==
        schur_polynomial(P({4}), 2) + schur_polynomial(P({2, 2}), 2));

  auto vchars = symmetric_algebra_characters(spec_of("V", 2), 3);
  CHECK(vchars[3] == schur_polynomial(P({3}), 2));

  // dimension bookkeeping: S^l of a D-dimensional space
  auto wchars = symmetric_algebra_characters(spec_of("V + L2(V)", 3), 4);
  Int D = spec_of("V + L2(V)", 3).dimension();
  CHECK(D == 6);
  for (int l = 0; l <= 4; ++l) {
    Int total = 0;
    for (auto& [e, c] : wchars[static_cast<size_t>(l)].terms()) total += c;
    CHECK(total == binomial(static_cast<long>(to_int64(D)) + l - 1, l));
  }
}

TEST_CASE("multiplicity table") {
  MultiplicityTable t = multiplicity_table(spec_of("S2(V)", 2), 2);
  CHECK(t.rows[0].coeffs == std::map<Partition, Int>{{P({}), 1}});
  CHECK(t.rows[1].coeffs == std::map<Partition, Int>{{P({2}), 1}});
  CHECK(t.rows[2].coeffs ==
        std::map<Partition, Int>{{P({4}), 1}, {P({2, 2}), 1}});

  MultiplicityTable u = multiplicity_table(spec_of("L2(V)", 4), 2);
  CHECK(u.rows[2].coeffs ==
        std::map<Partition, Int>{{P({2, 2}), 1}, {P({1, 1, 1, 1}), 1}});
}

TEST_CASE("multiplicity table is nonnegative and counts dimensions") {
  for (auto& text : {"S2(V)", "S3(V)", "V + L2(V)", "2*[2,1]"}) {
    ModuleSpec spec = spec_of(text, 3);
    MultiplicityTable t = multiplicity_table(spec, 4);
    Int D = spec.dimension();
    for (int l = 0; l <= 4; ++l) {
      Int total = 0;
      for (auto& [lam, m] : t.rows[static_cast<size_t>(l)].coeffs) {
        CHECK(m > 0);
        total += m * gl_dimension(lam, 3);
      }
      CHECK(total == binomial(static_cast<long>(to_int64(D)) + l - 1, l));
    }
  }
}

TEST_CASE("invariant series examples") {
  CHECK(hilbert_series_invariants(spec_of("S2(V)", 4), GroupId::sp(4), 8) ==
        series_from({1, 0, 1, 0, 2, 0, 2, 0, 3}));
  CHECK(hilbert_series_invariants(spec_of("S2(V)", 2), GroupId::o(2), 4) ==
        series_from({1, 1, 2, 2, 3}));
  CHECK(hilbert_series_invariants(spec_of("S3(V)", 2), GroupId::sp(2), 8) ==
        series_from({1, 0, 0, 0, 1, 0, 0, 0, 1}));
}

TEST_CASE("substitution path examples") {
  CHECK(hilbert_series_via_substitution(spec_of("S2(V)", 2), GroupId::sp(2),
                                        8) ==
        series_from({1, 0, 1, 0, 1, 0, 1, 0, 1}));
  CHECK(hilbert_series_via_substitution(spec_of("L2(V)", 2), GroupId::so(2),
                                        3) == series_from({1, 1, 1, 1}));
  CHECK(hilbert_series_via_substitution(spec_of("S4(V)", 2), GroupId::o(2), 0)
            .coeffs == std::vector<Int>{1});
}

TEST_CASE("the zero module has constant invariants") {
  ModuleSpec zero = spec_of("", 3);
  CHECK(hilbert_series_invariants(zero, GroupId::so(3), 3) ==
        series_from({1, 0, 0, 0}));
  CHECK(hilbert_series_via_substitution(zero, GroupId::o(3), 3) ==
        series_from({1, 0, 0, 0}));
}

TEST_CASE("substitution path equals filter path") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<ModuleSpec> specs = testutil::random_specs(6, n, 1234 + n);
    specs.push_back(spec_of("S2(V)", n));
    specs.push_back(spec_of("V + L2(V)", n));
    for (const ModuleSpec& spec : specs) {
      MultiplicityTable t = multiplicity_table(spec, 6);
      for (GroupId g : {GroupId::o(n), GroupId::so(n)})
        CHECK(hilbert_series_invariants(t, g) ==
              hilbert_series_via_substitution(t, g));
      if (n % 2 == 0)
        CHECK(hilbert_series_invariants(t, GroupId::sp(n)) ==
              hilbert_series_via_substitution(t, GroupId::sp(n)));
    }
  }
}

TEST_CASE("O(n) invariants embed into SO(n) invariants") {
  for (int n = 2; n <= 4; ++n)
    for (const ModuleSpec& spec : testutil::random_specs(5, n, 99 + n)) {
      MultiplicityTable t = multiplicity_table(spec, 6);
      TruncatedSeries o = hilbert_series_invariants(t, GroupId::o(n));
      TruncatedSeries so = hilbert_series_invariants(t, GroupId::so(n));
      for (int d = 0; d <= 6; ++d) CHECK(o[d] <= so[d]);
    }
}

TEST_CASE("group and module sizes must agree") {
  CHECK_THROWS_AS(
      hilbert_series_invariants(spec_of("V", 3), GroupId::so(4), 2),
      std::invalid_argument);
}

TEST_CASE("characters are symmetric polynomials") {
  for (int n = 2; n <= 3; ++n)
    for (const ModuleSpec& spec : testutil::random_specs(4, n, 500 + n)) {
      CHECK(module_character(spec).is_symmetric());
      auto chars = symmetric_algebra_characters(spec, 3);
      for (const SymPoly& chi : chars) CHECK(chi.is_symmetric());
    }
}
