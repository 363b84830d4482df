#pragma once

#include <vector>

#include "classinv/branching.hpp"
#include "classinv/module_spec.hpp"
#include "classinv/series.hpp"
#include "classinv/sympoly.hpp"

namespace classinv {

// Per-degree Schur multiplicities m_l(lambda) of the symmetric algebra S(W).
struct MultiplicityTable {
  int n = 1;
  int maxdeg = 0;
  std::vector<SchurExpansion> rows;  // rows[l], l = 0..maxdeg
};

// Character of W itself: sum of k(lambda) * s_lambda.
SymPoly module_character(const ModuleSpec& spec);

// Characters of S^0 W .. S^maxdeg W, by expanding the product of geometric
// factors 1/(1 - x^mu t) over the weights of W as a t-truncated series.
std::vector<SymPoly> symmetric_algebra_characters(const ModuleSpec& spec,
                                                  int maxdeg);

MultiplicityTable multiplicity_table(const ModuleSpec& spec, int maxdeg);

// Hilbert series of the invariant ring, filter path: per degree, the sum of
// m_l(lambda) over lambda passing the group's trivial-multiplicity predicate.
TruncatedSeries hilbert_series_invariants(const MultiplicityTable& table,
                                          const GroupId& g);
TruncatedSeries hilbert_series_invariants(const ModuleSpec& spec,
                                          const GroupId& g, int maxdeg);

// Same series by literal evaluation of the multiplicity series: substitute
// (0,1,0,1,...) into the difference-coordinate series for Sp, iterate the
// (+-1)-averaging over x-variables for O, and over difference coordinates
// with the last variable set to 1 for SO.
TruncatedSeries hilbert_series_via_substitution(const MultiplicityTable& table,
                                                const GroupId& g);
TruncatedSeries hilbert_series_via_substitution(const ModuleSpec& spec,
                                                const GroupId& g, int maxdeg);

}  // namespace classinv
