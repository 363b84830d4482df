#pragma once

#include <map>

#include "classinv/partition.hpp"
#include "classinv/sympoly.hpp"

namespace classinv {

// Coefficients of a symmetric polynomial in the Schur basis.
struct SchurExpansion {
  int nvars = 0;
  std::map<Partition, Int> coeffs;

  Int coeff(const Partition& lambda) const {
    auto it = coeffs.find(lambda);
    return it == coeffs.end() ? Int(0) : it->second;
  }
  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;
};

// Monomial expansion of s_lambda(x_1..x_n) by iterated horizontal-strip
// branching over the last variable; memoized.  Rejects length(lambda) > n.
SymPoly schur_polynomial(const Partition& lambda, int n);

// Number of semistandard tableaux of shape lambda and content mu
// (mu an arbitrary composition of |lambda|).
Int kostka_number(const Partition& lambda, const std::vector<int>& mu);

// Inverse of the Schur expansion by leading-monomial subtraction: the lex
// greatest exponent of a symmetric polynomial is a partition and carries the
// coefficient of that Schur polynomial.  Throws "input not symmetric" when a
// leading exponent fails to be a partition.
SchurExpansion schur_expand(const SymPoly& f);

// Littlewood-Richardson coefficient c^lambda_{mu nu}, by counting
// lattice-word skew tableaux of shape lambda/nu and content mu.
// Returns 0 unless |lambda| = |mu| + |nu| and mu, nu are contained in lambda.
Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu);

// dim of the irreducible GL(n) module with highest weight lambda.
Int gl_dimension(const Partition& lambda, int n);

}  // namespace classinv
