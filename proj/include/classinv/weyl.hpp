#pragma once

#include <vector>

#include "classinv/branching.hpp"
#include "classinv/hilbert.hpp"
#include "classinv/module_spec.hpp"
#include "classinv/series.hpp"
#include "classinv/sympoly.hpp"

namespace classinv {

// Laurent polynomial in the rank-many torus variables of a connected group.
struct TorusCharacter {
  int rank = 0;
  SymPoly poly;
};

// Positive and negative roots as exponent vectors in the torus variables:
// C_k for Sp(2k), B_k for SO(2k+1), D_k for SO(2k).  O(n) is rejected.
std::vector<Exponents> root_system(const GroupId& g);
Int weyl_group_order(const GroupId& g);

// GL weights to torus weights: x_i -> z_i, x_{k+i} -> z_i^{-1} (i <= k),
// and x_n -> 1 for SO(2k+1).
TorusCharacter restrict_weights(const SymPoly& chi, const GroupId& g);

// dim of the invariant subspace: (1/|W|) * constant term of
// chi(z) * prod_{alpha in Phi} (1 - z^alpha).  The product is accumulated
// factor by factor with windowing: terms whose exponents cannot return to
// zero within the remaining factors' span are pruned.  Non-integer division
// signals an internal inconsistency.
Int weyl_ct_trivial_multiplicity(const TorusCharacter& chi, const GroupId& g);

// Degreewise constant-term evaluation over the characters of S^l W.
TruncatedSeries hilbert_series_weyl(const ModuleSpec& spec, const GroupId& g,
                                    int maxdeg);

// Littlewood-Richardson coefficient by a second route: expand s_mu * s_nu in
// max(len(lambda), len(mu)+len(nu)) variables and read off the Schur
// expansion.  Oracle for lr_coefficient.
Int lr_bruteforce(const Partition& lambda, const Partition& mu,
                  const Partition& nu);

}  // namespace classinv
