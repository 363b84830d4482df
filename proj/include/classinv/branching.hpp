#pragma once

#include <string>
#include <vector>

#include "classinv/partition.hpp"
#include "classinv/symfunc.hpp"

namespace classinv {

enum class GroupKind { SP, O, SO };

struct GroupId {
  GroupKind kind;
  int n;

  GroupId(GroupKind k, int n_);  // validates: SP needs even n

  int rank() const { return n / 2; }  // k for Sp(2k), floor(n/2) for O/SO
  bool is_connected() const { return kind != GroupKind::O; }
  std::string name() const;

  static GroupId sp(int n) { return {GroupKind::SP, n}; }
  static GroupId o(int n) { return {GroupKind::O, n}; }
  static GroupId so(int n) { return {GroupKind::SO, n}; }

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

// One summand of a restricted module: multiplicity * epsilon^epsilon_power *
// V_[mu].  epsilon_power is only ever 1 for O(n) (the determinant marker).
struct BranchTerm {
  Partition mu;
  Int multiplicity;
  int epsilon_power = 0;
};

// Multiplicity of the trivial G-module in V^n_lambda, by the closed
// predicates: even columns (Sp), even partition (O), even or odd (SO).
// Always 0 or 1.
Int trivial_multiplicity(const Partition& lambda, const GroupId& g);

// Full restriction GL(2k) -> Sp(2k): the Littlewood-Richardson sum over
// transposed even partitions, with inadmissible labels (more than k rows)
// rewritten by repeated boundary-hook removal of length 2p-n-2 and sign
// (-1)^{x+1}.  The hook "depth" x is the row span of the removed strip; the
// column-count reading fails dimension conservation (see tests).
std::vector<BranchTerm> branch_to_sp(const Partition& lambda, int k);

// Restriction GL(n) -> O(n) (so_view = false): LR sum over even partitions,
// hook length 2p-n, sign (-1)^x together with an epsilon marker per removal.
// The epsilon semantics are character-level, so this variant is diagnostic
// only.  With so_view = true the output is the SO(n) view used for trivial
// multiplicities: the raw inadmissible label (1,...,1) of length n is
// rewritten to the trivial label with multiplicity +1 and every other
// inadmissible label is dropped (none of them is equivalent to trivial).
std::vector<BranchTerm> branch_to_o(const Partition& lambda, int n,
                                    bool so_view = false);

// Coefficient of the trivial label in the merged branching output; must agree
// with trivial_multiplicity.  Only SP and SO are supported; O is rejected
// ("use predicate path") since its epsilon marker is not a multiplicity.
Int trivial_multiplicity_via_branching(const Partition& lambda,
                                       const GroupId& g);

// Weyl dimension formula for Sp(2k) with highest weight mu (at most k parts).
Int sp_dimension(const Partition& mu, int k);

}  // namespace classinv
