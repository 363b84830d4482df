#include "classinv/branching.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace classinv {

GroupId::GroupId(GroupKind k, int n_) : kind(k), n(n_) {
  if (n < 1) throw std::invalid_argument("group rank parameter must be positive");
  if (kind == GroupKind::SP && n % 2 != 0)
    throw std::invalid_argument("Sp(n) requires even n");
}

std::string GroupId::name() const {
  switch (kind) {
    case GroupKind::SP: return "Sp(" + std::to_string(n) + ")";
    case GroupKind::O: return "O(" + std::to_string(n) + ")";
    case GroupKind::SO: return "SO(" + std::to_string(n) + ")";
  }
  return {};
}

Int trivial_multiplicity(const Partition& lambda, const GroupId& g) {
  if (lambda.length() > g.n)
    throw std::invalid_argument("trivial_multiplicity: partition longer than n");
  switch (g.kind) {
    case GroupKind::SP:
      return has_even_columns(lambda, g.n) ? 1 : 0;
    case GroupKind::O:
      return is_even_partition(lambda) ? 1 : 0;
    case GroupKind::SO:
      return (is_even_partition(lambda) || is_odd_partition(lambda, g.n)) ? 1
                                                                          : 0;
  }
  return 0;
}

namespace {

// Iterates over the raw LR terms of the restriction: for every even
// partition 2*delta (transposed when transpose_even) contained in lambda and
// every mu with c^lambda_{mu nu} != 0, calls f(mu, c).
template <typename F>
void for_each_lr_term(const Partition& lambda, bool transpose_even, F&& f) {
  int w = lambda.weight();
  for (int m = 0; 2 * m <= w; ++m) {
    for (const Partition& delta : enumerate_partitions(m, w)) {
      std::vector<int> doubled;
      doubled.reserve(static_cast<size_t>(delta.length()));
      for (int p : delta.parts()) doubled.push_back(2 * p);
      Partition even(std::move(doubled));
      Partition nu = transpose_even ? even.conjugate() : even;
      if (!lambda.contains(nu)) continue;
      for (const Partition& mu :
           enumerate_partitions(w - 2 * m, lambda.length())) {
        Int c = lr_coefficient(lambda, mu, nu);
        if (c != 0) f(mu, c);
      }
    }
  }
}

struct Modified {
  int sign = 1;
  Partition label;
};

// Repeated boundary-hook removal until at most k rows remain; nullopt when a
// term dies (hook length 0 or the removal leaves a non-diagram).
std::optional<Modified> modify_sp(Partition mu, int k) {
  int sign = 1;
  while (mu.length() > k) {
    int p = mu.length();
    int L = 2 * p - 2 * k - 2;
    if (L == 0) return std::nullopt;
    auto hr = remove_boundary_hook(mu, L);
    if (!hr) return std::nullopt;
    sign *= hr->rows_spanned % 2 == 0 ? -1 : 1;  // (-1)^{x+1}, x = row span
    mu = std::move(hr->result);
  }
  return Modified{sign, std::move(mu)};
}

struct ModifiedO {
  int sign = 1;
  int epsilon_power = 0;
  Partition label;
};

std::optional<ModifiedO> modify_o(Partition mu, int n) {
  int k = n / 2;
  int sign = 1, eps = 0;
  while (mu.length() > k) {
    int p = mu.length();
    int L = 2 * p - n;  // always >= 1 here
    auto hr = remove_boundary_hook(mu, L);
    if (!hr) return std::nullopt;
    sign *= hr->rows_spanned % 2 == 0 ? 1 : -1;  // (-1)^x, x = row span
    eps ^= 1;
    mu = std::move(hr->result);
  }
  return ModifiedO{sign, eps, std::move(mu)};
}

std::vector<BranchTerm> to_sorted_terms(
    const std::map<std::pair<Partition, int>, Int>& merged) {
  std::vector<BranchTerm> out;
  for (auto& [key, mult] : merged)
    if (mult != 0) out.push_back({key.first, mult, key.second});
  return out;
}

}  // namespace

std::vector<BranchTerm> branch_to_sp(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("branch_to_sp: k must be positive");
  if (lambda.length() > 2 * k)
    throw std::invalid_argument("branch_to_sp: partition longer than 2k");
  std::map<std::pair<Partition, int>, Int> merged;
  for_each_lr_term(lambda, /*transpose_even=*/true,
                   [&](const Partition& mu, const Int& c) {
                     auto mod = modify_sp(mu, k);
                     if (!mod) return;
                     merged[{mod->label, 0}] += mod->sign * c;
                   });
  return to_sorted_terms(merged);
}

std::vector<BranchTerm> branch_to_o(const Partition& lambda, int n,
                                    bool so_view) {
  if (n < 1) throw std::invalid_argument("branch_to_o: n must be positive");
  if (lambda.length() > n)
    throw std::invalid_argument("branch_to_o: partition longer than n");
  int k = n / 2;
  Partition full_column(std::vector<int>(static_cast<size_t>(n), 1));
  std::map<std::pair<Partition, int>, Int> merged;
  for_each_lr_term(
      lambda, /*transpose_even=*/false, [&](const Partition& mu, const Int& c) {
        if (so_view) {
          if (mu.length() <= k) {
            merged[{mu, 0}] += c;
          } else if (mu == full_column) {
            // det restricts trivially on SO(n)
            merged[{Partition{}, 0}] += c;
          }
          return;
        }
        auto mod = modify_o(mu, n);
        if (!mod) return;
        merged[{mod->label, mod->epsilon_power}] += mod->sign * c;
      });
  return to_sorted_terms(merged);
}

Int trivial_multiplicity_via_branching(const Partition& lambda,
                                       const GroupId& g) {
  if (g.kind == GroupKind::O)
    throw std::invalid_argument(
        "trivial_multiplicity_via_branching: O(n) has no multiplicity "
        "semantics here, use predicate path");
  std::vector<BranchTerm> terms = g.kind == GroupKind::SP
                                      ? branch_to_sp(lambda, g.n / 2)
                                      : branch_to_o(lambda, g.n, true);
  for (const BranchTerm& t : terms)
    if (t.mu.empty()) return t.multiplicity;
  return 0;
}

Int sp_dimension(const Partition& mu, int k) {
  if (mu.length() > k)
    throw std::invalid_argument("sp_dimension: partition longer than k");
  Int num = 1, den = 1;
  std::vector<long> l(static_cast<size_t>(k)), r(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    l[static_cast<size_t>(i)] = mu.part(i) + k - i;
    r[static_cast<size_t>(i)] = k - i;
  }
  for (int i = 0; i < k; ++i) {
    num *= l[static_cast<size_t>(i)];
    den *= r[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      num *= l[static_cast<size_t>(i)] * l[static_cast<size_t>(i)] -
             l[static_cast<size_t>(j)] * l[static_cast<size_t>(j)];
      den *= r[static_cast<size_t>(i)] * r[static_cast<size_t>(i)] -
             r[static_cast<size_t>(j)] * r[static_cast<size_t>(j)];
    }
  }
  if (num % den != 0) throw internal_error("sp_dimension: non-integer result");
  return num / den;
}

}  // namespace classinv
