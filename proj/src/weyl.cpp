#include "classinv/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace classinv {

namespace {
void require_connected(const GroupId& g, const char* where) {
  if (!g.is_connected())
    throw std::invalid_argument(std::string(where) +
                                ": O(n) is disconnected, no torus oracle");
}
}  // namespace

std::vector<Exponents> root_system(const GroupId& g) {
  require_connected(g, "root_system");
  int k = g.rank();
  std::vector<Exponents> roots;
  auto root = [&](int i, int ci, int j, int cj) {
    Exponents e(static_cast<size_t>(k), 0);
    e[static_cast<size_t>(i)] = ci;
    if (j >= 0) e[static_cast<size_t>(j)] += cj;
    roots.push_back(std::move(e));
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) root(i, si, j, sj);
  if (g.kind == GroupKind::SP) {
    for (int i = 0; i < k; ++i)
      for (int s : {2, -2}) root(i, s, -1, 0);
  } else if (g.n % 2 == 1) {  // B_k
    for (int i = 0; i < k; ++i)
      for (int s : {1, -1}) root(i, s, -1, 0);
  }
  return roots;
}

Int weyl_group_order(const GroupId& g) {
  require_connected(g, "weyl_group_order");
  int k = g.rank();
  Int order = 1;
  for (int i = 2; i <= k; ++i) order *= i;
  int sign_flips = (g.kind == GroupKind::SO && g.n % 2 == 0) ? k - 1 : k;
  for (int i = 0; i < sign_flips; ++i) order *= 2;
  return order;
}

TorusCharacter restrict_weights(const SymPoly& chi, const GroupId& g) {
  require_connected(g, "restrict_weights");
  if (chi.nvars() != g.n)
    throw std::invalid_argument("restrict_weights: variable count mismatch");
  int k = g.rank();
  TorusCharacter tc;
  tc.rank = k;
  tc.poly = SymPoly(k);
  Exponents w(static_cast<size_t>(k));
  for (auto& [e, c] : chi.terms()) {
    for (int i = 0; i < k; ++i)
      w[static_cast<size_t>(i)] =
          e[static_cast<size_t>(i)] - e[static_cast<size_t>(k + i)];
    tc.poly.add_term(w, c);
  }
  return tc;
}

Int weyl_ct_trivial_multiplicity(const TorusCharacter& chi, const GroupId& g) {
  require_connected(g, "weyl_ct_trivial_multiplicity");
  int k = g.rank();
  if (chi.rank != k)
    throw std::invalid_argument("torus character rank mismatch");
  std::vector<Exponents> roots = root_system(g);
  // span[r][i]: total |alpha_i| over factors r..end, the window that keeps
  // only exponents still able to cancel to zero.
  std::vector<Exponents> span(roots.size() + 1,
                              Exponents(static_cast<size_t>(k), 0));
  for (size_t r = roots.size(); r-- > 0;)
    for (int i = 0; i < k; ++i)
      span[r][static_cast<size_t>(i)] =
          span[r + 1][static_cast<size_t>(i)] +
          std::abs(roots[r][static_cast<size_t>(i)]);
  SymPoly acc = chi.poly;
  for (size_t r = 0; r < roots.size(); ++r) {
    SymPoly next = acc;
    next.add_scaled_shifted(acc, roots[r], -1);  // * (1 - z^alpha)
    acc = SymPoly(k);
    for (auto& [e, c] : next.terms()) {
      bool reachable = true;
      for (int i = 0; i < k && reachable; ++i)
        reachable = std::abs(e[static_cast<size_t>(i)]) <=
                    span[r + 1][static_cast<size_t>(i)];
      if (reachable) acc.add_term(e, c);
    }
  }
  Int ct = acc.coeff(Exponents(static_cast<size_t>(k), 0));
  Int order = weyl_group_order(g);
  if (ct % order != 0)
    throw internal_error("Weyl constant term not divisible by |W|");
  return ct / order;
}

TruncatedSeries hilbert_series_weyl(const ModuleSpec& spec, const GroupId& g,
                                    int maxdeg) {
  require_connected(g, "hilbert_series_weyl");
  if (g.n != spec.n)
    throw std::invalid_argument("group and module sizes disagree");
  std::vector<SymPoly> chars = symmetric_algebra_characters(spec, maxdeg);
  TruncatedSeries h(maxdeg);
  for (int l = 0; l <= maxdeg; ++l)
    h[l] = weyl_ct_trivial_multiplicity(
        restrict_weights(chars[static_cast<size_t>(l)], g), g);
  return h;
}

Int lr_bruteforce(const Partition& lambda, const Partition& mu,
                  const Partition& nu) {
  if (lambda.weight() != mu.weight() + nu.weight()) return 0;
  int m = std::max(lambda.length(), mu.length() + nu.length());
  m = std::max(m, 1);
  SymPoly prod = schur_polynomial(mu, m) * schur_polynomial(nu, m);
  return schur_expand(prod).coeff(lambda);
}

}  // namespace classinv
