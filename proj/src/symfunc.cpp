#include "classinv/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace classinv {

namespace {

// mu runs over the shapes obtained from lambda by removing a horizontal
// strip: lambda_{i+1} <= mu_i <= lambda_i.
template <typename F>
void for_each_horizontal_strip_removal(const Partition& lambda, F&& f) {
  int rows = lambda.length();
  std::vector<int> mu(static_cast<size_t>(rows));
  auto rec = [&](auto&& self, int i) -> void {
    if (i == rows) {
      f(Partition(std::vector<int>(mu.begin(), mu.begin() + rows)));
      return;
    }
    int hi = lambda.part(i);
    int lo = lambda.part(i + 1);
    // Keep mu weakly decreasing against the previous chosen row.
    if (i > 0) hi = std::min(hi, mu[static_cast<size_t>(i - 1)]);
    for (int v = lo; v <= hi; ++v) {
      mu[static_cast<size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  if (rows == 0)
    f(Partition{});
  else
    rec(rec, 0);
}

std::mutex schur_mutex;
// Nodes are never erased, so returned references stay valid across inserts.
std::map<std::pair<Partition, int>, SymPoly> schur_memo;

const SymPoly& schur_cached(const Partition& lambda, int n) {
  {
    std::lock_guard lock(schur_mutex);
    auto it = schur_memo.find({lambda, n});
    if (it != schur_memo.end()) return it->second;
  }
  SymPoly result(n);
  if (lambda.length() <= n) {
    if (n == 0) {
      result = SymPoly::constant(0, 1);
    } else {
      for_each_horizontal_strip_removal(lambda, [&](const Partition& mu) {
        int strip = lambda.weight() - mu.weight();
        const SymPoly& inner = schur_cached(mu, n - 1);
        for (auto& [e, c] : inner.terms()) {
          Exponents ext = e;
          ext.push_back(strip);
          result.add_term(std::move(ext), c);
        }
      });
    }
  }
  std::lock_guard lock(schur_mutex);
  return schur_memo.emplace(std::pair{lambda, n}, std::move(result))
      .first->second;
}

std::mutex kostka_mutex;
std::map<std::pair<Partition, std::vector<int>>, Int> kostka_memo;

Int kostka_rec(const Partition& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  {
    std::lock_guard lock(kostka_mutex);
    auto it = kostka_memo.find({lambda, mu});
    if (it != kostka_memo.end()) return it->second;
  }
  std::vector<int> rest(mu.begin(), mu.end() - 1);
  int strip = mu.back();
  Int total = 0;
  for_each_horizontal_strip_removal(lambda, [&](const Partition& nu) {
    if (lambda.weight() - nu.weight() == strip) total += kostka_rec(nu, rest);
  });
  std::lock_guard lock(kostka_mutex);
  return kostka_memo.emplace(std::pair{lambda, mu}, std::move(total))
      .first->second;
}

}  // namespace

SymPoly schur_polynomial(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("schur_polynomial: n must be positive");
  if (lambda.length() > n)
    throw std::invalid_argument("schur_polynomial: partition longer than n");
  return schur_cached(lambda, n);
}

Int kostka_number(const Partition& lambda, const std::vector<int>& mu) {
  for (int m : mu)
    if (m < 0) throw std::invalid_argument("kostka_number: negative content");
  if (lambda.weight() != std::accumulate(mu.begin(), mu.end(), 0))
    throw std::invalid_argument("kostka_number: size mismatch");
  return kostka_rec(lambda, mu);
}

SchurExpansion schur_expand(const SymPoly& f) {
  // Leading-monomial subtraction in decreasing lex order.  Symmetry lets the
  // subtraction be carried on partition exponents alone: subtracting
  // c * s_lambda changes the coefficient at a partition exponent mu by
  // c * K_{lambda mu}, and K_{lambda mu} = 0 unless lambda >= mu.  The
  // upfront check reproduces the stated error behavior for asymmetric input.
  if (!f.is_symmetric()) throw std::invalid_argument("input not symmetric");
  SchurExpansion out;
  out.nvars = f.nvars();
  std::map<Partition, Int> rest;
  for (auto& [e, c] : f.terms()) {
    bool decreasing = true;
    for (size_t i = 0; i + 1 < e.size() && decreasing; ++i)
      decreasing = e[i] >= e[i + 1];
    if (decreasing && (e.empty() || e.back() >= 0)) rest.emplace(Partition(e), c);
  }
  while (!rest.empty()) {
    auto lead = std::prev(rest.end());
    Partition lambda = lead->first;
    Int coeff = lead->second;
    rest.erase(lead);
    if (coeff == 0) continue;
    for (auto& [mu, v] : rest)
      if (mu.weight() == lambda.weight())
        v -= coeff * kostka_rec(lambda, mu.parts());
    out.coeffs.emplace(std::move(lambda), std::move(coeff));
  }
  return out;
}

Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu) {
  if (lambda.weight() != mu.weight() + nu.weight()) return 0;
  if (!lambda.contains(nu) || !lambda.contains(mu)) return 0;
  if (mu.empty()) return lambda == nu ? 1 : 0;
  // Cells of lambda/nu in reverse-reading-word order: rows top to bottom,
  // right to left within each row.  Filling in this order lets the lattice
  // condition and both tableau constraints be checked incrementally.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = lambda.part(i) - 1; j >= nu.part(i); --j)
      cells.emplace_back(i, j);
  int m = mu.length();
  std::vector<std::vector<int>> fill(
      static_cast<size_t>(lambda.length()),
      std::vector<int>(static_cast<size_t>(lambda.part(0)), 0));
  std::vector<int> counts(static_cast<size_t>(m + 1), 0);
  Int total = 0;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      total += 1;
      return;
    }
    auto [i, j] = cells[idx];
    for (int v = 1; v <= m; ++v) {
      if (counts[static_cast<size_t>(v)] >= mu.part(v - 1)) continue;
      // lattice word: every prefix has #v <= #(v-1)
      if (v >= 2 && counts[static_cast<size_t>(v)] + 1 >
                        counts[static_cast<size_t>(v - 1)])
        continue;
      // weakly increasing along rows (right neighbor already placed)
      if (j + 1 < lambda.part(i) &&
          fill[static_cast<size_t>(i)][static_cast<size_t>(j + 1)] != 0 &&
          v > fill[static_cast<size_t>(i)][static_cast<size_t>(j + 1)])
        continue;
      // strictly increasing down columns (cell above already placed)
      if (i > 0 && j < lambda.part(i - 1) && j >= nu.part(i - 1) &&
          v <= fill[static_cast<size_t>(i - 1)][static_cast<size_t>(j)])
        continue;
      fill[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
      ++counts[static_cast<size_t>(v)];
      self(self, idx + 1);
      --counts[static_cast<size_t>(v)];
      fill[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
    }
  };
  rec(rec, 0);
  return total;
}

Int gl_dimension(const Partition& lambda, int n) {
  if (lambda.length() > n)
    throw std::invalid_argument("gl_dimension: partition longer than n");
  Int num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= lambda.part(i) - lambda.part(j) + j - i;
      den *= j - i;
    }
  if (num % den != 0) throw internal_error("gl_dimension: non-integer result");
  return num / den;
}

}  // namespace classinv
