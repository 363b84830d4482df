#include "classinv/exterior.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace classinv {

std::string exterior_kind_name(ExteriorKind kind) {
  return kind == ExteriorKind::SYM2 ? "sym2" : "alt2";
}

int exterior_degree_bound(ExteriorKind kind, int n) {
  return kind == ExteriorKind::SYM2 ? n * (n + 1) / 2 : n * (n - 1) / 2;
}

void HilbertPolynomial::add(int d, const Int& c) {
  if (c == 0) return;
  if (d >= static_cast<int>(coeffs.size()))
    coeffs.resize(static_cast<size_t>(d) + 1);
  coeffs[static_cast<size_t>(d)] += c;
  trim();
}

std::string HilbertPolynomial::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ',';
    s += coeffs[i].str();
  }
  s += ']';
  return s;
}

std::vector<Partition> exterior_decomposition(ExteriorKind kind, int n, int i) {
  if (i < 0 || i > exterior_degree_bound(kind, n))
    throw std::invalid_argument("exterior degree out of range");
  std::vector<Partition> out;
  // |lambda| = 2|alpha| + 2p for SYM2, 2|alpha| for ALT2.
  for (int p = 0; p <= n; ++p) {
    for (const auto& alpha :
         enumerate_strict_partitions(n - 1, p, kind == ExteriorKind::ALT2)) {
      int wa = std::accumulate(alpha.begin(), alpha.end(), 0);
      int size = kind == ExteriorKind::SYM2 ? 2 * wa + 2 * p : 2 * wa;
      if (size != 2 * i) continue;
      FrobeniusCoords f;
      f.legs = alpha;
      f.arms = alpha;
      for (int& a : f.arms) a += kind == ExteriorKind::SYM2 ? 1 : -1;
      out.push_back(frobenius_to_partition(f));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

HilbertPolynomial exterior_invariant_poly(ExteriorKind kind, const GroupId& g) {
  int bound = exterior_degree_bound(kind, g.n);
  HilbertPolynomial h;
  for (int i = 0; i <= bound; ++i) {
    Int c = 0;
    for (const Partition& lambda : exterior_decomposition(kind, g.n, i))
      c += trivial_multiplicity(lambda, g);
    h.add(i, c);
  }
  return h;
}

namespace {

enum class Parity { ANY, EVEN, ODD };

// Adds t^{t_offset + sum w_i a_i} over all a in N^m with sum a_i <= bound
// (or == bound), subject to per-coordinate parity constraints.
void add_constrained_sum(HilbertPolynomial& h, int t_offset, int m, int bound,
                         bool equality, const std::vector<Parity>& parities,
                         const std::vector<int>& weights) {
  if (bound < 0) return;
  std::vector<int> a(static_cast<size_t>(m));
  auto rec = [&](auto&& self, int pos, int used, int texp) -> void {
    if (pos == m) {
      if (!equality || used == bound) h.add(t_offset + texp, 1);
      return;
    }
    for (int v = 0; used + v <= bound; ++v) {
      Parity par = parities[static_cast<size_t>(pos)];
      if (par == Parity::EVEN && v % 2 != 0) continue;
      if (par == Parity::ODD && v % 2 != 1) continue;
      self(self, pos + 1, used + v,
           texp + v * weights[static_cast<size_t>(pos)]);
    }
  };
  if (m == 0) {
    if (!equality || bound == 0) h.add(t_offset, 1);
    return;
  }
  rec(rec, 0, 0, 0);
}

std::vector<Parity> all_even(int m) { return std::vector<Parity>(static_cast<size_t>(m), Parity::EVEN); }
std::vector<Parity> even_then_odd(int m) {
  auto p = all_even(m);
  if (m > 0) p.back() = Parity::ODD;
  return p;
}
std::vector<int> weights_2_step(int m) {  // 2, 4, ..., 2m
  std::vector<int> w(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) w[static_cast<size_t>(i)] = 2 * (i + 1);
  return w;
}
std::vector<int> weights_odd(int m) {  // 1, 3, ..., 2m-1
  std::vector<int> w(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) w[static_cast<size_t>(i)] = 2 * i + 1;
  return w;
}
int triangle(int p) { return p * (p + 1) / 2; }

HilbertPolynomial sym2_closed_o(int n) {
  HilbertPolynomial h;
  h.add(0, 1);
  h.add(1, 1);
  for (int p = 2; p <= n; p += 2)
    add_constrained_sum(h, triangle(p), p / 2, n - p, false,
                        even_then_odd(p / 2), weights_2_step(p / 2));
  for (int p = 3; p <= n; p += 2)
    add_constrained_sum(h, triangle(p), (p - 1) / 2, n - p, false,
                        all_even((p - 1) / 2), weights_2_step((p - 1) / 2));
  return h;
}

HilbertPolynomial sym2_closed_sp(int n) {
  HilbertPolynomial h;
  h.add(0, 1);
  for (int p = 2; p <= n; p += 2)
    add_constrained_sum(h, triangle(p), p / 2, n - p, false, all_even(p / 2),
                        weights_2_step(p / 2));
  return h;
}

HilbertPolynomial sym2_closed_so(int n) {
  if (n % 2 == 1) return sym2_closed_o(n);
  HilbertPolynomial h = sym2_closed_o(n);
  // odd-partition contributions, pinned by alpha_1 = n-1: equality sums with
  // odd weights 1, 3, ..., one per parity of p
  for (int p = 1; p <= n; p += 2)
    add_constrained_sum(h, triangle(p), (p + 1) / 2, n - p, true,
                        even_then_odd((p + 1) / 2), weights_odd((p + 1) / 2));
  for (int p = 2; p <= n; p += 2)
    add_constrained_sum(h, triangle(p), p / 2, n - p, true, all_even(p / 2),
                        weights_odd(p / 2));
  return h;
}

HilbertPolynomial alt2_closed_o(int n) {
  HilbertPolynomial h;
  h.add(0, 1);
  for (int p = 2; p <= n - 1; p += 2)
    add_constrained_sum(h, triangle(p), p / 2, n - p - 1, false,
                        all_even(p / 2), weights_2_step(p / 2));
  return h;
}

HilbertPolynomial alt2_closed_sp(int n) {
  HilbertPolynomial h;
  h.add(0, 1);
  h.add(1, 1);
  for (int p = 2; p <= n - 1; p += 2)
    add_constrained_sum(h, triangle(p), p / 2, n - p - 1, false,
                        even_then_odd(p / 2), weights_2_step(p / 2));
  for (int p = 3; p <= n - 1; p += 2)
    add_constrained_sum(h, triangle(p), (p - 1) / 2, n - p - 1, false,
                        all_even((p - 1) / 2), weights_2_step((p - 1) / 2));
  return h;
}

HilbertPolynomial alt2_closed_so(int n) {
  if (n % 2 == 1) return alt2_closed_o(n);
  HilbertPolynomial h = alt2_closed_o(n);
  for (int p = 1; p <= n - 1; p += 2)
    add_constrained_sum(h, triangle(p), (p + 1) / 2, n - p - 1, true,
                        all_even((p + 1) / 2), weights_odd((p + 1) / 2));
  return h;
}

}  // namespace

HilbertPolynomial closed_form_exterior(ExteriorKind kind, const GroupId& g) {
  if (kind == ExteriorKind::SYM2) {
    switch (g.kind) {
      case GroupKind::O: return sym2_closed_o(g.n);
      case GroupKind::SP: return sym2_closed_sp(g.n);
      case GroupKind::SO: return sym2_closed_so(g.n);
    }
  } else {
    switch (g.kind) {
      case GroupKind::O: return alt2_closed_o(g.n);
      case GroupKind::SP: return alt2_closed_sp(g.n);
      case GroupKind::SO: return alt2_closed_so(g.n);
    }
  }
  throw std::invalid_argument("unknown exterior case");
}

HilbertPolynomial exterior_generator_product(const std::vector<int>& degrees) {
  HilbertPolynomial h;
  h.add(0, 1);
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("generator degree must be positive");
    HilbertPolynomial next = h;
    for (int i = 0; i <= h.degree(); ++i) next.add(i + d, h.coeff(i));
    h = std::move(next);
  }
  return h;
}

std::optional<std::vector<int>> exterior_generator_degrees(ExteriorKind kind,
                                                           const GroupId& g) {
  auto arithmetic = [](int count) {  // 3, 7, ..., 4*count - 1
    std::vector<int> d(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) d[static_cast<size_t>(i)] = 4 * i + 3;
    return d;
  };
  int k = g.rank();
  if (kind == ExteriorKind::SYM2)
    return g.kind == GroupKind::SP ? std::optional(arithmetic(k)) : std::nullopt;
  switch (g.kind) {
    case GroupKind::SP:
      return std::nullopt;
    case GroupKind::O:
      return arithmetic(g.n % 2 == 1 ? k : k - 1);
    case GroupKind::SO: {
      if (g.n % 2 == 1) return arithmetic(k);
      std::vector<int> d = arithmetic(k - 1);
      d.push_back(2 * k - 1);
      std::sort(d.begin(), d.end());
      return d;
    }
  }
  return std::nullopt;
}

}  // namespace classinv
