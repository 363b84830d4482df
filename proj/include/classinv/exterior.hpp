#pragma once

#include <optional>
#include <string>
#include <vector>

#include "classinv/branching.hpp"
#include "classinv/partition.hpp"
#include "classinv/series.hpp"

namespace classinv {

// Lambda(S^2 V) or Lambda(Lambda^2 V).
enum class ExteriorKind { SYM2, ALT2 };

std::string exterior_kind_name(ExteriorKind kind);  // "sym2" / "alt2"

// Top exterior degree: n(n+1)/2 for SYM2, n(n-1)/2 for ALT2.
int exterior_degree_bound(ExteriorKind kind, int n);

// Exact polynomial with integer coefficients; trailing zeros trimmed.
struct HilbertPolynomial {
  std::vector<Int> coeffs;

  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<Int> c) : coeffs(std::move(c)) {
    trim();
  }
  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Int coeff(int d) const {
    return d >= 0 && d <= degree() ? coeffs[static_cast<size_t>(d)] : Int(0);
  }
  void add(int d, const Int& c);
  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) =
      default;
  std::string to_string() const;
};

// The multiplicity-free GL(n) decomposition of the i-th exterior power:
// all lambda of size 2i with Frobenius coordinates (alpha+1 | alpha) for
// SYM2 and (alpha-1 | alpha) for ALT2, over strict alpha with
// alpha_1 <= n-1 (and alpha_p > 0 for ALT2).
std::vector<Partition> exterior_decomposition(ExteriorKind kind, int n, int i);

// Filter path: count the shapes whose trivial multiplicity is 1.
HilbertPolynomial exterior_invariant_poly(ExteriorKind kind, const GroupId& g);

// Closed-form path: the finite constrained summations, one transcription per
// (kind, group, parity of n) case.
HilbertPolynomial closed_form_exterior(ExteriorKind kind, const GroupId& g);

// prod_d (1 + t^d): Hilbert polynomial of a free exterior algebra.
HilbertPolynomial exterior_generator_product(const std::vector<int>& degrees);

// Generator degrees where a free-exterior-algebra structure is known:
// SYM2/Sp(2k): 3,7,...,4k-1; ALT2/O,SO(2k+1): 3,...,4k-1;
// ALT2/O(2k): 3,...,4k-5; ALT2/SO(2k): 3,...,4k-5 plus 2k-1.
std::optional<std::vector<int>> exterior_generator_degrees(ExteriorKind kind,
                                                           const GroupId& g);

}  // namespace classinv
