#pragma once

#include <map>
#include <string>
#include <vector>

#include "classinv/ints.hpp"

namespace classinv {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial with exact integer coefficients over
// fixed-length exponent vectors.  Negative exponents are allowed (Laurent
// mode, used for torus characters); no zero coefficients are stored.
// The map's lexicographic key order makes the greatest term rbegin().
class SymPoly {
 public:
  SymPoly() = default;
  explicit SymPoly(int nvars) : nvars_(nvars) {}

  static SymPoly constant(int nvars, Int c) {
    SymPoly p(nvars);
    p.add_term(Exponents(static_cast<size_t>(nvars), 0), std::move(c));
    return p;
  }
  static SymPoly monomial(Exponents e, Int c) {
    SymPoly p(static_cast<int>(e.size()));
    p.add_term(std::move(e), std::move(c));
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Int>& terms() const { return terms_; }

  Int coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(Exponents e, Int c);

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  SymPoly& operator*=(const Int& c);

  // this += c * x^e * o; the workhorse of truncated geometric products.
  void add_scaled_shifted(const SymPoly& o, const Exponents& e, const Int& c);

  // Drops terms of total degree above cap.
  void truncate_total_degree(int cap);

  int total_degree() const;  // max over terms; -1 for the zero polynomial

  // True when invariant under all variable permutations (checked via
  // adjacent transpositions); exact, used by property tests.
  bool is_symmetric() const;

  // Applies an entrywise variable substitution given by a permutation with
  // signs: new exponent vector w, w[i] = sum over j mapped onto i.  Used by
  // the Weyl-symmetry property tests.
  SymPoly permute_variables(const std::vector<int>& perm) const;
  SymPoly invert_variable(int i) const;  // x_i -> x_i^{-1}

  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;  // for diagnostics

 private:
  int nvars_ = 0;
  std::map<Exponents, Int> terms_;
};

}  // namespace classinv
