#pragma once

#include <string>
#include <utility>
#include <vector>

#include "classinv/ints.hpp"

namespace classinv {

// Exact univariate power series in t, truncated at maxdeg.
struct TruncatedSeries {
  int maxdeg = 0;
  std::vector<Int> coeffs;  // size maxdeg + 1

  TruncatedSeries() : coeffs(1) {}
  explicit TruncatedSeries(int maxdeg_)
      : maxdeg(maxdeg_), coeffs(static_cast<size_t>(maxdeg_) + 1) {}

  static TruncatedSeries one(int maxdeg) {
    TruncatedSeries s(maxdeg);
    s.coeffs[0] = 1;
    return s;
  }

  Int& operator[](int d) { return coeffs[static_cast<size_t>(d)]; }
  const Int& operator[](int d) const { return coeffs[static_cast<size_t>(d)]; }

  // Comparisons are only meaningful up to the common truncation degree.
  bool agrees_with(const TruncatedSeries& o) const {
    return agrees_with(o, std::min(maxdeg, o.maxdeg));
  }
  bool agrees_with(const TruncatedSeries& o, int upto) const;
  // -1 when there is no disagreement up to the common degree.
  int first_mismatch(const TruncatedSeries& o) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  std::string to_string() const;
};

// numerator(t) / prod (1 - t^d)^e, with denominator nonzero at t = 0.
struct RationalForm {
  std::vector<Int> numerator;                        // coefficient list
  std::vector<std::pair<int, int>> denominator_factors;  // (d, e)
};

// Exact expansion by repeated geometric-series convolution.
TruncatedSeries expand_rational(const RationalForm& r, int maxdeg);

}  // namespace classinv
