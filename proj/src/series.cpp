#include "classinv/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace classinv {

bool TruncatedSeries::agrees_with(const TruncatedSeries& o, int upto) const {
  if (upto > maxdeg || upto > o.maxdeg)
    throw std::invalid_argument("series comparison beyond truncation degree");
  for (int d = 0; d <= upto; ++d)
    if ((*this)[d] != o[d]) return false;
  return true;
}

int TruncatedSeries::first_mismatch(const TruncatedSeries& o) const {
  int upto = std::min(maxdeg, o.maxdeg);
  for (int d = 0; d <= upto; ++d)
    if ((*this)[d] != o[d]) return d;
  return -1;
}

std::string TruncatedSeries::to_string() const {
  std::string s = "[";
  for (int d = 0; d <= maxdeg; ++d) {
    if (d) s += ',';
    s += coeffs[static_cast<size_t>(d)].str();
  }
  s += ']';
  return s;
}

TruncatedSeries expand_rational(const RationalForm& r, int maxdeg) {
  if (maxdeg < 0) throw std::invalid_argument("expand_rational: negative maxdeg");
  TruncatedSeries s(maxdeg);
  for (int d = 0; d <= maxdeg && d < static_cast<int>(r.numerator.size()); ++d)
    s[d] = r.numerator[static_cast<size_t>(d)];
  for (auto [d, e] : r.denominator_factors) {
    if (d < 1 || e < 1)
      throw std::invalid_argument("expand_rational: invalid denominator factor");
    for (int rep = 0; rep < e; ++rep)
      for (int l = d; l <= maxdeg; ++l) s[l] += s[l - d];
  }
  return s;
}

}  // namespace classinv
