#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace classinv {

// All multiplicities, coefficients and dimensions are exact integers.
using Int = boost::multiprecision::cpp_int;

// Raised on conditions that indicate a bug rather than bad input
// (non-integer Weyl constant term, non-symmetric engine polynomial, ...).
// The CLI maps it to exit code 4.
struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long long to_int64(const Int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw internal_error("integer too large for 64-bit serialization");
  return static_cast<long long>(v);
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: product of j consecutive integers is divisible by j!
  }
  return r;
}

}  // namespace classinv
