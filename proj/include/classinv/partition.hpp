#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace classinv {

// Weakly decreasing tuple of nonnegative integers, stored without trailing
// zeros.  Indexes irreducible polynomial GL(n)-modules by highest weight;
// part(i) pads with zeros, so the same value works for any ambient n.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Parses the bracket form "[3,1]"; "[]" is the empty partition.
  static Partition from_string(std::string_view s);

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  // 0-based row index; rows past the end are 0.
  int part(int i) const {
    return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  bool contains(const Partition& mu) const;  // mu_i <= lambda_i for all i

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic with implicit zero padding; total order, used for map keys.
  friend bool operator<(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

// Frobenius coordinates (arms | legs) along the main diagonal.
struct FrobeniusCoords {
  std::vector<int> arms;
  std::vector<int> legs;
};

FrobeniusCoords frobenius_coords(const Partition& lambda);
// Rejects arms/legs that are not strictly decreasing or of unequal length.
Partition frobenius_to_partition(const FrobeniusCoords& f);

struct HookRemoval {
  Partition result;
  int columns_spanned = 0;
  int rows_spanned = 0;
};

// Removes the first L boxes of the rim path of mu, starting at the bottom box
// of column 1 and walking the boundary toward the top-right.  Returns nothing
// when L exceeds the rim or the remaining boxes are not a Young diagram.
std::optional<HookRemoval> remove_boundary_hook(const Partition& mu, int L);

// Every nonzero part is even.
bool is_even_partition(const Partition& lambda);
// All n padded parts are odd (so lambda has exactly n nonzero parts).
// Rejects lambda with more than n parts.
bool is_odd_partition(const Partition& lambda, int n);
// lambda_1 = lambda_2, lambda_3 = lambda_4, ... after padding to n parts,
// i.e. lambda is the conjugate of an even partition.  Rejects odd n.
bool has_even_columns(const Partition& lambda, int n);

// All partitions of `size` with at most max_length parts, decreasing lex.
std::vector<Partition> enumerate_partitions(int size, int max_length);

// Strictly decreasing tuples a_1 > ... > a_p >= 0 with a_1 <= max_part and
// exactly num_parts entries, in increasing lexicographic order.  With
// positive_only the smallest entry must be > 0.  Returned as raw tuples, not
// Partition: a trailing 0 is a genuine part here and must not be normalized
// away (the tuple length p enters the Frobenius constructions).
std::vector<std::vector<int>> enumerate_strict_partitions(
    int max_part, int num_parts, bool positive_only = false);

}  // namespace classinv
