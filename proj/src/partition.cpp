#include "classinv/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace classinv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i + 1 < parts_.size(); ++i)
    if (parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  if (!parts_.empty() && parts_.back() < 0)
    throw std::invalid_argument("partition parts must be nonnegative");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::from_string(std::string_view s) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i >= s.size() || s[i] != '[')
    throw std::invalid_argument("partition must start with '['");
  ++i;
  std::vector<int> parts;
  skip_ws();
  while (i < s.size() && s[i] != ']') {
    if (!parts.empty()) {
      if (s[i] != ',')
        throw std::invalid_argument("expected ',' in partition literal");
      ++i;
      skip_ws();
    }
    int v = 0;
    bool any = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      any = true;
      ++i;
    }
    if (!any) throw std::invalid_argument("expected integer in partition literal");
    parts.push_back(v);
    skip_ws();
  }
  if (i >= s.size() || s[i] != ']')
    throw std::invalid_argument("partition must end with ']'");
  ++i;
  skip_ws();
  if (i != s.size())
    throw std::invalid_argument("trailing characters after partition literal");
  return Partition(std::move(parts));
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> cols(static_cast<size_t>(parts_[0]));
  for (int j = 1; j <= parts_[0]; ++j)
    cols[static_cast<size_t>(j - 1)] =
        static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                       [j](int p) { return p >= j; }));
  return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ']';
  return s;
}

bool operator<(const Partition& a, const Partition& b) {
  int m = std::max(a.length(), b.length());
  for (int i = 0; i < m; ++i)
    if (a.part(i) != b.part(i)) return a.part(i) < b.part(i);
  return false;
}

FrobeniusCoords frobenius_coords(const Partition& lambda) {
  FrobeniusCoords f;
  Partition conj = lambda.conjugate();
  for (int i = 0; lambda.part(i) > i; ++i) {
    f.arms.push_back(lambda.part(i) - i - 1);
    f.legs.push_back(conj.part(i) - i - 1);
  }
  return f;
}

Partition frobenius_to_partition(const FrobeniusCoords& f) {
  if (f.arms.size() != f.legs.size())
    throw std::invalid_argument("frobenius arms/legs must have equal length");
  auto strict = [](const std::vector<int>& v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] <= v[i + 1]) return false;
    return v.empty() || v.back() >= 0;
  };
  if (!strict(f.arms) || !strict(f.legs))
    throw std::invalid_argument("frobenius arms/legs must be strictly decreasing");
  int p = static_cast<int>(f.arms.size());
  int rows = p == 0 ? 0 : f.legs[0] + 1;
  std::vector<int> parts(static_cast<size_t>(rows), 0);
  // Rows through the diagonal block, then columns from the legs.
  for (int i = 0; i < p; ++i)
    parts[static_cast<size_t>(i)] = f.arms[static_cast<size_t>(i)] + i + 1;
  for (int j = 0; j < p; ++j) {
    int col_len = f.legs[static_cast<size_t>(j)] + j + 1;
    for (int i = p; i < col_len; ++i)
      parts[static_cast<size_t>(i)] = std::max(parts[static_cast<size_t>(i)], j + 1);
  }
  return Partition(std::move(parts));
}

std::optional<HookRemoval> remove_boundary_hook(const Partition& mu, int L) {
  if (mu.empty() || L < 1) throw std::invalid_argument("remove_boundary_hook: need nonempty shape and L >= 1");
  // Rim box (i,j) of row i: mu_{i+1} <= j <= mu_i (1-based), i.e. the boxes
  // with no box at (i+1, j+1).  Path runs bottom row first, left to right.
  std::vector<std::pair<int, int>> path;
  for (int i = mu.length(); i >= 1; --i) {
    int lo = std::max(mu.part(i), 1);  // mu.part(i) is row i+1 (0-based i)
    for (int j = lo; j <= mu.part(i - 1); ++j) path.emplace_back(i, j);
  }
  if (L > static_cast<int>(path.size())) return std::nullopt;
  std::set<std::pair<int, int>> removed(path.begin(), path.begin() + L);
  std::vector<int> rows;
  for (int i = 1; i <= mu.length(); ++i) {
    int kept = 0;
    bool gap = false;
    for (int j = 1; j <= mu.part(i - 1); ++j) {
      if (removed.count({i, j})) {
        gap = true;
      } else {
        if (gap) return std::nullopt;  // not left-justified
        ++kept;
      }
    }
    rows.push_back(kept);
  }
  for (size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i] < rows[i + 1]) return std::nullopt;
  std::set<int> cols, rws;
  for (auto& [i, j] : removed) {
    rws.insert(i);
    cols.insert(j);
  }
  HookRemoval hr;
  hr.result = Partition(std::move(rows));
  hr.columns_spanned = static_cast<int>(cols.size());
  hr.rows_spanned = static_cast<int>(rws.size());
  return hr;
}

bool is_even_partition(const Partition& lambda) {
  for (int p : lambda.parts())
    if (p % 2 != 0) return false;
  return true;
}

bool is_odd_partition(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("is_odd_partition: n must be positive");
  if (lambda.length() > n)
    throw std::invalid_argument("is_odd_partition: partition longer than n");
  for (int i = 0; i < n; ++i)
    if (lambda.part(i) % 2 == 0) return false;
  return true;
}

bool has_even_columns(const Partition& lambda, int n) {
  if (n < 1 || n % 2 != 0)
    throw std::invalid_argument("has_even_columns: n must be even and positive");
  if (lambda.length() > n)
    throw std::invalid_argument("has_even_columns: partition longer than n");
  for (int i = 0; i + 1 < n; i += 2)
    if (lambda.part(i) != lambda.part(i + 1)) return false;
  return true;
}

namespace {
void gen_partitions(int rest, int max_part, int slots, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (rest == 0) {
    out.emplace_back(acc);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(rest, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(rest - p, p, slots - 1, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int size, int max_length) {
  if (size < 0) throw std::invalid_argument("enumerate_partitions: negative size");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(size, size, max_length, acc, out);
  // Descending first parts are generated first, so this is decreasing lex.
  return out;
}

std::vector<std::vector<int>> enumerate_strict_partitions(int max_part,
                                                          int num_parts,
                                                          bool positive_only) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  int lo = positive_only ? 1 : 0;
  // Choose entries smallest-first so the emitted order is increasing lex.
  auto rec = [&](auto&& self, int pos, int min_val) -> void {
    if (pos == num_parts) {
      out.emplace_back(acc.rbegin(), acc.rend());
      return;
    }
    for (int v = min_val; v <= max_part - (num_parts - 1 - pos); ++v) {
      acc.push_back(v);
      self(self, pos + 1, v + 1);
      acc.pop_back();
    }
  };
  rec(rec, 0, lo);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace classinv
