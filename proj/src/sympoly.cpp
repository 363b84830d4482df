#include "classinv/sympoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace classinv {

void SymPoly::add_term(Exponents e, Int c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  SymPoly r(a.nvars_);
  Exponents e(static_cast<size_t>(a.nvars_));
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

SymPoly& SymPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

void SymPoly::add_scaled_shifted(const SymPoly& o, const Exponents& e,
                                 const Int& c) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  if (c == 0) return;
  Exponents shifted(static_cast<size_t>(nvars_));
  for (auto& [eo, co] : o.terms_) {
    for (size_t i = 0; i < shifted.size(); ++i) shifted[i] = eo[i] + e[i];
    add_term(shifted, co * c);
  }
}

void SymPoly::truncate_total_degree(int cap) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    int d = std::accumulate(it->first.begin(), it->first.end(), 0);
    if (d > cap)
      it = terms_.erase(it);
    else
      ++it;
  }
}

int SymPoly::total_degree() const {
  int d = -1;
  for (auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool SymPoly::is_symmetric() const {
  for (int i = 0; i + 1 < nvars_; ++i) {
    std::vector<int> perm(static_cast<size_t>(nvars_));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(i + 1)]);
    if (!(permute_variables(perm) == *this)) return false;
  }
  return true;
}

SymPoly SymPoly::permute_variables(const std::vector<int>& perm) const {
  SymPoly r(nvars_);
  Exponents e(static_cast<size_t>(nvars_));
  for (auto& [eo, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i)
      e[static_cast<size_t>(perm[i])] = eo[i];
    r.add_term(e, c);
  }
  return r;
}

SymPoly SymPoly::invert_variable(int i) const {
  SymPoly r(nvars_);
  for (auto& [eo, c] : terms_) {
    Exponents e = eo;
    e[static_cast<size_t>(i)] = -e[static_cast<size_t>(i)];
    r.add_term(std::move(e), c);
  }
  return r;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str();
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0)
        s += "*x" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace classinv
