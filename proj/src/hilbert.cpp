#include "classinv/hilbert.hpp"

#include <stdexcept>

namespace classinv {

SymPoly module_character(const ModuleSpec& spec) {
  SymPoly chi(spec.n);
  for (auto& [lambda, mult] : spec.components) {
    SymPoly s = schur_polynomial(lambda, spec.n);
    s *= mult;
    chi += s;
  }
  return chi;
}

std::vector<SymPoly> symmetric_algebra_characters(const ModuleSpec& spec,
                                                  int maxdeg) {
  if (maxdeg < 0)
    throw std::invalid_argument("symmetric_algebra_characters: negative maxdeg");
  std::vector<SymPoly> res(static_cast<size_t>(maxdeg) + 1, SymPoly(spec.n));
  res[0] = SymPoly::constant(spec.n, 1);
  SymPoly chi = module_character(spec);
  // One geometric factor 1/(1 - x^mu t) per basis weight; ascending l keeps
  // the in-place update reading the already-updated lower slot.
  for (auto& [mu, a_mu] : chi.terms()) {
    long reps = to_int64(a_mu);
    for (long r = 0; r < reps; ++r)
      for (int l = 1; l <= maxdeg; ++l)
        res[static_cast<size_t>(l)].add_scaled_shifted(
            res[static_cast<size_t>(l - 1)], mu, 1);
  }
  return res;
}

MultiplicityTable multiplicity_table(const ModuleSpec& spec, int maxdeg) {
  MultiplicityTable table;
  table.n = spec.n;
  table.maxdeg = maxdeg;
  std::vector<SymPoly> chars = symmetric_algebra_characters(spec, maxdeg);
  table.rows.reserve(chars.size());
  for (const SymPoly& chi : chars) table.rows.push_back(schur_expand(chi));
  return table;
}

TruncatedSeries hilbert_series_invariants(const MultiplicityTable& table,
                                          const GroupId& g) {
  if (g.n != table.n)
    throw std::invalid_argument("group and module sizes disagree");
  TruncatedSeries h(table.maxdeg);
  for (int l = 0; l <= table.maxdeg; ++l)
    for (auto& [lambda, m] : table.rows[static_cast<size_t>(l)].coeffs)
      h[l] += m * trivial_multiplicity(lambda, g);
  return h;
}

TruncatedSeries hilbert_series_invariants(const ModuleSpec& spec,
                                          const GroupId& g, int maxdeg) {
  return hilbert_series_invariants(multiplicity_table(spec, maxdeg), g);
}

namespace {

struct SeriesTerm {
  Exponents exps;
  int degree;
  Int coeff;
};

// lambda written in the difference coordinates of the second multiplicity
// series: v_i carries lambda_i - lambda_{i+1}, v_n carries lambda_n.
Exponents difference_exponents(const Partition& lambda, int n) {
  Exponents d(static_cast<size_t>(n));
  for (int i = 0; i + 1 < n; ++i)
    d[static_cast<size_t>(i)] = lambda.part(i) - lambda.part(i + 1);
  d[static_cast<size_t>(n - 1)] = lambda.part(n - 1);
  return d;
}

// v_j <- 0: only terms free of v_j survive.
void substitute_zero(std::vector<SeriesTerm>& terms, int j) {
  std::vector<SeriesTerm> out;
  for (auto& t : terms)
    if (t.exps[static_cast<size_t>(j)] == 0) out.push_back(std::move(t));
  terms = std::move(out);
}

// v_j <- (1/2)(value at -1 + value at 1): keeps even exponents of v_j.
void average_plus_minus_one(std::vector<SeriesTerm>& terms, int j) {
  std::vector<SeriesTerm> out;
  for (auto& t : terms) {
    Int at_minus = t.exps[static_cast<size_t>(j)] % 2 == 0 ? t.coeff : -t.coeff;
    Int sum = at_minus + t.coeff;
    if (sum == 0) continue;
    if (sum % 2 != 0) throw internal_error("averaging step not divisible by 2");
    t.coeff = sum / 2;
    out.push_back(std::move(t));
  }
  terms = std::move(out);
}

TruncatedSeries collect(const std::vector<SeriesTerm>& terms, int maxdeg) {
  TruncatedSeries h(maxdeg);
  for (auto& t : terms) h[t.degree] += t.coeff;
  return h;
}

}  // namespace

TruncatedSeries hilbert_series_via_substitution(const MultiplicityTable& table,
                                                const GroupId& g) {
  if (g.n != table.n)
    throw std::invalid_argument("group and module sizes disagree");
  int n = table.n;
  std::vector<SeriesTerm> terms;
  for (int l = 0; l <= table.maxdeg; ++l)
    for (auto& [lambda, m] : table.rows[static_cast<size_t>(l)].coeffs) {
      Exponents e = g.kind == GroupKind::O
                        ? Exponents(lambda.parts().begin(), lambda.parts().end())
                        : difference_exponents(lambda, n);
      e.resize(static_cast<size_t>(n), 0);
      terms.push_back({std::move(e), l, m});
    }
  switch (g.kind) {
    case GroupKind::SP:
      // (v_1, v_2, ..., v_{2k-1}, v_2k) <- (0, 1, ..., 0, 1)
      for (int j = 0; j < n; ++j)
        if (j % 2 == 0) substitute_zero(terms, j);
      break;
    case GroupKind::O:
      for (int j = 0; j < n; ++j) average_plus_minus_one(terms, j);
      break;
    case GroupKind::SO:
      // average v_1..v_{n-1}; the final variable is set to 1
      for (int j = 0; j + 1 < n; ++j) average_plus_minus_one(terms, j);
      break;
  }
  return collect(terms, table.maxdeg);
}

TruncatedSeries hilbert_series_via_substitution(const ModuleSpec& spec,
                                                const GroupId& g, int maxdeg) {
  return hilbert_series_via_substitution(multiplicity_table(spec, maxdeg), g);
}

}  // namespace classinv
