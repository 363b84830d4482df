// Command-line front end: exact Hilbert series of invariant rings of
// Sp(2k), O(n), SO(n) on polynomial GL(n)-modules, exterior-algebra
// invariant polynomials, branching decompositions, and LR coefficients.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "classinv/branching.hpp"
#include "classinv/exterior.hpp"
#include "classinv/golden.hpp"
#include "classinv/hilbert.hpp"
#include "classinv/module_spec.hpp"
#include "classinv/weyl.hpp"

namespace {

using namespace classinv;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInternal = 4;
constexpr int kMaxDegCap = 32;

std::string group_name_short(const GroupId& g) {
  switch (g.kind) {
    case GroupKind::SP: return "sp";
    case GroupKind::O: return "o";
    case GroupKind::SO: return "so";
  }
  return {};
}

json series_json(const TruncatedSeries& s) {
  json arr = json::array();
  for (const Int& c : s.coeffs) arr.push_back(to_int64(c));
  return arr;
}

json poly_json(const HilbertPolynomial& p) {
  json arr = json::array();
  for (const Int& c : p.coeffs) arr.push_back(to_int64(c));
  return arr;
}

struct RunConfig {
  std::string group;
  int n = 0;
  std::string spec_text;
  int maxdeg = 12;
  std::string oracle = "none";
  std::string format = "text";
  std::string golden_key;
  std::string catalog_path;
};

int run_series(const RunConfig& opt) {
  if (opt.maxdeg < 0 || opt.maxdeg > kMaxDegCap) {
    std::cerr << "maxdeg must be between 0 and " << kMaxDegCap << "\n";
    return kExitUsage;
  }
  GroupId g(group_kind_from_name(opt.group), opt.n);
  ModuleSpec spec = ModuleSpec::parse(opt.spec_text, opt.n);
  MultiplicityTable table = multiplicity_table(spec, opt.maxdeg);
  TruncatedSeries h = hilbert_series_invariants(table, g);

  json out;
  out["group"] = group_name_short(g);
  out["n"] = g.n;
  out["maxdeg"] = opt.maxdeg;
  out["coeffs"] = series_json(h);
  bool mismatch = false;

  if (opt.oracle != "none") {
    TruncatedSeries ref(opt.maxdeg);
    if (opt.oracle == "weyl") {
      ref = hilbert_series_weyl(spec, g, opt.maxdeg);
    } else if (opt.oracle == "branching") {
      if (g.kind == GroupKind::O)
        throw std::invalid_argument(
            "oracle=branching is not defined for O(n), use predicate path");
      for (int l = 0; l <= opt.maxdeg; ++l)
        for (auto& [lambda, m] : table.rows[static_cast<size_t>(l)].coeffs)
          ref[l] += m * trivial_multiplicity_via_branching(lambda, g);
    } else {
      throw std::invalid_argument("unknown oracle '" + opt.oracle + "'");
    }
    json diff = json::array();
    for (int l = 0; l <= opt.maxdeg; ++l)
      if (h[l] != ref[l])
        diff.push_back({{"degree", l},
                        {"engine", to_int64(h[l])},
                        {"oracle", to_int64(ref[l])}});
    mismatch |= !diff.empty();
    out["oracle"] = {{"kind", opt.oracle},
                     {"coeffs", series_json(ref)},
                     {"diff", diff}};
  }

  if (!opt.golden_key.empty()) {
    auto catalog = opt.catalog_path.empty() ? golden_forms()
                                            : golden_forms(opt.catalog_path);
    auto entry = find_golden(catalog, opt.golden_key);
    if (!entry)
      throw std::invalid_argument("no catalog entry '" + opt.golden_key + "'");
    TruncatedSeries expected = expand_rational(entry->form, opt.maxdeg);
    int bad = h.first_mismatch(expected);
    mismatch |= bad >= 0;
    out["golden"] = {{"key", entry->key()},
                     {"coeffs", series_json(expected)},
                     {"verdict", bad < 0 ? "MATCH" : "MISMATCH"},
                     {"first_mismatch", bad}};
  }

  if (opt.format == "json") {
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "H(C[W]^" << g.name() << ", t) = " << h.to_string()
              << "  (W = " << (spec.empty() ? "0" : spec.to_string())
              << ", degree " << opt.maxdeg << ")\n";
    if (out.contains("oracle")) {
      std::cout << "oracle " << opt.oracle << ":   "
                << out["oracle"]["coeffs"].dump()
                << (out["oracle"]["diff"].empty() ? "  [agrees]"
                                                  : "  [DISAGREES]")
                << "\n";
      for (auto& d : out["oracle"]["diff"])
        std::cout << "  degree " << d["degree"] << ": engine " << d["engine"]
                  << " vs oracle " << d["oracle"] << "\n";
    }
    if (out.contains("golden")) {
      std::cout << "golden " << opt.golden_key << ": "
                << out["golden"]["verdict"].get<std::string>();
      if (out["golden"]["first_mismatch"].get<int>() >= 0)
        std::cout << " (first mismatch at degree "
                  << out["golden"]["first_mismatch"] << ")";
      std::cout << "\n";
    }
  }
  return mismatch ? kExitMismatch : kExitOk;
}

int run_exterior(const std::string& kind_name, const std::string& group,
                 int n, const std::string& format) {
  ExteriorKind kind;
  if (kind_name == "sym2")
    kind = ExteriorKind::SYM2;
  else if (kind_name == "alt2")
    kind = ExteriorKind::ALT2;
  else
    throw std::invalid_argument("kind must be sym2 or alt2");
  GroupId g(group_kind_from_name(group), n);
  HilbertPolynomial h = exterior_invariant_poly(kind, g);
  HilbertPolynomial closed = closed_form_exterior(kind, g);
  json out;
  out["kind"] = kind_name;
  out["group"] = group_name_short(g);
  out["n"] = n;
  out["coeffs"] = poly_json(h);
  if (auto degs = exterior_generator_degrees(kind, g))
    out["generator_degrees"] = *degs;
  if (format == "json") {
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "H(" << (kind == ExteriorKind::SYM2 ? "Lambda(S^2 V)"
                                                     : "Lambda(Lambda^2 V)")
              << "^" << g.name() << ", t) = " << h.to_string() << "\n";
    if (out.contains("generator_degrees"))
      std::cout << "free exterior algebra on generator degrees "
                << out["generator_degrees"].dump() << "\n";
  }
  if (!(h == closed)) {
    std::cerr << "closed-form path disagrees: " << closed.to_string() << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int run_branch(const std::string& group, int n, const std::string& lambda_text,
               const std::string& format) {
  GroupId g(group_kind_from_name(group), n);
  Partition lambda = Partition::from_string(lambda_text);
  std::vector<BranchTerm> terms =
      g.kind == GroupKind::SP
          ? branch_to_sp(lambda, n / 2)
          : branch_to_o(lambda, n, g.kind == GroupKind::SO);
  json arr = json::array();
  for (const BranchTerm& t : terms)
    arr.push_back({{"mu", t.mu.parts()},
                   {"mult", to_int64(t.multiplicity)},
                   {"epsilon", t.epsilon_power}});
  json out{{"group", group_name_short(g)},
           {"n", n},
           {"lambda", lambda.parts()},
           {"terms", arr}};
  if (format == "json") {
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "V_" << lambda.to_string() << " | " << g.name() << " =";
    if (terms.empty()) std::cout << " 0";
    for (const BranchTerm& t : terms) {
      std::cout << "  " << t.multiplicity.str();
      if (t.epsilon_power) std::cout << "*eps";
      std::cout << "*[" << t.mu.to_string() << "]";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int run_lr(const std::string& la, const std::string& mu, const std::string& nu,
           const std::string& format) {
  Partition l = Partition::from_string(la);
  Partition m = Partition::from_string(mu);
  Partition v = Partition::from_string(nu);
  Int c = lr_coefficient(l, m, v);
  if (format == "json") {
    json out{{"lambda", l.parts()},
             {"mu", m.parts()},
             {"nu", v.parts()},
             {"coeff", to_int64(c)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "c^" << l.to_string() << "_" << m.to_string() << ","
              << v.to_string() << " = " << c.str() << "\n";
  }
  return kExitOk;
}

int run_golden_all(const std::string& catalog_path, const std::string& format) {
  auto catalog =
      catalog_path.empty() ? golden_forms() : golden_forms(catalog_path);
  json rows = json::array();
  bool any_bad = false;
  for (const GoldenEntry& e : catalog) {
    ModuleSpec spec = ModuleSpec::parse(e.spec_text, e.group.n);
    TruncatedSeries h = hilbert_series_invariants(spec, e.group, e.maxdeg);
    TruncatedSeries expected = expand_rational(e.form, e.maxdeg);
    int bad = h.first_mismatch(expected);
    any_bad |= bad >= 0;
    rows.push_back({{"key", e.key()},
                    {"verdict", bad < 0 ? "MATCH" : "MISMATCH"},
                    {"first_mismatch", bad}});
    if (format != "json")
      std::cout << (bad < 0 ? "MATCH    " : "MISMATCH ") << e.key() << "  ("
                << e.spec_text << ", degree " << e.maxdeg << ")"
                << (bad >= 0 ? "  first mismatch at degree " +
                                   std::to_string(bad)
                             : "")
                << "\n";
  }
  if (format == "json")
    std::cout << json{{"entries", rows}, {"ok", !any_bad}}.dump() << "\n";
  else
    std::cout << (any_bad ? "FAIL" : "OK") << " (" << catalog.size()
              << " catalog entries)\n";
  return any_bad ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "classinv: exact Hilbert series of classical-group invariant rings"};
  app.require_subcommand(1);

  RunConfig so;
  auto* series = app.add_subcommand(
      "series", "Hilbert series of C[W]^G for a module spec W");
  series->add_option("--group", so.group, "sp|o|so")->required();
  series->add_option("--n", so.n, "ambient GL(n)")->required();
  series->add_option("--spec", so.spec_text,
                     "module spec, e.g. 'S3(V)' or 'V + 2*[2,1]'");
  series->add_option("--maxdeg", so.maxdeg, "truncation degree (<= 32)");
  series->add_option("--oracle", so.oracle, "none|weyl|branching");
  series->add_option("--format", so.format, "text|json");
  series->add_option("--golden", so.golden_key,
                     "compare against catalog entry, e.g. 5.4:sp:2");
  series->add_option("--catalog", so.catalog_path, "catalog JSON path");

  std::string ext_kind = "sym2", ext_group, ext_format = "text";
  int ext_n = 0;
  auto* exterior = app.add_subcommand(
      "exterior", "Hilbert polynomial of Lambda(S^2 V)^G or Lambda(L^2 V)^G");
  exterior->add_option("--kind", ext_kind, "sym2|alt2")->required();
  exterior->add_option("--group", ext_group, "sp|o|so")->required();
  exterior->add_option("--n", ext_n, "ambient GL(n)")->required();
  exterior->add_option("--format", ext_format, "text|json");

  std::string br_group, br_lambda, br_format = "text";
  int br_n = 0;
  auto* branch = app.add_subcommand(
      "branch", "decompose an irreducible GL(n)-module over G");
  branch->add_option("--group", br_group, "sp|o|so")->required();
  branch->add_option("--n", br_n, "ambient GL(n)")->required();
  branch->add_option("--lambda", br_lambda, "highest weight, e.g. [2,1]")
      ->required();
  branch->add_option("--format", br_format, "text|json");

  std::string lr_lambda, lr_mu, lr_nu, lr_format = "text";
  auto* lr = app.add_subcommand("lr", "one Littlewood-Richardson coefficient");
  lr->add_option("--lambda", lr_lambda)->required();
  lr->add_option("--mu", lr_mu)->required();
  lr->add_option("--nu", lr_nu)->required();
  lr->add_option("--format", lr_format, "text|json");

  std::string gd_catalog, gd_format = "text";
  auto* golden = app.add_subcommand(
      "golden", "run the whole closed-form catalog against the engine");
  golden->add_option("--catalog", gd_catalog, "catalog JSON path");
  golden->add_option("--format", gd_format, "text|json");

  try {
    app.parse(argc, argv);
    if (series->parsed()) return run_series(so);
    if (exterior->parsed())
      return run_exterior(ext_kind, ext_group, ext_n, ext_format);
    if (branch->parsed()) return run_branch(br_group, br_n, br_lambda, br_format);
    if (lr->parsed()) return run_lr(lr_lambda, lr_mu, lr_nu, lr_format);
    if (golden->parsed()) return run_golden_all(gd_catalog, gd_format);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const internal_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
