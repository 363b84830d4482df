#include "classinv/golden.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#ifndef CLASSINV_CATALOG_PATH
#define CLASSINV_CATALOG_PATH "data/golden_forms.json"
#endif

namespace classinv {

std::string GoldenEntry::key() const {
  std::string g = group.kind == GroupKind::SP  ? "sp"
                  : group.kind == GroupKind::O ? "o"
                                               : "so";
  return id + ":" + g + ":" + std::to_string(group.n);
}

GroupKind group_kind_from_name(const std::string& name) {
  if (name == "sp") return GroupKind::SP;
  if (name == "o") return GroupKind::O;
  if (name == "so") return GroupKind::SO;
  throw std::invalid_argument("unknown group '" + name + "' (want sp|o|so)");
}

std::vector<GoldenEntry> golden_forms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  std::vector<GoldenEntry> catalog;
  for (const auto& j : doc.at("entries")) {
    GoldenEntry e{
        j.at("id").get<std::string>(),
        GroupId(group_kind_from_name(j.at("group").get<std::string>()),
                j.at("n").get<int>()),
        j.at("spec").get<std::string>(),
        j.at("maxdeg").get<int>(),
        RationalForm{}};
    // numerator ships as a list of polynomial factors; multiply them out
    std::vector<Int> num = {1};
    for (const auto& factor : j.at("numerator_factors")) {
      std::vector<Int> f;
      for (const auto& c : factor) f.emplace_back(c.get<long long>());
      std::vector<Int> prod(num.size() + f.size() - 1, 0);
      for (size_t a = 0; a < num.size(); ++a)
        for (size_t b = 0; b < f.size(); ++b) prod[a + b] += num[a] * f[b];
      num = std::move(prod);
    }
    e.form.numerator = std::move(num);
    for (const auto& d : j.at("denominator"))
      e.form.denominator_factors.emplace_back(d.at(0).get<int>(),
                                              d.at(1).get<int>());
    catalog.push_back(std::move(e));
  }
  return catalog;
}

std::vector<GoldenEntry> golden_forms() {
  return golden_forms(CLASSINV_CATALOG_PATH);
}

std::optional<GoldenEntry> find_golden(const std::vector<GoldenEntry>& catalog,
                                       const std::string& key) {
  for (const auto& e : catalog)
    if (e.key() == key) return e;
  return std::nullopt;
}

}  // namespace classinv
