#pragma once

#include <optional>
#include <string>
#include <vector>

#include "classinv/branching.hpp"
#include "classinv/series.hpp"

namespace classinv {

// One known closed-form rational Hilbert series: the module it belongs to,
// the group, and the form itself.  Keys look like "5.4:sp:2".
struct GoldenEntry {
  std::string id;
  GroupId group;
  std::string spec_text;
  int maxdeg = 12;
  RationalForm form;

  std::string key() const;
};

// Loads the shared catalog.  The default path is baked in at build time so
// tests and the CLI read the same file.
std::vector<GoldenEntry> golden_forms(const std::string& path);
std::vector<GoldenEntry> golden_forms();

std::optional<GoldenEntry> find_golden(const std::vector<GoldenEntry>& catalog,
                                       const std::string& key);

GroupKind group_kind_from_name(const std::string& name);  // "sp" | "o" | "so"

}  // namespace classinv
