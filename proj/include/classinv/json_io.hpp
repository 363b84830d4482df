#pragma once

#include <json.hpp>

#include "classinv/symfunc.hpp"

namespace classinv {

// Serializes a Schur expansion as a list of {"lambda": [...], "coeff": N}.
inline nlohmann::json schur_expansion_to_json(const SchurExpansion& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [lambda, c] : e.coeffs)
    arr.push_back({{"lambda", lambda.parts()}, {"coeff", to_int64(c)}});
  return arr;
}

}  // namespace classinv
