#pragma once

// JSON form of a character: {"q": 15, "index": 7, "exponents": [1, 3]}.
// The index is redundant with the exponent vector and is checked on read.

#include <stdexcept>

#include <json.hpp>

#include "charsum/characters/character.hpp"

namespace charsum {

inline nlohmann::json to_json(const DirichletCharacter& chi) {
  return {{"q", chi.modulus()}, {"index", chi.index()}, {"exponents", chi.exponents()}};
}

inline DirichletCharacter character_from_json(const nlohmann::json& j) {
  const auto q = j.at("q").get<u64>();
  auto modulus = build_modulus(q);
  if (j.contains("exponents")) {
    auto exps = j.at("exponents").get<std::vector<u64>>();
    DirichletCharacter chi(std::move(modulus), std::move(exps));
    if (j.contains("index") && j.at("index").get<u64>() != chi.index()) {
      throw std::invalid_argument("character_from_json: index does not match exponents");
    }
    return chi;
  }
  return DirichletCharacter::from_index(std::move(modulus), j.at("index").get<u64>());
}

}  // namespace charsum
