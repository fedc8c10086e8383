#pragma once

#include <json.hpp>

#include "torelli/diagrams.hpp"

namespace torelli {

struct ParseError : AlgebraError {
  ParseError(std::string what, size_t pos_)
      : AlgebraError(std::move(what)), pos(pos_) {}
  size_t pos;
};

// One factor of a mapping-class word: a resolvable name with an exponent.
struct McFactor {
  std::string name;
  long exponent;
  size_t pos; // offset of the name in the input, for diagnostics
};

// Grammar: term ('*' term)*, term = NAME ('^' INTEGER)?; whitespace-free
// between any two tokens or not, both accepted.
std::vector<McFactor> parse_mc_word(const std::string &text);

// Composes the factors left to right against the library.  Negative
// exponents resolve through the "name^-1" library entries.
SurfaceEndo resolve_mc_word(const std::vector<McFactor> &factors,
                            const std::map<std::string, SurfaceEndo> &lib,
                            int genus);

// Loads named endomorphisms from a JSON file: an array of entries
// {name, genus, images: {a1: "...", b1: "...", ...}} in the canonical word
// grammar.  Every entry must fix the boundary; rejections carry the defect
// word.  An empty file yields an empty map.
std::map<std::string, SurfaceEndo> load_user_endos(const std::string &path,
                                                   int genus);

nlohmann::json to_json(const LieElement &x);
nlohmann::json to_json(const DerivationElement &d);
nlohmann::json to_json(const ClassicalDerivation &d);
nlohmann::json to_json(const LevineDerivation &d);
nlohmann::json to_json(const GElement &x);
nlohmann::json to_json(const DiagramElement &e);

LieElement lie_from_json(const nlohmann::json &j, const WeightedAlphabet &a);
DerivationElement derivation_from_json(const nlohmann::json &j);

// Compact text rendering, e.g. "-(1)·a1⊗a1".
std::string tau_text(const DerivationElement &d);
std::string tau_text(const ClassicalDerivation &d);
std::string tau_text(const LevineDerivation &d);

} // namespace torelli
