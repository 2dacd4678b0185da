#include "sigma/character.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "sigma/errors.hpp"

namespace sigma {

namespace {

// Shared parse of a character document into per-vertex weights.
std::vector<Rational> parse_weights(const Graph& g, const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ParseError::Kind::malformed,
                     std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw ParseError(ParseError::Kind::malformed,
                     "character document must map vertex ids to rationals");
  std::vector<Rational> weights(g.vertex_count());
  std::vector<char> present(g.vertex_count(), 0);
  for (const auto& [key, value] : doc.items()) {
    const int v = g.index_of(key);
    if (v < 0)
      throw ParseError(ParseError::Kind::unknown_vertex,
                       "weight for unknown vertex '" + key + "'");
    if (value.is_string()) {
      weights[v] = parse_rational(value.get<std::string>());
    } else if (value.is_number_integer()) {
      weights[v] = Rational(Int(value.get<long long>()));
    } else {
      throw ParseError(ParseError::Kind::bad_rational,
                       "weight for '" + key +
                           "' must be a rational string or an integer");
    }
    present[v] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!present[v])
      throw ParseError(ParseError::Kind::missing_weight,
                       "missing weight for vertex '" + g.name(v) + "'");
  return weights;
}

}  // namespace

RaagCharacter::RaagCharacter(const Graph& g, std::vector<Rational> weights)
    : weights_(std::move(weights)), support_(g.vertex_count()) {
  if (static_cast<int>(weights_.size()) != g.vertex_count())
    throw ValidationError("character must weight every vertex");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (weights_[v] != 0) support_.set(v);
  if (support_.none())
    throw ValidationError("the zero map is not a character");
}

void RaagCharacter::check_matches(const Graph& g) const {
  if (vertex_count() != g.vertex_count())
    throw ValidationError("character does not match the graph's vertex set");
}

BBCharacter::BBCharacter(const Graph& g, std::vector<Rational> weights)
    : canonical_(std::move(weights)) {
  if (g.vertex_count() == 0) throw ValidationError("graph has no vertices");
  if (static_cast<int>(canonical_.size()) != g.vertex_count())
    throw ValidationError("character must weight every vertex");
  const Rational shift = canonical_[0];
  bool constant = true;
  for (auto& w : canonical_) {
    w -= shift;
    if (w != 0) constant = false;
  }
  if (constant)
    throw ValidationError(
        "weights are constant: the restriction to the Bestvina-Brady group "
        "is the zero map");
}

void BBCharacter::check_matches(const Graph& g) const {
  if (vertex_count() != g.vertex_count())
    throw ValidationError("character does not match the graph's vertex set");
}

RaagCharacter ExtensionFamily::extension_at(const Graph& g,
                                            const Rational& t) const {
  std::vector<Rational> weights = base.canonical_weights();
  for (auto& w : weights) w += t;
  return RaagCharacter(g, std::move(weights));
}

std::vector<Rational> critical_values(const BBCharacter& chi) {
  std::set<Rational> values;
  for (const Rational& w : chi.canonical_weights()) values.insert(-w);
  return std::vector<Rational>(values.begin(), values.end());
}

RaagCharacter parse_raag_character(const Graph& g, const std::string& json_text) {
  return RaagCharacter(g, parse_weights(g, json_text));
}

BBCharacter parse_bb_character(const Graph& g, const std::string& json_text) {
  return BBCharacter(g, parse_weights(g, json_text));
}

}  // namespace sigma
