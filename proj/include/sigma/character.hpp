#pragma once

#include <string>
#include <vector>

#include "sigma/graph.hpp"
#include "sigma/numeric.hpp"

namespace sigma {

// Character of a right-angled Artin group: one exact rational weight per
// vertex, not identically zero.
class RaagCharacter {
 public:
  RaagCharacter(const Graph& g, std::vector<Rational> weights);

  int vertex_count() const { return static_cast<int>(weights_.size()); }
  const Rational& weight(int v) const { return weights_[v]; }
  const std::vector<Rational>& weights() const { return weights_; }

  bool is_living(int v) const { return weights_[v] != 0; }
  const Bitset& support() const { return support_; }
  int support_size() const { return static_cast<int>(support_.count()); }

  void check_matches(const Graph& g) const;

 private:
  std::vector<Rational> weights_;
  Bitset support_;
};

// Character of a Bestvina-Brady group, stored as vertex weights modulo a
// constant shift. Canonical form: the weight at the first vertex is 0.
// Constant weight maps are rejected (they give the zero character).
class BBCharacter {
 public:
  BBCharacter(const Graph& g, std::vector<Rational> weights);

  int vertex_count() const { return static_cast<int>(canonical_.size()); }
  const Rational& weight(int v) const { return canonical_[v]; }
  const std::vector<Rational>& canonical_weights() const { return canonical_; }

  void check_matches(const Graph& g) const;

  bool operator==(const BBCharacter& other) const {
    return canonical_ == other.canonical_;
  }

 private:
  std::vector<Rational> canonical_;
};

// The characters of the ambient right-angled Artin group restricting to a
// given Bestvina-Brady character: base weights shifted along the all-ones
// direction.
struct ExtensionFamily {
  BBCharacter base;

  RaagCharacter extension_at(const Graph& g, const Rational& t) const;
};

// The shifts t for which the extension has a nonempty zero set: sorted
// distinct values -c(v).
std::vector<Rational> critical_values(const BBCharacter& chi);

// Character documents map vertex id to a rational string ("p/q" or an
// integer); integral JSON numbers are also accepted. Every vertex of the
// graph must be covered.
RaagCharacter parse_raag_character(const Graph& g, const std::string& json_text);
BBCharacter parse_bb_character(const Graph& g, const std::string& json_text);

}  // namespace sigma
