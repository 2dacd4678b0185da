#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sigma/bb.hpp"
#include "sigma/corpus.hpp"
#include "sigma/errors.hpp"

using namespace sigma;

namespace {

BBCharacter bbchr(const Graph& g, std::vector<int> ints) {
  std::vector<Rational> weights(ints.begin(), ints.end());
  return BBCharacter(g, std::move(weights));
}

const Graph k22 = multipartite_graph(2);
const Graph k222 = multipartite_graph(3);

// Every pattern over {0..3} on the 2m vertices, constants skipped.
template <typename Fn>
void for_each_grid_character(int parts, Fn&& fn) {
  const int verts = 2 * parts;
  std::vector<int> weights(verts, 0);
  for (;;) {
    bool constant = true;
    for (int v = 1; v < verts; ++v)
      if (weights[v] != weights[0]) constant = false;
    if (!constant) fn(weights);
    int i = verts - 1;
    while (i >= 0 && weights[i] == 3) weights[i--] = 0;
    if (i < 0) break;
    ++weights[i];
  }
}

}  // namespace

TEST_CASE("finiteness type of the kernel groups") {
  CHECK(bb_finiteness(k22, 1, Variant::homological).value == Tri::yes);
  const TriState fp2 = bb_finiteness(k22, 2, Variant::homological);
  CHECK(fp2.value == Tri::no);
  CHECK(fp2.reason.find("acyclic") != std::string::npos);
  CHECK(bb_finiteness(k22, 2, Variant::homotopical).value == Tri::no);

  CHECK(bb_finiteness(k222, 2, Variant::homological).value == Tri::yes);
  CHECK(bb_finiteness(k222, 2, Variant::homotopical).value == Tri::yes);
  CHECK(bb_finiteness(k222, 3, Variant::homological).value == Tri::no);

  const Graph p3 = path_graph(3);
  for (int n = 1; n <= 4; ++n)
    CHECK(bb_finiteness(p3, n, Variant::homological).value == Tri::yes);

  CHECK_THROWS_AS(bb_finiteness(Graph({"a", "b"}, {}), 1, Variant::homological),
                  PreconditionError);
  CHECK_THROWS_AS(bb_finiteness(Graph({}, {}), 1, Variant::homological),
                  PreconditionError);
}

TEST_CASE("worked sweep examples on two parts") {
  SUBCASE("distinct weights within each part lie in Sigma^1") {
    const Verdict v =
        bb_sigma(k22, bbchr(k22, {0, 1, 0, 1}), 1, Variant::homological);
    CHECK(v.value == Tri::yes);
    CHECK_FALSE(v.critical_t.has_value());
  }

  SUBCASE("a part with equal weights fails at its critical shift") {
    const Verdict v =
        bb_sigma(k22, bbchr(k22, {0, 0, 1, 2}), 1, Variant::homological);
    CHECK(v.value == Tri::no);
    REQUIRE(v.critical_t.has_value());
    CHECK(*v.critical_t == 0);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->sigma.is_empty());
    CHECK(v.witness->reason.find("disconnected") != std::string::npos);

    // The stamped critical value replays through the ambient test.
    const ExtensionFamily family{bbchr(k22, {0, 0, 1, 2})};
    const Verdict inner = raag_sigma(
        k22, family.extension_at(k22, *v.critical_t), 1, Variant::homological);
    CHECK(inner.value == Tri::no);
    REQUIRE(inner.witness.has_value());
    CHECK(inner.witness->sigma == v.witness->sigma);
    CHECK(inner.witness->failing_index == v.witness->failing_index);
  }

  SUBCASE("three parts with distinct weights reach Sigma^2") {
    CHECK(bb_sigma(k222, bbchr(k222, {0, 1, 0, 1, 0, 1}), 2,
                   Variant::homological)
              .value == Tri::yes);
    CHECK(bb_sigma(k222, bbchr(k222, {0, 0, 1, 2, 3, 1}), 2,
                   Variant::homological)
              .value == Tri::no);
  }
}

TEST_CASE("queries beyond the finiteness length are rejected") {
  CHECK_THROWS_AS(bb_sigma(k22, bbchr(k22, {0, 1, 0, 1}), 2, Variant::homological),
                  PreconditionError);
  CHECK_THROWS_AS(
      bb_sigma(k222, bbchr(k222, {0, 1, 0, 1, 0, 1}), 3, Variant::homological),
      PreconditionError);
}

TEST_CASE("an uncertified finiteness type is a precondition failure") {
  Limits no_budget;
  no_budget.tietze_budget = 0;
  CHECK(bb_finiteness(k222, 2, Variant::homotopical, no_budget).value ==
        Tri::unknown);
  CHECK_THROWS_AS(bb_sigma(k222, bbchr(k222, {0, 1, 0, 1, 0, 1}), 2,
                           Variant::homotopical, no_budget),
                  PreconditionError);
}

TEST_CASE("sweep agrees with the per-part coincidence rule") {
  SUBCASE("two parts, exhaustively") {
    for_each_grid_character(2, [&](const std::vector<int>& w) {
      std::vector<Rational> weights(w.begin(), w.end());
      const bool member =
          bb_sigma(k22, BBCharacter(k22, weights), 1, Variant::homological)
              .value == Tri::yes;
      CHECK(member == oracles::gm_oracle(2, weights, 1));
      CHECK(member == (w[0] != w[1] && w[2] != w[3]));
    });
  }

  SUBCASE("three parts, sampled") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<int> w(6);
      bool constant = true;
      do {
        for (auto& x : w) x = static_cast<int>(rng() % 4);
        constant = true;
        for (int v = 1; v < 6; ++v)
          if (w[v] != w[0]) constant = false;
      } while (constant);
      std::vector<Rational> weights(w.begin(), w.end());
      const bool member =
          bb_sigma(k222, BBCharacter(k222, weights), 2, Variant::homological)
              .value == Tri::yes;
      CHECK(member == oracles::gm_oracle(3, weights, 2));
      CHECK(member ==
            (w[0] != w[1] && w[2] != w[3] && w[4] != w[5]));
    }
  }
}

TEST_CASE("a Yes verdict extends to every shift of the family") {
  std::mt19937_64 rng(60221023);
  int certified = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int size = 3 + static_cast<int>(rng() % 3);
    const Graph g = random_connected_graph(size, rng);
    if (bb_finiteness(g, 1, Variant::homological).value != Tri::yes) continue;
    const BBCharacter chi = random_bb_character(g, rng);
    if (bb_sigma(g, chi, 1, Variant::homological).value != Tri::yes) continue;
    ++certified;
    const ExtensionFamily family{chi};
    const std::vector<Rational> criticals = critical_values(chi);
    for (const Rational& t : criticals)
      CHECK(raag_sigma(g, family.extension_at(g, t), 1, Variant::homological)
                .value == Tri::yes);
    for (int k = 0; k < 10; ++k) {
      Rational t(static_cast<int>(rng() % 19) - 9, 1 + static_cast<int>(rng() % 7));
      bool critical = false;
      for (const Rational& c : criticals)
        if (c == t) critical = true;
      if (critical) continue;
      CHECK(raag_sigma(g, family.extension_at(g, t), 1, Variant::homological)
                .value == Tri::yes);
    }
  }
  CHECK(certified >= 15);
}

TEST_CASE("the verdict depends only on the coincidence partition") {
  std::mt19937_64 rng(874512);
  for (int trial = 0; trial < 200; ++trial) {
    const int size = 3 + static_cast<int>(rng() % 4);
    const Graph g = random_connected_graph(size, rng);
    std::vector<int> w(size);
    bool constant = true;
    do {
      for (auto& x : w) x = static_cast<int>(rng() % 3);
      constant = true;
      for (int v = 1; v < size; ++v)
        if (w[v] != w[0]) constant = false;
    } while (constant);

    // Remap the three possible values to random distinct rationals; only
    // the coincidence pattern survives.
    std::vector<Rational> target{Rational(static_cast<int>(rng() % 5) - 7),
                                 Rational(1, 1 + static_cast<int>(rng() % 3)),
                                 Rational(3 + static_cast<int>(rng() % 9), 2)};
    std::vector<Rational> a(size), b(size);
    for (int v = 0; v < size; ++v) {
      a[v] = w[v];
      b[v] = target[w[v]];
    }
    CHECK(bb_sigma(g, BBCharacter(g, a), 1, Variant::homological).value ==
          bb_sigma(g, BBCharacter(g, b), 1, Variant::homological).value);
  }
}

TEST_CASE("positive scaling leaves every verdict unchanged") {
  std::mt19937_64 rng(11235);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph& g = (trial % 2 == 0) ? k22 : k222;
    const int max_n = (trial % 2 == 0) ? 1 : 2;
    const BBCharacter chi = random_bb_character(g, rng);
    const Rational factor(1 + static_cast<int>(rng() % 9),
                          1 + static_cast<int>(rng() % 4));
    std::vector<Rational> scaled;
    for (const Rational& w : chi.canonical_weights()) scaled.push_back(w * factor);
    const BBCharacter psi(g, std::move(scaled));
    for (int n = 1; n <= max_n; ++n)
      CHECK(bb_sigma(g, chi, n, Variant::homological).value ==
            bb_sigma(g, psi, n, Variant::homological).value);
  }
}

TEST_CASE("membership is monotone decreasing in n") {
  std::mt19937_64 rng(40814);
  for (int trial = 0; trial < 100; ++trial) {
    const BBCharacter chi = random_bb_character(k222, rng);
    const Tri at1 = bb_sigma(k222, chi, 1, Variant::homological).value;
    const Tri at2 = bb_sigma(k222, chi, 2, Variant::homological).value;
    if (at2 == Tri::yes) CHECK(at1 == Tri::yes);
  }
  const Graph p4 = path_graph(4);
  for (int trial = 0; trial < 50; ++trial) {
    const BBCharacter chi = random_bb_character(p4, rng);
    bool seen_no = false;
    for (int n = 1; n <= 3; ++n) {
      const Tri value = bb_sigma(p4, chi, n, Variant::homological).value;
      if (seen_no) CHECK(value == Tri::no);
      if (value == Tri::no) seen_no = true;
    }
  }
}

TEST_CASE("wreath-type sufficiency is a pure support count test") {
  CHECK(wreath_sufficient(1, 2));
  CHECK_FALSE(wreath_sufficient(2, 2));
  CHECK_FALSE(wreath_sufficient(3, 0));
  CHECK(wreath_sufficient(2, 3));
  CHECK_THROWS_AS(wreath_sufficient(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(wreath_sufficient(1, -1), std::invalid_argument);
}

TEST_CASE("product formula over the factor levels") {
  CHECK(product_formula_predict(0, 0, 1));
  CHECK_FALSE(product_formula_predict(0, 0, 2));
  CHECK_FALSE(product_formula_predict(std::nullopt, 1, 2));
  CHECK(product_formula_predict(1, std::nullopt, 1));
  CHECK(product_formula_predict(2, 1, 3));
  CHECK(product_formula_predict(2, 0, 3));
  CHECK_FALSE(product_formula_predict(1, 0, 3));
  CHECK_THROWS_AS(product_formula_predict(std::nullopt, std::nullopt, 1),
                  ValidationError);
  CHECK_THROWS_AS(product_formula_predict(-1, 0, 1), std::invalid_argument);
}
