#include "sigma/bb.hpp"

#include <stdexcept>

#include "sigma/errors.hpp"
#include "sigma/homotopy.hpp"

namespace sigma {

TriState bb_finiteness(const Graph& g, int n, Variant variant,
                       const Limits& limits) {
  if (n < 1) throw std::invalid_argument("bb_finiteness: n must be >= 1");
  if (g.vertex_count() == 0 || !g.connected())
    throw PreconditionError(
        "the Bestvina-Brady group is finitely generated only when the graph "
        "is nonempty and connected");
  const FlagComplex k = flag_complex(g, n, limits);
  if (variant == Variant::homological) {
    if (auto failure = first_acyclicity_failure(k, n - 1))
      return TriState::no("flag complex is not " + std::to_string(n - 1) +
                          "-acyclic: " + failure->reason);
    return TriState::yes();
  }
  return is_k_connected(k, n - 1, limits);
}

Verdict bb_sigma(const Graph& g, const BBCharacter& chi, int n, Variant variant,
                 const Limits& limits) {
  if (n < 1) throw std::invalid_argument("bb_sigma: n must be >= 1");
  chi.check_matches(g);

  const TriState finiteness = bb_finiteness(g, n, variant, limits);
  if (finiteness.value == Tri::no)
    throw PreconditionError(
        "Sigma^" + std::to_string(n) + " is undefined: the group is not of type " +
        (variant == Variant::homological ? "FP_" : "F_") + std::to_string(n) +
        " (" + finiteness.reason + ")");
  if (finiteness.value == Tri::unknown)
    throw PreconditionError("finiteness type at level " + std::to_string(n) +
                            " could not be certified: " + finiteness.reason);

  // Away from the critical shifts the extension has full support and its
  // membership reduces to the finiteness check that already passed, so
  // only the critical shifts are swept.
  const ExtensionFamily family{chi};
  std::optional<std::pair<Rational, std::string>> first_unknown;
  for (const Rational& t : critical_values(chi)) {
    Verdict inner = raag_sigma(g, family.extension_at(g, t), n, variant, limits);
    if (inner.value == Tri::no) {
      inner.critical_t = t;
      return inner;
    }
    if (inner.value == Tri::unknown && !first_unknown)
      first_unknown = {t, inner.reason};
  }

  Verdict verdict;
  verdict.n = n;
  verdict.variant = variant;
  if (!first_unknown) {
    verdict.value = Tri::yes;
    return verdict;
  }

  if (variant == Variant::homotopical && n > 2) {
    // Sigma^n = Sigma^2 (homotopical) intersected with Sigma^n over Z.
    const Verdict low = bb_sigma(g, chi, 2, Variant::homotopical, limits);
    if (low.value == Tri::yes) {
      const Verdict homological =
          bb_sigma(g, chi, n, Variant::homological, limits);
      if (homological.value == Tri::yes) {
        verdict.value = Tri::yes;
        verdict.notes.push_back(
            "certified via Sigma^n = Sigma^2 ∩ Sigma^n(Z): homotopical "
            "membership at level 2 plus homological membership at level " +
            std::to_string(n));
        return verdict;
      }
    }
  }

  verdict.value = Tri::unknown;
  verdict.reason = "at critical value t = " + format_rational(first_unknown->first) +
                   ": " + first_unknown->second;
  return verdict;
}

bool wreath_sufficient(int n, int support_count) {
  if (n < 1) throw std::invalid_argument("wreath_sufficient: n must be >= 1");
  if (support_count < 0)
    throw std::invalid_argument("wreath_sufficient: support count must be >= 0");
  return support_count >= n + 1;
}

bool product_formula_predict(std::optional<int> level1, std::optional<int> level2,
                             int n) {
  if (n < 1) throw std::invalid_argument("product_formula_predict: n must be >= 1");
  if (!level1 && !level2)
    throw ValidationError(
        "product_formula_predict: both restrictions zero means the character "
        "is trivial");
  if (level1 && *level1 < 0)
    throw std::invalid_argument("product_formula_predict: levels are >= 0");
  if (level2 && *level2 < 0)
    throw std::invalid_argument("product_formula_predict: levels are >= 0");

  if (level1 && level2) {
    // In the complement iff some split p + q = n refutes both factors.
    for (int p = 0; p <= n; ++p)
      if (p > *level1 && (n - p) > *level2) return false;
    return true;
  }
  const int live_level = level1 ? *level1 : *level2;
  return live_level >= n;
}

}  // namespace sigma
