#include "sigma/suites.hpp"

#include <chrono>
#include <random>

#include "sigma/bb.hpp"
#include "sigma/corpus.hpp"
#include "sigma/parallel.hpp"
#include "sigma/polyhedron.hpp"
#include "sigma/raag.hpp"

namespace sigma {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::mt19937_64 sub_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

// Merge per-item failure slots into the report, keeping the first message.
void fold_failures(SuiteReport& report, const std::vector<long long>& counts,
                   const std::vector<std::string>& messages) {
  for (std::size_t i = 0; i < counts.size(); ++i) {
    report.failures += counts[i];
    if (report.first_failure.empty() && !messages[i].empty())
      report.first_failure = messages[i];
  }
}

}  // namespace

SuiteReport suite_badness_monotonicity(std::uint64_t seed, bool quick) {
  const auto start = Clock::now();
  SuiteReport report;
  report.name = "badness-monotonicity";

  std::vector<Graph> graphs;
  for (int n = 2; n <= (quick ? 4 : 5); ++n)
    for (const std::uint64_t mask : connected_graph_masks(n))
      graphs.push_back(graph_from_mask(n, mask));
  const int sampled = quick ? 30 : 300;
  for (int n = 6; n <= 7; ++n) {
    auto rng = sub_rng(seed, static_cast<std::uint64_t>(n));
    for (int i = 0; i < sampled; ++i)
      graphs.push_back(random_connected_graph(n, rng));
  }

  std::vector<long long> checks(graphs.size(), 0), failures(graphs.size(), 0);
  std::vector<std::string> messages(graphs.size());
  parallel_for(graphs.size(), [&](std::size_t gi) {
    const Graph& g = graphs[gi];
    const int n = g.vertex_count();
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<char> bad(full + 1, 0);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      Bitset d(n);
      for (int v = 0; v < n; ++v)
        if (mask & (std::uint32_t{1} << v)) d.set(v);
      bad[mask] = is_bad_set(g, d);
    }
    for (std::uint32_t big = 1; big < full; ++big) {
      for (std::uint32_t sub = (big - 1) & big; sub != 0; sub = (sub - 1) & big) {
        ++checks[gi];
        if (bad[sub] && !bad[big]) {
          ++failures[gi];
          if (messages[gi].empty())
            messages[gi] = "graph #" + std::to_string(gi) + ": bad subset " +
                           std::to_string(sub) + " inside non-bad " +
                           std::to_string(big);
        }
      }
    }
  });

  for (const long long c : checks) report.checks += c;
  fold_failures(report, failures, messages);
  report.millis = elapsed_ms(start);
  return report;
}

SuiteReport suite_multipartite_equivalence(bool quick, bool inject_fault) {
  const auto start = Clock::now();
  SuiteReport report;
  report.name = "multipartite-equivalence";

  struct Case {
    int parts;
    std::uint32_t pattern;
  };
  std::vector<Case> cases;
  for (int parts = 1; parts <= (quick ? 3 : 4); ++parts) {
    const std::uint32_t patterns = std::uint32_t{1} << (2 * parts);
    for (std::uint32_t pattern = 1; pattern < patterns; ++pattern)
      cases.push_back({parts, pattern});
  }

  std::vector<long long> checks(cases.size(), 0), failures(cases.size(), 0);
  std::vector<std::string> messages(cases.size());
  parallel_for(cases.size(), [&](std::size_t ci) {
    const auto [parts, pattern] = cases[ci];
    const Graph g = multipartite_graph(parts);
    std::vector<Rational> weights(2 * parts);
    int nonzero_parts = 0;
    for (int part = 0; part < parts; ++part) {
      bool touched = false;
      for (int half = 0; half < 2; ++half) {
        const int v = 2 * part + half;
        if (pattern & (std::uint32_t{1} << v)) {
          weights[v] = 1;
          touched = true;
        }
      }
      if (touched) ++nonzero_parts;
    }
    const RaagCharacter mu(g, std::move(weights));
    for (int n = 1; n <= 4; ++n) {
      bool expected = multipartite_oracle(parts, nonzero_parts, n);
      if (inject_fault && parts == 2 && pattern == 15 && n == 1)
        expected = !expected;
      for (const Variant variant :
           {Variant::homotopical, Variant::homological}) {
        ++checks[ci];
        const Verdict v = raag_sigma(g, mu, n, variant);
        const bool mismatch =
            v.value == Tri::unknown || (v.value == Tri::yes) != expected;
        if (mismatch) {
          ++failures[ci];
          if (messages[ci].empty())
            messages[ci] = "parts=" + std::to_string(parts) + " pattern=" +
                           std::to_string(pattern) + " n=" + std::to_string(n) +
                           " " + variant_to_string(variant) + ": got " +
                           tri_to_string(v.value) + ", oracle says " +
                           (expected ? "yes" : "no");
        }
      }
    }
  });

  for (const long long c : checks) report.checks += c;
  fold_failures(report, failures, messages);
  report.millis = elapsed_ms(start);
  return report;
}

SuiteReport suite_join_formula(std::uint64_t seed, bool quick) {
  const auto start = Clock::now();
  SuiteReport report;
  report.name = "join-formula";
  const int trials = quick ? 25 : 100;

  std::vector<long long> checks(trials, 0), failures(trials, 0);
  std::vector<std::string> messages(trials);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
    auto rng = sub_rng(seed, trial);
    const int n1 = 1 + static_cast<int>(rng() % 4);
    const int n2 = 1 + static_cast<int>(rng() % 4);
    const Graph g1 = graph_from_mask(
        n1, rng() & ((std::uint64_t{1} << edge_pair_count(n1)) - 1), "a");
    const Graph g2 = graph_from_mask(
        n2, rng() & ((std::uint64_t{1} << edge_pair_count(n2)) - 1), "b");
    const Graph joined = join_graphs(g1, g2);

    // Joint weights; resample until some side is nonzero.
    std::vector<Rational> w1(n1), w2(n2);
    for (;;) {
      bool any = false;
      for (auto* side : {&w1, &w2}) {
        for (auto& w : *side) {
          w = 0;
          if (rng() % 10 < 7) {
            const int num = 1 + static_cast<int>(rng() % 3);
            const int den = 1 + static_cast<int>(rng() % 2);
            w = Rational(num, den);
            if (rng() & 1) w = -w;
            any = true;
          }
        }
      }
      if (any) break;
    }

    // Maximal membership level of a factor, capped at 3 (enough for n <= 3).
    auto level_of = [&](const Graph& g,
                        const std::vector<Rational>& w) -> std::optional<int> {
      bool zero = true;
      for (const auto& x : w)
        if (x != 0) zero = false;
      if (zero) return std::nullopt;
      const RaagCharacter mu(g, w);
      int level = 0;
      for (int p = 1; p <= 3; ++p) {
        if (raag_sigma(g, mu, p, Variant::homological).value != Tri::yes) break;
        level = p;
      }
      return level;
    };
    const auto k1 = level_of(g1, w1);
    const auto k2 = level_of(g2, w2);

    std::vector<Rational> joint = w1;
    joint.insert(joint.end(), w2.begin(), w2.end());
    const RaagCharacter mu(joined, std::move(joint));

    for (int n = 1; n <= 3; ++n) {
      ++checks[trial];
      const bool predicted = product_formula_predict(k1, k2, n);
      const Tri computed =
          raag_sigma(joined, mu, n, Variant::homological).value;
      const bool violated = n <= 2 ? (computed == Tri::yes) != predicted
                                   : (!predicted && computed != Tri::no);
      if (violated) {
        ++failures[trial];
        if (messages[trial].empty())
          messages[trial] = "trial " + std::to_string(trial) + " n=" +
                            std::to_string(n) + ": predicted " +
                            (predicted ? "yes" : "no") + ", computed " +
                            tri_to_string(computed);
      }
    }
  });

  for (const long long c : checks) report.checks += c;
  fold_failures(report, failures, messages);
  report.millis = elapsed_ms(start);
  return report;
}

SuiteReport suite_polyhedron_sweep(std::uint64_t seed, bool quick) {
  const auto start = Clock::now();
  SuiteReport report;
  report.name = "polyhedron-sweep-agreement";
  const int max_vertices = quick ? 5 : 6;
  const int chars_per_graph = quick ? 50 : 200;

  struct Item {
    int n;
    std::uint64_t mask;
  };
  std::vector<Item> items;
  for (int n = 2; n <= max_vertices; ++n)
    for (const std::uint64_t mask : connected_graph_masks(n))
      items.push_back({n, mask});

  std::vector<long long> checks(items.size(), 0), failures(items.size(), 0);
  std::vector<std::string> messages(items.size());
  parallel_for(items.size(), [&](std::size_t ii) {
    const Graph g = graph_from_mask(items[ii].n, items[ii].mask);
    const SpherePolyhedron polyhedron = sigma1_complement(g);
    auto rng = sub_rng(seed, (static_cast<std::uint64_t>(items[ii].n) << 32) ^
                                 items[ii].mask);
    for (int c = 0; c < chars_per_graph; ++c) {
      const BBCharacter chi = random_bb_character(g, rng);
      ++checks[ii];
      const bool in_complement = polyhedron_contains(polyhedron, chi);
      const bool sweep_no =
          bb_sigma(g, chi, 1, Variant::homological).value == Tri::no;
      if (in_complement != sweep_no) {
        ++failures[ii];
        if (messages[ii].empty()) {
          std::string weights;
          for (int v = 0; v < g.vertex_count(); ++v)
            weights += (v ? "," : "") + format_rational(chi.weight(v));
          messages[ii] = "n=" + std::to_string(items[ii].n) + " mask=" +
                         std::to_string(items[ii].mask) + " weights=(" +
                         weights + "): polyhedron says " +
                         (in_complement ? "complement" : "member") +
                         ", sweep says " + (sweep_no ? "complement" : "member");
        }
      }
    }
  });

  for (const long long c : checks) report.checks += c;
  fold_failures(report, failures, messages);
  report.millis = elapsed_ms(start);
  return report;
}

std::vector<SuiteReport> run_selftest_suites(std::uint64_t seed, bool quick,
                                             bool inject_fault) {
  return {
      suite_badness_monotonicity(seed, quick),
      suite_multipartite_equivalence(quick, inject_fault),
      suite_join_formula(seed, quick),
      suite_polyhedron_sweep(seed, quick),
  };
}

}  // namespace sigma
