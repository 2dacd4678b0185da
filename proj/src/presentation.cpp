#include "sigma/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "sigma/errors.hpp"

namespace sigma {

GroupPresentation presentation_from_complex(const FlagComplex& k) {
  if (k.max_dim() < 2)
    throw NotMaterializedError("presentation: dimension 2 not materialized");
  if (k.is_empty() || k.component_count() != 1)
    throw PreconditionError("presentation requires a nonempty connected complex");

  const Graph& g = k.graph();
  // Breadth-first spanning tree from the smallest present vertex; the
  // visit order is canonical.
  std::map<std::pair<int, int>, bool> in_tree;
  Bitset seen(g.vertex_count());
  const int root = static_cast<int>(k.present().find_first());
  std::deque<int> queue{root};
  seen.set(root);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    Bitset next = g.neighbors(u) & k.present();
    for (std::size_t w = next.find_first(); w != Bitset::npos;
         w = next.find_next(w)) {
      if (seen.test(w)) continue;
      seen.set(w);
      in_tree[{std::min<int>(u, w), std::max<int>(u, w)}] = true;
      queue.push_back(static_cast<int>(w));
    }
  }

  // Generators: non-tree edges in canonical order, 1-based.
  std::map<std::pair<int, int>, int> generator_of;
  for (const Simplex& e : k.simplices(1)) {
    const std::pair<int, int> key{e.verts[0], e.verts[1]};
    if (!in_tree.count(key))
      generator_of[key] = static_cast<int>(generator_of.size()) + 1;
  }

  // Letter for traversing u -> v; tree edges carry the identity (0).
  auto letter = [&](int u, int v) {
    const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    const auto it = generator_of.find(key);
    if (it == generator_of.end()) return 0;
    return u < v ? it->second : -it->second;
  };

  GroupPresentation p;
  p.generator_count = static_cast<int>(generator_of.size());
  for (const Simplex& tri : k.simplices(2)) {
    const int a = tri.verts[0], b = tri.verts[1], c = tri.verts[2];
    std::vector<int> word;
    for (const int l : {letter(a, b), letter(b, c), letter(c, a)})
      if (l != 0) word.push_back(l);
    p.relators.push_back(std::move(word));
  }
  return p;
}

namespace {

void free_reduce(std::vector<int>& word) {
  std::vector<int> out;
  out.reserve(word.size());
  for (const int l : word) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  word = std::move(out);
}

void cyclic_reduce(std::vector<int>& word) {
  std::size_t lo = 0, hi = word.size();
  while (hi - lo >= 2 && word[lo] == -word[hi - 1]) {
    ++lo;
    --hi;
  }
  if (lo > 0) word = std::vector<int>(word.begin() + lo, word.begin() + hi);
}

std::vector<int> inverse_word(const std::vector<int>& word) {
  std::vector<int> out(word.rbegin(), word.rend());
  for (int& l : out) l = -l;
  return out;
}

}  // namespace

TietzeOutcome tietze_simplify(GroupPresentation presentation, long step_budget,
                              std::size_t length_cap) {
  auto& relators = presentation.relators;
  std::vector<char> alive(presentation.generator_count + 1, 1);
  alive[0] = 0;
  long steps = 0;

  auto live_generator_count = [&] {
    // A generator counts as live until eliminated, whether or not it still
    // occurs in a relator: unused live generators are free factors.
    int n = 0;
    for (int g = 1; g <= presentation.generator_count; ++g) n += alive[g];
    return n;
  };

  for (;;) {
    for (auto& r : relators) {
      free_reduce(r);
      cyclic_reduce(r);
    }
    relators.erase(
        std::remove_if(relators.begin(), relators.end(),
                       [](const std::vector<int>& r) { return r.empty(); }),
        relators.end());

    if (live_generator_count() == 0)
      return TietzeOutcome{true, false, steps};
    if (steps >= step_budget) return TietzeOutcome{false, true, steps};

    std::size_t total_length = 0;
    for (const auto& r : relators) total_length += r.size();
    if (total_length > length_cap) return TietzeOutcome{false, true, steps};

    // Shortest relator containing some generator exactly once; that
    // occurrence defines the generator and eliminates it.
    int best_relator = -1, best_generator = 0;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (best_relator >= 0 &&
          relators[i].size() >= relators[best_relator].size())
        continue;
      std::map<int, int> occurrences;
      for (const int l : relators[i]) ++occurrences[std::abs(l)];
      for (const int l : relators[i]) {
        if (occurrences[std::abs(l)] == 1) {
          best_relator = static_cast<int>(i);
          best_generator = std::abs(l);
          break;
        }
      }
    }
    if (best_relator < 0) return TietzeOutcome{false, false, steps};

    // r = u g^e v cyclically, so g^e = u^{-1} v^{-1}.
    const std::vector<int> r = relators[best_relator];
    std::size_t pos = 0;
    while (std::abs(r[pos]) != best_generator) ++pos;
    std::vector<int> u(r.begin(), r.begin() + pos);
    std::vector<int> v(r.begin() + pos + 1, r.end());
    std::vector<int> replacement;  // word equal to the generator itself
    if (r[pos] > 0) {
      replacement = inverse_word(u);
      const auto vi = inverse_word(v);
      replacement.insert(replacement.end(), vi.begin(), vi.end());
    } else {
      replacement = v;
      replacement.insert(replacement.end(), u.begin(), u.end());
    }

    relators.erase(relators.begin() + best_relator);
    for (auto& other : relators) {
      std::vector<int> out;
      out.reserve(other.size());
      for (const int l : other) {
        if (std::abs(l) != best_generator) {
          out.push_back(l);
        } else if (l > 0) {
          out.insert(out.end(), replacement.begin(), replacement.end());
        } else {
          const auto inv = inverse_word(replacement);
          out.insert(out.end(), inv.begin(), inv.end());
        }
      }
      other = std::move(out);
    }
    alive[best_generator] = 0;
    ++steps;
  }
}

}  // namespace sigma
