#include "sigma/flag_complex.hpp"

#include <algorithm>
#include <numeric>

#include "sigma/errors.hpp"
#include "sigma/parallel.hpp"

namespace sigma {

namespace detail {

namespace {

// Extensions of one clique: vertices above its maximum adjacent to all of
// its members.
void extend_one(const Graph& g, const Bitset& present, const Simplex& s,
                std::vector<Simplex>& out) {
  Bitset candidates = present;
  for (int u : s.verts) candidates &= g.neighbors(u);
  for (std::size_t v = candidates.find_first(); v != Bitset::npos;
       v = candidates.find_next(v)) {
    if (static_cast<int>(v) <= s.verts.back()) continue;
    Simplex bigger = s;
    bigger.verts.push_back(static_cast<int>(v));
    out.push_back(std::move(bigger));
  }
}

}  // namespace

std::vector<Simplex> expand_cliques_serial(const Graph& g,
                                           const Bitset& present,
                                           const std::vector<Simplex>& lower) {
  std::vector<Simplex> out;
  for (const Simplex& s : lower) extend_one(g, present, s, out);
  return out;
}

std::vector<Simplex> expand_cliques_parallel(
    const Graph& g, const Bitset& present, const std::vector<Simplex>& lower) {
  std::vector<std::vector<Simplex>> partial(lower.size());
  parallel_for(lower.size(), [&](std::size_t i) {
    extend_one(g, present, lower[i], partial[i]);
  });
  std::vector<Simplex> out;
  std::size_t total = 0;
  for (const auto& p : partial) total += p.size();
  out.reserve(total);
  for (auto& p : partial)
    for (auto& s : p) out.push_back(std::move(s));
  return out;
}

}  // namespace detail

FlagComplex::FlagComplex(std::shared_ptr<const Graph> graph, Bitset present,
                         int max_dim, const Limits& limits)
    : graph_(std::move(graph)), present_(std::move(present)), max_dim_(max_dim) {
  if (max_dim_ < -1) throw std::invalid_argument("max_dim must be >= -1");
  if (static_cast<int>(present_.size()) != graph_->vertex_count())
    throw std::invalid_argument("vertex subset has the wrong universe size");
  if (max_dim_ < 0) return;

  by_dim_.resize(max_dim_ + 1);
  for (std::size_t v = present_.find_first(); v != Bitset::npos;
       v = present_.find_next(v))
    by_dim_[0].push_back(Simplex{{static_cast<int>(v)}});

  std::size_t total = by_dim_[0].size();
  if (total > limits.max_simplices)
    throw ResourceCapError("simplex cap exceeded while materializing dimension 0");
  for (int d = 1; d <= max_dim_; ++d) {
    if (by_dim_[d - 1].empty()) break;
    by_dim_[d] = by_dim_[d - 1].size() >= 512
                     ? detail::expand_cliques_parallel(*graph_, present_,
                                                       by_dim_[d - 1])
                     : detail::expand_cliques_serial(*graph_, present_,
                                                     by_dim_[d - 1]);
    total += by_dim_[d].size();
    if (total > limits.max_simplices)
      throw ResourceCapError("simplex cap exceeded while materializing dimension " +
                             std::to_string(d));
  }
}

static const std::vector<Simplex> kNoSimplices;

const std::vector<Simplex>& FlagComplex::simplices(int dim) const {
  if (dim < 0 || dim > max_dim_ || dim >= static_cast<int>(by_dim_.size()))
    return kNoSimplices;
  return by_dim_[dim];
}

std::vector<std::size_t> FlagComplex::counts_per_dim() const {
  std::vector<std::size_t> counts;
  for (int d = 0; d <= max_dim_; ++d) counts.push_back(simplex_count(d));
  return counts;
}

std::size_t FlagComplex::total_simplex_count() const {
  std::size_t total = 0;
  for (int d = 0; d <= max_dim_; ++d) total += simplex_count(d);
  return total;
}

bool FlagComplex::contains(const Simplex& s) const {
  for (std::size_t i = 0; i < s.verts.size(); ++i) {
    const int v = s.verts[i];
    if (v < 0 || v >= graph_->vertex_count() || !present_.test(v)) return false;
    if (i > 0 && s.verts[i - 1] >= v) return false;
    for (std::size_t j = i + 1; j < s.verts.size(); ++j)
      if (!graph_->adjacent(v, s.verts[j])) return false;
  }
  return true;
}

int FlagComplex::component_count() const {
  return graph_->component_count_within(present_);
}

bool FlagComplex::structurally_equal(const FlagComplex& other) const {
  if (max_dim_ != other.max_dim_) return false;
  if (vertex_count() != other.vertex_count()) return false;
  auto names_of = [](const FlagComplex& k, const Simplex& s) {
    std::vector<std::string> out;
    for (int v : s.verts) out.push_back(k.graph().name(v));
    return out;
  };
  for (int d = 0; d <= std::max(max_dim_, 0); ++d) {
    const auto& mine = simplices(d);
    const auto& theirs = other.simplices(d);
    if (mine.size() != theirs.size()) return false;
    for (std::size_t i = 0; i < mine.size(); ++i)
      if (names_of(*this, mine[i]) != names_of(other, theirs[i])) return false;
  }
  if (max_dim_ < 0) {
    // Nothing materialized: compare present vertex names directly.
    std::vector<std::string> a, b;
    for (std::size_t v = present_.find_first(); v != Bitset::npos;
         v = present_.find_next(v))
      a.push_back(graph_->name(static_cast<int>(v)));
    for (std::size_t v = other.present_.find_first(); v != Bitset::npos;
         v = other.present_.find_next(v))
      b.push_back(other.graph_->name(static_cast<int>(v)));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }
  return true;
}

FlagComplex flag_complex(const Graph& g, int max_dim, const Limits& limits) {
  auto shared = std::make_shared<const Graph>(g);
  return FlagComplex(shared, shared->all_vertices(), max_dim, limits);
}

FlagComplex flag_complex(std::shared_ptr<const Graph> g, int max_dim,
                         const Limits& limits) {
  Bitset all = g->all_vertices();
  return FlagComplex(std::move(g), std::move(all), max_dim, limits);
}

FlagComplex link(const FlagComplex& k, const Simplex& s) {
  if (s.is_empty()) return k;
  if (!k.contains(s))
    throw ValidationError("link: the simplex is not in the complex");
  Bitset candidates = k.present();
  for (int u : s.verts) candidates &= k.graph().neighbors(u);
  const int mat = std::max(k.max_dim() - s.dim() - 1, -1);
  return FlagComplex(k.graph_ptr(), std::move(candidates), mat);
}

FlagComplex full_subcomplex(const FlagComplex& k, const Bitset& subset) {
  if (subset.size() != k.present().size() || !subset.is_subset_of(k.present()))
    throw ValidationError("full_subcomplex: subset contains a non-vertex");
  return FlagComplex(k.graph_ptr(), subset, k.max_dim());
}

FlagComplex full_subcomplex(const FlagComplex& k,
                            const std::vector<std::string>& subset_names) {
  Bitset subset(k.graph().vertex_count());
  for (const auto& name : subset_names) {
    const int v = k.graph().index_of(name);
    if (v < 0)
      throw ValidationError("full_subcomplex: unknown vertex '" + name + "'");
    subset.set(v);
  }
  return full_subcomplex(k, subset);
}

std::vector<std::vector<int>> connected_components(const FlagComplex& k) {
  std::vector<std::vector<int>> components;
  const Graph& g = k.graph();
  Bitset seen(g.vertex_count());
  for (std::size_t s = k.present().find_first(); s != Bitset::npos;
       s = k.present().find_next(s)) {
    if (seen.test(s)) continue;
    std::vector<int> component;
    std::vector<int> stack{static_cast<int>(s)};
    seen.set(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      component.push_back(u);
      Bitset next = g.neighbors(u) & k.present();
      for (std::size_t w = next.find_first(); w != Bitset::npos;
           w = next.find_next(w)) {
        if (!seen.test(w)) {
          seen.set(w);
          stack.push_back(static_cast<int>(w));
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

}  // namespace sigma
