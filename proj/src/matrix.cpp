#include "sigma/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "sigma/errors.hpp"

namespace sigma {

IntegerMatrix boundary_matrix(const FlagComplex& k, int i) {
  if (i < 0) throw std::invalid_argument("boundary_matrix: degree must be >= 0");
  if (k.max_dim() < i)
    throw NotMaterializedError("boundary_matrix: dimension " + std::to_string(i) +
                               " not materialized");
  const auto& columns = k.simplices(i);
  if (i == 0) {
    IntegerMatrix m(1, static_cast<int>(columns.size()));
    for (int c = 0; c < m.cols(); ++c) m.at(0, c) = 1;
    return m;
  }
  const auto& rows = k.simplices(i - 1);
  IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(columns.size()));
  auto row_of = [&rows](const Simplex& face) {
    const auto it = std::lower_bound(
        rows.begin(), rows.end(), face,
        [](const Simplex& a, const Simplex& b) { return a.verts < b.verts; });
    return static_cast<int>(it - rows.begin());
  };
  for (int c = 0; c < m.cols(); ++c) {
    const Simplex& s = columns[c];
    Simplex face;
    face.verts.reserve(s.verts.size() - 1);
    for (std::size_t omit = 0; omit < s.verts.size(); ++omit) {
      face.verts.clear();
      for (std::size_t j = 0; j < s.verts.size(); ++j)
        if (j != omit) face.verts.push_back(s.verts[j]);
      m.at(row_of(face), c) = (omit % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

}  // namespace sigma
