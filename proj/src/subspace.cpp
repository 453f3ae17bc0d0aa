#include "nacalg/subspace.hpp"

#include "nacalg/errors.hpp"

namespace nacalg {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient())
    throw DimensionMismatch("subspaces of ambient dimensions " + std::to_string(u.ambient()) + " and " +
                            std::to_string(v.ambient()));
  if (!(u.field() == v.field())) throw FieldMismatch("subspaces over different fields");
}

}  // namespace

Subspace Subspace::zero(Field field, std::size_t ambient) { return Subspace(Mat(field, 0, ambient), {}); }

Subspace Subspace::full(Field field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(Mat::identity(field, ambient), std::move(pivots));
}

Subspace Subspace::span(Field field, std::size_t ambient, std::span<const Vec> vectors) {
  return row_space(Mat::from_rows(field, ambient, vectors));
}

Subspace Subspace::row_space(const Mat& m) {
  auto [red, pivots] = rref(m);
  return Subspace(std::move(red), std::move(pivots));
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient()) throw DimensionMismatch("vector does not live in the ambient space");
  Vec w = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    Scalar coeff = w[pivots_[r]];
    if (coeff.is_zero()) continue;
    for (std::size_t c = 0; c < ambient(); ++c)
      if (!basis_(r, c).is_zero()) w[c] -= coeff * basis_(r, c);
  }
  return w;
}

bool Subspace::contains(const Vec& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace kernel(const Mat& m) {
  auto [red, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v = Vec::unit_vector(m.field(), n, free);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, gens);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return Subspace::row_space(Mat::vstack(u.basis(), v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return kernel(Mat::vstack(annihilator(u).basis(), annihilator(v).basis()));
}

Subspace annihilator(const Subspace& u) { return kernel(u.basis()); }

}  // namespace nacalg
