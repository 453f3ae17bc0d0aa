#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nacalg/linalg.hpp"

namespace nacalg {

/// A subspace of k^n, stored canonically as the reduced row echelon basis
/// with no zero rows. Two subspaces are equal iff their bases are identical.
///
/// Functionals on k^n are coordinate vectors in the dual basis, so a
/// subspace of the dual space is just a Subspace of the same ambient size.
class Subspace {
 public:
  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);
  static Subspace span(Field field, std::size_t ambient, std::span<const Vec> vectors);
  /// Row space of m.
  static Subspace row_space(const Mat& m);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Mat& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<Vec> basis_vectors() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// v reduced against the basis: zero exactly when v lies in the subspace,
  /// and zero on every pivot column otherwise.
  Vec reduce(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Mat basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m·v = 0}.
Subspace kernel(const Mat& m);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
/// The functionals vanishing on u.
Subspace annihilator(const Subspace& u);

}  // namespace nacalg
