#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "nacalg/linalg.hpp"

namespace nacalg {

/// Dense element of V^{⊗rank} for dim V = n, stored as n^rank coefficients
/// with the first slot most significant. Rank 0 is a single scalar.
class Tensor {
 public:
  Tensor(Field field, std::size_t dim, std::size_t rank);
  static Tensor from_vec(const Vec& v);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return data_.size(); }

  Scalar& operator()(std::initializer_list<std::size_t> idx) { return data_[flat_index(idx)]; }
  const Scalar& operator()(std::initializer_list<std::size_t> idx) const { return data_[flat_index(idx)]; }
  Scalar& at(std::span<const std::size_t> idx) { return data_[flat_index(idx)]; }
  const Scalar& at(std::span<const std::size_t> idx) const { return data_[flat_index(idx)]; }
  Scalar& flat(std::size_t i) { return data_[i]; }
  const Scalar& flat(std::size_t i) const { return data_[i]; }

  std::size_t flat_index(std::span<const std::size_t> idx) const;
  std::size_t flat_index(std::initializer_list<std::size_t> idx) const {
    return flat_index(std::span<const std::size_t>(idx.begin(), idx.size()));
  }
  std::vector<std::size_t> multi_index(std::size_t flat) const;

  bool is_zero() const;
  /// Coefficients in flat order.
  Vec as_vec() const { return Vec(field_, data_); }
  static Tensor from_flat(const Vec& v, std::size_t dim, std::size_t rank);

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& s, Tensor t) { return t *= s; }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.rank_ == b.rank_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t dim_;
  std::size_t rank_;
  std::vector<Scalar> data_;
};

std::size_t ipow(std::size_t base, std::size_t exp);

/// a ⊗ b.
Tensor outer(const Tensor& a, const Tensor& b);

/// Slot permutation: output slot s carries input slot perm[s].
Tensor permute(const Tensor& t, std::span<const std::size_t> perm);

/// Swap of slots i and i+1 (the flip acting on one adjacent pair).
Tensor flip_adjacent(const Tensor& t, std::size_t i);

/// A linear map V^{⊗in_rank} -> V^{⊗out_rank}; matrix is n^out × n^in.
struct BlockMap {
  Mat matrix;
  std::size_t in_rank;
  std::size_t out_rank;
};

/// Applies the block map to slots [slot, slot + in_rank) and the identity
/// elsewhere. With in_rank = 0 the output block is inserted before `slot`.
Tensor apply_block(const Tensor& t, std::size_t slot, const BlockMap& map);

/// (f ⊗ f ⊗ ... ⊗ f)(t) for a linear map f : V -> W (f is dim W × dim V).
Tensor map_all_slots(const Tensor& t, const Mat& f);

/// Contracts a rank-3 tensor against v in the given slot; the remaining two
/// slots, in order, index rows and columns of the result.
Mat contract(const Tensor& t, std::size_t slot, const Vec& v);

/// First multi-index where a and b differ, if any.
std::optional<std::vector<std::size_t>> first_difference(const Tensor& a, const Tensor& b);

}  // namespace nacalg
