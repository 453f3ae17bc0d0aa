#include "nacalg/tensor.hpp"

#include "nacalg/errors.hpp"

namespace nacalg {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

Tensor::Tensor(Field field, std::size_t dim, std::size_t rank)
    : field_(field), dim_(dim), rank_(rank), data_(ipow(dim, rank), field.zero()) {}

Tensor Tensor::from_vec(const Vec& v) { return from_flat(v, v.size(), 1); }

Tensor Tensor::from_flat(const Vec& v, std::size_t dim, std::size_t rank) {
  if (v.size() != ipow(dim, rank)) throw DimensionMismatch("flat vector has the wrong length for the tensor shape");
  Tensor t(v.field(), dim, rank);
  for (std::size_t i = 0; i < v.size(); ++i) t.data_[i] = v[i];
  return t;
}

std::size_t Tensor::flat_index(std::span<const std::size_t> idx) const {
  if (idx.size() != rank_) throw DimensionMismatch("tensor index of wrong rank");
  std::size_t f = 0;
  for (auto i : idx) {
    if (i >= dim_) throw DimensionMismatch("tensor index out of range");
    f = f * dim_ + i;
  }
  return f;
}

std::vector<std::size_t> Tensor::multi_index(std::size_t flat) const {
  std::vector<std::size_t> idx(rank_);
  for (std::size_t s = rank_; s-- > 0;) {
    idx[s] = flat % dim_;
    flat /= dim_;
  }
  return idx;
}

bool Tensor::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (o.dim_ != dim_ || o.rank_ != rank_) throw DimensionMismatch("tensor shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (o.dim_ != dim_ || o.rank_ != rank_) throw DimensionMismatch("tensor shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Tensor outer(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("outer product of tensors over different spaces");
  Tensor out(a.field(), a.dim(), a.rank() + b.rank());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.flat(i).is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b.flat(j).is_zero()) out.flat(i * b.size() + j) = a.flat(i) * b.flat(j);
  }
  return out;
}

Tensor permute(const Tensor& t, std::span<const std::size_t> perm) {
  if (perm.size() != t.rank()) throw DimensionMismatch("permutation length differs from tensor rank");
  Tensor out(t.field(), t.dim(), t.rank());
  std::vector<std::size_t> dst(t.rank());
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (t.flat(f).is_zero()) continue;
    auto src = t.multi_index(f);
    for (std::size_t s = 0; s < t.rank(); ++s) dst[s] = src[perm[s]];
    out.at(dst) = t.flat(f);
  }
  return out;
}

Tensor flip_adjacent(const Tensor& t, std::size_t i) {
  std::vector<std::size_t> perm(t.rank());
  for (std::size_t s = 0; s < perm.size(); ++s) perm[s] = s;
  std::swap(perm.at(i), perm.at(i + 1));
  return permute(t, perm);
}

Tensor apply_block(const Tensor& t, std::size_t slot, const BlockMap& map) {
  const std::size_t n = t.dim();
  if (slot + map.in_rank > t.rank()) throw DimensionMismatch("block map reaches past the last slot");
  const std::size_t in_size = ipow(n, map.in_rank), out_size = ipow(n, map.out_rank);
  if (map.matrix.rows() != out_size || map.matrix.cols() != in_size)
    throw DimensionMismatch("block map matrix has the wrong shape");

  // Nonzero column entries of the block matrix.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns(in_size);
  for (std::size_t c = 0; c < in_size; ++c)
    for (std::size_t r = 0; r < out_size; ++r)
      if (!map.matrix(r, c).is_zero()) columns[c].emplace_back(r, map.matrix(r, c));

  const std::size_t suffix = ipow(n, t.rank() - slot - map.in_rank);
  Tensor out(t.field(), n, t.rank() - map.in_rank + map.out_rank);
  for (std::size_t f = 0; f < t.size(); ++f) {
    const Scalar& coeff = t.flat(f);
    if (coeff.is_zero()) continue;
    const std::size_t suf = f % suffix;
    const std::size_t blk = (f / suffix) % in_size;
    const std::size_t pre = f / (suffix * in_size);
    for (const auto& [r, m] : columns[blk]) out.flat((pre * out_size + r) * suffix + suf) += coeff * m;
  }
  return out;
}

Tensor map_all_slots(const Tensor& t, const Mat& f) {
  if (f.cols() != t.dim()) throw DimensionMismatch("map source differs from tensor space");
  const std::size_t m = f.rows();
  Tensor out(t.field(), m, t.rank());
  std::vector<std::size_t> dst(t.rank());
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    if (t.flat(flat).is_zero()) continue;
    auto src = t.multi_index(flat);
    // Sum over all target multi-indices, skipping zero factors.
    const std::size_t total = ipow(m, t.rank());
    for (std::size_t o = 0; o < total; ++o) {
      std::size_t rem = o;
      Scalar c = t.flat(flat);
      bool zero = false;
      for (std::size_t s = t.rank(); s-- > 0;) {
        dst[s] = rem % m;
        rem /= m;
        const Scalar& fs = f(dst[s], src[s]);
        if (fs.is_zero()) {
          zero = true;
          break;
        }
        c *= fs;
      }
      if (!zero) out.at(dst) += c;
    }
  }
  return out;
}

Mat contract(const Tensor& t, std::size_t slot, const Vec& v) {
  if (t.rank() != 3 || slot > 2) throw DimensionMismatch("contract expects a rank-3 tensor and slot 0..2");
  if (v.size() != t.dim()) throw DimensionMismatch("contraction vector has the wrong size");
  const std::size_t n = t.dim();
  Mat out(t.field(), n, n);
  std::size_t idx[3];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t s = 0; s < n; ++s) {
        if (v[s].is_zero()) continue;
        std::size_t k = 0;
        for (std::size_t p = 0; p < 3; ++p) idx[p] = (p == slot) ? s : (k++ == 0 ? a : b);
        const Scalar& c = t.at(idx);
        if (!c.is_zero()) out(a, b) += c * v[s];
      }
  return out;
}

std::optional<std::vector<std::size_t>> first_difference(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim() || a.rank() != b.rank()) throw DimensionMismatch("comparing tensors of different shapes");
  for (std::size_t f = 0; f < a.size(); ++f)
    if (!(a.flat(f) == b.flat(f))) return a.multi_index(f);
  return std::nullopt;
}

}  // namespace nacalg
