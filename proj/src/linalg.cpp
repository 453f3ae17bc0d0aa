#include "nacalg/linalg.hpp"

#include <sstream>

#include "nacalg/errors.hpp"

namespace nacalg {

namespace {

void check_field(const Field& expected, const Scalar& s) {
  if (!(s.field() == expected))
    throw FieldMismatch("entry " + s.to_string() + " is not in " + expected.to_string());
}

}  // namespace

Vec::Vec(Field field, std::vector<Scalar> entries) : field_(field), data_(std::move(entries)) {
  for (const auto& s : data_) check_field(field_, s);
}

Vec Vec::unit_vector(Field field, std::size_t n, std::size_t i) {
  Vec v(field, n);
  v[i] = field.one();
  return v;
}

Vec Vec::from_ints(Field field, std::initializer_list<long> values) {
  std::vector<Scalar> entries;
  for (long v : values) entries.push_back(field.from_int(v));
  return Vec(field, std::move(entries));
}

bool Vec::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Vec& Vec::operator+=(const Vec& o) {
  if (o.size() != size()) throw DimensionMismatch("vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (o.size() != size()) throw DimensionMismatch("vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

std::string Vec::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) os << (i ? ", " : "") << data_[i];
  os << ')';
  return os.str();
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different sizes");
  Scalar acc = a.field().zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Mat Mat::from_rows(Field field, std::size_t cols, std::span<const Vec> rows) {
  Mat m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) {
      check_field(field, rows[r][c]);
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Mat Mat::from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  Mat m(field, rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionMismatch("ragged matrix literal");
    std::size_t c = 0;
    for (long v : row) m(r, c++) = field.from_int(v);
    ++r;
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(field_, std::vector<Scalar>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const {
  Vec v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Mat out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vec out(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  if (a.cols_ != b.cols_) throw DimensionMismatch("vstack of matrices with different column counts");
  Mat out(a.field_, a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), out.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + a.data_.size());
  return out;
}

RrefResult rref(const Mat& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) check_field(m.field(), m(r, c));

  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != lead)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead, j));
    Scalar inv = a(lead, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(lead, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      Scalar factor = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(lead, j).is_zero()) a(r, j) -= factor * a(lead, j);
    }
    pivots.push_back(c);
    ++lead;
  }
  Mat reduced(m.field(), pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = a(r, c);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Scalar determinant(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  Mat a = m;
  const std::size_t n = a.rows();
  Scalar det = m.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return m.field().zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      Scalar factor = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(r, j) -= factor * a(c, j);
    }
  }
  return det;
}

std::optional<Vec> solve_linear(const Mat& m, const Vec& b) {
  if (m.rows() != b.size()) throw DimensionMismatch("right-hand side length differs from row count");
  Mat aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto [red, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.field(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red(r, m.cols());
  return x;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

}  // namespace nacalg
