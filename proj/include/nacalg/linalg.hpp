#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nacalg/scalar.hpp"

namespace nacalg {

/// Dense coordinate vector over one field.
class Vec {
 public:
  Vec(Field field, std::size_t n) : field_(field), data_(n, field.zero()) {}
  Vec(Field field, std::vector<Scalar> entries);
  static Vec unit_vector(Field field, std::size_t n, std::size_t i);
  static Vec from_ints(Field field, std::initializer_list<long> values);

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return data_.size(); }
  Scalar& operator[](std::size_t i) { return data_[i]; }
  const Scalar& operator[](std::size_t i) const { return data_[i]; }
  std::span<const Scalar> entries() const noexcept { return data_; }
  bool is_zero() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& s);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& s, Vec v) { return v *= s; }
  friend bool operator==(const Vec& a, const Vec& b) { return a.field_ == b.field_ && a.data_ == b.data_; }

  std::string to_string() const;

 private:
  Field field_;
  std::vector<Scalar> data_;
};

Scalar dot(const Vec& a, const Vec& b);

/// Row-major dense matrix. As a linear map it acts on column vectors, so a
/// map V -> W has dim W rows and dim V columns.
class Mat {
 public:
  Mat(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}
  static Mat identity(Field field, std::size_t n);
  static Mat from_rows(Field field, std::size_t cols, std::span<const Vec> rows);
  static Mat from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  Mat transpose() const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Rows of `a` followed by rows of `b`.
  static Mat vstack(const Mat& a, const Mat& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Mat reduced;  ///< reduced row echelon form with zero rows removed
  std::vector<std::size_t> pivots;
};

/// Throws FieldMismatch if any entry lies outside the matrix's field.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
Scalar determinant(const Mat& m);

/// A solution x of m·x = b, or nullopt when the system is inconsistent.
/// Dimension problems throw DimensionMismatch instead.
std::optional<Vec> solve_linear(const Mat& m, const Vec& b);

/// Kronecker product; row index (i, k) -> i * b.rows() + k.
Mat kron(const Mat& a, const Mat& b);

}  // namespace nacalg
