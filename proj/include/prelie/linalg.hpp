#ifndef PRELIE_LINALG_HPP
#define PRELIE_LINALG_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "prelie/scalar.hpp"

namespace prelie {

/// Dense vector over a FieldSpec. The length is fixed at construction.
class Vector {
public:
  Vector() = default;
  Vector(const FieldSpec& f, std::size_t n);
  Vector(const FieldSpec& f, std::vector<Scalar> entries);

  static Vector unit(const FieldSpec& f, std::size_t n, std::size_t i);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  bool isZero() const noexcept;
  /// Index of the first nonzero entry, or size() when zero.
  std::size_t leadingIndex() const noexcept;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  /// this += s * o
  void axpy(const Scalar& s, const Vector& o);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  Vector operator-() const;

  friend bool operator==(const Vector& a, const Vector& b);
  /// Lexicographic, entry order from Scalar::compare.
  std::strong_ordering compare(const Vector& o) const;

private:
  void requireCompatible(const Vector& o) const;

  FieldSpec field_;
  std::vector<Scalar> entries_;
};

/// Row-major dense matrix. A matrix of a linear map stores the image of
/// basis vector j in column j.
class Matrix {
public:
  Matrix() = default;
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix fromColumns(const FieldSpec& f, std::size_t rows,
                            std::span<const Vector> columns);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  bool isZero() const noexcept;
  /// Entries in row-major order.
  Vector flatten() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b);

private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// A subspace of k^n held as its reduced row-echelon basis. Two subspaces are
/// equal exactly when their bases are identical.
class Subspace {
public:
  Subspace() = default;
  /// The zero subspace.
  Subspace(const FieldSpec& f, std::size_t ambientDim);

  static Subspace full(const FieldSpec& f, std::size_t ambientDim);
  /// Throws DimensionMismatch when rows disagree in field or length.
  static Subspace echelonize(const FieldSpec& f, std::size_t ambientDim,
                             std::span<const Vector> rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t ambientDim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool isZero() const noexcept { return basis_.empty(); }
  bool isFull() const noexcept { return basis_.size() == ambient_; }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its projection along the pivot columns; zero iff v is a member.
  Vector reduce(const Vector& v) const;
  bool memberOf(const Vector& v) const { return reduce(v).isZero(); }
  bool contains(const Subspace& o) const;
  /// Coordinates of a member v in the echelon basis (read off the pivots).
  Vector coordinates(const Vector& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  Subspace withVectors(std::span<const Vector> extra) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  /// Canonical order: by dimension, then lexicographically by basis.
  std::strong_ordering compare(const Subspace& o) const;

private:
  void requireCompatible(const Subspace& o) const;

  FieldSpec field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Right null space {x : m x = 0} as a subspace of k^cols.
Subspace kernel(const Matrix& m);
/// Column space of m as a subspace of k^rows.
Subspace image(const Matrix& m);
/// Rank of m.
std::size_t rank(const Matrix& m);

/// Solutions of a homogeneous linear system presented column by column:
/// residualOfUnit(u) is the residual vector produced when unknown u is 1 and
/// every other unknown is 0.
Subspace homogeneousSolutions(const FieldSpec& f, std::size_t unknowns,
                              const std::function<Vector(std::size_t)>& residualOfUnit);

} // namespace prelie

#endif
