#include "prelie/linalg.hpp"

#include <string>
#include <utility>

#include "prelie/error.hpp"

namespace prelie {

// ---------------------------------------------------------------- Vector

Vector::Vector(const FieldSpec& f, std::size_t n)
    : field_(f), entries_(n, Scalar::zero(f)) {}

Vector::Vector(const FieldSpec& f, std::vector<Scalar> entries)
    : field_(f), entries_(std::move(entries)) {
  for (const auto& s : entries_)
    if (!(s.field() == f))
      fail(ErrorCode::FieldMismatch, "vector entry outside " + f.toString());
}

Vector Vector::unit(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vector v(f, n);
  v[i] = Scalar::one(f);
  return v;
}

bool Vector::isZero() const noexcept {
  for (const auto& s : entries_)
    if (!s.isZero())
      return false;
  return true;
}

std::size_t Vector::leadingIndex() const noexcept {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!entries_[i].isZero())
      return i;
  return entries_.size();
}

void Vector::requireCompatible(const Vector& o) const {
  if (!(field_ == o.field_))
    fail(ErrorCode::FieldMismatch, "vectors over " + field_.toString() + " and " +
                                       o.field_.toString());
  if (size() != o.size())
    fail(ErrorCode::DimensionMismatch, "vectors of length " + std::to_string(size()) +
                                           " and " + std::to_string(o.size()));
}

Vector& Vector::operator+=(const Vector& o) {
  requireCompatible(o);
  for (std::size_t i = 0; i < size(); ++i)
    entries_[i] += o.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  requireCompatible(o);
  for (std::size_t i = 0; i < size(); ++i)
    entries_[i] -= o.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& e : entries_)
    e *= s;
  return *this;
}

void Vector::axpy(const Scalar& s, const Vector& o) {
  requireCompatible(o);
  if (s.isZero())
    return;
  for (std::size_t i = 0; i < size(); ++i)
    if (!o.entries_[i].isZero())
      entries_[i] += s * o.entries_[i];
}

Vector Vector::operator-() const {
  Vector v(*this);
  for (auto& e : v.entries_)
    e = -e;
  return v;
}

bool operator==(const Vector& a, const Vector& b) {
  if (!(a.field_ == b.field_) || a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a.entries_[i] == b.entries_[i]))
      return false;
  return true;
}

std::strong_ordering Vector::compare(const Vector& o) const {
  requireCompatible(o);
  for (std::size_t i = 0; i < size(); ++i)
    if (auto c = entries_[i].compare(o.entries_[i]); c != 0)
      return c;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::fromColumns(const FieldSpec& f, std::size_t rows,
                           std::span<const Vector> columns) {
  Matrix m(f, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows || !(columns[c].field() == f))
      fail(ErrorCode::DimensionMismatch, "column " + std::to_string(c) +
                                             " does not have length " + std::to_string(rows));
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(field_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    v[c] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_)
    fail(ErrorCode::DimensionMismatch, "matrix with " + std::to_string(cols_) +
                                           " columns applied to vector of length " +
                                           std::to_string(v.size()));
  Vector out(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].isZero())
      continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!(*this)(r, c).isZero())
        out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::isZero() const noexcept {
  for (const auto& s : data_)
    if (!s.isZero())
      return false;
  return true;
}

Vector Matrix::flatten() const { return Vector(field_, data_); }

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorCode::ShapeMismatch, "matrix sum of different shapes");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorCode::ShapeMismatch, "matrix difference of different shapes");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& e : data_)
    e *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    fail(ErrorCode::ShapeMismatch, "matrix product " + std::to_string(a.rows_) + "x" +
                                       std::to_string(a.cols_) + " by " +
                                       std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.isZero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).isZero())
          m(i, j) += aik * b(k, j);
    }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_))
    return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (!(a.data_[i] == b.data_[i]))
      return false;
  return true;
}

// ---------------------------------------------------------------- Subspace

namespace {

struct Reduced {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination to reduced row-echelon form.
Reduced rowReduce(std::vector<Vector> rows, std::size_t width) {
  Reduced out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < width && next < rows.size(); ++col) {
    std::size_t pick = next;
    while (pick < rows.size() && rows[pick][col].isZero())
      ++pick;
    if (pick == rows.size())
      continue;
    std::swap(rows[next], rows[pick]);
    Scalar scale = rows[next][col].inv();
    rows[next] *= scale;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].isZero())
        continue;
      Scalar factor = -rows[r][col];
      rows[r].axpy(factor, rows[next]);
    }
    out.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

} // namespace

Subspace::Subspace(const FieldSpec& f, std::size_t ambientDim)
    : field_(f), ambient_(ambientDim) {}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambientDim) {
  Subspace s(f, ambientDim);
  for (std::size_t i = 0; i < ambientDim; ++i) {
    s.basis_.push_back(Vector::unit(f, ambientDim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::echelonize(const FieldSpec& f, std::size_t ambientDim,
                              std::span<const Vector> rows) {
  std::vector<Vector> work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != ambientDim || !(r.field() == f))
      fail(ErrorCode::DimensionMismatch,
           "echelonize: row of length " + std::to_string(r.size()) + " over " +
               r.field().toString() + ", expected " + std::to_string(ambientDim) +
               " over " + f.toString());
    if (!r.isZero())
      work.push_back(r);
  }
  auto reduced = rowReduce(std::move(work), ambientDim);
  Subspace s(f, ambientDim);
  s.basis_ = std::move(reduced.rows);
  s.pivots_ = std::move(reduced.pivots);
  return s;
}

void Subspace::requireCompatible(const Subspace& o) const {
  if (!(field_ == o.field_) || ambient_ != o.ambient_)
    fail(ErrorCode::DimensionMismatch, "subspaces of different ambient spaces");
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_ || !(v.field() == field_))
    fail(ErrorCode::DimensionMismatch, "vector does not live in the ambient space");
  Vector r(v);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar& c = r[pivots_[k]];
    if (!c.isZero())
      r.axpy(-c, basis_[k]);
  }
  return r;
}

bool Subspace::contains(const Subspace& o) const {
  requireCompatible(o);
  if (o.dim() > dim())
    return false;
  for (const auto& b : o.basis_)
    if (!memberOf(b))
      return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!memberOf(v))
    fail(ErrorCode::DimensionMismatch, "vector is not in the subspace");
  Vector c(field_, basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k)
    c[k] = v[pivots_[k]];
  return c;
}

Subspace Subspace::withVectors(std::span<const Vector> extra) const {
  std::vector<Vector> rows(basis_);
  rows.insert(rows.end(), extra.begin(), extra.end());
  return echelonize(field_, ambient_, rows);
}

Subspace Subspace::sum(const Subspace& o) const {
  requireCompatible(o);
  return withVectors(o.basis_);
}

Subspace Subspace::intersect(const Subspace& o) const {
  requireCompatible(o);
  if (isZero() || o.isZero())
    return Subspace(field_, ambient_);
  // Solve sum x_i u_i - sum y_j v_j = 0 and map x back into this subspace.
  const std::size_t a = dim(), b = o.dim();
  Matrix stacked(field_, ambient_, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t r = 0; r < ambient_; ++r)
      stacked(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t r = 0; r < ambient_; ++r)
      stacked(r, a + j) = -o.basis_[j][r];
  Subspace rel = kernel(stacked);
  std::vector<Vector> gens;
  for (const auto& x : rel.basis()) {
    Vector w(field_, ambient_);
    for (std::size_t i = 0; i < a; ++i)
      w.axpy(x[i], basis_[i]);
    gens.push_back(std::move(w));
  }
  return echelonize(field_, ambient_, gens);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

std::strong_ordering Subspace::compare(const Subspace& o) const {
  requireCompatible(o);
  if (auto c = dim() <=> o.dim(); c != 0)
    return c;
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (auto c = basis_[k].compare(o.basis_[k]); c != 0)
      return c;
  return std::strong_ordering::equal;
}

Subspace kernel(const Matrix& m) {
  const FieldSpec& f = m.field();
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.push_back(m.row(r));
  auto reduced = rowReduce(std::move(rows), m.cols());
  std::vector<bool> isPivot(m.cols(), false);
  for (auto p : reduced.pivots)
    isPivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (isPivot[free])
      continue;
    Vector x(f, m.cols());
    x[free] = Scalar::one(f);
    for (std::size_t k = 0; k < reduced.pivots.size(); ++k)
      x[reduced.pivots[k]] = -reduced.rows[k][free];
    gens.push_back(std::move(x));
  }
  return Subspace::echelonize(f, m.cols(), gens);
}

Subspace image(const Matrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    cols.push_back(m.column(c));
  return Subspace::echelonize(m.field(), m.rows(), cols);
}

std::size_t rank(const Matrix& m) { return image(m).dim(); }

Subspace homogeneousSolutions(const FieldSpec& f, std::size_t unknowns,
                              const std::function<Vector(std::size_t)>& residualOfUnit) {
  std::vector<Vector> cols;
  cols.reserve(unknowns);
  for (std::size_t u = 0; u < unknowns; ++u)
    cols.push_back(residualOfUnit(u));
  if (cols.empty())
    return Subspace(f, 0);
  return kernel(Matrix::fromColumns(f, cols.front().size(), cols));
}

} // namespace prelie
