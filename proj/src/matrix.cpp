#include "chev/matrix.hpp"

#include <stdexcept>

namespace chev {

Matrix::Matrix(FieldPtr field, int dim) : field_(std::move(field)), dim_(dim), data_(dim * dim, Fq{0}) {}

Matrix Matrix::identity(FieldPtr field, int dim) {
  Matrix m(std::move(field), dim);
  for (int i = 0; i < dim; ++i) m(i, i) = Fq{1};
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
  const Field& f = *field_;
  Matrix out(field_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      const Fq a = (*this)(i, k);
      if (a.v == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        const Fq b = rhs(k, j);
        if (b.v == 0) continue;
        out(i, j) = f.add(out(i, j), f.mul(a, b));
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  Matrix out(field_, dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], rhs.data_[i]);
  return out;
}

std::vector<Fq> Matrix::column(int j) const {
  std::vector<Fq> c(dim_);
  for (int i = 0; i < dim_; ++i) c[i] = (*this)(i, j);
  return c;
}

bool Matrix::is_identity() const { return *this == identity(field_, dim_); }

Matrix Matrix::inverse() const {
  const Field& f = *field_;
  const int n = dim_;
  Matrix a = *this;
  Matrix inv = identity(field_, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col).v != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw DivisionByZero();
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Fq s = f.inv(a(col, col));
    for (int j = 0; j < n; ++j) {
      a(col, j) = f.mul(a(col, j), s);
      inv(col, j) = f.mul(inv(col, j), s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).v == 0) continue;
      const Fq factor = f.neg(a(r, col));
      for (int j = 0; j < n; ++j) {
        a(r, j) = f.add(a(r, j), f.mul(factor, a(col, j)));
        inv(r, j) = f.add(inv(r, j), f.mul(factor, inv(col, j)));
      }
    }
  }
  return inv;
}

Subspace::Subspace(FieldPtr field, int ambient_dim) : field_(std::move(field)), n_(ambient_dim) {}

std::vector<Fq> Subspace::reduce(std::span<const Fq> v) const {
  const Field& f = *field_;
  std::vector<Fq> x(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Fq c = x[pivots_[k]];
    if (c.v == 0) continue;
    const Fq factor = f.neg(c);
    for (int j = 0; j < n_; ++j) x[j] = f.add(x[j], f.mul(factor, rows_[k][j]));
  }
  return x;
}

bool Subspace::add(std::vector<Fq> v) {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("vector length mismatch");
  const Field& f = *field_;
  std::vector<Fq> x = reduce(v);
  int pivot = -1;
  for (int j = 0; j < n_; ++j)
    if (x[j].v != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  const Fq s = f.inv(x[pivot]);
  for (auto& c : x) c = f.mul(c, s);
  // Keep the basis fully reduced against the new pivot.
  for (auto& row : rows_) {
    const Fq c = row[pivot];
    if (c.v == 0) continue;
    const Fq factor = f.neg(c);
    for (int j = 0; j < n_; ++j) row[j] = f.add(row[j], f.mul(factor, x[j]));
  }
  rows_.push_back(std::move(x));
  pivots_.push_back(pivot);
  return true;
}

bool Subspace::contains(std::span<const Fq> v) const {
  for (Fq c : reduce(v))
    if (c.v != 0) return false;
  return true;
}

}  // namespace chev
