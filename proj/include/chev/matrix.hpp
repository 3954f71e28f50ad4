#pragma once

#include <span>
#include <vector>

#include "chev/gfq.hpp"

namespace chev {

// Dense square matrix over F_q. Column j holds the image of basis vector j.
class Matrix {
 public:
  Matrix(FieldPtr field, int dim);
  static Matrix identity(FieldPtr field, int dim);

  int dim() const { return dim_; }
  const FieldPtr& field() const { return field_; }
  Fq operator()(int i, int j) const { return data_[i * dim_ + j]; }
  Fq& operator()(int i, int j) { return data_[i * dim_ + j]; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const { return dim_ == rhs.dim_ && data_ == rhs.data_; }

  std::vector<Fq> column(int j) const;
  // Throws DivisionByZero when singular.
  Matrix inverse() const;
  bool is_identity() const;

 private:
  FieldPtr field_;
  int dim_;
  std::vector<Fq> data_;
};

// Subspace of F_q^n kept in reduced row echelon form.
class Subspace {
 public:
  Subspace(FieldPtr field, int ambient_dim);

  // Returns false if v was already in the span.
  bool add(std::vector<Fq> v);
  bool contains(std::span<const Fq> v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return n_; }

 private:
  std::vector<Fq> reduce(std::span<const Fq> v) const;

  FieldPtr field_;
  int n_;
  std::vector<std::vector<Fq>> rows_;
  std::vector<int> pivots_;
};

}  // namespace chev
