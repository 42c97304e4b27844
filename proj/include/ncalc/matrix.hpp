#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ncalc/field.hpp"

namespace ncalc {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const Field& f);
Vec unit_vec(std::size_t n, std::size_t i, const Field& f);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
bool is_zero(const Vec& v);
std::string str(const Vec& v);

// Dense matrix over one field. Row-major storage.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0), field_(Field::rationals()) {}
  Matrix(std::size_t rows, std::size_t cols, const Field& f);

  static Matrix identity(std::size_t n, const Field& f);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field& f);
  // Integer-literal constructor for tests and builtins.
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows, const Field& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);
  void set_col(std::size_t c, const Vec& v);

  Matrix transposed() const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator*(const Scalar& c) const;
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  Vec apply(const Vec& v) const;  // matrix * column vector

  // Row-major vectorization and its inverse.
  Vec vectorized() const;
  static Matrix from_vec(const Vec& v, std::size_t rows, std::size_t cols, const Field& f);

  static Matrix kron(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  static Matrix hstack(const Matrix& left, const Matrix& right);

  std::string str() const;

private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> data_;
};

}  // namespace ncalc
