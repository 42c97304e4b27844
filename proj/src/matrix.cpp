#include "ncalc/matrix.hpp"

#include <sstream>

namespace ncalc {

Vec zero_vec(std::size_t n, const Field& f) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(std::size_t n, std::size_t i, const Field& f) {
  Vec v = zero_vec(n, f);
  v[i] = Scalar::one(f);
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw math_error("vector size mismatch in add");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw math_error("vector size mismatch in sub");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string str(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << "]";
  return os.str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field& f) {
  Matrix m(rows.size(), cols, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw math_error("ragged rows in from_rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows, const Field& f) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.begin()->size() : 0;
  Matrix m(nr, nc, f);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw math_error("ragged rows in from_ints");
    std::size_t c = 0;
    for (long v : row) m.at(r, c++) = Scalar(v, f);
    ++r;
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(cols_, Scalar::zero(field_));
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw math_error("row size mismatch");
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void Matrix::set_col(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw math_error("col size mismatch");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::transposed() const {
  Matrix m(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    }
  return true;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw math_error("matrix shape mismatch in +");
  Matrix m(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += rhs.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw math_error("matrix shape mismatch in -");
  Matrix m(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= rhs.data_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw math_error("matrix shape mismatch in *");
  Matrix m(rows_, rhs.cols_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        if (rhs.at(k, c).is_zero()) continue;
        m.at(r, c) += a * rhs.at(k, c);
      }
    }
  return m;
}

Matrix Matrix::operator*(const Scalar& c) const {
  Matrix m(*this);
  for (auto& x : m.data_) x *= c;
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& x : m.data_) x = -x;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw math_error("apply: vector size mismatch");
  Vec r = zero_vec(rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] += at(i, j) * v[j];
    }
  return r;
}

Vec Matrix::vectorized() const { return data_; }

Matrix Matrix::from_vec(const Vec& v, std::size_t rows, std::size_t cols, const Field& f) {
  if (v.size() != rows * cols) throw math_error("from_vec: size mismatch");
  Matrix m(rows, cols, f);
  m.data_ = v;
  return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          m.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
    }
  return m;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) throw math_error("vstack width mismatch");
  Matrix m(top.rows_ + bottom.rows_, top.cols_, top.field_);
  for (std::size_t r = 0; r < top.rows_; ++r)
    for (std::size_t c = 0; c < top.cols_; ++c) m.at(r, c) = top.at(r, c);
  for (std::size_t r = 0; r < bottom.rows_; ++r)
    for (std::size_t c = 0; c < top.cols_; ++c) m.at(top.rows_ + r, c) = bottom.at(r, c);
  return m;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  if (left.rows_ != right.rows_) throw math_error("hstack height mismatch");
  Matrix m(left.rows_, left.cols_ + right.cols_, left.field_);
  for (std::size_t r = 0; r < left.rows_; ++r) {
    for (std::size_t c = 0; c < left.cols_; ++c) m.at(r, c) = left.at(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) m.at(r, left.cols_ + c) = right.at(r, c);
  }
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ");
    os << ncalc::str(row(r));
    os << (r + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

}  // namespace ncalc
