#include "artin/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace artin {

ExactMatrix::ExactMatrix(int rows, int cols, const FieldDescriptor& f)
    : rows_(rows), cols_(cols), field_(f) {
  a_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(f));
}

ExactMatrix ExactMatrix::identity(int n, const FieldDescriptor& f) {
  ExactMatrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows, int cols,
                                   const FieldDescriptor& f) {
  ExactMatrix m(static_cast<int>(rows.size()), cols, f);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw InputError("row length mismatch in from_rows");
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  }
  return m;
}

std::vector<Scalar> ExactMatrix::row(int r) const {
  return std::vector<Scalar>(a_.begin() + static_cast<size_t>(r) * cols_,
                             a_.begin() + static_cast<size_t>(r + 1) * cols_);
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix shape mismatch in multiply");
  ExactMatrix r(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

std::vector<Scalar> ExactMatrix::apply(std::span<const Scalar> v) const {
  if (static_cast<int>(v.size()) != cols_) throw InputError("vector length mismatch in apply");
  std::vector<Scalar> r(rows_, Scalar::zero(field_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("shape mismatch in add");
  ExactMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("shape mismatch in subtract");
  ExactMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
  ExactMatrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

ExactMatrix ExactMatrix::scaled_rows(std::span<const Scalar> factors) const {
  if (static_cast<int>(factors.size()) != rows_)
    throw InputError("factor count mismatch in scaled_rows");
  ExactMatrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) *= factors[i];
  return r;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

RowEchelon row_reduce(const ExactMatrix& m) {
  RowEchelon res;
  res.echelon = m;
  ExactMatrix& e = res.echelon;
  int pivot_row = 0;
  for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    int found = -1;
    for (int r = pivot_row; r < m.rows(); ++r)
      if (!e.at(r, col).is_zero()) {
        found = r;
        break;
      }
    if (found < 0) continue;
    if (found != pivot_row)
      for (int c = 0; c < m.cols(); ++c) std::swap(e.at(found, c), e.at(pivot_row, c));
    const Scalar inv = e.at(pivot_row, col).inverse();
    for (int c = col; c < m.cols(); ++c) e.at(pivot_row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || e.at(r, col).is_zero()) continue;
      const Scalar f = e.at(r, col);
      for (int c = col; c < m.cols(); ++c) e.at(r, c) -= f * e.at(pivot_row, c);
    }
    res.pivot_columns.push_back(col);
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

int rank_of(const ExactMatrix& m) { return row_reduce(m).rank; }

ExactMatrix kernel_basis(const ExactMatrix& m) {
  const RowEchelon re = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : re.pivot_columns) is_pivot[c] = true;
  ExactMatrix basis(m.cols() - re.rank, m.cols(), m.field());
  int out = 0;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.at(out, free_col) = Scalar::one(m.field());
    for (int r = 0; r < re.rank; ++r)
      basis.at(out, re.pivot_columns[r]) = -re.echelon.at(r, free_col);
    ++out;
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const ExactMatrix& m, std::span<const Scalar> b) {
  if (static_cast<int>(b.size()) != m.rows()) throw InputError("rhs length mismatch in solve");
  ExactMatrix aug(m.rows(), m.cols() + 1, m.field());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  const RowEchelon re = row_reduce(aug);
  std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
  for (int r = 0; r < re.rank; ++r) {
    if (re.pivot_columns[r] == m.cols()) return std::nullopt;  // 0 = 1 row
    x[re.pivot_columns[r]] = re.echelon.at(r, m.cols());
  }
  return x;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of non-square matrix");
  const int n = m.rows();
  ExactMatrix aug(n, 2 * n, m.field());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one(m.field());
  }
  const RowEchelon re = row_reduce(aug);
  if (re.rank < n || re.pivot_columns[n - 1] != n - 1) return std::nullopt;
  ExactMatrix inv(n, n, m.field());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = re.echelon.at(r, n + c);
  return inv;
}

ExactMatrix stack_rows(const ExactMatrix& top, const ExactMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw InputError("column mismatch in stack_rows");
  ExactMatrix r(top.rows() + bottom.rows(), top.cols(), top.field());
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) r.at(i, j) = top.at(i, j);
  for (int i = 0; i < bottom.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) r.at(top.rows() + i, j) = bottom.at(i, j);
  return r;
}

std::vector<Scalar> RowSpace::reduce(std::vector<Scalar> v) const {
  if (static_cast<int>(v.size()) != cols_) throw InputError("vector length mismatch in RowSpace");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const Scalar f = c;
    for (int j = pivots_[r]; j < cols_; ++j)
      if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool RowSpace::contains(std::span<const Scalar> v) const {
  std::vector<Scalar> res = reduce(std::vector<Scalar>(v.begin(), v.end()));
  return std::all_of(res.begin(), res.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::optional<std::vector<Scalar>> RowSpace::insert(std::vector<Scalar> v) {
  v = reduce(std::move(v));
  int pivot = -1;
  for (int j = 0; j < cols_; ++j)
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) return std::nullopt;
  const Scalar inv = v[pivot].inverse();
  for (int j = pivot; j < cols_; ++j) v[j] *= inv;
  // Back-substitute into existing rows to stay fully reduced.
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar f = rows_[r][pivot];
    if (f.is_zero()) continue;
    for (int j = pivot; j < cols_; ++j) rows_[r][j] -= f * v[j];
  }
  // Keep rows ordered by pivot column.
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + pos, v);
  pivots_.insert(pivots_.begin() + pos, pivot);
  return v;
}

ExactMatrix RowSpace::to_matrix() const { return ExactMatrix::from_rows(rows_, cols_, field_); }

}  // namespace artin
