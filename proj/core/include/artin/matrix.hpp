#pragma once

#include <optional>
#include <span>
#include <vector>

#include "artin/field.hpp"

namespace artin {

// Dense exact matrix, row-major. All entries share one field.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols, const FieldDescriptor& f);

  static ExactMatrix identity(int n, const FieldDescriptor& f);
  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows, int cols,
                               const FieldDescriptor& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldDescriptor& field() const { return field_; }

  Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  std::vector<Scalar> row(int r) const;
  ExactMatrix multiply(const ExactMatrix& o) const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;  // M v
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const Scalar& c) const;
  ExactMatrix scaled_rows(std::span<const Scalar> factors) const;
  ExactMatrix transposed() const;
  bool is_zero() const;
  bool operator==(const ExactMatrix& o) const;

  std::string str() const;  // debugging aid

 private:
  int rows_ = 0;
  int cols_ = 0;
  FieldDescriptor field_;
  std::vector<Scalar> a_;
};

struct RowEchelon {
  int rank = 0;
  ExactMatrix echelon;             // reduced row-echelon form, zero rows kept
  std::vector<int> pivot_columns;  // ascending, one per pivot row
};

// Reduced row-echelon form with the deterministic leftmost-pivot rule.
RowEchelon row_reduce(const ExactMatrix& m);

int rank_of(const ExactMatrix& m);

// Rows form a basis of {v : Mv = 0}, one row per non-pivot column of the
// reduced echelon form, in ascending free-column order.
ExactMatrix kernel_basis(const ExactMatrix& m);

// One particular solution of M x = b with free coordinates set to zero,
// or nullopt when b is outside the column space.
std::optional<std::vector<Scalar>> solve(const ExactMatrix& m, std::span<const Scalar> b);

std::optional<ExactMatrix> inverse(const ExactMatrix& m);

ExactMatrix stack_rows(const ExactMatrix& top, const ExactMatrix& bottom);

// Incrementally maintained row space in reduced echelon form. Used for
// per-degree ideal closures, powers of the maximal ideal, and Jordan chain
// extension, where vectors arrive one at a time.
class RowSpace {
 public:
  RowSpace(int cols, const FieldDescriptor& f) : cols_(cols), field_(f) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  // Reduces v against the current rows; returns the residue.
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  // Inserts v if independent; returns the normalized new row, or nullopt.
  std::optional<std::vector<Scalar>> insert(std::vector<Scalar> v);

  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  ExactMatrix to_matrix() const;

 private:
  int cols_;
  FieldDescriptor field_;
  std::vector<std::vector<Scalar>> rows_;  // kept fully reduced
  std::vector<int> pivots_;                // pivot column per row, ascending
};

}  // namespace artin
