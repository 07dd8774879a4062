#ifndef SYMFORMS_MATRIX_HPP
#define SYMFORMS_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "symforms/field.hpp"

namespace symforms {

/// Dense row-major matrix over a fixed field. All entries share one FieldSpec.
class ExactMatrix {
public:
  ExactMatrix(FieldSpec spec, std::size_t rows, std::size_t cols)
      : spec_(spec), rows_(rows), cols_(cols),
        entries_(rows * cols, FieldScalar::zero(spec)) {}

  static ExactMatrix identity(FieldSpec spec, std::size_t n);

  const FieldSpec& spec() const { return spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const FieldScalar& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  FieldScalar& at(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }

  std::vector<FieldScalar> apply(const std::vector<FieldScalar>& v) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
  FieldSpec spec_;
  std::size_t rows_, cols_;
  std::vector<FieldScalar> entries_;
};

/// A matrix row as sorted (column, nonzero value) pairs. The elimination core
/// works on this form so that stacked signed-permutation systems (two nonzeros
/// per row) never have to be materialized densely.
using SparseRow = std::vector<std::pair<std::size_t, FieldScalar>>;

/// Reduced-echelon basis of {v : rows . v = 0}. Deterministic: basis vectors
/// are listed by ascending free column, each with a 1 in its free column.
std::vector<std::vector<FieldScalar>> kernel_basis(FieldSpec spec,
                                                   std::size_t cols,
                                                   std::vector<SparseRow> rows);

std::vector<std::vector<FieldScalar>> kernel_basis(const ExactMatrix& m);

std::size_t rank(FieldSpec spec, std::size_t cols, std::vector<SparseRow> rows);
std::size_t rank(const ExactMatrix& m);

}  // namespace symforms

#endif
