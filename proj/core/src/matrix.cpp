#include "symforms/matrix.hpp"

#include <algorithm>
#include <cstdint>

namespace symforms {

ExactMatrix ExactMatrix::identity(FieldSpec spec, std::size_t n) {
  ExactMatrix m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldScalar::one(spec);
  return m;
}

std::vector<FieldScalar> ExactMatrix::apply(
    const std::vector<FieldScalar>& v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("matrix-vector size mismatch");
  }
  std::vector<FieldScalar> out(rows_, FieldScalar::zero(spec_));
  for (std::size_t r = 0; r < rows_; ++r) {
    FieldScalar acc = FieldScalar::zero(spec_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero() && !v[c].is_zero()) acc += at(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

namespace {

// dst -= coeff * src, both sorted by column.
SparseRow axpy(const SparseRow& dst, const FieldScalar& coeff,
               const SparseRow& src) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -(coeff * src[j].second));
      ++j;
    } else {
      FieldScalar v = dst[i].second - coeff * src[j].second;
      if (!v.is_zero()) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

struct Echelon {
  // pivot_row[c] = index into rows of the (lead-1-normalized) row whose
  // leading column is c, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_row;
  std::vector<SparseRow> rows;

  explicit Echelon(std::size_t cols) : pivot_row(cols, npos) {}

  // Reduce a row against the current pivots and absorb what survives.
  void insert(SparseRow row) {
    while (!row.empty()) {
      std::size_t lead = row.front().first;
      std::size_t pr = pivot_row[lead];
      if (pr == npos) {
        FieldScalar inv = row.front().second.inverse();
        for (auto& [c, v] : row) v *= inv;
        pivot_row[lead] = rows.size();
        rows.push_back(std::move(row));
        return;
      }
      row = axpy(row, row.front().second, rows[pr]);
    }
  }

  // Eliminate pivot columns from every other row (full reduction).
  void back_substitute() {
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < pivot_row.size(); ++c) {
      if (pivot_row[c] != npos) pivot_cols.push_back(c);
    }
    for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
      const std::size_t pc = *it;
      const SparseRow src = rows[pivot_row[pc]];
      for (std::size_t c : pivot_cols) {
        if (c == pc) continue;
        SparseRow& r = rows[pivot_row[c]];
        auto pos = std::lower_bound(
            r.begin(), r.end(), pc,
            [](const auto& e, std::size_t col) { return e.first < col; });
        if (pos != r.end() && pos->first == pc) {
          r = axpy(r, pos->second, src);
        }
      }
    }
  }
};

Echelon eliminate(FieldSpec spec, std::size_t cols,
                  std::vector<SparseRow>&& input) {
  (void)spec;
  Echelon e(cols);
  for (auto& row : input) e.insert(std::move(row));
  return e;
}

std::vector<SparseRow> to_sparse(const ExactMatrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m.at(r, c).is_zero()) row.emplace_back(c, m.at(r, c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<std::vector<FieldScalar>> kernel_basis(
    FieldSpec spec, std::size_t cols, std::vector<SparseRow> rows) {
  Echelon e = eliminate(spec, cols, std::move(rows));
  e.back_substitute();

  std::vector<std::vector<FieldScalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (e.pivot_row[f] != Echelon::npos) continue;  // pivot column, not free
    std::vector<FieldScalar> v(cols, FieldScalar::zero(spec));
    v[f] = FieldScalar::one(spec);
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t pr = e.pivot_row[c];
      if (pr == Echelon::npos) continue;
      const SparseRow& row = e.rows[pr];
      auto pos = std::lower_bound(
          row.begin(), row.end(), f,
          [](const auto& entry, std::size_t col) { return entry.first < col; });
      if (pos != row.end() && pos->first == f) {
        v[c] = -pos->second;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<FieldScalar>> kernel_basis(const ExactMatrix& m) {
  return kernel_basis(m.spec(), m.cols(), to_sparse(m));
}

std::size_t rank(FieldSpec spec, std::size_t cols,
                 std::vector<SparseRow> rows) {
  return eliminate(spec, cols, std::move(rows)).rows.size();
}

std::size_t rank(const ExactMatrix& m) {
  return rank(m.spec(), m.cols(), to_sparse(m));
}

}  // namespace symforms
