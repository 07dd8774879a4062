#include "symforms/invariants.hpp"

#include <map>
#include <stdexcept>

namespace symforms {

std::string method_name(Method m) {
  switch (m) {
    case Method::GeneratorKernel: return "generator-kernel";
    case Method::BruteForce: return "brute-force";
    case Method::ClosedForm: return "closed-form";
  }
  throw std::logic_error("unreachable");
}

std::optional<Method> method_from_name(const std::string& s) {
  if (s == "generator-kernel") return Method::GeneratorKernel;
  if (s == "brute-force") return Method::BruteForce;
  if (s == "closed-form") return Method::ClosedForm;
  return std::nullopt;
}

namespace {

using BasisIndex = std::map<TensorBasisElement, std::size_t>;

BasisIndex index_of(const std::vector<TensorBasisElement>& basis) {
  BasisIndex idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

// Rows of (M_perm - I): for each source e with image s*e' the constraint
// v[e'] = sign * v[e]. Rows where the action fixes e with sign +1 vanish and
// are dropped.
void append_difference_rows(std::vector<SparseRow>& rows,
                            const Permutation& perm,
                            const std::vector<TensorBasisElement>& basis,
                            const BasisIndex& idx, FieldSpec field) {
  const FieldScalar one = FieldScalar::one(field);
  for (std::size_t src = 0; src < basis.size(); ++src) {
    SignedBasisElement img = act(perm, basis[src], field);
    std::size_t dst = idx.at(img.element);
    if (dst == src) {
      FieldScalar diag = img.sign - one;
      if (!diag.is_zero()) rows.push_back({{src, diag}});
      continue;
    }
    SparseRow row;
    if (src < dst) {
      row.emplace_back(src, -one);
      row.emplace_back(dst, img.sign);
    } else {
      row.emplace_back(dst, img.sign);
      row.emplace_back(src, -one);
    }
    rows.push_back(std::move(row));
  }
}

InvariantReport from_kernel(const SurfaceHodgeData& data, unsigned n,
                            unsigned q, Method method,
                            std::vector<std::vector<FieldScalar>> kernel,
                            bool want_basis) {
  InvariantReport report;
  report.data = data;
  report.n = n;
  report.q = q;
  report.method = method;
  report.dimension = kernel.size();
  if (want_basis) report.basis = std::move(kernel);
  return report;
}

}  // namespace

ExactMatrix action_matrix(const Permutation& perm, const SurfaceHodgeData& data,
                          unsigned n, unsigned q) {
  auto basis = enumerate_basis(data, n, q);
  auto idx = index_of(basis);
  ExactMatrix m(data.field, basis.size(), basis.size());
  for (std::size_t src = 0; src < basis.size(); ++src) {
    SignedBasisElement img = act(perm, basis[src], data.field);
    m.at(idx.at(img.element), src) = img.sign;
  }
  return m;
}

InvariantReport invariant_dimension(const SurfaceHodgeData& data, unsigned n,
                                    unsigned q, bool want_basis) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  auto basis = enumerate_basis(data, n, q);
  if (basis.empty()) {
    return from_kernel(data, n, q, Method::GeneratorKernel, {}, want_basis);
  }
  auto idx = index_of(basis);
  std::vector<SparseRow> rows;
  for (unsigned i = 0; i + 1 < n; ++i) {
    append_difference_rows(rows, Permutation::transposition(n, i, i + 1),
                           basis, idx, data.field);
  }
  auto kernel = kernel_basis(data.field, basis.size(), std::move(rows));
  return from_kernel(data, n, q, Method::GeneratorKernel, std::move(kernel),
                     want_basis);
}

InvariantReport invariant_dimension_bruteforce(const SurfaceHodgeData& data,
                                               unsigned n, unsigned q,
                                               unsigned n_bound) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > n_bound) {
    throw std::invalid_argument(
        "brute force over all " + std::to_string(n) +
        "! permutations refused: n exceeds the bound " +
        std::to_string(n_bound));
  }
  auto basis = enumerate_basis(data, n, q);
  if (basis.empty()) {
    return from_kernel(data, n, q, Method::BruteForce, {}, false);
  }
  auto idx = index_of(basis);
  std::vector<SparseRow> rows;
  for (const auto& perm : all_permutations(n)) {
    append_difference_rows(rows, perm, basis, idx, data.field);
  }
  auto kernel = kernel_basis(data.field, basis.size(), std::move(rows));
  return from_kernel(data, n, q, Method::BruteForce, std::move(kernel), false);
}

unsigned long closed_form_q2(const SurfaceHodgeData& data, unsigned n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const unsigned long h10 = data.h10;
  const unsigned long h20 = data.h20;
  if (n == 1) return h20;
  if (data.field.characteristic() == 2) {
    return h20 + h10 * (h10 + 1) / 2;
  }
  return h20 + h10 * (h10 - 1) / 2;
}

}  // namespace symforms
