#ifndef SYMFORMS_SERIES_HPP
#define SYMFORMS_SERIES_HPP

#include <cstdint>
#include <vector>

#include "symforms/basis.hpp"

namespace symforms {

/// Truncated bivariate series with nonnegative integer coefficients,
/// coefficient of t^n x^q at (n, q). Lookups beyond the truncation throw;
/// a truncated series does not know those values.
class BivariateSeries {
public:
  BivariateSeries(unsigned n_max, unsigned q_max);

  unsigned n_max() const { return n_max_; }
  unsigned q_max() const { return q_max_; }

  std::int64_t at(unsigned n, unsigned q) const;
  void set(unsigned n, unsigned q, std::int64_t value);

  BivariateSeries operator*(const BivariateSeries& rhs) const;

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

private:
  unsigned n_max_, q_max_;
  std::vector<std::int64_t> coeffs_;
};

/// Characteristic-0 prediction of h^{q,0}(X^(n)) for all n, q at once:
/// the n-th graded symmetric power of a space with h00 even generators in
/// degree 0, h10 odd generators in degree 1, h20 even generators in degree 2.
/// Product form (1-t)^-h00 (1+tx)^h10 (1-tx^2)^-h20, expanded and truncated.
BivariateSeries char0_hq0_series(const SurfaceHodgeData& data, unsigned n_max,
                                 unsigned q_max);

/// Predicted characteristic-2 count, treating every generator as even:
/// (1-t)^-h00 (1-tx)^-h10 (1-tx^2)^-h20. Validated empirically against the
/// invariants engine, never used as ground truth.
BivariateSeries char2_predicted_series(const SurfaceHodgeData& data,
                                       unsigned n_max, unsigned q_max);

/// One (n, q) where the characteristic-0 count and the characteristic-p
/// engine disagree.
struct Discrepancy {
  unsigned n = 0;
  unsigned q = 0;
  std::int64_t char0_value = 0;
  std::int64_t engine_value = 0;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

/// Every (n, q) with n <= n_max, q <= min(q_max, 2n) where the engine over
/// data's (positive-characteristic) field differs from char0_hq0_series.
/// Requires positive characteristic.
std::vector<Discrepancy> compare(const SurfaceHodgeData& data, unsigned n_max,
                                 unsigned q_max);

}  // namespace symforms

#endif
