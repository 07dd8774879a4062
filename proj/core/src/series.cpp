#include "symforms/series.hpp"

#include <stdexcept>

#include "symforms/invariants.hpp"

namespace symforms {

BivariateSeries::BivariateSeries(unsigned n_max, unsigned q_max)
    : n_max_(n_max), q_max_(q_max),
      coeffs_(static_cast<std::size_t>(n_max + 1) * (q_max + 1), 0) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
}

std::int64_t BivariateSeries::at(unsigned n, unsigned q) const {
  if (n > n_max_ || q > q_max_) {
    throw std::out_of_range("coefficient (" + std::to_string(n) + ", " +
                            std::to_string(q) + ") beyond truncation");
  }
  return coeffs_[static_cast<std::size_t>(n) * (q_max_ + 1) + q];
}

void BivariateSeries::set(unsigned n, unsigned q, std::int64_t value) {
  if (n > n_max_ || q > q_max_) {
    throw std::out_of_range("coefficient beyond truncation");
  }
  coeffs_[static_cast<std::size_t>(n) * (q_max_ + 1) + q] = value;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& rhs) const {
  if (n_max_ != rhs.n_max_ || q_max_ != rhs.q_max_) {
    throw std::invalid_argument("truncation mismatch in series product");
  }
  BivariateSeries out(n_max_, q_max_);
  for (unsigned n1 = 0; n1 <= n_max_; ++n1) {
    for (unsigned q1 = 0; q1 <= q_max_; ++q1) {
      std::int64_t a = at(n1, q1);
      if (a == 0) continue;
      for (unsigned n2 = 0; n1 + n2 <= n_max_; ++n2) {
        for (unsigned q2 = 0; q1 + q2 <= q_max_; ++q2) {
          std::int64_t b = rhs.at(n2, q2);
          if (b == 0) continue;
          out.coeffs_[static_cast<std::size_t>(n1 + n2) * (q_max_ + 1) + q1 + q2] += a * b;
        }
      }
    }
  }
  return out;
}

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k == 0) return 1;
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// (1 - t^1 x^xdeg)^-h: coefficient of (t x^xdeg)^k is C(h-1+k, k).
BivariateSeries geometric_factor(unsigned h, unsigned xdeg, unsigned n_max,
                                 unsigned q_max) {
  BivariateSeries s(n_max, q_max);
  for (unsigned k = 0; k <= n_max; ++k) {
    if (k * xdeg > q_max) break;
    s.set(k, k * xdeg, binomial(static_cast<std::int64_t>(h) - 1 + k, k));
  }
  return s;
}

// (1 + t x)^h: coefficient of (t x)^k is C(h, k).
BivariateSeries odd_factor(unsigned h, unsigned n_max, unsigned q_max) {
  BivariateSeries s(n_max, q_max);
  for (unsigned k = 0; k <= n_max && k <= h; ++k) {
    if (k > q_max) break;
    s.set(k, k, binomial(h, k));
  }
  return s;
}

}  // namespace

BivariateSeries char0_hq0_series(const SurfaceHodgeData& data, unsigned n_max,
                                 unsigned q_max) {
  return geometric_factor(data.h00, 0, n_max, q_max) *
         odd_factor(data.h10, n_max, q_max) *
         geometric_factor(data.h20, 2, n_max, q_max);
}

BivariateSeries char2_predicted_series(const SurfaceHodgeData& data,
                                       unsigned n_max, unsigned q_max) {
  return geometric_factor(data.h00, 0, n_max, q_max) *
         geometric_factor(data.h10, 1, n_max, q_max) *
         geometric_factor(data.h20, 2, n_max, q_max);
}

std::vector<Discrepancy> compare(const SurfaceHodgeData& data, unsigned n_max,
                                 unsigned q_max) {
  if (data.field.characteristic() == 0) {
    throw std::invalid_argument(
        "compare needs positive characteristic: the characteristic-0 count "
        "is the baseline, not a comparand");
  }
  BivariateSeries baseline = char0_hq0_series(data, n_max, q_max);
  std::vector<Discrepancy> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned q = 0; q <= q_max && q <= 2 * n; ++q) {
      auto report = invariant_dimension(data, n, q);
      std::int64_t predicted = baseline.at(n, q);
      auto engine = static_cast<std::int64_t>(report.dimension);
      if (engine != predicted) {
        out.push_back(Discrepancy{n, q, predicted, engine});
      }
    }
  }
  return out;
}

}  // namespace symforms
