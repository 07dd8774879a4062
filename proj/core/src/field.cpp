#include "symforms/field.hpp"

namespace symforms {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint64_t characteristic)
    : characteristic_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw std::invalid_argument("field characteristic must be 0 or a prime, got " +
                                std::to_string(characteristic));
  }
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "F_" + std::to_string(characteristic_);
}

FieldScalar::FieldScalar(FieldSpec spec, long long n)
    : spec_(spec), value_(n) {
  reduce();
}

FieldScalar::FieldScalar(FieldSpec spec, BigRational value)
    : spec_(spec), value_(std::move(value)) {
  reduce();
}

void FieldScalar::reduce() {
  const std::uint64_t p = spec_.characteristic();
  if (p == 0) return;  // cpp_rational keeps itself in lowest terms
  BigInt num = numerator(value_);
  BigInt den = denominator(value_);
  BigInt bp(p);
  num %= bp;
  if (num < 0) num += bp;
  if (den != 1) {
    // Residue of a fraction: multiply by the inverse of the denominator.
    den %= bp;
    if (den < 0) den += bp;
    FieldScalar d(spec_, BigRational(den));
    *this = FieldScalar(spec_, BigRational(num)) * d.inverse();
    return;
  }
  value_ = BigRational(num);
}

void FieldScalar::check_same_field(const FieldScalar& rhs) const {
  if (spec_ != rhs.spec_) {
    throw std::invalid_argument("mixed-field operands: " + spec_.to_string() +
                                " vs " + rhs.spec_.to_string());
  }
}

FieldScalar FieldScalar::operator+(const FieldScalar& rhs) const {
  check_same_field(rhs);
  return FieldScalar(spec_, value_ + rhs.value_);
}

FieldScalar FieldScalar::operator-(const FieldScalar& rhs) const {
  check_same_field(rhs);
  return FieldScalar(spec_, value_ - rhs.value_);
}

FieldScalar FieldScalar::operator*(const FieldScalar& rhs) const {
  check_same_field(rhs);
  return FieldScalar(spec_, value_ * rhs.value_);
}

FieldScalar FieldScalar::operator-() const {
  return FieldScalar(spec_, -value_);
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) {
    throw std::domain_error("cannot invert zero in " + spec_.to_string());
  }
  const std::uint64_t p = spec_.characteristic();
  if (p == 0) {
    return FieldScalar(spec_, BigRational(1) / value_);
  }
  // Extended Euclid on the residue; p is prime so the inverse exists.
  std::int64_t a = static_cast<std::int64_t>(numerator(value_));
  std::int64_t m = static_cast<std::int64_t>(p);
  std::int64_t t0 = 0, t1 = 1, r0 = m, r1 = a;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
  }
  if (t0 < 0) t0 += m;
  return FieldScalar(spec_, BigRational(t0));
}

std::string FieldScalar::to_string() const {
  return value_.str();
}

}  // namespace symforms
