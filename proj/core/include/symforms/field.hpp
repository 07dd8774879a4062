#ifndef SYMFORMS_FIELD_HPP
#define SYMFORMS_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symforms {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// The ground field: the rationals (characteristic 0) or a prime field F_p.
///
/// Invariant dimensions of rational representations do not change under
/// field extension, so computing over the prime field (or over Q) gives the
/// same answers as over any algebraically closed extension.
class FieldSpec {
public:
  FieldSpec() : characteristic_(0) {}

  explicit FieldSpec(std::uint64_t characteristic);

  std::uint64_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  std::string to_string() const;

private:
  std::uint64_t characteristic_;
};

bool is_prime(std::uint64_t n);

/// An exact scalar: a reduced fraction in characteristic 0, a residue in
/// [0, p) in characteristic p. Immutable after construction.
class FieldScalar {
public:
  FieldScalar() = default;
  explicit FieldScalar(FieldSpec spec) : spec_(spec), value_(0) {}
  FieldScalar(FieldSpec spec, long long n);
  FieldScalar(FieldSpec spec, BigRational value);

  static FieldScalar zero(FieldSpec spec) { return FieldScalar(spec, 0); }
  static FieldScalar one(FieldSpec spec) { return FieldScalar(spec, 1); }

  const FieldSpec& spec() const { return spec_; }
  const BigRational& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  FieldScalar operator+(const FieldScalar& rhs) const;
  FieldScalar operator-(const FieldScalar& rhs) const;
  FieldScalar operator*(const FieldScalar& rhs) const;
  FieldScalar operator-() const;
  FieldScalar inverse() const;

  FieldScalar& operator+=(const FieldScalar& rhs) { return *this = *this + rhs; }
  FieldScalar& operator-=(const FieldScalar& rhs) { return *this = *this - rhs; }
  FieldScalar& operator*=(const FieldScalar& rhs) { return *this = *this * rhs; }

  friend bool operator==(const FieldScalar&, const FieldScalar&) = default;

  std::string to_string() const;

private:
  void check_same_field(const FieldScalar& rhs) const;
  void reduce();

  FieldSpec spec_;
  BigRational value_{0};
};

}  // namespace symforms

#endif
