#pragma once

#include <optional>
#include <string>
#include <variant>

#include "qqsa/scalars/cyclotomic.hpp"
#include "qqsa/scalars/scalar.hpp"

namespace qqsa::scalars {

/// Coefficient of an algebra element: a symbolic Scalar or a value in a
/// cyclotomic field. Constant scalars promote when mixed with cyclotomic
/// values; mixing a non-constant scalar with one is an error.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long c) : v_(Scalar(c)) {}                // NOLINT(google-explicit-constructor)
  Coeff(Scalar s) : v_(std::move(s)) {}           // NOLINT(google-explicit-constructor)
  Coeff(Cyclotomic c) : v_(std::move(c)) {}       // NOLINT(google-explicit-constructor)

  bool is_cyclotomic() const noexcept { return std::holds_alternative<Cyclotomic>(v_); }
  const Scalar& scalar() const { return std::get<Scalar>(v_); }
  const Cyclotomic& cyclotomic() const { return std::get<Cyclotomic>(v_); }

  bool is_zero() const noexcept;
  /// Rational value if the coefficient is a constant.
  std::optional<mpq_class> rational() const;
  std::size_t term_count() const noexcept;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator-() const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff inverse() const;
  Coeff pow(long k) const;

  friend Coeff operator+(long a, const Coeff& b) { return Coeff(a) + b; }
  friend Coeff operator-(long a, const Coeff& b) { return Coeff(a) - b; }
  friend Coeff operator*(long a, const Coeff& b) { return Coeff(a) * b; }
  friend Coeff operator/(long a, const Coeff& b) { return Coeff(a) / b; }
  friend bool operator==(const Coeff& a, const Coeff& b);
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  std::string to_string(const VarNames& names = {}) const;

 private:
  std::variant<Scalar, Cyclotomic> v_;
};

}  // namespace qqsa::scalars
