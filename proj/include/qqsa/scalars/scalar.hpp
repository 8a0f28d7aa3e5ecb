#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "qqsa/scalars/laurent.hpp"

namespace qqsa::scalars {

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

/// Element of the fraction field of the Laurent ring, kept as num / den.
///
/// Canonical form: the denominator has minimal monomial content 1 and a
/// leading coefficient of 1, and whenever den divides num exactly the
/// quotient is stored with den = 1. No multivariate gcd is taken, so two
/// equal scalars may have different representations; operator== compares
/// by cross-multiplication.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& c) : num_(c), den_(1) {}
  explicit Scalar(LaurentPoly p) : num_(std::move(p)), den_(1) {}
  /// Throws DivisionByZero if den is zero.
  Scalar(LaurentPoly num, LaurentPoly den);

  static Scalar monomial(const Monomial& m, const mpq_class& c = 1);
  static Scalar variable(VarIndex v, Exponent e = Exponent(1));

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  mpq_class constant_value() const;
  std::size_t term_count() const noexcept { return num_.size() + den_.size(); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  std::optional<Scalar> try_divide(const Scalar& o) const;
  Scalar inverse() const;
  Scalar pow(long k) const;

  /// Re-run normalization; a no-op on values built through the public API.
  Scalar normalized() const { return Scalar(num_, den_); }

  friend Scalar operator+(long a, const Scalar& b) { return Scalar(a) + b; }
  friend Scalar operator-(long a, const Scalar& b) { return Scalar(a) - b; }
  friend Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }
  friend Scalar operator/(long a, const Scalar& b) { return Scalar(a) / b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "num" when the denominator is 1, otherwise "(num) / (den)".
  std::string to_string(const VarNames& names = {}) const;

 private:
  struct Raw {};
  Scalar(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace qqsa::scalars
