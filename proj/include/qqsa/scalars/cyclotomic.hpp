#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qqsa::scalars {

/// Dense polynomial over Q, coefficient of x^k at index k, no trailing zeros.
using QPoly = std::vector<mpq_class>;

/// The cyclotomic polynomial Phi_n, computed from x^n - 1 by dividing out
/// Phi_d for every proper divisor d.
QPoly cyclotomic_polynomial(std::uint32_t n);

/// Q(zeta_l) presented as Q[x] / Phi_l.
class CyclotomicField {
 public:
  explicit CyclotomicField(std::uint32_t order);
  std::uint32_t order() const noexcept { return order_; }
  const QPoly& modulus() const noexcept { return phi_; }
  std::size_t degree() const noexcept { return phi_.size() - 1; }

 private:
  std::uint32_t order_;
  QPoly phi_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

FieldPtr make_cyclotomic_field(std::uint32_t order);

/// Element of Q(zeta_l), reduced mod Phi_l. Order 1 is Q itself; a value of
/// order 1 combines with any other order by promotion.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(FieldPtr field, const mpq_class& c);
  Cyclotomic(FieldPtr field, QPoly coeffs);

  /// zeta_l^k for any integer k.
  static Cyclotomic zeta_power(FieldPtr field, std::int64_t k);

  const FieldPtr& field() const noexcept { return field_; }
  std::uint32_t order() const noexcept { return field_->order(); }
  const QPoly& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_rational() const noexcept { return coeffs_.size() <= 1; }
  mpq_class rational_value() const;
  std::size_t term_count() const noexcept;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic inverse() const;
  Cyclotomic pow(long k) const;

  /// Re-express in a field of another order (rationals only, or same order).
  Cyclotomic in_field(const FieldPtr& f) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Polynomial in z = zeta_l, e.g. "z^2 - 1/2*z + 3".
  std::string to_string() const;

 private:
  FieldPtr common_field(const Cyclotomic& o) const;

  FieldPtr field_;
  QPoly coeffs_;
};

}  // namespace qqsa::scalars
