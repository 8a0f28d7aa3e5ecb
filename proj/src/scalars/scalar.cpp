#include "qqsa/scalars/scalar.hpp"

namespace qqsa::scalars {

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

Scalar Scalar::monomial(const Monomial& m, const mpq_class& c) {
  return Scalar(Raw{}, LaurentPoly(m, c), LaurentPoly(1));
}

Scalar Scalar::variable(VarIndex v, Exponent e) { return monomial(Monomial::variable(v, e)); }

void Scalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.size() == 1) {
    const auto& t = den_.leading();
    num_ = num_.scaled(t.mono.inverse(), 1 / t.coeff);
    den_ = LaurentPoly(1);
    return;
  }
  if (auto q = LaurentPoly::exact_divide(num_, den_)) {
    num_ = std::move(*q);
    den_ = LaurentPoly(1);
    return;
  }
  const Monomial shift = den_.min_monomial().inverse();
  const mpq_class lc_inv = 1 / den_.leading().coeff;
  num_ = num_.scaled(shift, lc_inv);
  den_ = den_.scaled(shift, lc_inv);
}

mpq_class Scalar::constant_value() const {
  if (!is_constant()) throw std::logic_error("scalar is not constant: " + to_string());
  return num_.constant_value() / den_.constant_value();
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
  if (!den_.is_constant() && !o.den_.is_constant()) {
    if (auto k = LaurentPoly::exact_divide(den_, o.den_)) return Scalar(num_ + o.num_ * *k, den_);
    if (auto k = LaurentPoly::exact_divide(o.den_, den_)) return Scalar(num_ * *k + o.num_, o.den_);
  }
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-() const { return Scalar(Raw{}, -num_, den_); }

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (is_polynomial() && o.is_polynomial()) return Scalar(Raw{}, num_ * o.num_, LaurentPoly(1));
  LaurentPoly n1 = num_, d2 = o.den_;
  LaurentPoly n2 = o.num_, d1 = den_;
  if (!d2.is_constant()) {
    if (auto k = LaurentPoly::exact_divide(n1, d2)) {
      n1 = std::move(*k);
      d2 = LaurentPoly(1);
    }
  }
  if (!d1.is_constant()) {
    if (auto k = LaurentPoly::exact_divide(n2, d1)) {
      n2 = std::move(*k);
      d1 = LaurentPoly(1);
    }
  }
  return Scalar(n1 * n2, d1 * d2);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw DivisionByZero("division by zero scalar");
  return *this * o.inverse();
}

std::optional<Scalar> Scalar::try_divide(const Scalar& o) const {
  if (o.is_zero()) return std::nullopt;
  return *this / o;
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string Scalar::to_string(const VarNames& names) const {
  if (den_ == LaurentPoly(1)) return num_.to_string(names);
  return "(" + num_.to_string(names) + ") / (" + den_.to_string(names) + ")";
}

}  // namespace qqsa::scalars
