#include "qqsa/scalars/coeff.hpp"

#include <stdexcept>

namespace qqsa::scalars {

namespace {

Cyclotomic promote(const Scalar& s, const FieldPtr& f) {
  if (!s.is_constant()) {
    throw std::invalid_argument("cannot mix symbolic scalar " + s.to_string() +
                                " with a cyclotomic value");
  }
  return Cyclotomic(f, s.constant_value());
}

template <class Op>
Coeff combine(const Coeff& a, const Coeff& b, Op op) {
  if (!a.is_cyclotomic() && !b.is_cyclotomic()) return op(a.scalar(), b.scalar());
  if (a.is_cyclotomic() && b.is_cyclotomic()) return op(a.cyclotomic(), b.cyclotomic());
  if (a.is_cyclotomic()) return op(a.cyclotomic(), promote(b.scalar(), a.cyclotomic().field()));
  return op(promote(a.scalar(), b.cyclotomic().field()), b.cyclotomic());
}

}  // namespace

bool Coeff::is_zero() const noexcept {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

std::optional<mpq_class> Coeff::rational() const {
  if (is_cyclotomic()) {
    if (!cyclotomic().is_rational()) return std::nullopt;
    return cyclotomic().rational_value();
  }
  if (!scalar().is_constant()) return std::nullopt;
  return scalar().constant_value();
}

std::size_t Coeff::term_count() const noexcept {
  return std::visit([](const auto& x) { return x.term_count(); }, v_);
}

Coeff Coeff::operator+(const Coeff& o) const {
  return combine(*this, o, [](const auto& x, const auto& y) { return Coeff(x + y); });
}

Coeff Coeff::operator-(const Coeff& o) const {
  return combine(*this, o, [](const auto& x, const auto& y) { return Coeff(x - y); });
}

Coeff Coeff::operator-() const {
  return std::visit([](const auto& x) { return Coeff(-x); }, v_);
}

Coeff Coeff::operator*(const Coeff& o) const {
  return combine(*this, o, [](const auto& x, const auto& y) { return Coeff(x * y); });
}

Coeff Coeff::operator/(const Coeff& o) const {
  return combine(*this, o, [](const auto& x, const auto& y) { return Coeff(x / y); });
}

Coeff Coeff::inverse() const {
  return std::visit([](const auto& x) { return Coeff(x.inverse()); }, v_);
}

Coeff Coeff::pow(long k) const {
  return std::visit([k](const auto& x) { return Coeff(x.pow(k)); }, v_);
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (a.is_cyclotomic() != b.is_cyclotomic()) {
    const Scalar& s = a.is_cyclotomic() ? b.scalar() : a.scalar();
    if (!s.is_constant()) return false;
    return (a - b).is_zero();
  }
  if (a.is_cyclotomic()) return a.cyclotomic() == b.cyclotomic();
  return a.scalar() == b.scalar();
}

std::string Coeff::to_string(const VarNames& names) const {
  if (is_cyclotomic()) return cyclotomic().to_string();
  return scalar().to_string(names);
}

}  // namespace qqsa::scalars
