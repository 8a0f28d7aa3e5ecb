#include "qqsa/scalars/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "qqsa/scalars/scalar.hpp"

namespace qqsa::scalars {

namespace {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly scale(QPoly a, const mpq_class& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

/// Quotient and remainder of a by nonzero b.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  if (a.size() < b.size()) return {{}, std::move(a)};
  QPoly q(a.size() - b.size() + 1);
  const mpq_class lc_inv = 1 / b.back();
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const mpq_class c = a[shift + b.size() - 1] * lc_inv;
    q[shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(q);
  trim(a);
  return {std::move(q), std::move(a)};
}

QPoly reduce(const QPoly& a, const QPoly& m) {
  if (a.size() < m.size()) return a;
  return divmod(a, m).second;
}

}  // namespace

QPoly cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  QPoly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = divmod(p, cyclotomic_polynomial(d));
    p = std::move(q);
  }
  return p;
}

CyclotomicField::CyclotomicField(std::uint32_t order) : order_(order), phi_(cyclotomic_polynomial(order)) {}

FieldPtr make_cyclotomic_field(std::uint32_t order) {
  return std::make_shared<const CyclotomicField>(order);
}

Cyclotomic::Cyclotomic() : field_(make_cyclotomic_field(1)) {}

Cyclotomic::Cyclotomic(FieldPtr field, const mpq_class& c) : field_(std::move(field)) {
  if (c != 0) coeffs_.push_back(c);
}

Cyclotomic::Cyclotomic(FieldPtr field, QPoly coeffs) : field_(std::move(field)) {
  trim(coeffs);
  coeffs_ = reduce(coeffs, field_->modulus());
}

Cyclotomic Cyclotomic::zeta_power(FieldPtr field, std::int64_t k) {
  const std::int64_t l = field->order();
  const std::int64_t e = ((k % l) + l) % l;
  QPoly x(static_cast<std::size_t>(e) + 1);
  x[static_cast<std::size_t>(e)] = 1;
  return Cyclotomic(std::move(field), std::move(x));
}

mpq_class Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::logic_error("cyclotomic value is not rational: " + to_string());
  return coeffs_.empty() ? mpq_class(0) : coeffs_[0];
}

std::size_t Cyclotomic::term_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += (c != 0);
  return n;
}

FieldPtr Cyclotomic::common_field(const Cyclotomic& o) const {
  if (field_->order() == o.field_->order()) return field_;
  if (o.field_->order() == 1 && is_rational()) return field_;
  if (field_->order() == 1 && is_rational()) return o.field_;
  if (o.field_->order() == 1) return field_;
  if (field_->order() == 1) return o.field_;
  throw std::invalid_argument("mixing cyclotomic fields of orders " + std::to_string(order()) +
                              " and " + std::to_string(o.order()));
}

Cyclotomic Cyclotomic::in_field(const FieldPtr& f) const {
  if (f->order() == order()) return *this;
  if (!is_rational()) {
    throw std::invalid_argument("cannot move a non-rational cyclotomic value between fields");
  }
  return Cyclotomic(f, rational_value());
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  FieldPtr f = common_field(o);
  return Cyclotomic(f, add(in_field(f).coeffs_, o.in_field(f).coeffs_));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  FieldPtr f = common_field(o);
  return Cyclotomic(f, mul(in_field(f).coeffs_, o.in_field(f).coeffs_));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic value");
  // Extended Euclid: track s with s * a = r (mod phi).
  QPoly r0 = field_->modulus(), r1 = coeffs_;
  QPoly s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = add(s0, scale(mul(q, s1), -1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw DivisionByZero("cyclotomic value is not invertible");
  return Cyclotomic(field_, scale(s1, 1 / r1[0]));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic result(field_, mpq_class(1));
  Cyclotomic base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order() && !(a.is_rational() && b.is_rational())) {
    if (a.order() != 1 && b.order() != 1) return false;
    return (a - b).is_zero();
  }
  return a.coeffs_ == b.coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    mpq_class c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (c < 0) c = -c;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    os << 'z';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace qqsa::scalars
