#include "qqsa/scalars/specialize.hpp"

#include <numeric>
#include <tuple>
#include <stdexcept>

namespace qqsa::scalars {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1) throw std::domain_error("exponent denominator not invertible modulo root order");
  return mod(s0, m);
}

mpq_class rational_pow(const mpq_class& base, std::int64_t e) {
  if (e < 0) {
    if (base == 0) throw DivisionByZero("zero raised to a negative power");
    return rational_pow(1 / base, -e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

Specializer::Specializer(Assignment assignment, VarNames names)
    : assignment_(std::move(assignment)), names_(std::move(names)) {
  std::uint32_t order = 0;
  for (const auto& [var, value] : assignment_) {
    if (const auto* r = std::get_if<RootPower>(&value)) {
      if (r->order == 0) throw std::invalid_argument("root of unity of order 0");
      if (order != 0 && order != r->order) {
        throw std::invalid_argument("assignment mixes roots of unity of different orders");
      }
      order = r->order;
    }
  }
  if (order != 0) field_ = make_cyclotomic_field(order);
}

Coeff Specializer::operator()(const Monomial& m) const {
  mpq_class rational_part(1);
  Exponent zeta_exp(0);
  for (const auto& [var, e] : m.entries()) {
    auto it = assignment_.find(var);
    if (it == assignment_.end()) {
      throw std::invalid_argument("no value assigned to " + var_name(names_, var));
    }
    if (const auto* r = std::get_if<RootPower>(&it->second)) {
      zeta_exp += e * Exponent(r->k);
    } else {
      if (e.denominator() != 1) {
        throw std::domain_error("fractional power of rational value for " + var_name(names_, var));
      }
      rational_part *= rational_pow(std::get<mpq_class>(it->second), e.numerator());
    }
  }
  if (!field_) return Coeff(Scalar(rational_part));
  const std::int64_t l = field_->order();
  const std::int64_t k =
      mod(mod(zeta_exp.numerator(), l) * inverse_mod(zeta_exp.denominator(), l), l);
  return Coeff(Cyclotomic::zeta_power(field_, k) * Cyclotomic(field_, rational_part));
}

Coeff Specializer::operator()(const LaurentPoly& p) const {
  Coeff sum = field_ ? Coeff(Cyclotomic(field_, 0)) : Coeff(0);
  for (const auto& t : p.terms()) sum += (*this)(t.mono) * Coeff(Scalar(t.coeff));
  return sum;
}

Coeff Specializer::operator()(const Scalar& s) const {
  const Coeff den = (*this)(s.den());
  if (den.is_zero()) {
    throw DivisionByZero("denominator " + s.den().to_string(names_) + " vanishes under specialization");
  }
  return (*this)(s.num()) / den;
}

Coeff Specializer::operator()(const Coeff& c) const {
  if (c.is_cyclotomic()) return c;
  return (*this)(c.scalar());
}

Coeff specialize(const Scalar& s, const Assignment& assignment, const VarNames& names) {
  return Specializer(assignment, names)(s);
}

}  // namespace qqsa::scalars
