#pragma once

#include <cstdint>
#include <map>
#include <variant>

#include "qqsa/scalars/coeff.hpp"

namespace qqsa::scalars {

/// zeta_order^k.
struct RootPower {
  std::uint32_t order = 1;
  std::int64_t k = 0;
};

using SpecValue = std::variant<mpq_class, RootPower>;
using Assignment = std::map<VarIndex, SpecValue>;

/// Evaluates scalars under a fixed assignment of the variables. Root-of-unity
/// values must share one order; rational exponents p/d on them require
/// gcd(d, order) = 1, and rational values require integral exponents.
class Specializer {
 public:
  explicit Specializer(Assignment assignment, VarNames names = {});

  /// Null when no variable is sent to a root of unity.
  const FieldPtr& field() const noexcept { return field_; }

  Coeff operator()(const Monomial& m) const;
  Coeff operator()(const LaurentPoly& p) const;
  /// Throws DivisionByZero naming the denominator if it vanishes.
  Coeff operator()(const Scalar& s) const;
  Coeff operator()(const Coeff& c) const;

 private:
  Assignment assignment_;
  VarNames names_;
  FieldPtr field_;
};

Coeff specialize(const Scalar& s, const Assignment& assignment, const VarNames& names = {});

}  // namespace qqsa::scalars
