#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>
#include <gmpxx.h>

namespace qqsa::scalars {

/// Exponents of parameter variables are rationals with small denominators.
using Exponent = boost::rational<std::int64_t>;

using VarIndex = std::uint32_t;

/// Printable names for variable indices. Missing names print as x<i>.
using VarNames = std::vector<std::string>;

std::string var_name(const VarNames& names, VarIndex v);

/// A Laurent monomial prod_v x_v^{e_v} with rational exponents, stored
/// sparsely (sorted by variable, zero exponents dropped).
class Monomial {
 public:
  using Entry = std::pair<VarIndex, Exponent>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries);
  static Monomial variable(VarIndex v, Exponent e = Exponent(1));

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_one() const noexcept { return entries_.empty(); }
  Exponent exponent(VarIndex v) const;

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(const Exponent& k) const;

  /// Componentwise minimum of exponents (missing = 0).
  static Monomial min(const Monomial& a, const Monomial& b);

  /// True if every exponent of `o` is <= the matching exponent of *this.
  bool divisible_by(const Monomial& o) const;

  /// Lexicographic on the fixed variable order: the first variable whose
  /// exponents differ decides, larger exponent is larger.
  friend int compare(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return compare(a, b) < 0;
  }

  std::string to_string(const VarNames& names) const;
  std::size_t hash() const noexcept;

 private:
  std::vector<Entry> entries_;
};

/// Finitely supported sum of rational multiples of Laurent monomials.
/// Terms are kept in decreasing monomial order, so the leading term is first.
class LaurentPoly {
 public:
  struct Term {
    Monomial mono;
    mpq_class coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const mpq_class& c);
  LaurentPoly(Monomial m, const mpq_class& c);

  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  /// Constant coefficient if the polynomial is constant.
  mpq_class constant_value() const;
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const Monomial& m, const mpq_class& c) const;

  /// Componentwise minimum exponent over all terms.
  Monomial min_monomial() const;

  /// Exact quotient a / b in the Laurent ring, or nullopt if b does not
  /// divide a. b must be nonzero.
  static std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string to_string(const VarNames& names) const;

 private:
  std::vector<Term> terms_;
};

}  // namespace qqsa::scalars
