#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qqsa/algebra.hpp"

namespace qqsa {

enum class GenKind : std::uint8_t { e, f, omega, omega_p };

/// One factor of a generator monomial; `power` is used by omega and omega' only.
struct GenAtom {
  GenKind kind;
  std::uint8_t index;
  std::int8_t power = 1;

  friend bool operator==(const GenAtom&, const GenAtom&) = default;
  friend auto operator<=>(const GenAtom&, const GenAtom&) = default;
};

/// Noncommutative polynomial in e_i, f_i, omega_i^{+-1}, omega'_i^{+-1}.
class GeneratorExpr {
 public:
  using Monomial = std::vector<GenAtom>;

  GeneratorExpr() = default;
  static GeneratorExpr one(Coeff c = 1);
  static GeneratorExpr e(std::size_t i);
  static GeneratorExpr f(std::size_t i);
  static GeneratorExpr omega(std::size_t i, int power = 1);
  static GeneratorExpr omega_p(std::size_t i, int power = 1);

  const std::map<Monomial, Coeff>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add(const Monomial& m, const Coeff& c);

  GeneratorExpr operator+(const GeneratorExpr& o) const;
  GeneratorExpr operator-(const GeneratorExpr& o) const;
  GeneratorExpr operator*(const GeneratorExpr& o) const;
  GeneratorExpr scaled(const Coeff& c) const;
  GeneratorExpr pow(std::size_t r) const;

  std::string to_string(const VarNames& names = {}) const;

 private:
  std::map<Monomial, Coeff> terms_;
};

enum class RelationTag { R1, R2, R3, R4, R5, R6, R7 };

struct RelationId {
  RelationTag tag;
  std::size_t i;
  std::size_t j;

  std::string to_string() const;
  friend bool operator==(const RelationId&, const RelationId&) = default;
};

enum class Side { left, right };

/// Which first index the product in the ad-power closed forms starts from.
enum class ProductStart { printed, corrected };

/// The map psi from the presented algebra into the quasi-symmetric algebra.
class Realization {
 public:
  using ProductFn = std::function<Element(const Element&, const Element&)>;

  explicit Realization(Algebra a) : a_(std::move(a)) {}
  /// psi through another product on the same words, relation constants taken from `constants`.
  Realization(Algebra a, ProductFn product, ParamMatrix constants)
      : a_(std::move(a)), product_(std::move(product)), constants_(std::move(constants)) {}

  const Algebra& algebra() const noexcept { return a_; }
  std::size_t rank() const noexcept { return a_.structure().rank(); }

  /// omega_i -> K_i, omega'_i -> K'_i, e_i -> E_i, f_i -> (F_i; K'_i).
  Element psi(const GeneratorExpr& x, Exec exec = Exec::parallel) const;

  /// Every relation instance for the datum (R6 / R7 only for i != j).
  std::vector<RelationId> relations() const;
  /// LHS - RHS of each identity grouped under the id (R1 - R4 bundle several).
  std::vector<GeneratorExpr> relation_forms(RelationId id) const;
  /// psi of each relation form.
  std::vector<Element> residuals(RelationId id, Exec exec = Exec::parallel) const;

  /// ad_l(x)(y) = x_(1) y S(x_(2)),  ad_r(x)(y) = S(x_(1)) y x_(2).
  Element ad(Side side, const Element& x, const Element& y) const;
  /// ad_l(E_i)^s(E_j) or ad_r(F_i K'_i)^s(F_j K'_j).
  Element ad_power(Side side, std::size_t i, std::size_t j, std::size_t s) const;
  /// The closed form of ad_power; the product over k runs from 1 (printed) or 0 (corrected).
  Element ad_closed_form(Side side, std::size_t i, std::size_t j, std::size_t s, ProductStart start) const;

 private:
  Coeff q(std::size_t i, std::size_t j) const {
    const auto& s = a_.structure();
    return s.eval(constants_ ? constants_->q(i, j) : s.params().q(i, j));
  }

  Algebra a_;
  ProductFn product_;
  std::optional<ParamMatrix> constants_;
};

}  // namespace qqsa
