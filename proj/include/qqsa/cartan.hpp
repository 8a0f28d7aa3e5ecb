#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qqsa/scalars/coeff.hpp"
#include "qqsa/scalars/specialize.hpp"

namespace qqsa {

using scalars::Coeff;
using scalars::Exponent;
using scalars::Monomial;
using scalars::VarNames;

/// Vector in simple-root coordinates mu = sum_i mu_i alpha_i.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : c_(rank, Exponent(0)) {}
  explicit Weight(std::vector<Exponent> coords) : c_(std::move(coords)) {}
  static Weight simple_root(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return c_.size(); }
  const Exponent& operator[](std::size_t i) const { return c_[i]; }
  Exponent& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Exponent>& coords() const noexcept { return c_; }

  bool is_integral() const;
  /// Integral with all coordinates >= 0.
  bool in_positive_cone() const;
  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(const Exponent& k) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }

  /// e.g. "a1+2a2", "1/2a1-a2", "0".
  std::string to_string() const;

 private:
  std::vector<Exponent> c_;
};

/// Symmetrizable generalized Cartan matrix with symmetrizers d_i (d_i a_ij = d_j a_ji).
class CartanDatum {
 public:
  /// Throws std::invalid_argument if the matrix is not a symmetrizable GCM for d.
  CartanDatum(std::vector<std::vector<int>> a, std::vector<int> d);

  /// A_n, B_n, C_n, D_n (n >= 4), G2; B2 is [[2,-1],[-2,2]] with d = (2,1).
  static CartanDatum of_type(const std::string& name);

  std::size_t rank() const noexcept { return d_.size(); }
  int a(std::size_t i, std::size_t j) const { return a_[i][j]; }
  int d(std::size_t i) const { return d_[i]; }
  const std::vector<std::vector<int>>& matrix() const noexcept { return a_; }

  /// (mu, nu) = sum_ij mu_i nu_j d_i a_ij.
  Exponent form(const Weight& mu, const Weight& nu) const;
  /// <lambda, alpha_i^vee> = 2 (lambda, alpha_i) / (alpha_i, alpha_i).
  Exponent coweight_pairing(const Weight& lambda, std::size_t i) const;
  /// Sum of coordinates; throws for vectors outside Q+.
  long height(const Weight& beta) const;

  /// Weight with <w, alpha_i^vee> = labels_i, i.e. A^{-1} labels in root coordinates.
  Weight weight_from_labels(const std::vector<long>& labels) const;
  Weight fundamental_weight(std::size_t i) const;
  Weight rho() const;
  bool is_dominant(const Weight& lambda) const;

  /// True when the symmetrized matrix (d_i a_ij) is positive definite.
  bool is_finite_type() const;
  bool is_indecomposable() const;
  /// Phi+ by closing the simple roots under simple reflections; finite type only.
  std::vector<Weight> positive_roots() const;
  Weight reflect(const Weight& mu, std::size_t i) const;

  /// Positive elements of Q with the given height, in lexicographic order.
  std::vector<Weight> positive_cone_of_height(long h) const;

 private:
  std::vector<std::vector<int>> a_;
  std::vector<int> d_;
};

enum class ParamMode { symbolic_generic, one_parameter, twist_generic, custom };

/// The structure constants q_ij as Laurent monomials in parameter variables.
/// Every constructor guarantees q_ij q_ji = q_ii^{a_ij} identically.
class ParamMatrix {
 public:
  /// Free variables q_ij (i < j) plus one diagonal variable q_bb per connected
  /// component (q_ii = q_bb^{d_i/d_b}); q_ji = q_ii^{a_ij} q_ij^{-1}.
  static ParamMatrix symbolic(const CartanDatum& datum);
  /// q_ij = q^{d_i a_ij} in a single variable q.
  static ParamMatrix one_parameter(const CartanDatum& datum);
  /// q_ii = q^{2 d_i}, q_ij free for i < j, q_ji = q^{2 d_i a_ij} q_ij^{-1}.
  static ParamMatrix twist_generic(const CartanDatum& datum);
  /// Arbitrary monomial entries (row-major); the constraint is checked.
  static ParamMatrix custom(const CartanDatum& datum, std::vector<Monomial> entries, VarNames names);

  ParamMode mode() const noexcept { return mode_; }
  std::size_t rank() const noexcept { return n_; }
  const Monomial& q(std::size_t i, std::size_t j) const { return q_[i * n_ + j]; }
  const VarNames& names() const noexcept { return names_; }
  /// Index of a variable by name, if present.
  std::optional<scalars::VarIndex> var(const std::string& name) const;

  /// q_{mu nu} = prod_ij q_ij^{mu_i nu_j}.
  Monomial pairing(const Weight& mu, const Weight& nu) const;

  /// (i, j) pairs violating q_ij q_ji = q_ii^{a_ij}; empty when the constraint holds.
  std::vector<std::pair<std::size_t, std::size_t>> constraint_violations(const CartanDatum& d) const;

 private:
  ParamMatrix(ParamMode mode, std::size_t n, std::vector<Monomial> q, VarNames names)
      : mode_(mode), n_(n), q_(std::move(q)), names_(std::move(names)) {}

  ParamMode mode_;
  std::size_t n_;
  std::vector<Monomial> q_;
  VarNames names_;
};

/// Turns parameter monomials into coefficients: symbolically, or through a
/// specialization to rationals / roots of unity.
class Evaluator {
 public:
  explicit Evaluator(VarNames names) : names_(std::move(names)) {}
  Evaluator(VarNames names, scalars::Assignment values);

  bool is_symbolic() const noexcept { return !spec_.has_value(); }
  const VarNames& names() const noexcept { return names_; }
  /// Null unless some variable is sent to a root of unity.
  scalars::FieldPtr field() const;

  Coeff operator()(const Monomial& m) const;
  Coeff operator()(const scalars::Scalar& s) const;
  /// Coefficient for the integer c in the evaluation field.
  Coeff constant(long c) const;

  /// Multiplicative order of the value of m if it is a root of unity, 0 otherwise.
  std::uint32_t root_order(const Monomial& m) const;

 private:
  VarNames names_;
  std::optional<scalars::Assignment> values_;
  std::optional<scalars::Specializer> spec_;
};

}  // namespace qqsa
