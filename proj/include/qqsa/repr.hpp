#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qqsa/jideal.hpp"
#include "qqsa/uq.hpp"

namespace qqsa {

struct ModuleSetup {
  CartanDatum datum;
  ParamMatrix params;
  Evaluator evaluator;
  Weight lambda;
  /// One modulus per grading generator (K_i, K'_i, K_lambda); empty means free.
  std::vector<std::uint32_t> moduli;
  std::size_t max_depth = 64;
  /// Length bound for the J-reduction of raising images.
  std::size_t bound = 8;

  /// Generic symbolic parameters for the dominant weight with the given labels.
  static ModuleSetup symbolic(const CartanDatum& d, const std::vector<long>& labels);
};

/// Raised when a vector cannot be reduced onto a weight-space basis within the bound.
class ReductionError : public std::runtime_error {
 public:
  ReductionError(const std::string& what, std::size_t bound) : std::runtime_error(what), bound_(bound) {}
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

/// A basis vector obtained as ad(f_i) of vector `parent` of weight mu + alpha_i.
struct Origin {
  std::size_t i;
  std::size_t parent;
};

struct WeightSpaceTable {
  std::map<Weight, std::vector<Element>> spaces;
  /// Parallel to spaces; absent for the highest weight.
  std::map<Weight, std::vector<Origin>> origins;
  /// False when max_depth was reached with nonzero lowering images left.
  bool closed = false;
  std::size_t depth = 0;

  std::size_t dimension() const;
  std::size_t dimension(const Weight& mu) const;
};

/// How the matrices of e_i are obtained: reducing ad(e_i) images modulo J, or
/// from the lowering matrices through e_i f_j = f_j e_i + delta_ij c_i (omega_i - omega'_i).
enum class RaisingRoute { reduction, recursion };

/// Generator matrices on a module, indexed by i.
struct ModuleAction {
  std::vector<scalars::Matrix> e, f, omega, omega_inv, omega_p, omega_p_inv;
};

/// The module ad_l(U)(v_lambda) inside the quasi-symmetric algebra with the
/// extra letter v_lambda, built by lowering from v_lambda.
class HighestWeightModule {
 public:
  /// Throws std::invalid_argument unless lambda is dominant.
  explicit HighestWeightModule(ModuleSetup setup);

  const Algebra& algebra() const noexcept { return r_.algebra(); }
  const Realization& realization() const noexcept { return r_; }
  const Weight& lambda() const noexcept { return setup_.lambda; }
  const WeightSpaceTable& table() const noexcept { return table_; }
  Element highest() const;

  /// ad_l(psi(x))(w), exact and unreduced.
  Element adjoint_act(const GeneratorExpr& x, const Element& w) const;

  /// Coordinates of w mod J on the basis of weight mu (zero vector if mu is
  /// not a weight and w lies in J). Throws ReductionError when undecided.
  scalars::Vector coordinates(const Element& w, const Weight& mu) const;

  /// Block of ad(e_i) from weight mu to mu + alpha_i, or of ad(f_i) to mu - alpha_i.
  scalars::Matrix raising_matrix(std::size_t i, const Weight& mu) const;
  scalars::Matrix lowering_matrix(std::size_t i, const Weight& mu) const;

  /// Matrix of one generator on the whole module by reduction modulo J; basis
  /// ordered by weight, then by index.
  scalars::Matrix matrix(const GenAtom& a) const;
  ModuleAction action(RaisingRoute route) const;
  scalars::Matrix evaluate(const ModuleAction& act, const GeneratorExpr& x) const;

  /// Eigenvalue of omega_i (omega'_i if primed) on weight mu.
  Coeff omega_eigenvalue(std::size_t i, const Weight& mu, bool primed = false) const;

  /// First r <= max_r with ad(f_i)^r v_lambda = 0.
  std::optional<std::size_t> nilpotency(std::size_t i, std::size_t max_r) const;
  /// (r)_{q_ii^{-1}}! prod_{k=1}^r (q_ii^{k-1} q_{lambda alpha_i}^{-1} - q_{alpha_i lambda}),
  /// the coefficient of (F_i^r v_lambda; 1) in ad(f_i)^r v_lambda.
  Coeff lowering_coefficient(std::size_t i, std::size_t r) const;

  /// r(a) = a_(1) S(p(a_(2))), p killing words that contain v_lambda.
  Element coinvariant_project(const Element& a) const;
  /// (id (x) p) Delta(a) == a (x) 1.
  bool is_coinvariant(const Element& a) const;

 private:
  void close();
  scalars::Matrix raising_by_recursion(std::size_t i, const ModuleAction& act) const;
  Element project(const Element& a) const;
  std::size_t offset(const Weight& mu) const;

  ModuleSetup setup_;
  Realization r_;
  JReducer j_;
  WeightSpaceTable table_;
  std::map<Weight, std::size_t> offsets_;
};

/// 0 < <lambda + rho, alpha^vee> < ell for every positive root alpha.
/// Throws std::invalid_argument for even ell, ell divisible by 3 in type G2,
/// or a datum that is not of finite indecomposable type.
bool alcove_check(const CartanDatum& d, const Weight& lambda, std::uint32_t ell);

/// One-parameter constants with q_ii of order ell, over the cyclotomic field,
/// with every grading generator (K_lambda included) of order ell.
ModuleSetup root_of_unity_setup(const CartanDatum& d, const std::vector<long>& labels, std::uint32_t ell);

}  // namespace qqsa
