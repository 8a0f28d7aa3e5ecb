#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qqsa/cartan.hpp"

namespace qqsa {

inline constexpr std::size_t kMaxGenerators = 16;

/// Exponent vector over the generators of a grading group. Reduction modulo
/// finite generator orders is done by GradingGroup::canonical.
class GroupElement {
 public:
  GroupElement() { e_.fill(0); }

  std::int32_t operator[](std::size_t g) const { return e_[g]; }
  std::int32_t& operator[](std::size_t g) { return e_[g]; }
  bool is_identity() const;

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement pow(std::int32_t k) const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  std::array<std::int32_t, kMaxGenerators> e_;
};

/// Free abelian group (or product of cyclic groups) on K_1..K_n, K'_1..K'_n
/// and optionally K_lambda.
class GradingGroup {
 public:
  /// moduli: one entry per generator, 0 for infinite order; empty = all infinite.
  GradingGroup(std::size_t rank, bool with_lambda, std::vector<std::uint32_t> moduli = {});

  std::size_t rank() const noexcept { return rank_; }
  std::size_t generator_count() const noexcept { return 2 * rank_ + (with_lambda_ ? 1 : 0); }
  bool has_lambda() const noexcept { return with_lambda_; }
  std::uint32_t modulus(std::size_t g) const { return moduli_[g]; }
  /// Group order, or 0 if infinite.
  std::uint64_t order() const;

  std::size_t k_index(std::size_t i) const { return i; }
  std::size_t kp_index(std::size_t i) const { return rank_ + i; }
  std::size_t lambda_index() const;

  GroupElement K(std::size_t i, std::int32_t power = 1) const;
  GroupElement Kp(std::size_t i, std::int32_t power = 1) const;
  GroupElement Klambda(std::int32_t power = 1) const;

  GroupElement canonical(GroupElement g) const;
  std::string generator_name(std::size_t g) const;
  /// e.g. "K1K2^-1Kp1", "1" for the identity.
  std::string to_string(const GroupElement& g) const;

 private:
  std::size_t rank_;
  bool with_lambda_;
  std::vector<std::uint32_t> moduli_;
};

/// Multiplicative map on the group, given by monomial values on generators.
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<Monomial> values) : values_(std::move(values)) {}

  const Monomial& on_generator(std::size_t g) const { return values_[g]; }
  Monomial operator()(const GroupElement& g) const;
  Character operator*(const Character& o) const;

 private:
  std::vector<Monomial> values_;
};

/// Map multiplicative in each argument, given on generator pairs.
class Bicharacter {
 public:
  explicit Bicharacter(std::size_t generators);

  std::size_t generator_count() const noexcept { return n_; }
  const Monomial& on_generators(std::size_t g, std::size_t h) const { return v_[g * n_ + h]; }
  void set(std::size_t g, std::size_t h, Monomial m) { v_[g * n_ + h] = std::move(m); }

  Monomial operator()(const GroupElement& a, const GroupElement& b) const;
  /// Pointwise inverse sigma^{-1}.
  Bicharacter inverse() const;
  bool is_trivial() const;

 private:
  std::size_t n_;
  std::vector<Monomial> v_;
};

/// Indices (i, j) where q-hat violates q-hat_ii = q_ii or q-hat_ij q-hat_ji = q_ij q_ji.
std::vector<std::pair<std::size_t, std::size_t>> twist_condition_violations(const ParamMatrix& q,
                                                                            const ParamMatrix& qhat);

/// The gauge sigma(K_i,K_j) = sigma(K'_i,K'_j) = qhat_ij/q_ij for i < j (1 otherwise),
/// sigma(K'_i,K_j) = qhat_ji^{-1} q_ji, sigma(K_j,K'_i) = 1, trivial on K_lambda.
/// Throws std::invalid_argument listing violated (i, j) if the twist condition fails.
Bicharacter build_bicharacter(const GradingGroup& group, const ParamMatrix& q, const ParamMatrix& qhat);

}  // namespace qqsa
