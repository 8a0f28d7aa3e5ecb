#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qqsa/algebra.hpp"

namespace qqsa {

/// c * (u_1 * ... * u_p) * r_i * (v_1 * ... * v_q) * K with letters u, v taken as (a; 1).
struct JTerm {
  Coeff c;
  std::vector<Letter> left;
  std::size_t i;
  std::vector<Letter> right;
  GroupElement tail;
};

enum class JStatus { zero, nonzero, undecided };

struct JResult {
  JStatus status;
  std::size_t bound;
  /// x - normal_form = sum of these terms (an element of J).
  std::vector<JTerm> combination;
  /// Representative of x mod J in the triangular span; zero iff status is zero.
  Element normal_form;

  std::string status_name() const;
};

/// x = sum_k coords[k] * basis[k] + (element of J) with an explicit J part.
struct Expression {
  std::vector<Coeff> coords;
  std::vector<JTerm> combination;
};

/// Membership in the ideal J generated by r_i = xi_i - K_i K'_i^{-1} + 1.
///
/// reduce() writes x = s + j with j an explicit combination of u * r_i * v
/// (u, v products of letters, bounded total length) and s in the span of the
/// triangular products F_{i1} * .. * F_{ia} * E_{j1} * .. * E_{jb} * K. Zero is
/// reported with s = 0; a nonzero s is the certificate for x not in J, which
/// rests on the triangular span meeting J trivially (injectivity of psi).
class JReducer {
 public:
  explicit JReducer(Algebra a) : a_(std::move(a)) {}

  const Algebra& algebra() const noexcept { return a_; }
  Element generator(std::size_t i) const;
  Element expand(const JTerm& t) const;
  Element expand(const std::vector<JTerm>& ts) const;

  JResult reduce(const Element& x, std::size_t bound) const;

  /// Coordinates of x modulo J on the given (weight-homogeneous) basis, if found
  /// within the bound. The J part uses letters occurring in x and the basis.
  std::optional<Expression> express(const Element& x, const std::vector<Element>& basis, std::size_t bound) const;

 private:
  GroupElement g(std::size_t i) const;
  std::vector<JTerm> j_candidates(const Element& x, const std::vector<Letter>& alphabet, std::size_t max_letters) const;
  /// Terms u * r_i * v * K whose leading word u xi_i v appears, closed under expansion.
  std::vector<JTerm> anchored_candidates(const Element& x, const std::vector<Element>& fixed, std::size_t max_len) const;
  /// x = sum a_k fixed_k + J part, trying anchored candidates before the full enumeration.
  std::optional<Expression> solve(const Element& x, const std::vector<Element>& fixed, std::size_t bound) const;
  std::vector<Element> triangular_span(const Weight& mu, const std::set<GroupElement>& tails, std::size_t max_len) const;

  Algebra a_;
};

}  // namespace qqsa
