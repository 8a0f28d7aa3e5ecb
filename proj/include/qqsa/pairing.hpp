#pragma once

#include <vector>

#include "qqsa/uq.hpp"

namespace qqsa {

enum class Sign { plus, minus };

/// Which pairing axiom drives the recursion.
enum class PairingRoute {
  peel_f,  ///< <f y', x> = <f (x) y', Delta(x)>, monomial on the left
  peel_e,  ///< <y, e x''> = <Delta(y), x'' (x) e>, monomial on the right
};

/// A basis of (U^+)_beta or (U^-)_{-beta}: psi-images of independent monomials.
struct GradedBasis {
  std::vector<GeneratorExpr> monomials;
  std::vector<Element> elements;
};

/// The skew pairing between psi(U^{<=0}) and psi(U^{>=0}).
class Pairing {
 public:
  explicit Pairing(Realization r) : r_(std::move(r)) {}

  const Realization& realization() const noexcept { return r_; }

  /// y an f/omega' expression, x a combination of E-words with K tails.
  Coeff peel_f(const GeneratorExpr& y, const Element& x) const;
  /// y a combination of F-words with K' tails, x an e/omega expression.
  Coeff peel_e(const Element& y, const GeneratorExpr& x) const;
  /// Both arguments as elements; y is first written in f-monomials of its weight.
  Coeff operator()(const Element& y, const Element& x) const;

  /// Monomials e_{i1}..e_{ik} (or f's) of weight beta, in lexicographic order.
  std::vector<GeneratorExpr> monomials(Sign sign, const Weight& beta) const;
  GradedBasis graded_basis(Sign sign, const Weight& beta) const;
  /// Entry (a, b) pairs minus-basis a with plus-basis b.
  scalars::Matrix gram_matrix(const Weight& beta, PairingRoute route) const;

 private:
  Coeff base(const GroupElement& k, const GroupElement& kp) const;
  Coeff c(std::size_t i) const;
  Coeff peel_f_word(const GeneratorExpr::Monomial& m, std::size_t pos, const Word& x) const;
  Coeff peel_e_word(const Word& y, const GeneratorExpr::Monomial& m, std::size_t pos) const;

  Realization r_;
};

}  // namespace qqsa
