#pragma once

#include "qqsa/uq.hpp"

namespace qqsa {

/// Cocycle twist of the quasi-symmetric algebra over q by the bicharacter sigma
/// relating q to a second matrix q-hat.
class Twist {
 public:
  /// Throws std::invalid_argument if q-hat violates the twist condition or the
  /// gauge has sigma(K_i, K'_i) != 1.
  Twist(Algebra a, ParamMatrix qhat);

  const Algebra& algebra() const noexcept { return a_; }
  /// The algebra built directly from q-hat (same group and evaluator).
  const Algebra& hatted() const noexcept { return hat_; }
  const ParamMatrix& qhat() const noexcept { return qhat_; }
  const Bicharacter& sigma() const noexcept { return sigma_; }
  Coeff sigma(const GroupElement& g, const GroupElement& h) const;

  /// h ._sigma a = sigma(h, gr a) sigma^{-1}(gr a, h) (h . a), as a scalar.
  Coeff twisted_action(const GroupElement& h, Letter a) const;

  /// x o y = sigma(L x, L y) (x * y) sigma^{-1}(R x, R y) on words, L the left
  /// coaction group-like and R the tail; the other terms of the convolution
  /// vanish because the inflated cocycle is zero off degree 0.
  Element product(const Element& x, const Element& y) const;

  /// Slotwise scaling by sigma(grading(a_j), slot_tail_j^{-1}).
  Element phi(const Element& x) const;
  Element phi_inverse(const Element& x) const;

  /// phi^{-1} alpha-hat (phi (x) phi) and sigma * alpha * sigma^{-1} on one-letter slots.
  Element alpha_via_phi(Letter a, const GroupElement& ka, Letter b, const GroupElement& kb) const;
  Element alpha_convolution(Letter a, const GroupElement& ka, Letter b, const GroupElement& kb) const;

  /// psi through the twisted product, with hatted relation constants.
  Realization realization() const;

 private:
  Coeff phi_scale(const Word& w) const;

  Algebra a_;
  ParamMatrix qhat_;
  Algebra hat_;
  Bicharacter sigma_;
};

}  // namespace qqsa
