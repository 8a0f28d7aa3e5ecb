#include "qqsa/twist.hpp"

#include <stdexcept>

namespace qqsa {

namespace {

Algebra hatted_algebra(const Structure& s, const ParamMatrix& qhat) {
  std::vector<std::uint32_t> moduli;
  for (std::size_t g = 0; g < s.group().generator_count(); ++g) moduli.push_back(s.group().modulus(g));
  return Algebra(std::make_shared<const Structure>(s.datum(), qhat, s.evaluator(), s.lambda(), std::move(moduli)));
}

}  // namespace

Twist::Twist(Algebra a, ParamMatrix qhat)
    : a_(std::move(a)),
      qhat_(std::move(qhat)),
      hat_(hatted_algebra(a_.structure(), qhat_)),
      sigma_(build_bicharacter(a_.structure().group(), a_.structure().params(), qhat_)) {
  const auto& G = a_.structure().group();
  for (std::size_t i = 0; i < a_.structure().rank(); ++i) {
    if (!sigma_(G.K(i), G.Kp(i)).is_one()) {
      throw std::invalid_argument("twist gauge needs sigma(K_i, K'_i) = 1 at i = " + std::to_string(i + 1));
    }
  }
}

Coeff Twist::sigma(const GroupElement& g, const GroupElement& h) const {
  return a_.structure().eval(sigma_(g, h));
}

Coeff Twist::twisted_action(const GroupElement& h, Letter a) const {
  const auto& s = a_.structure();
  const GroupElement ga = s.grading(a);
  return sigma(h, ga) / sigma(ga, h) * s.eval(s.action(a)(h));
}

Element Twist::product(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [wx, cx] : x.terms()) {
    const GroupElement lx = a_.total_grading(wx);
    for (const auto& [wy, cy] : y.terms()) {
      const Coeff c = cx * cy * sigma(lx, a_.total_grading(wy)) / sigma(wx.tail, wy.tail);
      out += a_.product(Element::word(wx), Element::word(wy), Exec::serial).scaled(c);
    }
  }
  return out;
}

Coeff Twist::phi_scale(const Word& w) const {
  const auto& s = a_.structure();
  Coeff c(1);
  for (std::size_t j = 0; j < w.length(); ++j) c *= sigma(s.grading(w.letters[j]), a_.slot_tail(w, j).inverse());
  return c;
}

Element Twist::phi(const Element& x) const {
  Element out;
  for (const auto& [w, c] : x.terms()) out.add(w, c * phi_scale(w));
  return out;
}

Element Twist::phi_inverse(const Element& x) const {
  Element out;
  for (const auto& [w, c] : x.terms()) out.add(w, c / phi_scale(w));
  return out;
}

Element Twist::alpha_via_phi(Letter a, const GroupElement& ka, Letter b, const GroupElement& kb) const {
  const auto& s = a_.structure();
  const Coeff pa = sigma(s.grading(a), ka.inverse());
  const Coeff pb = sigma(s.grading(b), kb.inverse());
  return phi_inverse(hat_.alpha(a, ka, b, kb).scaled(pa * pb));
}

Element Twist::alpha_convolution(Letter a, const GroupElement& ka, Letter b, const GroupElement& kb) const {
  const auto& s = a_.structure();
  const Coeff c = sigma(s.grading(a) * ka, s.grading(b) * kb) / sigma(ka, kb);
  return a_.alpha(a, ka, b, kb).scaled(c);
}

Realization Twist::realization() const {
  return Realization(a_, [this](const Element& x, const Element& y) { return product(x, y); }, qhat_);
}

}  // namespace qqsa
