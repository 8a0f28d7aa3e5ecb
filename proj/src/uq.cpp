#include "qqsa/uq.hpp"

#include <sstream>
#include <stdexcept>

#include "qqsa/scalars/qnumbers.hpp"

namespace qqsa {

// ----------------------------------------------------------- GeneratorExpr

GeneratorExpr GeneratorExpr::one(Coeff c) {
  GeneratorExpr x;
  x.add({}, c);
  return x;
}

namespace {

GeneratorExpr atom(GenKind k, std::size_t i, int power) {
  GeneratorExpr x;
  if (power == 0) return GeneratorExpr::one();
  x.add({GenAtom{k, static_cast<std::uint8_t>(i), static_cast<std::int8_t>(power)}}, 1);
  return x;
}

}  // namespace

GeneratorExpr GeneratorExpr::e(std::size_t i) { return atom(GenKind::e, i, 1); }
GeneratorExpr GeneratorExpr::f(std::size_t i) { return atom(GenKind::f, i, 1); }
GeneratorExpr GeneratorExpr::omega(std::size_t i, int power) { return atom(GenKind::omega, i, power); }
GeneratorExpr GeneratorExpr::omega_p(std::size_t i, int power) { return atom(GenKind::omega_p, i, power); }

void GeneratorExpr::add(const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GeneratorExpr GeneratorExpr::operator+(const GeneratorExpr& o) const {
  GeneratorExpr r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

GeneratorExpr GeneratorExpr::operator-(const GeneratorExpr& o) const { return *this + o.scaled(-1); }

GeneratorExpr GeneratorExpr::operator*(const GeneratorExpr& o) const {
  GeneratorExpr r;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      Monomial m = a;
      m.insert(m.end(), b.begin(), b.end());
      r.add(m, ca * cb);
    }
  }
  return r;
}

GeneratorExpr GeneratorExpr::scaled(const Coeff& c) const {
  GeneratorExpr r;
  for (const auto& [m, v] : terms_) r.add(m, v * c);
  return r;
}

GeneratorExpr GeneratorExpr::pow(std::size_t r) const {
  GeneratorExpr p = one();
  for (std::size_t k = 0; k < r; ++k) p = p * *this;
  return p;
}

std::string GeneratorExpr::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const std::string cs = c.to_string(names);
    if (cs != "1" || m.empty()) os << '(' << cs << ')';
    for (const auto& a : m) {
      static constexpr const char* kNames[] = {"e", "f", "w", "w'"};
      os << kNames[static_cast<int>(a.kind)] << (a.index + 1);
      if (a.power != 1) os << "^" << static_cast<int>(a.power);
    }
  }
  return os.str();
}

std::string RelationId::to_string() const {
  return "R" + std::to_string(static_cast<int>(tag) + 1) + "(" + std::to_string(i + 1) + "," +
         std::to_string(j + 1) + ")";
}

// ------------------------------------------------------------- Realization

Element Realization::psi(const GeneratorExpr& x, Exec exec) const {
  const auto& G = a_.structure().group();
  auto mul = [&](const Element& u, const Element& v) { return product_ ? product_(u, v) : a_.product(u, v, exec); };
  Element r;
  for (const auto& [m, c] : x.terms()) {
    Element p = a_.one();
    for (const auto& at : m) {
      switch (at.kind) {
        case GenKind::e:
          p = mul(p, a_.letter(Letter::E(at.index)));
          break;
        case GenKind::f:
          p = mul(p, a_.letter(Letter::F(at.index), G.Kp(at.index)));
          break;
        case GenKind::omega:
          p = product_ ? product_(p, a_.group_like(G.K(at.index, at.power))) : a_.act_right(p, G.K(at.index, at.power));
          break;
        case GenKind::omega_p:
          p = product_ ? product_(p, a_.group_like(G.Kp(at.index, at.power)))
                       : a_.act_right(p, G.Kp(at.index, at.power));
          break;
      }
    }
    r += p.scaled(c);
  }
  return r;
}

std::vector<RelationId> Realization::relations() const {
  std::vector<RelationId> out;
  for (const auto tag : {RelationTag::R1, RelationTag::R2, RelationTag::R3, RelationTag::R4, RelationTag::R5,
                         RelationTag::R6, RelationTag::R7}) {
    for (std::size_t i = 0; i < rank(); ++i) {
      for (std::size_t j = 0; j < rank(); ++j) {
        if ((tag == RelationTag::R6 || tag == RelationTag::R7) && i == j) continue;
        out.push_back({tag, i, j});
      }
    }
  }
  return out;
}

std::vector<GeneratorExpr> Realization::relation_forms(RelationId id) const {
  using X = GeneratorExpr;
  const std::size_t i = id.i;
  const std::size_t j = id.j;
  std::vector<X> out;
  auto commutator = [](const X& a, const X& b) { return a * b - b * a; };
  switch (id.tag) {
    case RelationTag::R1:
      for (int s : {1, -1}) {
        for (int t : {1, -1}) out.push_back(commutator(X::omega(i, s), X::omega_p(j, t)));
      }
      if (i == j) {
        for (int s : {1, -1}) {
          out.push_back(X::omega(i, s) * X::omega(i, -s) - X::one());
          out.push_back(X::omega_p(i, s) * X::omega_p(i, -s) - X::one());
        }
      }
      break;
    case RelationTag::R2:
      for (int s : {1, -1}) {
        for (int t : {1, -1}) {
          out.push_back(commutator(X::omega(i, s), X::omega(j, t)));
          out.push_back(commutator(X::omega_p(i, s), X::omega_p(j, t)));
        }
      }
      break;
    case RelationTag::R3:
      out.push_back(X::omega(i) * X::e(j) * X::omega(i, -1) - X::e(j).scaled(q(i, j)));
      out.push_back(X::omega_p(i) * X::e(j) * X::omega_p(i, -1) - X::e(j).scaled(q(j, i).inverse()));
      break;
    case RelationTag::R4:
      out.push_back(X::omega(i) * X::f(j) * X::omega(i, -1) - X::f(j).scaled(q(i, j).inverse()));
      out.push_back(X::omega_p(i) * X::f(j) * X::omega_p(i, -1) - X::f(j).scaled(q(j, i)));
      break;
    case RelationTag::R5: {
      X form = commutator(X::e(i), X::f(j));
      if (i == j) {
        const Coeff c = q(i, i) / (q(i, i) - 1);
        form = form - (X::omega(i) - X::omega_p(i)).scaled(c);
      }
      out.push_back(form);
      break;
    }
    case RelationTag::R6:
    case RelationTag::R7: {
      if (i == j) throw std::invalid_argument("Serre relations need i != j");
      const auto& A = a_.structure().datum();
      const auto n = static_cast<std::size_t>(1 - A.a(i, j));
      const Coeff qii = q(i, i);
      X sum;
      for (std::size_t k = 0; k <= n; ++k) {
        const long kk = static_cast<long>(k);
        Coeff c = scalars::q_binomial(static_cast<long>(n), kk, qii) * qii.pow(kk * (kk - 1) / 2) * q(i, j).pow(kk);
        if (k % 2 == 1) c = -c;
        const X term = id.tag == RelationTag::R6 ? X::e(i).pow(n - k) * X::e(j) * X::e(i).pow(k)
                                                 : X::f(i).pow(k) * X::f(j) * X::f(i).pow(n - k);
        sum = sum + term.scaled(c);
      }
      out.push_back(sum);
      break;
    }
  }
  return out;
}

std::vector<Element> Realization::residuals(RelationId id, Exec exec) const {
  std::vector<Element> out;
  for (const auto& form : relation_forms(id)) out.push_back(psi(form, exec));
  return out;
}

Element Realization::ad(Side side, const Element& x, const Element& y) const {
  Element r;
  const Tensor d = a_.coproduct(x);
  for (const auto& [k, c] : d.terms()) {
    const Element x1 = Element::word(k[0], c);
    const Element x2 = Element::word(k[1]);
    if (side == Side::left) {
      r += a_.product(a_.product(x1, y), a_.antipode(x2));
    } else {
      r += a_.product(a_.product(a_.antipode(x1), y), x2);
    }
  }
  return r;
}

Element Realization::ad_power(Side side, std::size_t i, std::size_t j, std::size_t s) const {
  const auto& G = a_.structure().group();
  const Element x = side == Side::left ? a_.letter(Letter::E(i)) : a_.letter(Letter::F(i), G.Kp(i));
  Element y = side == Side::left ? a_.letter(Letter::E(j)) : a_.letter(Letter::F(j), G.Kp(j));
  for (std::size_t k = 0; k < s; ++k) y = ad(side, x, y);
  return y;
}

Element Realization::ad_closed_form(Side side, std::size_t i, std::size_t j, std::size_t s,
                                    ProductStart start) const {
  const auto& G = a_.structure().group();
  const Coeff qii = q(i, i);
  Coeff c = scalars::q_factorial(static_cast<long>(s), qii);
  for (std::size_t k = start == ProductStart::printed ? 1 : 0; k < s; ++k) {
    const long kk = static_cast<long>(k);
    c *= side == Side::left ? 1 - qii.pow(kk) * q(i, j) * q(j, i) : q(i, j) - qii.pow(-kk) * q(j, i).inverse();
  }
  Word w;
  if (side == Side::left) {
    w.letters.assign(s, Letter::E(i));
    w.letters.push_back(Letter::E(j));
  } else {
    w.letters.push_back(Letter::F(j));
    w.letters.insert(w.letters.end(), s, Letter::F(i));
    w.tail = G.canonical(G.Kp(i, static_cast<int>(s)) * G.Kp(j));
  }
  return Element::word(w, c);
}

}  // namespace qqsa
