#include "qqsa/pairing.hpp"

#include <set>
#include <stdexcept>

namespace qqsa {

namespace {

Weight k_part(const GroupElement& g, std::size_t n) {
  Weight w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = g[i];
  return w;
}

Weight kp_part(const GroupElement& g, std::size_t n) {
  Weight w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = g[n + i];
  return w;
}

bool only_k(const GroupElement& g, std::size_t n, std::size_t generators) {
  for (std::size_t h = n; h < generators; ++h) {
    if (g[h] != 0) return false;
  }
  return true;
}

bool only_kp(const GroupElement& g, std::size_t n, std::size_t generators) {
  for (std::size_t h = 0; h < generators; ++h) {
    if ((h < n || h >= 2 * n) && g[h] != 0) return false;
  }
  return true;
}

}  // namespace

Coeff Pairing::c(std::size_t i) const {
  const auto& s = r_.algebra().structure();
  const Coeff qii = s.eval(s.params().q(i, i));
  return qii / (1 - qii);
}

// <omega'_mu, omega_nu> = q_{nu mu}
Coeff Pairing::base(const GroupElement& k, const GroupElement& kp) const {
  const auto& s = r_.algebra().structure();
  const std::size_t n = s.rank();
  return s.eval(s.params().pairing(k_part(k, n), kp_part(kp, n)));
}

Coeff Pairing::peel_f_word(const GeneratorExpr::Monomial& m, std::size_t pos, const Word& x) const {
  if (pos == m.size()) return x.length() == 0 ? Coeff(1) : Coeff(0);
  const GenAtom at = m[pos];
  const auto& G = r_.algebra().structure().group();
  switch (at.kind) {
    case GenKind::f: {
      if (x.length() == 0 || x.letters[0] != Letter::E(at.index)) return Coeff(0);
      Word rest{{x.letters.begin() + 1, x.letters.end()}, x.tail};
      return c(at.index) * peel_f_word(m, pos + 1, rest);
    }
    case GenKind::omega_p:
      return base(r_.algebra().total_grading(x), G.Kp(at.index, at.power)) * peel_f_word(m, pos + 1, x);
    default:
      throw std::invalid_argument("pairing: left argument must lie in U^{<=0}");
  }
}

Coeff Pairing::peel_e_word(const Word& y, const GeneratorExpr::Monomial& m, std::size_t pos) const {
  if (pos == m.size()) return y.length() == 0 ? Coeff(1) : Coeff(0);
  const GenAtom at = m[pos];
  const auto& a = r_.algebra();
  const auto& G = a.structure().group();
  switch (at.kind) {
    case GenKind::e: {
      if (y.length() == 0 || y.letters.back() != Letter::F(at.index)) return Coeff(0);
      Word front{{y.letters.begin(), y.letters.end() - 1}, G.canonical(a.structure().grading(y.letters.back()) * y.tail)};
      return c(at.index) * peel_e_word(front, m, pos + 1);
    }
    case GenKind::omega:
      return base(G.K(at.index, at.power), y.tail) * peel_e_word(y, m, pos + 1);
    default:
      throw std::invalid_argument("pairing: right argument must lie in U^{>=0}");
  }
}

Coeff Pairing::peel_f(const GeneratorExpr& y, const Element& x) const {
  const auto& s = r_.algebra().structure();
  Coeff out(0);
  for (const auto& [w, cx] : x.terms()) {
    for (const Letter l : w.letters) {
      if (l.kind != LetterKind::E) throw std::invalid_argument("pairing: right argument must lie in U^{>=0}");
    }
    if (!only_k(w.tail, s.rank(), s.group().generator_count())) {
      throw std::invalid_argument("pairing: right argument must lie in U^{>=0}");
    }
    for (const auto& [m, cy] : y.terms()) out += cx * cy * peel_f_word(m, 0, w);
  }
  return out;
}

Coeff Pairing::peel_e(const Element& y, const GeneratorExpr& x) const {
  const auto& s = r_.algebra().structure();
  Coeff out(0);
  for (const auto& [w, cy] : y.terms()) {
    for (const Letter l : w.letters) {
      if (l.kind != LetterKind::F) throw std::invalid_argument("pairing: left argument must lie in U^{<=0}");
    }
    if (!only_kp(w.tail, s.rank(), s.group().generator_count())) {
      throw std::invalid_argument("pairing: left argument must lie in U^{<=0}");
    }
    for (const auto& [m, cx] : x.terms()) out += cx * cy * peel_e_word(w, m, 0);
  }
  return out;
}

Coeff Pairing::operator()(const Element& y, const Element& x) const {
  if (y.is_zero() || x.is_zero()) return Coeff(0);
  const auto& a = r_.algebra();
  const auto& G = a.structure().group();
  const std::size_t n = a.structure().rank();

  // write y = sum a_m psi(m omega'_mu) over f-monomials m of each weight present
  std::map<Weight, std::set<GroupElement>> shapes;
  for (const auto& [w, cy] : y.terms()) {
    GroupElement rest = w.tail;
    Weight beta(n);
    for (const Letter l : w.letters) {
      if (l.kind != LetterKind::F) throw std::invalid_argument("pairing: left argument must lie in U^{<=0}");
      rest = rest * G.Kp(l.index, -1);
      beta[l.index] += 1;
    }
    shapes[beta].insert(G.canonical(rest));
  }
  std::vector<GeneratorExpr> cand;
  std::vector<Element> cols;
  for (const auto& [beta, rests] : shapes) {
    for (const auto& m : monomials(Sign::minus, beta)) {
      for (const auto& rest : rests) {
        if (!only_kp(rest, n, G.generator_count())) {
          throw std::invalid_argument("pairing: left argument must lie in U^{<=0}");
        }
        GeneratorExpr mw = m;
        for (std::size_t i = 0; i < n; ++i) {
          if (rest[n + i] != 0) mw = mw * GeneratorExpr::omega_p(i, rest[n + i]);
        }
        cols.push_back(r_.psi(mw));
        cand.push_back(std::move(mw));
      }
    }
  }
  std::map<Word, std::size_t> row_of;
  for (const auto& col : cols) {
    for (const auto& [w, v] : col.terms()) row_of.emplace(w, row_of.size());
  }
  for (const auto& [w, v] : y.terms()) row_of.emplace(w, row_of.size());
  scalars::Matrix mat(row_of.size(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (const auto& [w, v] : cols[k].terms()) mat(row_of[w], k) = v;
  }
  scalars::Vector rhs(row_of.size(), Coeff(0));
  for (const auto& [w, v] : y.terms()) rhs[row_of[w]] = v;
  const auto sol = scalars::solve(mat, rhs);
  if (!sol) throw std::invalid_argument("pairing: left argument is not in the image of U^{<=0}");

  Coeff out(0);
  for (std::size_t k = 0; k < cand.size(); ++k) {
    if (!(*sol)[k].is_zero()) out += (*sol)[k] * peel_f(cand[k], x);
  }
  return out;
}

std::vector<GeneratorExpr> Pairing::monomials(Sign sign, const Weight& beta) const {
  const std::size_t n = r_.rank();
  if (!beta.in_positive_cone()) throw std::invalid_argument("graded component needs beta in Q+");
  std::vector<long> left(n);
  for (std::size_t i = 0; i < n; ++i) left[i] = beta[i].numerator();
  std::vector<GeneratorExpr> out;
  GeneratorExpr::Monomial cur;
  auto grow = [&](auto&& self) -> void {
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (left[i] == 0) continue;
      done = false;
      --left[i];
      cur.push_back(GenAtom{sign == Sign::plus ? GenKind::e : GenKind::f, static_cast<std::uint8_t>(i)});
      self(self);
      cur.pop_back();
      ++left[i];
    }
    if (done) {
      GeneratorExpr m;
      m.add(cur, Coeff(1));
      out.push_back(std::move(m));
    }
  };
  grow(grow);
  return out;
}

GradedBasis Pairing::graded_basis(Sign sign, const Weight& beta) const {
  const auto mons = monomials(sign, beta);
  std::vector<Element> imgs;
  std::map<Word, std::size_t> row_of;
  for (const auto& m : mons) {
    imgs.push_back(r_.psi(m));
    for (const auto& [w, v] : imgs.back().terms()) row_of.emplace(w, row_of.size());
  }
  scalars::Matrix mat(row_of.size(), imgs.size());
  for (std::size_t k = 0; k < imgs.size(); ++k) {
    for (const auto& [w, v] : imgs[k].terms()) mat(row_of[w], k) = v;
  }
  GradedBasis out;
  if (imgs.empty()) return out;
  for (const std::size_t k : scalars::row_reduce(mat).pivot_cols) {
    out.monomials.push_back(mons[k]);
    out.elements.push_back(imgs[k]);
  }
  return out;
}

scalars::Matrix Pairing::gram_matrix(const Weight& beta, PairingRoute route) const {
  const GradedBasis minus = graded_basis(Sign::minus, beta);
  const GradedBasis plus = graded_basis(Sign::plus, beta);
  scalars::Matrix g(minus.elements.size(), plus.elements.size());
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (std::size_t a = 0; a < minus.elements.size(); ++a) {
    for (std::size_t b = 0; b < plus.elements.size(); ++b) {
      g(a, b) = route == PairingRoute::peel_f ? peel_f(minus.monomials[a], plus.elements[b])
                                              : peel_e(minus.elements[a], plus.monomials[b]);
    }
  }
  return g;
}

}  // namespace qqsa
