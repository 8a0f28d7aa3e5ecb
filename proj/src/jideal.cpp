#include "qqsa/jideal.hpp"

#include <algorithm>
#include <set>

#include "qqsa/scalars/matrix.hpp"

namespace qqsa {

std::string JResult::status_name() const {
  switch (status) {
    case JStatus::zero:
      return "zero";
    case JStatus::nonzero:
      return "nonzero";
    case JStatus::undecided:
      return "undecided(" + std::to_string(bound) + ")";
  }
  return "?";
}

GroupElement JReducer::g(std::size_t i) const {
  return a_.structure().grading(Letter::Xi(i));
}

Element JReducer::generator(std::size_t i) const {
  return a_.letter(Letter::Xi(i)) - a_.group_like(g(i)) + a_.one();
}

Element JReducer::expand(const JTerm& t) const {
  Element x = a_.one();
  for (const Letter l : t.left) x = a_.product(x, a_.letter(l), Exec::serial);
  x = a_.product(x, generator(t.i), Exec::serial);
  for (const Letter l : t.right) x = a_.product(x, a_.letter(l), Exec::serial);
  return a_.act_right(x, t.tail).scaled(t.c);
}

Element JReducer::expand(const std::vector<JTerm>& ts) const {
  Element x;
  for (const auto& t : ts) x += expand(t);
  return x;
}

namespace {

bool is_xi(Letter a) { return a.kind == LetterKind::Xi; }

/// Solution of x = sum_k a_k fixed_k + sum_l b_l free_l, free columns pruned to
/// those connected to the support of x and the fixed columns.
struct Solved {
  std::vector<Coeff> fixed;
  std::vector<std::pair<std::size_t, Coeff>> free;
};

std::optional<Solved> solve_columns(const Element& x, const std::vector<Element>& fixed,
                                    const std::vector<Element>& free) {
  std::set<Word> reach;
  for (const auto& [w, c] : x.terms()) reach.insert(w);
  for (const auto& b : fixed) {
    for (const auto& [w, c] : b.terms()) reach.insert(w);
  }
  std::vector<bool> used(free.size(), false);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if (used[k]) continue;
      const bool touches = std::any_of(free[k].terms().begin(), free[k].terms().end(),
                                       [&](const auto& t) { return reach.count(t.first) != 0; });
      if (!touches) continue;
      used[k] = true;
      grew = true;
      for (const auto& [w, c] : free[k].terms()) reach.insert(w);
    }
  }
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < free.size(); ++k) {
    if (used[k]) idx.push_back(k);
  }

  const std::vector<Word> rows(reach.begin(), reach.end());
  std::map<Word, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
  const std::size_t nf = fixed.size();
  scalars::Matrix m(rows.size(), nf + idx.size());
  for (std::size_t k = 0; k < nf; ++k) {
    for (const auto& [w, c] : fixed[k].terms()) m(row_of[w], k) = c;
  }
  for (std::size_t k = 0; k < idx.size(); ++k) {
    for (const auto& [w, c] : free[idx[k]].terms()) m(row_of[w], nf + k) = c;
  }
  scalars::Vector rhs(rows.size(), Coeff(0));
  for (const auto& [w, c] : x.terms()) rhs[row_of[w]] = c;
  const auto sol = scalars::solve(m, rhs);
  if (!sol) return std::nullopt;

  Solved out;
  out.fixed.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(nf));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (!(*sol)[nf + k].is_zero()) out.free.emplace_back(idx[k], (*sol)[nf + k]);
  }
  return out;
}

}  // namespace

std::vector<JTerm> JReducer::j_candidates(const Element& x, const std::vector<Letter>& alphabet,
                                          std::size_t max_letters) const {
  const auto& s = a_.structure();
  const auto& G = s.group();
  const std::size_t n = s.rank();
  const Weight mu = a_.weight(x).value();

  std::set<GroupElement> tails;
  for (const auto& [w, c] : x.terms()) {
    tails.insert(w.tail);
    for (std::size_t i = 0; i < n; ++i) tails.insert(G.canonical(g(i).inverse() * w.tail));
  }

  std::vector<std::vector<Letter>> seqs;
  std::vector<Letter> cur;
  auto grow = [&](auto&& self, const Weight& acc) -> void {
    if (acc == mu) seqs.push_back(cur);
    if (cur.size() >= max_letters) return;
    for (const Letter l : alphabet) {
      cur.push_back(l);
      self(self, acc + s.weight(l));
      cur.pop_back();
    }
  };
  grow(grow, Weight(n));

  std::vector<JTerm> out;
  for (const auto& seq : seqs) {
    for (std::size_t p = 0; p <= seq.size(); ++p) {
      for (std::size_t i = 0; i < n; ++i) {
        for (const auto& t : tails) {
          out.push_back(JTerm{1, {seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(p)}, i,
                              {seq.begin() + static_cast<std::ptrdiff_t>(p), seq.end()}, t});
        }
      }
    }
  }
  return out;
}

std::vector<Element> JReducer::triangular_span(const Weight& mu, const std::set<GroupElement>& tails,
                                               std::size_t max_len) const {
  const auto& s = a_.structure();
  const std::size_t n = s.rank();
  std::vector<Element> out;
  std::vector<Letter> fs;
  std::vector<Letter> es;

  auto emit = [&] {
    Element x = a_.one();
    for (const Letter l : fs) x = a_.product(x, a_.letter(l), Exec::serial);
    for (const Letter l : es) x = a_.product(x, a_.letter(l), Exec::serial);
    for (const auto& t : tails) {
      Element y = a_.act_right(x, t);
      if (!y.is_zero()) out.push_back(std::move(y));
    }
  };
  // E part of weight beta with every coordinate nonnegative
  auto grow_e = [&](auto&& self, Weight beta) -> void {
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (beta[i].numerator() < 0) return;
      if (beta[i].numerator() != 0) done = false;
    }
    if (done) {
      emit();
      return;
    }
    if (fs.size() + es.size() >= max_len) return;
    for (std::size_t i = 0; i < n; ++i) {
      if (beta[i].numerator() == 0) continue;
      es.push_back(Letter::E(i));
      beta[i] -= 1;
      self(self, beta);
      beta[i] += 1;
      es.pop_back();
    }
  };
  auto grow_f = [&](auto&& self, const Weight& gamma) -> void {
    grow_e(grow_e, mu + gamma);
    if (fs.size() >= max_len) return;
    for (std::size_t i = 0; i < n; ++i) {
      fs.push_back(Letter::F(i));
      Weight g2 = gamma;
      g2[i] += 1;
      self(self, g2);
      fs.pop_back();
    }
  };
  grow_f(grow_f, Weight(n));
  return out;
}

namespace {

std::vector<Letter> letters_of(const Element& x, const std::vector<Element>& extra = {}) {
  std::set<Letter> ls;
  for (const auto& [w, c] : x.terms()) ls.insert(w.letters.begin(), w.letters.end());
  for (const auto& b : extra) {
    for (const auto& [w, c] : b.terms()) ls.insert(w.letters.begin(), w.letters.end());
  }
  return {ls.begin(), ls.end()};
}

}  // namespace

JResult JReducer::reduce(const Element& x, std::size_t bound) const {
  JResult res{JStatus::zero, bound, {}, {}};
  if (x.is_zero()) return res;

  // fast path: (xi_i; K) = r_i * K + g_i K - K
  Element rest;
  for (const auto& [w, c] : x.terms()) {
    if (w.length() == 1 && is_xi(w.letters[0])) {
      JTerm t{c, {}, w.letters[0].index, {}, w.tail};
      rest += Element::word(w, c) - expand(t);
      res.combination.push_back(std::move(t));
    } else {
      rest.add(w, c);
    }
  }

  // J is weight-homogeneous, so each component reduces on its own
  std::map<Weight, Element> parts;
  for (const auto& [w, c] : rest.terms()) parts[a_.weight(w)].add(w, c);
  for (const auto& [mu, part] : parts) {
    std::set<GroupElement> tails;
    for (const auto& [w, c] : part.terms()) tails.insert(w.tail);
    const auto span = triangular_span(mu, tails, part.max_length());

    const auto sol = solve(part, span, bound);
    if (!sol) {
      res.status = JStatus::undecided;
      res.combination.clear();
      res.normal_form = {};
      return res;
    }
    for (std::size_t k = 0; k < span.size(); ++k) res.normal_form += span[k].scaled(sol->coords[k]);
    res.combination.insert(res.combination.end(), sol->combination.begin(), sol->combination.end());
  }
  if (!res.normal_form.is_zero()) res.status = JStatus::nonzero;
  return res;
}

std::optional<Expression> JReducer::express(const Element& x, const std::vector<Element>& basis,
                                            std::size_t bound) const {
  if (x.is_zero()) return Expression{std::vector<Coeff>(basis.size(), Coeff(0)), {}};
  return solve(x, basis, bound);
}

std::vector<JTerm> JReducer::anchored_candidates(const Element& x, const std::vector<Element>& fixed,
                                                 std::size_t max_len) const {
  constexpr std::size_t kLimit = 4000;
  std::vector<JTerm> out;
  std::set<Word> seen;
  std::vector<Word> queue;
  auto push = [&](const Element& e) {
    for (const auto& [w, c] : e.terms()) {
      if (seen.insert(w).second) queue.push_back(w);
    }
  };
  push(x);
  for (const auto& b : fixed) push(b);
  const std::set<Word> seeds = seen;
  while (!queue.empty() && out.size() < kLimit) {
    const Word w = std::move(queue.back());
    queue.pop_back();
    if (w.length() > max_len) continue;
    for (std::size_t p = 0; p < w.length(); ++p) {
      if (!is_xi(w.letters[p])) continue;
      const std::size_t i = w.letters[p].index;
      // the g_i term of r_i shifts the tail, so seed words also anchor at g_i^{-1} tail
      std::vector<GroupElement> tails{w.tail};
      if (seeds.contains(w)) tails.push_back(a_.structure().group().canonical(g(i).inverse() * w.tail));
      for (const auto& tail : tails) {
        JTerm t{1, {w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(p)}, i,
                {w.letters.begin() + static_cast<std::ptrdiff_t>(p) + 1, w.letters.end()}, tail};
        push(expand(t));
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

std::optional<Expression> JReducer::solve(const Element& x, const std::vector<Element>& fixed,
                                          std::size_t bound) const {
  auto finish = [](const Solved& sol, const std::vector<JTerm>& cand) {
    Expression out{sol.fixed, {}};
    for (const auto& [k, c] : sol.free) {
      JTerm t = cand[k];
      t.c = c;
      out.combination.push_back(std::move(t));
    }
    return out;
  };
  if (auto sol = solve_columns(x, fixed, {})) return finish(*sol, {});

  const std::size_t len = std::min(x.max_length(), bound);
  if (len == 0) return std::nullopt;
  std::vector<JTerm> cand = anchored_candidates(x, fixed, len);
  std::vector<Element> cols;
  for (const auto& t : cand) cols.push_back(expand(t));
  if (auto sol = solve_columns(x, fixed, cols)) return finish(*sol, cand);

  cand = j_candidates(x, letters_of(x, fixed), len - 1);
  cols.clear();
  for (const auto& t : cand) cols.push_back(expand(t));
  if (auto sol = solve_columns(x, fixed, cols)) return finish(*sol, cand);
  return std::nullopt;
}

}  // namespace qqsa
