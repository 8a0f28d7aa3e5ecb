#include "qqsa/repr.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>

#include "qqsa/scalars/qnumbers.hpp"

namespace qqsa {

namespace {

bool has_v(const Word& w) {
  for (const Letter l : w.letters) {
    if (l.kind == LetterKind::V) return true;
  }
  return false;
}

GeneratorExpr atom_expr(const GenAtom& a) {
  GeneratorExpr x;
  x.add({a}, Coeff(1));
  return x;
}

Weight atom_shift(const GenAtom& a, std::size_t n) {
  switch (a.kind) {
    case GenKind::e:
      return Weight::simple_root(n, a.index);
    case GenKind::f:
      return -Weight::simple_root(n, a.index);
    default:
      return Weight(n);
  }
}

void check_root_order(const CartanDatum& d, std::uint32_t ell) {
  if (!d.is_finite_type() || !d.is_indecomposable()) {
    throw std::invalid_argument("root of unity setup needs a finite indecomposable type");
  }
  if (ell % 2 == 0) throw std::invalid_argument("root of unity order must be odd");
  const bool g2 = d.rank() == 2 && d.a(0, 1) * d.a(1, 0) == 3;
  if (g2 && ell % 3 == 0) throw std::invalid_argument("type G2 needs an order prime to 3");
}

}  // namespace

ModuleSetup ModuleSetup::symbolic(const CartanDatum& d, const std::vector<long>& labels) {
  auto q = ParamMatrix::symbolic(d);
  Evaluator ev(q.names());
  return ModuleSetup{d, std::move(q), std::move(ev), d.weight_from_labels(labels), {}};
}

std::size_t WeightSpaceTable::dimension() const {
  std::size_t n = 0;
  for (const auto& [mu, b] : spaces) n += b.size();
  return n;
}

std::size_t WeightSpaceTable::dimension(const Weight& mu) const {
  const auto it = spaces.find(mu);
  return it == spaces.end() ? 0 : it->second.size();
}

HighestWeightModule::HighestWeightModule(ModuleSetup setup)
    : setup_(std::move(setup)),
      r_(Algebra(std::make_shared<const Structure>(setup_.datum, setup_.params, setup_.evaluator, setup_.lambda,
                                                   setup_.moduli))),
      j_(r_.algebra()) {
  if (!setup_.datum.is_dominant(setup_.lambda)) {
    throw std::invalid_argument("highest weight " + setup_.lambda.to_string() + " is not dominant");
  }
  close();
  std::size_t at = 0;
  for (const auto& [mu, b] : table_.spaces) {
    offsets_[mu] = at;
    at += b.size();
  }
}

Element HighestWeightModule::highest() const { return algebra().letter(Letter::V()); }

Element HighestWeightModule::adjoint_act(const GeneratorExpr& x, const Element& w) const {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    Element y = w;
    for (auto it = m.rbegin(); it != m.rend() && !y.is_zero(); ++it) {
      y = r_.ad(Side::left, r_.psi(atom_expr(*it)), y);
    }
    out += y.scaled(c);
  }
  return out;
}

// Breadth-first lowering. Every parent of a weight at depth k sits at depth
// k - 1, so each level is complete before its basis is chosen.
void HighestWeightModule::close() {
  const std::size_t n = setup_.datum.rank();
  table_.spaces[setup_.lambda] = {highest()};
  std::vector<Weight> level{setup_.lambda};
  for (std::size_t depth = 0;; ++depth) {
    struct Job {
      Weight target;
      const Element* source;
      Origin origin;
    };
    std::vector<Job> jobs;
    for (const auto& mu : level) {
      const auto& space = table_.spaces.at(mu);
      for (std::size_t k = 0; k < space.size(); ++k) {
        for (std::size_t i = 0; i < n; ++i) jobs.push_back({mu - Weight::simple_root(n, i), &space[k], {i, k}});
      }
    }
    std::vector<Element> images(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      images[k] = r_.ad(Side::left, r_.psi(GeneratorExpr::f(jobs[k].origin.i)), *jobs[k].source);
    }
    std::map<Weight, std::vector<std::pair<Element, Origin>>> next;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      if (!images[k].is_zero()) next[jobs[k].target].emplace_back(std::move(images[k]), jobs[k].origin);
    }
    table_.depth = depth;
    if (next.empty()) {
      table_.closed = true;
      return;
    }
    if (depth == setup_.max_depth) return;
    level.clear();
    for (auto& [nu, cands] : next) {
      std::map<Word, std::size_t> row_of;
      for (const auto& [c, o] : cands) {
        for (const auto& [w, v] : c.terms()) row_of.emplace(w, row_of.size());
      }
      scalars::Matrix m(row_of.size(), cands.size());
      for (std::size_t k = 0; k < cands.size(); ++k) {
        for (const auto& [w, v] : cands[k].first.terms()) m(row_of[w], k) = v;
      }
      std::vector<Element> basis;
      std::vector<Origin> origins;
      for (const std::size_t k : scalars::row_reduce(m).pivot_cols) {
        basis.push_back(std::move(cands[k].first));
        origins.push_back(cands[k].second);
      }
      table_.spaces[nu] = std::move(basis);
      table_.origins[nu] = std::move(origins);
      level.push_back(nu);
    }
  }
}

scalars::Vector HighestWeightModule::coordinates(const Element& w, const Weight& mu) const {
  const auto it = table_.spaces.find(mu);
  static const std::vector<Element> none;
  const auto& basis = it == table_.spaces.end() ? none : it->second;
  if (w.is_zero()) return scalars::Vector(basis.size(), Coeff(0));
  const auto ex = j_.express(w, basis, setup_.bound);
  if (!ex) {
    throw ReductionError("no reduction onto weight " + mu.to_string() + " within bound " +
                             std::to_string(setup_.bound) + " for " + algebra().to_string(w),
                         setup_.bound);
  }
  return ex->coords;
}

scalars::Matrix HighestWeightModule::raising_matrix(std::size_t i, const Weight& mu) const {
  const Weight target = mu + Weight::simple_root(setup_.datum.rank(), i);
  const auto& src = table_.spaces.at(mu);
  scalars::Matrix m(table_.dimension(target), src.size());
  for (std::size_t k = 0; k < src.size(); ++k) {
    const auto col = coordinates(adjoint_act(GeneratorExpr::e(i), src[k]), target);
    for (std::size_t r = 0; r < col.size(); ++r) m(r, k) = col[r];
  }
  return m;
}

scalars::Matrix HighestWeightModule::lowering_matrix(std::size_t i, const Weight& mu) const {
  const Weight target = mu - Weight::simple_root(setup_.datum.rank(), i);
  const auto& src = table_.spaces.at(mu);
  scalars::Matrix m(table_.dimension(target), src.size());
  for (std::size_t k = 0; k < src.size(); ++k) {
    const auto col = coordinates(adjoint_act(GeneratorExpr::f(i), src[k]), target);
    for (std::size_t r = 0; r < col.size(); ++r) m(r, k) = col[r];
  }
  return m;
}

std::size_t HighestWeightModule::offset(const Weight& mu) const { return offsets_.at(mu); }

scalars::Matrix HighestWeightModule::matrix(const GenAtom& a) const {
  const std::size_t dim = table_.dimension();
  const Weight shift = atom_shift(a, setup_.datum.rank());
  const GeneratorExpr x = atom_expr(a);
  struct Column {
    Weight mu;
    std::size_t k;
  };
  std::vector<Column> cols;
  for (const auto& [mu, b] : table_.spaces) {
    for (std::size_t k = 0; k < b.size(); ++k) cols.push_back({mu, k});
  }
  scalars::Matrix m(dim, dim);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t c = 0; c < cols.size(); ++c) {
    try {
      const Weight target = cols[c].mu + shift;
      const auto col = coordinates(adjoint_act(x, table_.spaces.at(cols[c].mu)[cols[c].k]), target);
      if (col.empty()) continue;
      const std::size_t row0 = offset(target);
      for (std::size_t r = 0; r < col.size(); ++r) m(row0 + r, c) = col[r];
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return m;
}

ModuleAction HighestWeightModule::action(RaisingRoute route) const {
  const std::size_t n = setup_.datum.rank();
  ModuleAction act;
  for (std::size_t i = 0; i < n; ++i) {
    const auto at = static_cast<std::uint8_t>(i);
    act.f.push_back(matrix(GenAtom{GenKind::f, at}));
    act.omega.push_back(matrix(GenAtom{GenKind::omega, at}));
    act.omega_inv.push_back(matrix(GenAtom{GenKind::omega, at, -1}));
    act.omega_p.push_back(matrix(GenAtom{GenKind::omega_p, at}));
    act.omega_p_inv.push_back(matrix(GenAtom{GenKind::omega_p, at, -1}));
  }
  for (std::size_t i = 0; i < n; ++i) {
    act.e.push_back(route == RaisingRoute::reduction ? matrix(GenAtom{GenKind::e, static_cast<std::uint8_t>(i)})
                                                     : raising_by_recursion(i, act));
  }
  return act;
}

// e_i f_j b' = f_j e_i b' + delta_ij c_i (omega_i - omega'_i) b', which holds in
// the quasi-symmetric algebra up to ad of the R5 residual, an element of J.
// Parents have higher weight, so walking weights from the top fills their
// columns first.
scalars::Matrix HighestWeightModule::raising_by_recursion(std::size_t i, const ModuleAction& act) const {
  const std::size_t dim = table_.dimension();
  const std::size_t n = setup_.datum.rank();
  const Coeff c = algebra().structure().contraction(i);
  scalars::Matrix e(dim, dim);
  std::vector<std::pair<Weight, long>> order;
  for (const auto& [mu, b] : table_.spaces) order.emplace_back(mu, setup_.datum.height(setup_.lambda - mu));
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  for (const auto& [mu, h] : order) {
    if (h == 0) continue;
    const auto& origins = table_.origins.at(mu);
    for (std::size_t k = 0; k < origins.size(); ++k) {
      const std::size_t j = origins[k].i;
      const std::size_t parent = offset(mu + Weight::simple_root(n, j)) + origins[k].parent;
      const std::size_t col = offset(mu) + k;
      for (std::size_t r = 0; r < dim; ++r) {
        Coeff v(0);
        for (std::size_t t = 0; t < dim; ++t) {
          if (!act.f[j](r, t).is_zero() && !e(t, parent).is_zero()) v += act.f[j](r, t) * e(t, parent);
        }
        if (j == i) v += c * (act.omega[i](r, parent) - act.omega_p[i](r, parent));
        e(r, col) = v;
      }
    }
  }
  return e;
}

scalars::Matrix HighestWeightModule::evaluate(const ModuleAction& act, const GeneratorExpr& x) const {
  const std::size_t dim = table_.dimension();
  scalars::Matrix out(dim, dim);
  for (const auto& [mono, c] : x.terms()) {
    scalars::Matrix p = scalars::Matrix::identity(dim);
    for (const GenAtom& a : mono) {
      switch (a.kind) {
        case GenKind::e:
          p = p * act.e[a.index];
          break;
        case GenKind::f:
          p = p * act.f[a.index];
          break;
        case GenKind::omega:
        case GenKind::omega_p: {
          const bool primed = a.kind == GenKind::omega_p;
          const auto& g = a.power < 0 ? (primed ? act.omega_p_inv : act.omega_inv) : (primed ? act.omega_p : act.omega);
          for (int k = 0; k < std::abs(static_cast<int>(a.power)); ++k) p = p * g[a.index];
          break;
        }
      }
    }
    out = out + p.scaled(c);
  }
  return out;
}

Coeff HighestWeightModule::omega_eigenvalue(std::size_t i, const Weight& mu, bool primed) const {
  const auto& s = algebra().structure();
  const Weight a = Weight::simple_root(s.rank(), i);
  return primed ? s.eval(s.params().pairing(mu, a)).inverse() : s.eval(s.params().pairing(a, mu));
}

std::optional<std::size_t> HighestWeightModule::nilpotency(std::size_t i, std::size_t max_r) const {
  Element w = highest();
  for (std::size_t r = 1; r <= max_r; ++r) {
    w = adjoint_act(GeneratorExpr::f(i), w);
    if (w.is_zero()) return r;
  }
  return std::nullopt;
}

Coeff HighestWeightModule::lowering_coefficient(std::size_t i, std::size_t r) const {
  const auto& s = algebra().structure();
  const Weight a = Weight::simple_root(s.rank(), i);
  const Coeff qii = s.eval(s.params().q(i, i));
  const Coeff qal = s.eval(s.params().pairing(a, setup_.lambda));
  const Coeff qla = s.eval(s.params().pairing(setup_.lambda, a));
  Coeff c = scalars::q_factorial(static_cast<long>(r), qii.inverse());
  for (std::size_t k = 1; k <= r; ++k) c *= qii.pow(static_cast<long>(k) - 1) / qla - qal;
  return c;
}

Element HighestWeightModule::project(const Element& a) const {
  Element out;
  for (const auto& [w, c] : a.terms()) {
    if (!has_v(w)) out.add(w, c);
  }
  return out;
}

Element HighestWeightModule::coinvariant_project(const Element& a) const {
  const Algebra& A = algebra();
  const Tensor t = A.coproduct(a);
  Element out;
  for (const auto& [k, c] : t.terms()) {
    if (has_v(k[1])) continue;
    out += A.product(Element::word(k[0]), A.antipode(Element::word(k[1]))).scaled(c);
  }
  return out;
}

bool HighestWeightModule::is_coinvariant(const Element& a) const {
  const Tensor t = algebra().coproduct(a);
  Tensor lhs;
  for (const auto& [k, c] : t.terms()) {
    if (!has_v(k[1])) lhs.add(k, c);
  }
  return lhs == Tensor::outer(a, algebra().one());
}

bool alcove_check(const CartanDatum& d, const Weight& lambda, std::uint32_t ell) {
  check_root_order(d, ell);
  const Weight shifted = lambda + d.rho();
  for (const auto& alpha : d.positive_roots()) {
    const Exponent x = Exponent(2) * d.form(shifted, alpha) / d.form(alpha, alpha);
    if (!(Exponent(0) < x && x < Exponent(static_cast<std::int64_t>(ell)))) return false;
  }
  return true;
}

ModuleSetup root_of_unity_setup(const CartanDatum& d, const std::vector<long>& labels, std::uint32_t ell) {
  check_root_order(d, ell);
  auto q = ParamMatrix::one_parameter(d);
  Evaluator ev(q.names(), scalars::Assignment{{0, scalars::RootPower{ell, 1}}});
  std::vector<std::uint32_t> moduli(2 * d.rank() + 1, ell);
  return ModuleSetup{d, std::move(q), std::move(ev), d.weight_from_labels(labels), std::move(moduli)};
}

}  // namespace qqsa
