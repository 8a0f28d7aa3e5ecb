#include "qqsa/cartan.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qqsa {

namespace {

const Exponent kZero(0);

bool is_zero(const Exponent& e) { return e.numerator() == 0; }

/// Solve A x = b over the rationals for invertible A.
std::vector<Exponent> rational_solve(std::vector<std::vector<Exponent>> a, std::vector<Exponent> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && is_zero(a[p][col])) ++p;
    if (p == n) throw std::invalid_argument("singular Cartan matrix");
    std::swap(a[p], a[col]);
    std::swap(b[p], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      const Exponent f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

Exponent rational_det(std::vector<std::vector<Exponent>> a) {
  const std::size_t n = a.size();
  Exponent det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && is_zero(a[p][col])) ++p;
    if (p == n) return kZero;
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Exponent f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

std::string exponent_string(const Exponent& e) {
  if (e.denominator() == 1) return std::to_string(e.numerator());
  return std::to_string(e.numerator()) + "/" + std::to_string(e.denominator());
}

}  // namespace

// ------------------------------------------------------------------ Weight

Weight Weight::simple_root(std::size_t rank, std::size_t i) {
  Weight w(rank);
  w.c_[i] = Exponent(1);
  return w;
}

bool Weight::is_integral() const {
  for (const auto& x : c_) {
    if (x.denominator() != 1) return false;
  }
  return true;
}

bool Weight::in_positive_cone() const {
  for (const auto& x : c_) {
    if (x.denominator() != 1 || x.numerator() < 0) return false;
  }
  return true;
}

bool Weight::is_zero() const {
  for (const auto& x : c_) {
    if (x.numerator() != 0) return false;
  }
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Weight Weight::operator*(const Exponent& k) const {
  Weight r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Exponent x = c_[i];
    if (x.numerator() == 0) continue;
    if (x.numerator() < 0) {
      os << '-';
      x = -x;
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (x != Exponent(1)) os << exponent_string(x);
    os << 'a' << (i + 1);
  }
  return first ? "0" : os.str();
}

// ------------------------------------------------------------- CartanDatum

CartanDatum::CartanDatum(std::vector<std::vector<int>> a, std::vector<int> d) : a_(std::move(a)), d_(std::move(d)) {
  const std::size_t n = d_.size();
  if (n == 0) throw std::invalid_argument("Cartan matrix of rank 0");
  if (a_.size() != n) throw std::invalid_argument("Cartan matrix and symmetrizers differ in size");
  for (std::size_t i = 0; i < n; ++i) {
    if (a_[i].size() != n) throw std::invalid_argument("Cartan matrix is not square");
    if (d_[i] <= 0) throw std::invalid_argument("symmetrizers must be positive");
    if (a_[i][i] != 2) throw std::invalid_argument("diagonal Cartan entries must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a_[i][j] > 0) throw std::invalid_argument("off-diagonal Cartan entries must be <= 0");
      if ((a_[i][j] == 0) != (a_[j][i] == 0)) {
        throw std::invalid_argument("a_ij = 0 must imply a_ji = 0");
      }
      if (d_[i] * a_[i][j] != d_[j] * a_[j][i]) {
        throw std::invalid_argument("symmetrizers do not symmetrize the Cartan matrix at (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
}

CartanDatum CartanDatum::of_type(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("unknown Cartan type " + name);
  const char family = name[0];
  const int n = std::stoi(name.substr(1));
  if (n < 1) throw std::invalid_argument("unknown Cartan type " + name);
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  std::vector<int> d(n, 1);
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  switch (family) {
    case 'A':
      break;
    case 'B':
      if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
      a[n - 1][n - 2] = -2;
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case 'C':
      if (n < 2) throw std::invalid_argument("C_n needs n >= 2");
      a[n - 2][n - 1] = -2;
      d[n - 1] = 2;
      break;
    case 'D':
      if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("only G2 is supported");
      a[1][0] = -3;
      d = {3, 1};
      break;
    default:
      throw std::invalid_argument("unknown Cartan type " + name);
  }
  return CartanDatum(std::move(a), std::move(d));
}

Exponent CartanDatum::form(const Weight& mu, const Weight& nu) const {
  Exponent s(0);
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) s += mu[i] * nu[j] * Exponent(d_[i] * a_[i][j]);
  }
  return s;
}

Exponent CartanDatum::coweight_pairing(const Weight& lambda, std::size_t i) const {
  return Exponent(2) * form(lambda, Weight::simple_root(rank(), i)) / Exponent(2 * d_[i]);
}

long CartanDatum::height(const Weight& beta) const {
  if (!beta.in_positive_cone()) throw std::invalid_argument("height of a vector outside Q+: " + beta.to_string());
  long h = 0;
  for (const auto& x : beta.coords()) h += x.numerator();
  return h;
}

Weight CartanDatum::weight_from_labels(const std::vector<long>& labels) const {
  if (labels.size() != rank()) throw std::invalid_argument("wrong number of Dynkin labels");
  std::vector<std::vector<Exponent>> a(rank(), std::vector<Exponent>(rank()));
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) a[i][j] = Exponent(a_[i][j]);
  }
  std::vector<Exponent> b;
  for (long m : labels) b.emplace_back(m);
  return Weight(rational_solve(std::move(a), std::move(b)));
}

Weight CartanDatum::fundamental_weight(std::size_t i) const {
  std::vector<long> labels(rank(), 0);
  labels[i] = 1;
  return weight_from_labels(labels);
}

Weight CartanDatum::rho() const { return weight_from_labels(std::vector<long>(rank(), 1)); }

bool CartanDatum::is_dominant(const Weight& lambda) const {
  for (std::size_t i = 0; i < rank(); ++i) {
    const Exponent p = coweight_pairing(lambda, i);
    if (p.denominator() != 1 || p.numerator() < 0) return false;
  }
  return true;
}

bool CartanDatum::is_finite_type() const {
  for (std::size_t k = 1; k <= rank(); ++k) {
    std::vector<std::vector<Exponent>> m(k, std::vector<Exponent>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) m[i][j] = Exponent(d_[i] * a_[i][j]);
    }
    if (rational_det(std::move(m)).numerator() <= 0) return false;
  }
  return true;
}

bool CartanDatum::is_indecomposable() const {
  std::vector<bool> seen(rank(), false);
  std::deque<std::size_t> todo{0};
  seen[0] = true;
  while (!todo.empty()) {
    const std::size_t i = todo.front();
    todo.pop_front();
    for (std::size_t j = 0; j < rank(); ++j) {
      if (!seen[j] && a_[i][j] != 0) {
        seen[j] = true;
        todo.push_back(j);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Weight CartanDatum::reflect(const Weight& mu, std::size_t i) const {
  return mu - Weight::simple_root(rank(), i) * coweight_pairing(mu, i);
}

std::vector<Weight> CartanDatum::positive_roots() const {
  if (!is_finite_type()) throw std::invalid_argument("positive roots requested for a non-finite-type datum");
  std::set<Weight> roots;
  std::deque<Weight> todo;
  for (std::size_t i = 0; i < rank(); ++i) {
    todo.push_back(Weight::simple_root(rank(), i));
    roots.insert(todo.back());
  }
  while (!todo.empty()) {
    const Weight w = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i < rank(); ++i) {
      Weight r = reflect(w, i);
      if (roots.insert(r).second) todo.push_back(std::move(r));
    }
  }
  std::vector<Weight> pos;
  for (const auto& r : roots) {
    if (r.in_positive_cone()) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [this](const Weight& a, const Weight& b) {
    const long ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : b < a;
  });
  return pos;
}

std::vector<Weight> CartanDatum::positive_cone_of_height(long h) const {
  std::vector<Weight> out;
  Weight w(rank());
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i + 1 == rank()) {
      w[i] = Exponent(left);
      out.push_back(w);
      return;
    }
    for (long k = left; k >= 0; --k) {
      w[i] = Exponent(k);
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, h);
  return out;
}

// ------------------------------------------------------------- ParamMatrix

namespace {

std::string param_name(std::size_t n, std::size_t i, std::size_t j) {
  if (n < 10) return "q" + std::to_string(i + 1) + std::to_string(j + 1);
  return "q" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

ParamMatrix ParamMatrix::symbolic(const CartanDatum& datum) {
  const std::size_t n = datum.rank();
  VarNames names;
  std::vector<Monomial> q(n * n);
  // q_ii^{a_ij} = q_jj^{a_ji} forces q_jj = q_bb^{d_j / d_b} within a connected
  // component; b is the component's index with the smallest symmetrizer.
  std::vector<bool> done(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<std::size_t> comp{start};
    done[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!done[j] && datum.a(comp[k], j) != 0) {
          done[j] = true;
          comp.push_back(j);
        }
      }
    }
    std::size_t b = comp.front();
    for (std::size_t i : comp) {
      if (datum.d(i) < datum.d(b) || (datum.d(i) == datum.d(b) && i < b)) b = i;
    }
    const auto v = static_cast<scalars::VarIndex>(names.size());
    names.push_back(param_name(n, b, b));
    for (std::size_t i : comp) q[i * n + i] = Monomial::variable(v, Exponent(datum.d(i), datum.d(b)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[i * n + j] = Monomial::variable(static_cast<scalars::VarIndex>(names.size()));
      names.push_back(param_name(n, i, j));
      q[j * n + i] = q[i * n + i].pow(Exponent(datum.a(i, j))) * q[i * n + j].inverse();
    }
  }
  return ParamMatrix(ParamMode::symbolic_generic, n, std::move(q), std::move(names));
}

ParamMatrix ParamMatrix::one_parameter(const CartanDatum& datum) {
  const std::size_t n = datum.rank();
  std::vector<Monomial> q(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q[i * n + j] = Monomial::variable(0, Exponent(datum.d(i) * datum.a(i, j)));
  }
  return ParamMatrix(ParamMode::one_parameter, n, std::move(q), {"q"});
}

ParamMatrix ParamMatrix::twist_generic(const CartanDatum& datum) {
  const std::size_t n = datum.rank();
  VarNames names{"q"};
  std::vector<Monomial> q(n * n);
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = Monomial::variable(0, Exponent(2 * datum.d(i)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[i * n + j] = Monomial::variable(static_cast<scalars::VarIndex>(names.size()));
      names.push_back(param_name(n, i, j));
      q[j * n + i] = Monomial::variable(0, Exponent(2 * datum.d(i) * datum.a(i, j))) * q[i * n + j].inverse();
    }
  }
  return ParamMatrix(ParamMode::twist_generic, n, std::move(q), std::move(names));
}

ParamMatrix ParamMatrix::custom(const CartanDatum& datum, std::vector<Monomial> entries, VarNames names) {
  const std::size_t n = datum.rank();
  if (entries.size() != n * n) throw std::invalid_argument("parameter matrix has wrong size");
  ParamMatrix p(ParamMode::custom, n, std::move(entries), std::move(names));
  const auto bad = p.constraint_violations(datum);
  if (!bad.empty()) {
    std::string msg = "parameter matrix violates q_ij q_ji = q_ii^a_ij at";
    for (auto [i, j] : bad) msg += " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    throw std::invalid_argument(msg);
  }
  return p;
}

std::optional<scalars::VarIndex> ParamMatrix::var(const std::string& name) const {
  for (std::size_t v = 0; v < names_.size(); ++v) {
    if (names_[v] == name) return static_cast<scalars::VarIndex>(v);
  }
  return std::nullopt;
}

Monomial ParamMatrix::pairing(const Weight& mu, const Weight& nu) const {
  Monomial m;
  for (std::size_t i = 0; i < n_; ++i) {
    if (mu[i].numerator() == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (nu[j].numerator() == 0) continue;
      m = m * q(i, j).pow(mu[i] * nu[j]);
    }
  }
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> ParamMatrix::constraint_violations(const CartanDatum& d) const {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!(q(i, j) * q(j, i) == q(i, i).pow(Exponent(d.a(i, j))))) bad.emplace_back(i, j);
    }
  }
  return bad;
}

// --------------------------------------------------------------- Evaluator

Evaluator::Evaluator(VarNames names, scalars::Assignment values)
    : names_(std::move(names)), values_(values), spec_(scalars::Specializer(std::move(values), names_)) {}

scalars::FieldPtr Evaluator::field() const { return spec_ ? spec_->field() : nullptr; }

Coeff Evaluator::operator()(const Monomial& m) const {
  if (!spec_) return Coeff(scalars::Scalar::monomial(m));
  return (*spec_)(m);
}

Coeff Evaluator::operator()(const scalars::Scalar& s) const {
  if (!spec_) return Coeff(s);
  return (*spec_)(s);
}

Coeff Evaluator::constant(long c) const {
  if (auto f = field()) return Coeff(scalars::Cyclotomic(f, mpq_class(c)));
  return Coeff(c);
}

std::uint32_t Evaluator::root_order(const Monomial& m) const {
  const auto f = field();
  if (!f) return 0;
  Exponent total(0);
  for (const auto& [v, e] : m.entries()) {
    const auto it = values_->find(v);
    if (it == values_->end()) return 0;
    const auto* r = std::get_if<scalars::RootPower>(&it->second);
    if (!r) return 0;
    total += e * Exponent(r->k);
  }
  const std::int64_t l = f->order();
  if (std::gcd(total.denominator(), l) != 1) return 0;
  const Coeff value = (*this)(m);
  // value is zeta^k for some k; find it by direct search
  for (std::int64_t k = 0; k < l; ++k) {
    if (value == Coeff(scalars::Cyclotomic::zeta_power(f, k))) {
      return static_cast<std::uint32_t>(l / std::gcd(k, l));
    }
  }
  return 0;
}

}  // namespace qqsa
