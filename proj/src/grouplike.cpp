#include "qqsa/grouplike.hpp"

#include <stdexcept>

namespace qqsa {

bool GroupElement::is_identity() const {
  for (auto x : e_) {
    if (x != 0) return false;
  }
  return true;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  GroupElement r;
  for (std::size_t g = 0; g < kMaxGenerators; ++g) r.e_[g] = e_[g] + o.e_[g];
  return r;
}

GroupElement GroupElement::inverse() const { return pow(-1); }

GroupElement GroupElement::pow(std::int32_t k) const {
  GroupElement r;
  for (std::size_t g = 0; g < kMaxGenerators; ++g) r.e_[g] = e_[g] * k;
  return r;
}

GradingGroup::GradingGroup(std::size_t rank, bool with_lambda, std::vector<std::uint32_t> moduli)
    : rank_(rank), with_lambda_(with_lambda), moduli_(std::move(moduli)) {
  if (generator_count() > kMaxGenerators) throw std::invalid_argument("too many group generators");
  if (moduli_.empty()) moduli_.assign(generator_count(), 0);
  if (moduli_.size() != generator_count()) throw std::invalid_argument("one modulus per generator required");
}

std::uint64_t GradingGroup::order() const {
  std::uint64_t n = 1;
  for (auto m : moduli_) {
    if (m == 0) return 0;
    n *= m;
  }
  return n;
}

std::size_t GradingGroup::lambda_index() const {
  if (!with_lambda_) throw std::logic_error("grading group has no K_lambda");
  return 2 * rank_;
}

GroupElement GradingGroup::K(std::size_t i, std::int32_t power) const {
  GroupElement g;
  g[k_index(i)] = power;
  return canonical(g);
}

GroupElement GradingGroup::Kp(std::size_t i, std::int32_t power) const {
  GroupElement g;
  g[kp_index(i)] = power;
  return canonical(g);
}

GroupElement GradingGroup::Klambda(std::int32_t power) const {
  GroupElement g;
  g[lambda_index()] = power;
  return canonical(g);
}

GroupElement GradingGroup::canonical(GroupElement g) const {
  for (std::size_t k = 0; k < generator_count(); ++k) {
    const auto m = static_cast<std::int32_t>(moduli_[k]);
    if (m != 0) g[k] = ((g[k] % m) + m) % m;
  }
  return g;
}

std::string GradingGroup::generator_name(std::size_t g) const {
  if (g < rank_) return "K" + std::to_string(g + 1);
  if (g < 2 * rank_) return "Kp" + std::to_string(g - rank_ + 1);
  return "Kl";
}

std::string GradingGroup::to_string(const GroupElement& g) const {
  std::string s;
  for (std::size_t k = 0; k < generator_count(); ++k) {
    if (g[k] == 0) continue;
    s += generator_name(k);
    if (g[k] != 1) s += "^" + std::to_string(g[k]);
  }
  return s.empty() ? "1" : s;
}

Monomial Character::operator()(const GroupElement& g) const {
  Monomial m;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (g[k] != 0) m = m * values_[k].pow(Exponent(g[k]));
  }
  return m;
}

Character Character::operator*(const Character& o) const {
  std::vector<Monomial> v(std::max(values_.size(), o.values_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k < values_.size()) v[k] = v[k] * values_[k];
    if (k < o.values_.size()) v[k] = v[k] * o.values_[k];
  }
  return Character(std::move(v));
}

Bicharacter::Bicharacter(std::size_t generators) : n_(generators), v_(generators * generators) {}

Monomial Bicharacter::operator()(const GroupElement& a, const GroupElement& b) const {
  Monomial m;
  for (std::size_t g = 0; g < n_; ++g) {
    if (a[g] == 0) continue;
    for (std::size_t h = 0; h < n_; ++h) {
      if (b[h] != 0) m = m * v_[g * n_ + h].pow(Exponent(static_cast<std::int64_t>(a[g]) * b[h]));
    }
  }
  return m;
}

Bicharacter Bicharacter::inverse() const {
  Bicharacter r(n_);
  for (std::size_t k = 0; k < v_.size(); ++k) r.v_[k] = v_[k].inverse();
  return r;
}

bool Bicharacter::is_trivial() const {
  for (const auto& m : v_) {
    if (!m.is_one()) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> twist_condition_violations(const ParamMatrix& q,
                                                                            const ParamMatrix& qhat) {
  if (q.rank() != qhat.rank()) throw std::invalid_argument("parameter matrices differ in rank");
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < q.rank(); ++i) {
    for (std::size_t j = 0; j < q.rank(); ++j) {
      const bool ok = i == j ? qhat.q(i, i) == q.q(i, i)
                             : qhat.q(i, j) * qhat.q(j, i) == q.q(i, j) * q.q(j, i);
      if (!ok) bad.emplace_back(i, j);
    }
  }
  return bad;
}

Bicharacter build_bicharacter(const GradingGroup& group, const ParamMatrix& q, const ParamMatrix& qhat) {
  const auto bad = twist_condition_violations(q, qhat);
  if (!bad.empty()) {
    std::string msg = "q-hat violates the twist condition at";
    for (auto [i, j] : bad) msg += " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    throw std::invalid_argument(msg);
  }
  Bicharacter sigma(group.generator_count());
  const std::size_t n = q.rank();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j) {
        const Monomial ratio = qhat.q(i, j) * q.q(i, j).inverse();
        sigma.set(group.k_index(i), group.k_index(j), ratio);
        sigma.set(group.kp_index(i), group.kp_index(j), ratio);
      }
      sigma.set(group.kp_index(i), group.k_index(j), qhat.q(j, i).inverse() * q.q(j, i));
    }
  }
  return sigma;
}

}  // namespace qqsa
