#include <functional>

#include "doctest.h"
#include "qqsa/pairing.hpp"

using namespace qqsa;

namespace {

Pairing symbolic_pairing(const std::string& type) {
  const auto d = CartanDatum::of_type(type);
  auto q = ParamMatrix::symbolic(d);
  Evaluator ev(q.names());
  return Pairing(Realization(Algebra(std::make_shared<const Structure>(d, std::move(q), std::move(ev)))));
}

Coeff qc(const Pairing& P, std::size_t i, std::size_t j) {
  const auto& s = P.realization().algebra().structure();
  return s.eval(s.params().q(i, j));
}

Coeff c(const Pairing& P, std::size_t i) { return qc(P, i, i) / (1 - qc(P, i, i)); }

// Positive roots written out by hand, so the count below does not reuse the library's root system.
std::vector<std::vector<long>> roots_of(const std::string& type) {
  if (type == "A1") return {{1}};
  if (type == "A2") return {{1, 0}, {0, 1}, {1, 1}};
  if (type == "B2") return {{1, 0}, {0, 1}, {1, 1}, {1, 2}};  // alpha_1 long
  return {};
}

// Number of ways to write beta as an unordered sum of positive roots.
std::size_t kostant(const std::vector<std::vector<long>>& roots, std::vector<long> beta, std::size_t from = 0) {
  bool zero = true;
  for (long b : beta) zero = zero && b == 0;
  if (zero) return 1;
  std::size_t count = 0;
  for (std::size_t r = from; r < roots.size(); ++r) {
    bool fits = true;
    for (std::size_t i = 0; i < beta.size(); ++i) fits = fits && roots[r][i] <= beta[i];
    if (!fits) continue;
    for (std::size_t i = 0; i < beta.size(); ++i) beta[i] -= roots[r][i];
    count += kostant(roots, beta, r);
    for (std::size_t i = 0; i < beta.size(); ++i) beta[i] += roots[r][i];
  }
  return count;
}

Weight weight_of(const std::vector<long>& v) {
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i];
  return w;
}

void for_each_beta(std::size_t rank, long max_height, const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> b(rank, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == rank) {
      if (left < max_height) fn(b);
      return;
    }
    for (long k = 0; k <= left; ++k) {
      b[i] = k;
      rec(i + 1, left - k);
    }
    b[i] = 0;
  };
  rec(0, max_height);
}

}  // namespace

TEST_CASE("base values of the pairing") {
  const Pairing P = symbolic_pairing("A2");
  const Realization& R = P.realization();
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const Coeff expect = i == j ? c(P, i) : Coeff(0);
      CHECK(P.peel_f(GeneratorExpr::f(i), R.psi(GeneratorExpr::e(j))) == expect);
      CHECK(P.peel_e(R.psi(GeneratorExpr::f(i)), GeneratorExpr::e(j)) == expect);
      CHECK(P(R.psi(GeneratorExpr::f(i)), R.psi(GeneratorExpr::e(j))) == expect);
    }
  }
  // <omega'_1, omega_2> = q_21
  CHECK(P(R.psi(GeneratorExpr::omega_p(0)), R.psi(GeneratorExpr::omega(1))) == qc(P, 1, 0));
  CHECK(P.peel_f(GeneratorExpr::omega_p(0, 2), R.psi(GeneratorExpr::omega(1, -1))) == qc(P, 1, 0).pow(-2));
  CHECK(P.peel_e(R.psi(GeneratorExpr::omega_p(1)), GeneratorExpr::omega(0)) == qc(P, 0, 1));
  // <omega'_mu, e_i> = 0 and <f_i, omega_mu> = 0
  CHECK(P(R.psi(GeneratorExpr::omega_p(0)), R.psi(GeneratorExpr::e(0))) == Coeff(0));
  CHECK(P(R.psi(GeneratorExpr::f(0)), R.psi(GeneratorExpr::omega(0))) == Coeff(0));
}

TEST_CASE("arguments outside the Borel parts are rejected") {
  const Pairing P = symbolic_pairing("A1");
  const Realization& R = P.realization();
  CHECK_THROWS_AS(P(R.psi(GeneratorExpr::e(0)), R.psi(GeneratorExpr::e(0))), std::invalid_argument);
  CHECK_THROWS_AS(P.peel_f(GeneratorExpr::e(0), R.psi(GeneratorExpr::e(0))), std::invalid_argument);
  CHECK_THROWS_AS(P.peel_e(R.psi(GeneratorExpr::f(0)), GeneratorExpr::f(0)), std::invalid_argument);
}

TEST_CASE("pairing of products in A2 by both routes") {
  const Pairing P = symbolic_pairing("A2");
  const Realization& R = P.realization();
  const GeneratorExpr f12 = GeneratorExpr::f(0) * GeneratorExpr::f(1);
  const GeneratorExpr e12 = GeneratorExpr::e(0) * GeneratorExpr::e(1);
  const Coeff v1 = P.peel_f(f12, R.psi(e12));
  const Coeff v2 = P.peel_e(R.psi(f12), e12);
  CHECK(v1 == v2);
  CHECK(v1 == c(P, 0) * c(P, 1));
  CHECK(P(R.psi(f12), R.psi(e12)) == v1);
}

TEST_CASE("Gram matrices: hand values") {
  {
    const Pairing P = symbolic_pairing("A1");
    Weight b(1);
    b[0] = 1;
    const auto g = P.gram_matrix(b, PairingRoute::peel_f);
    REQUIRE(g.rows() == 1);
    CHECK(g(0, 0) == c(P, 0));
    b[0] = 2;
    const auto g2 = P.gram_matrix(b, PairingRoute::peel_e);
    REQUIRE(g2.rows() == 1);
    // psi(e^2) = (1 + q) (E E)
    CHECK(g2(0, 0) == (1 + qc(P, 0, 0)) * c(P, 0) * c(P, 0));
  }
  {
    const Pairing P = symbolic_pairing("A2");
    const auto g = P.gram_matrix(weight_of({1, 1}), PairingRoute::peel_f);
    REQUIRE(g.rows() == 2);
    REQUIRE(g.cols() == 2);
    const Coeff cc = c(P, 0) * c(P, 1);
    CHECK(g(0, 0) == cc);
    CHECK(g(0, 1) == cc * qc(P, 1, 0));
    CHECK(g(1, 0) == cc * qc(P, 0, 1));
    CHECK(g(1, 1) == cc);
    CHECK(scalars::det(g) == cc * cc * (1 - qc(P, 0, 0).pow(-1)));
  }
}

TEST_CASE("graded dimensions match Kostant partition counts") {
  for (const std::string type : {"A1", "A2", "B2"}) {
    const Pairing P = symbolic_pairing(type);
    const auto roots = roots_of(type);
    for_each_beta(P.realization().rank(), 5, [&](const std::vector<long>& beta) {
      long h = 0;
      for (long b : beta) h += b;
      if (h == 0) return;
      INFO(type, " beta=", weight_of(beta).to_string());
      const std::size_t k = kostant(roots, beta);
      CHECK(P.graded_basis(Sign::plus, weight_of(beta)).elements.size() == k);
      CHECK(P.graded_basis(Sign::minus, weight_of(beta)).elements.size() == k);
    });
  }
}

TEST_CASE("Gram matrices agree across routes and are nondegenerate") {
  const std::vector<std::pair<std::string, long>> cases{{"A1", 4}, {"A2", 4}, {"B2", 3}};
  for (const auto& [type, max_h] : cases) {
    const Pairing P = symbolic_pairing(type);
    for_each_beta(P.realization().rank(), max_h + 1, [&](const std::vector<long>& beta) {
      long h = 0;
      for (long b : beta) h += b;
      if (h == 0) return;
      INFO(type, " beta=", weight_of(beta).to_string());
      const auto gf = P.gram_matrix(weight_of(beta), PairingRoute::peel_f);
      const auto ge = P.gram_matrix(weight_of(beta), PairingRoute::peel_e);
      CHECK(gf == ge);
      CHECK_FALSE(scalars::det(gf).is_zero());
    });
  }
}

TEST_CASE("weight orthogonality") {
  const Pairing P = symbolic_pairing("B2");
  const Realization& R = P.realization();
  const GeneratorExpr f = GeneratorExpr::f(0) * GeneratorExpr::f(1);
  CHECK(P.peel_f(f, R.psi(GeneratorExpr::e(0) * GeneratorExpr::e(0))) == Coeff(0));
  CHECK(P.peel_e(R.psi(f), GeneratorExpr::e(1) * GeneratorExpr::e(1)) == Coeff(0));
  CHECK(P.peel_f(f, R.psi(GeneratorExpr::e(0))) == Coeff(0));
}
