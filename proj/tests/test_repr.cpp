#include <random>

#include "doctest.h"
#include "qqsa/repr.hpp"

using namespace qqsa;

namespace {

struct Case {
  std::string type;
  std::vector<long> labels;
};

// Weyl dimension formula written out per type; for B2 the first label sits on the long root.
std::size_t weyl_dimension(const Case& c) {
  const auto& l = c.labels;
  if (c.type == "A1") return static_cast<std::size_t>(l[0] + 1);
  if (c.type == "A2") return static_cast<std::size_t>((l[0] + 1) * (l[1] + 1) * (l[0] + l[1] + 2) / 2);
  if (c.type == "B2") {
    return static_cast<std::size_t>((l[0] + 1) * (l[1] + 1) * (l[0] + l[1] + 2) * (2 * l[0] + l[1] + 3) / 6);
  }
  return 0;
}

std::vector<Case> generic_cases() {
  std::vector<Case> out;
  for (long m = 0; m <= 5; ++m) out.push_back({"A1", {m}});
  out.push_back({"A2", {1, 0}});
  out.push_back({"A2", {0, 1}});
  out.push_back({"A2", {1, 1}});
  out.push_back({"B2", {1, 0}});
  out.push_back({"B2", {0, 1}});
  return out;
}

HighestWeightModule build(const Case& c) {
  return HighestWeightModule(ModuleSetup::symbolic(CartanDatum::of_type(c.type), c.labels));
}

Coeff q_of(const HighestWeightModule& M, const Weight& a, const Weight& b) {
  const auto& s = M.algebra().structure();
  return s.eval(s.params().pairing(a, b));
}

std::string name(const Case& c) {
  std::string s = c.type + "(";
  for (std::size_t i = 0; i < c.labels.size(); ++i) s += (i ? "," : "") + std::to_string(c.labels[i]);
  return s + ")";
}

}  // namespace

TEST_CASE("highest weight axioms") {
  for (const auto& c : generic_cases()) {
    const auto M = build(c);
    const std::size_t n = M.algebra().structure().rank();
    const Element v = M.highest();
    INFO(name(c));
    for (std::size_t i = 0; i < n; ++i) {
      const Weight a = Weight::simple_root(n, i);
      CHECK(M.adjoint_act(GeneratorExpr::e(i), v).is_zero());
      CHECK(M.adjoint_act(GeneratorExpr::omega(i), v) == v.scaled(q_of(M, a, M.lambda())));
      CHECK(M.adjoint_act(GeneratorExpr::omega_p(i), v) == v.scaled(q_of(M, M.lambda(), a).inverse()));
      const Element fv = Element::word(Word{{Letter::F(i), Letter::V()}, {}},
                                       q_of(M, M.lambda(), a).inverse() - q_of(M, a, M.lambda()));
      CHECK(M.adjoint_act(GeneratorExpr::f(i), v) == fv);
    }
  }
}

TEST_CASE("module dimensions match the Weyl formula") {
  for (const auto& c : generic_cases()) {
    const auto M = build(c);
    INFO(name(c));
    CHECK(M.table().closed);
    CHECK(M.table().dimension() == weyl_dimension(c));
    if (c.type == "A1") {
      for (const auto& [mu, b] : M.table().spaces) CHECK(b.size() == 1);
    }
  }
  const auto d = CartanDatum::of_type("A2");
  const auto M = build({"A2", {1, 0}});
  const Weight l = M.lambda();
  const Weight a1 = Weight::simple_root(2, 0);
  const Weight a2 = Weight::simple_root(2, 1);
  std::vector<Weight> weights;
  for (const auto& [mu, b] : M.table().spaces) weights.push_back(mu);
  CHECK(weights == std::vector<Weight>{l - a1 - a2, l - a1, l});
}

TEST_CASE("weight table invariants") {
  for (const auto& c : generic_cases()) {
    const auto M = build(c);
    const auto& s = M.algebra().structure();
    const std::size_t n = s.rank();
    INFO(name(c));
    for (const auto& [mu, basis] : M.table().spaces) {
      CHECK((M.lambda() - mu).in_positive_cone());
      for (const auto& b : basis) {
        CHECK(M.algebra().weight(b) == std::optional<Weight>(mu));
        for (const auto& [w, coeff] : b.terms()) {
          std::size_t vs = 0;
          for (const Letter l : w.letters) {
            vs += l.kind == LetterKind::V ? 1 : 0;
            CHECK(l.kind != LetterKind::Xi);
          }
          CHECK(vs == 1);
        }
        for (std::size_t i = 0; i < n; ++i) {
          const Weight a = Weight::simple_root(n, i);
          CHECK(M.adjoint_act(GeneratorExpr::omega(i), b) == b.scaled(q_of(M, a, mu)));
          CHECK(M.omega_eigenvalue(i, mu) == q_of(M, a, mu));
        }
      }
    }
  }
}

TEST_CASE("lowering closed form and nilpotency thresholds") {
  for (const auto& c : generic_cases()) {
    const auto M = build(c);
    const std::size_t n = M.algebra().structure().rank();
    INFO(name(c));
    for (std::size_t i = 0; i < n; ++i) {
      const auto threshold = static_cast<std::size_t>(1 + c.labels[i]);
      CHECK(M.nilpotency(i, threshold + 3) == std::optional<std::size_t>(threshold));
      Element w = M.highest();
      for (std::size_t r = 1; r <= threshold; ++r) {
        w = M.adjoint_act(GeneratorExpr::f(i), w);
        std::vector<Letter> ls(r, Letter::F(i));
        ls.push_back(Letter::V());
        CHECK(w == Element::word(Word{ls, {}}, M.lowering_coefficient(i, r)));
      }
      CHECK(M.lowering_coefficient(i, threshold).is_zero());
      CHECK_FALSE(M.lowering_coefficient(i, threshold - 1).is_zero());
    }
  }
}

TEST_CASE("A1 two-dimensional module by hand") {
  const auto M = build({"A1", {1}});
  const Weight a = Weight::simple_root(1, 0);
  const Coeff c = M.algebra().structure().contraction(0);
  const Element efv = M.adjoint_act(GeneratorExpr::e(0) * GeneratorExpr::f(0), M.highest());
  const auto coords = M.coordinates(efv, M.lambda());
  REQUIRE(coords.size() == 1);
  CHECK(coords[0] == c * (q_of(M, a, M.lambda()) - q_of(M, M.lambda(), a).inverse()));
  CHECK(M.raising_matrix(0, M.lambda()).rows() == 0);
  const auto down = M.lowering_matrix(0, M.lambda());
  REQUIRE(down.rows() == 1);
  CHECK_FALSE(down(0, 0).is_zero());
}

TEST_CASE("relations hold as matrix identities") {
  for (const auto& c : generic_cases()) {
    const auto M = build(c);
    const auto act = M.action(RaisingRoute::recursion);
    INFO(name(c));
    for (const auto& id : M.realization().relations()) {
      for (const auto& form : M.realization().relation_forms(id)) {
        INFO(id.to_string());
        CHECK(M.evaluate(act, form).is_zero());
      }
    }
    for (std::size_t i = 0; i < M.algebra().structure().rank(); ++i) {
      for (std::size_t k = 0; k < M.table().dimension(); ++k) {
        for (std::size_t r = 0; r < M.table().dimension(); ++r) {
          if (r != k) CHECK(act.omega[i](r, k).is_zero());
        }
      }
    }
  }
}

TEST_CASE("raising by reduction agrees with raising by recursion") {
  for (const Case& c : std::vector<Case>{{"A1", {1}}, {"A1", {2}}, {"A1", {3}}, {"A2", {1, 0}}, {"B2", {0, 1}}}) {
    const auto M = build(c);
    const auto red = M.action(RaisingRoute::reduction);
    const auto rec = M.action(RaisingRoute::recursion);
    INFO(name(c));
    for (std::size_t i = 0; i < red.e.size(); ++i) CHECK(red.e[i] == rec.e[i]);
  }
}

TEST_CASE("undecided reductions surface the bound") {
  auto setup = ModuleSetup::symbolic(CartanDatum::of_type("A1"), {3});
  setup.bound = 1;
  const HighestWeightModule M(std::move(setup));
  try {
    (void)M.matrix(GenAtom{GenKind::e, 0});
    FAIL("expected a reduction error");
  } catch (const ReductionError& e) {
    CHECK(e.bound() == 1);
  }
  CHECK_THROWS_AS(HighestWeightModule(ModuleSetup::symbolic(CartanDatum::of_type("A1"), {-1})),
                  std::invalid_argument);
}

TEST_CASE("coinvariant projection") {
  const auto M = build({"A2", {1, 0}});
  const Algebra& A = M.algebra();
  const auto& G = A.structure().group();
  const GroupElement h = G.K(0) * G.Kp(1, -1) * G.Klambda();
  CHECK(M.coinvariant_project(A.group_like(h)) == A.one());
  CHECK(M.coinvariant_project(A.letter(Letter::F(0))) == Element());
  const Element v = M.highest();
  CHECK(M.coinvariant_project(v) == v);
  CHECK(M.is_coinvariant(v));

  std::mt19937 rng(20261016);
  const auto letters = A.structure().letters();
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> ex(-1, 1);
  for (int t = 0; t < 25; ++t) {
    Word w;
    for (int k = 0; k < 3; ++k) w.letters.push_back(letters[pick(rng)]);
    for (std::size_t g = 0; g < G.generator_count(); ++g) w.tail[g] = ex(rng);
    const Element a = Element::word(w);
    const Element r = M.coinvariant_project(a);
    CHECK(M.is_coinvariant(r));
    CHECK(M.coinvariant_project(r) == r);
  }
}

TEST_CASE("root of unity modules and the alcove") {
  const auto d = CartanDatum::of_type("A1");
  for (long m = 0; m <= 4; ++m) {
    INFO("m=", m);
    CHECK(alcove_check(d, d.weight_from_labels({m}), 5) == (m + 1 < 5));
  }
  for (long m = 0; m <= 3; ++m) {
    INFO("m=", m);
    const HighestWeightModule M(root_of_unity_setup(d, {m}, 5));
    CHECK(M.algebra().structure().evaluator().field() != nullptr);
    CHECK(M.table().closed);
    CHECK(M.table().dimension() == static_cast<std::size_t>(m + 1));
    const auto act = M.action(RaisingRoute::recursion);
    for (const auto& id : M.realization().relations()) {
      for (const auto& form : M.realization().relation_forms(id)) CHECK(M.evaluate(act, form).is_zero());
    }
  }
  CHECK_THROWS_AS(alcove_check(d, d.weight_from_labels({1}), 4), std::invalid_argument);
  CHECK_THROWS_AS(alcove_check(CartanDatum::of_type("G2"), Weight(2), 9), std::invalid_argument);
  CHECK(alcove_check(CartanDatum::of_type("G2"), Weight(2), 7));
  CHECK_FALSE(alcove_check(CartanDatum::of_type("G2"), Weight(2), 5));
  const auto b2 = CartanDatum::of_type("B2");
  // lambda + rho = (2,1) pairs to 5 with the coroot of alpha_1 + alpha_2
  CHECK_FALSE(alcove_check(b2, b2.weight_from_labels({1, 0}), 5));
  CHECK(alcove_check(b2, b2.weight_from_labels({1, 0}), 7));
  CHECK(alcove_check(b2, b2.weight_from_labels({0, 0}), 5));
}
