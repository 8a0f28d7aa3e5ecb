#include <random>

#include "doctest.h"
#include "qqsa/jideal.hpp"
#include "qqsa/twist.hpp"

using namespace qqsa;

namespace {

Algebra generic_algebra(const std::string& type) {
  const auto d = CartanDatum::of_type(type);
  auto q = ParamMatrix::twist_generic(d);
  Evaluator ev(q.names());
  return Algebra(std::make_shared<const Structure>(d, std::move(q), std::move(ev)));
}

Coeff qh(const Twist& T, std::size_t i, std::size_t j) { return T.algebra().structure().eval(T.qhat().q(i, j)); }

Element random_word(const Algebra& A, std::mt19937& rng, std::size_t max_len) {
  const auto letters = A.structure().letters();
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> ex(-1, 1);
  Word w;
  for (auto k = len(rng); k > 0; --k) w.letters.push_back(letters[pick(rng)]);
  for (std::size_t h = 0; h < A.structure().group().generator_count(); ++h) w.tail[h] = ex(rng);
  return Element::word(w);
}

}  // namespace

TEST_CASE("twisted action reproduces the hatted characters") {
  for (const char* type : {"A2", "B2", "G2"}) {
    const Twist T(generic_algebra(type), ParamMatrix::one_parameter(CartanDatum::of_type(type)));
    const auto& G = T.algebra().structure().group();
    const std::size_t n = T.algebra().structure().rank();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(T.twisted_action(G.K(i), Letter::E(j)) == qh(T, i, j));
        CHECK(T.twisted_action(G.Kp(i), Letter::E(j)) == qh(T, j, i).inverse());
        CHECK(T.twisted_action(G.K(i), Letter::F(j)) == qh(T, i, j).inverse());
        CHECK(T.twisted_action(G.Kp(i), Letter::F(j)) == qh(T, j, i));
        CHECK(T.twisted_action(G.K(i), Letter::Xi(j)) == Coeff(1));
        CHECK(T.twisted_action(G.Kp(i), Letter::Xi(j)) == Coeff(1));
      }
    }
  }
}

TEST_CASE("trivial twist") {
  const Algebra A = generic_algebra("A2");
  const Twist T(A, A.structure().params());
  CHECK(T.sigma().is_trivial());
  std::mt19937 rng(7);
  for (int k = 0; k < 10; ++k) {
    const Element x = random_word(A, rng, 2);
    const Element y = random_word(A, rng, 2);
    CHECK(T.product(x, y) == A.product(x, y));
    CHECK(T.phi(x) == x);
  }
}

TEST_CASE("twisted product on group-likes and generators") {
  const Algebra A = generic_algebra("A2");
  const Twist T(A, ParamMatrix::one_parameter(CartanDatum::of_type("A2")));
  const auto& G = A.structure().group();
  const Element K = A.group_like(G.K(0));
  const Element Kp = A.group_like(G.Kp(1));
  CHECK(T.product(K, Kp) == A.group_like(G.K(0) * G.Kp(1)));
  // omega_i o e_j = q-hat_ij e_j o omega_i
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const Element w = A.group_like(G.K(i));
      const Element e = A.letter(Letter::E(j));
      CHECK(T.product(w, e) == T.product(e, w).scaled(qh(T, i, j)));
    }
  }
}

TEST_CASE("gauge hypothesis is enforced") {
  const auto d = CartanDatum::of_type("A2");
  const Algebra A = generic_algebra("A2");
  // q-hat with q-hat_11 != q_11 violates the twist condition
  std::vector<Monomial> bad;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) bad.push_back(Monomial::variable(0, Exponent(4 * d.a(i, j))));
  }
  CHECK_THROWS_AS(Twist(A, ParamMatrix::custom(d, bad, {"q"})), std::invalid_argument);
}

TEST_CASE("twisted relations hold for the one-parameter target") {
  for (const char* type : {"A2", "B2"}) {
    const auto d = CartanDatum::of_type(type);
    const Twist T(generic_algebra(type), ParamMatrix::one_parameter(d));
    const Realization R = T.realization();
    const JReducer J(T.algebra());
    for (const auto& id : R.relations()) {
      INFO(type, " ", id.to_string());
      for (const auto& r : R.residuals(id)) {
        if (id.tag == RelationTag::R5 && id.i == id.j) {
          const auto red = J.reduce(r, 2);
          CHECK(red.status == JStatus::zero);
        } else {
          CHECK(r.is_zero());
        }
      }
    }
    // the untwisted product with hatted constants does not satisfy R'3
    const Realization plain(T.algebra(), [&](const Element& x, const Element& y) { return T.algebra().product(x, y); },
                            T.qhat());
    CHECK_FALSE(plain.residuals({RelationTag::R3, 0, 1})[0].is_zero());
  }
}

TEST_CASE("twisted product is associative") {
  for (const char* type : {"A2", "B2"}) {
    const Algebra A = generic_algebra(type);
    const Twist T(A, ParamMatrix::one_parameter(CartanDatum::of_type(type)));
    std::mt19937 rng(11);
    for (int k = 0; k < 30; ++k) {
      const Element x = random_word(A, rng, 2);
      const Element y = random_word(A, rng, 2);
      const Element z = random_word(A, rng, 1);
      CHECK(T.product(T.product(x, y), z) == T.product(x, T.product(y, z)));
    }
  }
}

TEST_CASE("phi: examples, coalgebra map, intertwiner") {
  const Algebra A = generic_algebra("A2");
  const Twist T(A, ParamMatrix::one_parameter(CartanDatum::of_type("A2")));
  const auto& G = A.structure().group();
  CHECK(T.phi(A.group_like(G.K(0) * G.Kp(1))) == A.group_like(G.K(0) * G.Kp(1)));
  const GroupElement k = G.K(1) * G.Kp(0, -1);
  CHECK(T.phi(A.letter(Letter::E(0), k)) == A.letter(Letter::E(0), k).scaled(T.sigma(G.K(0), k.inverse())));
  // E_1 K_2 (x) E_2: the first slot carries K_2
  const Element w = Element::word(Word{{Letter::E(0), Letter::E(1)}, {}});
  CHECK(T.phi(w) == w.scaled(T.sigma(G.K(0), G.K(1, -1))));
  CHECK_FALSE(T.sigma(G.K(0), G.K(1, -1)) == Coeff(1));

  std::mt19937 rng(5);
  for (int n = 0; n < 30; ++n) {
    const Element x = random_word(A, rng, 3);
    const Element y = random_word(A, rng, 2);
    CHECK(T.phi_inverse(T.phi(x)) == x);
    const Tensor lhs = A.coproduct(T.phi(x));
    Tensor rhs;
    const Tensor dx = A.coproduct(x);
    for (const auto& [kk, c] : dx.terms()) {
      const Coeff s = T.phi(Element::word(kk[0])).terms().begin()->second *
                      T.phi(Element::word(kk[1])).terms().begin()->second;
      rhs.add(kk, c * s);
    }
    CHECK(lhs == rhs);
    CHECK(T.phi(T.product(x, y)) == T.hatted().product(T.phi(x), T.phi(y)));
  }
}

TEST_CASE("alpha twist consistency on generator pairs") {
  for (const char* type : {"A2", "B2"}) {
    const Algebra A = generic_algebra(type);
    const Twist T(A, ParamMatrix::one_parameter(CartanDatum::of_type(type)));
    const auto& G = A.structure().group();
    const std::size_t n = A.structure().rank();
    const std::vector<GroupElement> tails{{}, G.K(0), G.Kp(1, -1), G.K(1) * G.Kp(0, 2)};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (const auto& ka : tails) {
          for (const auto& kb : tails) {
            CHECK(T.alpha_via_phi(Letter::E(i), ka, Letter::F(j), kb) ==
                  T.alpha_convolution(Letter::E(i), ka, Letter::F(j), kb));
          }
        }
      }
    }
  }
}
