#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qqsa/cartan.hpp"
#include "qqsa/grouplike.hpp"
#include "qqsa/scalars/matrix.hpp"

namespace qqsa {

using scalars::Exec;

enum class LetterKind : std::uint8_t { E, F, Xi, V };

/// A basis letter of W (or W' = W + K v_lambda). `index` is the simple root.
struct Letter {
  LetterKind kind;
  std::uint8_t index;

  static Letter E(std::size_t i) { return {LetterKind::E, static_cast<std::uint8_t>(i)}; }
  static Letter F(std::size_t i) { return {LetterKind::F, static_cast<std::uint8_t>(i)}; }
  static Letter Xi(std::size_t i) { return {LetterKind::Xi, static_cast<std::uint8_t>(i)}; }
  static Letter V() { return {LetterKind::V, 0}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
  std::string to_string() const;
};

/// Alphabet, grading group and action characters for one parameter matrix.
class Structure {
 public:
  /// lambda adds the letter v_lambda and the generator K_lambda.
  /// moduli (one per group generator) make the grading group finite.
  Structure(CartanDatum datum, ParamMatrix q, Evaluator eval, std::optional<Weight> lambda = {},
            std::vector<std::uint32_t> moduli = {});

  const CartanDatum& datum() const noexcept { return datum_; }
  const ParamMatrix& params() const noexcept { return q_; }
  const Evaluator& evaluator() const noexcept { return eval_; }
  const GradingGroup& group() const noexcept { return group_; }
  std::size_t rank() const noexcept { return datum_.rank(); }
  const std::optional<Weight>& lambda() const noexcept { return lambda_; }

  /// All letters, E's then F's then xi's (then v).
  std::vector<Letter> letters() const;
  GroupElement grading(Letter a) const;
  const Character& action(Letter a) const;
  Weight weight(Letter a) const;

  /// c_k = q_kk / (q_kk - 1), the constant of the contraction E_k (x) F_k -> xi_k.
  const Coeff& contraction(std::size_t k) const { return contraction_[k]; }
  Coeff eval(const Monomial& m) const { return eval_(m); }

 private:
  std::size_t letter_slot(Letter a) const;

  CartanDatum datum_;
  ParamMatrix q_;
  Evaluator eval_;
  std::optional<Weight> lambda_;
  GradingGroup group_;
  std::vector<GroupElement> gradings_;
  std::vector<Character> actions_;
  std::vector<Coeff> contraction_;
};

using StructurePtr = std::shared_ptr<const Structure>;

/// Basis element of the cotensor coalgebra: slot j is a_j (grading(a_{j+1}..a_n) tail).
struct Word {
  std::vector<Letter> letters;
  GroupElement tail;

  std::size_t length() const noexcept { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Finitely supported linear combination of words; zero coefficients are dropped.
class Element {
 public:
  using Support = std::map<Word, Coeff>;

  Element() = default;
  static Element word(Word w, Coeff c = 1);
  static Element group_like(GroupElement g, Coeff c = 1);

  const Support& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Coeff coefficient(const Word& w) const;
  std::size_t max_length() const;

  void add(const Word& w, const Coeff& c);
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element scaled(const Coeff& c) const;
  Element& operator+=(const Element& o);

  friend bool operator==(const Element& a, const Element& b);

 private:
  Support terms_;
};

/// Formal sum of k-fold tensors of words.
class Tensor {
 public:
  using Key = std::vector<Word>;
  using Support = std::map<Key, Coeff>;

  Tensor() = default;
  /// x (x) y
  static Tensor outer(const Element& x, const Element& y);

  const Support& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add(const Key& k, const Coeff& c);
  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  friend bool operator==(const Tensor& a, const Tensor& b);

 private:
  Support terms_;
};

/// The quasi-symmetric Hopf algebra on a Structure.
class Algebra {
 public:
  explicit Algebra(StructurePtr s) : s_(std::move(s)) {}

  const Structure& structure() const noexcept { return *s_; }
  StructurePtr structure_ptr() const noexcept { return s_; }

  Element one() const { return Element::group_like(GroupElement{}); }
  Element letter(Letter a, GroupElement tail = {}) const;
  Element group_like(GroupElement g) const { return Element::group_like(s_->group().canonical(g)); }

  /// Group element sitting in slot j (0-based) after letter j.
  GroupElement slot_tail(const Word& w, std::size_t j) const;
  /// grading(a_1 .. a_n) tail: the left coaction group-like.
  GroupElement total_grading(const Word& w) const;
  Weight weight(const Word& w) const;
  /// Q-weight if every term has the same weight.
  std::optional<Weight> weight(const Element& x) const;

  Tensor coproduct(const Element& x) const;
  Element product(const Element& x, const Element& y, Exec exec = Exec::parallel) const;
  Element product_serial(const Element& x, const Element& y) const { return product(x, y, Exec::serial); }
  Coeff counit(const Element& x) const;
  Element antipode(const Element& x) const;
  Element power(const Element& x, std::size_t r, Exec exec = Exec::parallel) const;

  /// Componentwise product of tensors of equal arity.
  Tensor product(const Tensor& x, const Tensor& y) const;
  /// Apply a map to one tensor factor (position `at`), expanding the result.
  Tensor coproduct_at(const Tensor& t, std::size_t at) const;
  /// Multiply the factors of a 2-tensor back together.
  Element multiply(const Tensor& t) const;

  Element act_left(const GroupElement& g, const Element& x) const;
  Element act_right(const Element& x, const GroupElement& g) const;
  /// Left coaction x -> grading(x) (x) x, right coaction x -> x (x) tail.
  Tensor coact_left(const Element& x) const;
  Tensor coact_right(const Element& x) const;

  /// The contraction of two one-letter slots aK_a (x) bK_b; zero unless (E_k, F_k).
  Element alpha(Letter a, const GroupElement& ka, Letter b, const GroupElement& kb) const;

  std::string to_string(const Word& w) const;
  std::string to_string(const Element& x) const;

 private:
  Element product_words(const Word& x, const Word& y) const;
  Element antipode_word(const std::vector<Letter>& letters, std::map<std::vector<Letter>, Element>& memo) const;

  StructurePtr s_;
};

}  // namespace qqsa
