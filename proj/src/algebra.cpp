#include "qqsa/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace qqsa {

std::string Letter::to_string() const {
  switch (kind) {
    case LetterKind::E:
      return "E" + std::to_string(index + 1);
    case LetterKind::F:
      return "F" + std::to_string(index + 1);
    case LetterKind::Xi:
      return "xi" + std::to_string(index + 1);
    case LetterKind::V:
      return "v";
  }
  return "?";
}

// --------------------------------------------------------------- Structure

Structure::Structure(CartanDatum datum, ParamMatrix q, Evaluator eval, std::optional<Weight> lambda,
                     std::vector<std::uint32_t> moduli)
    : datum_(std::move(datum)),
      q_(std::move(q)),
      eval_(std::move(eval)),
      lambda_(std::move(lambda)),
      group_(datum_.rank(), lambda_.has_value(), std::move(moduli)) {
  const std::size_t n = rank();
  if (q_.rank() != n) throw std::invalid_argument("parameter matrix rank does not match the datum");
  if (lambda_ && lambda_->rank() != n) throw std::invalid_argument("lambda has the wrong rank");
  const std::size_t gens = group_.generator_count();

  std::vector<Monomial> q_alpha_lambda(n), q_lambda_alpha(n);
  Monomial q_lambda_lambda;
  if (lambda_) {
    for (std::size_t i = 0; i < n; ++i) {
      const Weight a = Weight::simple_root(n, i);
      q_alpha_lambda[i] = q_.pairing(a, *lambda_);
      q_lambda_alpha[i] = q_.pairing(*lambda_, a);
    }
    q_lambda_lambda = q_.pairing(*lambda_, *lambda_);
  }

  for (const Letter a : letters()) {
    std::vector<Monomial> chi(gens);
    GroupElement g;
    const std::size_t j = a.index;
    switch (a.kind) {
      case LetterKind::E:
        g = group_.K(j);
        for (std::size_t i = 0; i < n; ++i) {
          chi[group_.k_index(i)] = q_.q(i, j);
          chi[group_.kp_index(i)] = q_.q(j, i).inverse();
        }
        if (lambda_) chi[group_.lambda_index()] = q_alpha_lambda[j].inverse();
        break;
      case LetterKind::F:
        g = group_.Kp(j, -1);
        for (std::size_t i = 0; i < n; ++i) {
          chi[group_.k_index(i)] = q_.q(i, j).inverse();
          chi[group_.kp_index(i)] = q_.q(j, i);
        }
        if (lambda_) chi[group_.lambda_index()] = q_alpha_lambda[j];
        break;
      case LetterKind::Xi:
        g = group_.canonical(group_.K(j) * group_.Kp(j, -1));
        break;
      case LetterKind::V:
        g = group_.Klambda();
        for (std::size_t i = 0; i < n; ++i) {
          chi[group_.k_index(i)] = q_alpha_lambda[i];
          chi[group_.kp_index(i)] = q_lambda_alpha[i].inverse();
        }
        chi[group_.lambda_index()] = q_lambda_lambda;
        break;
    }
    gradings_.push_back(g);
    actions_.emplace_back(std::move(chi));
  }

  for (std::size_t k = 0; k < n; ++k) {
    const Coeff qkk = eval_(q_.q(k, k));
    contraction_.push_back(qkk / (qkk - 1));
  }
}

std::vector<Letter> Structure::letters() const {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(Letter::E(i));
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(Letter::F(i));
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(Letter::Xi(i));
  if (lambda_) out.push_back(Letter::V());
  return out;
}

std::size_t Structure::letter_slot(Letter a) const {
  if (a.kind == LetterKind::V) {
    if (!lambda_) throw std::invalid_argument("structure has no v_lambda letter");
    return 3 * rank();
  }
  if (a.index >= rank()) throw std::out_of_range("letter index out of range");
  return static_cast<std::size_t>(a.kind) * rank() + a.index;
}

GroupElement Structure::grading(Letter a) const { return gradings_[letter_slot(a)]; }

const Character& Structure::action(Letter a) const { return actions_[letter_slot(a)]; }

Weight Structure::weight(Letter a) const {
  switch (a.kind) {
    case LetterKind::E:
      return Weight::simple_root(rank(), a.index);
    case LetterKind::F:
      return -Weight::simple_root(rank(), a.index);
    case LetterKind::Xi:
      return Weight(rank());
    case LetterKind::V:
      return *lambda_;
  }
  return Weight(rank());
}

// ----------------------------------------------------------------- Element

Element Element::word(Word w, Coeff c) {
  Element e;
  e.add(w, c);
  return e;
}

Element Element::group_like(GroupElement g, Coeff c) { return word(Word{{}, g}, std::move(c)); }

Coeff Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Coeff(0) : it->second;
}

std::size_t Element::max_length() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.length());
  return m;
}

void Element::add(const Word& w, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator-() const { return scaled(-1); }

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::scaled(const Coeff& c) const {
  Element r;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.add(w, x * c);
  return r;
}

bool operator==(const Element& a, const Element& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto x = a.terms_.begin();
  for (auto y = b.terms_.begin(); y != b.terms_.end(); ++x, ++y) {
    if (!(x->first == y->first) || x->second != y->second) return false;
  }
  return true;
}

// ------------------------------------------------------------------ Tensor

Tensor Tensor::outer(const Element& x, const Element& y) {
  Tensor t;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) t.add({a, b}, ca * cb);
  }
  return t;
}

void Tensor::add(const Key& k, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Tensor Tensor::operator+(const Tensor& o) const {
  Tensor r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, c);
  return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
  Tensor r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, -c);
  return r;
}

bool operator==(const Tensor& a, const Tensor& b) { return (a - b).is_zero(); }

// ----------------------------------------------------------------- Algebra

Element Algebra::letter(Letter a, GroupElement tail) const {
  return Element::word(Word{{a}, s_->group().canonical(tail)});
}

GroupElement Algebra::slot_tail(const Word& w, std::size_t j) const {
  GroupElement g = w.tail;
  for (std::size_t k = j + 1; k < w.length(); ++k) g = g * s_->grading(w.letters[k]);
  return s_->group().canonical(g);
}

GroupElement Algebra::total_grading(const Word& w) const {
  GroupElement g = w.tail;
  for (const Letter a : w.letters) g = g * s_->grading(a);
  return s_->group().canonical(g);
}

Weight Algebra::weight(const Word& w) const {
  Weight mu(s_->rank());
  for (const Letter a : w.letters) mu = mu + s_->weight(a);
  return mu;
}

std::optional<Weight> Algebra::weight(const Element& x) const {
  std::optional<Weight> mu;
  for (const auto& [w, c] : x.terms()) {
    const Weight v = weight(w);
    if (mu && !(*mu == v)) return std::nullopt;
    mu = v;
  }
  return mu ? mu : Weight(s_->rank());
}

Tensor Algebra::coproduct(const Element& x) const {
  Tensor t;
  const auto& group = s_->group();
  for (const auto& [w, c] : x.terms()) {
    const std::size_t n = w.length();
    // suffix[j] = grading(a_{j+1} .. a_n) tail
    std::vector<GroupElement> suffix(n + 1);
    suffix[n] = w.tail;
    for (std::size_t j = n; j-- > 0;) suffix[j] = group.canonical(s_->grading(w.letters[j]) * suffix[j + 1]);
    for (std::size_t j = 0; j <= n; ++j) {
      Word left{{w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(j)}, suffix[j]};
      Word right{{w.letters.begin() + static_cast<std::ptrdiff_t>(j), w.letters.end()}, w.tail};
      t.add({std::move(left), std::move(right)}, c);
    }
  }
  return t;
}

namespace {

// Paths through the (len x) x (len y) grid; each path is one nonzero term of
// the product formula. Coefficients are gathered per (word, contraction counts)
// so that the evaluator runs once per output term.
struct PathKey {
  std::vector<Letter> letters;
  std::vector<std::uint8_t> contractions;
  friend auto operator<=>(const PathKey&, const PathKey&) = default;
};

class PathEnumerator {
 public:
  PathEnumerator(const Structure& s, const Word& x, const Word& y) : s_(s), x_(x), y_(y) {
    const auto& group = s.group();
    const std::size_t n = x.length();
    gx_.resize(n + 1);
    gx_[n] = x.tail;
    for (std::size_t i = n; i-- > 0;) gx_[i] = group.canonical(s.grading(x.letters[i]) * gx_[i + 1]);
    counts_.assign(s.rank(), 0);
  }

  std::map<PathKey, std::vector<scalars::LaurentPoly::Term>> run() {
    walk(0, 0, Monomial{});
    return std::move(out_);
  }

 private:
  void walk(std::size_t i, std::size_t j, const Monomial& m) {
    const std::size_t n = x_.length();
    const std::size_t k = y_.length();
    if (i == n && j == k) {
      out_[PathKey{letters_, counts_}].push_back({m, 1});
      return;
    }
    if (i < n) {
      letters_.push_back(x_.letters[i]);
      walk(i + 1, j, m);
      letters_.pop_back();
    }
    if (j < k) {
      const Letter b = y_.letters[j];
      letters_.push_back(b);
      walk(i, j + 1, m * s_.action(b)(gx_[i]));
      letters_.pop_back();
    }
    if (i < n && j < k) {
      const Letter a = x_.letters[i];
      const Letter b = y_.letters[j];
      if (a.kind == LetterKind::E && b.kind == LetterKind::F && a.index == b.index) {
        letters_.push_back(Letter::Xi(a.index));
        ++counts_[a.index];
        walk(i + 1, j + 1, m * s_.action(b)(gx_[i + 1]));
        --counts_[a.index];
        letters_.pop_back();
      }
    }
  }

  const Structure& s_;
  const Word& x_;
  const Word& y_;
  std::vector<GroupElement> gx_;
  std::vector<Letter> letters_;
  std::vector<std::uint8_t> counts_;
  std::map<PathKey, std::vector<scalars::LaurentPoly::Term>> out_;
};

}  // namespace

Element Algebra::product_words(const Word& x, const Word& y) const {
  Element r;
  const GroupElement tail = s_->group().canonical(x.tail * y.tail);
  for (auto& [key, terms] : PathEnumerator(*s_, x, y).run()) {
    const scalars::Scalar sum(scalars::LaurentPoly::from_terms(std::move(terms)));
    Coeff c = s_->evaluator()(sum);
    for (std::size_t k = 0; k < key.contractions.size(); ++k) {
      if (key.contractions[k] != 0) c *= s_->contraction(k).pow(key.contractions[k]);
    }
    r.add(Word{key.letters, tail}, c);
  }
  return r;
}

Element Algebra::product(const Element& x, const Element& y, Exec exec) const {
  std::vector<std::pair<const Word*, const Coeff*>> xs;
  for (const auto& [w, c] : x.terms()) xs.emplace_back(&w, &c);

  auto chunk = [&](std::size_t lo, std::size_t hi) {
    Element part;
    for (std::size_t t = lo; t < hi; ++t) {
      for (const auto& [w, c] : y.terms()) part += product_words(*xs[t].first, w).scaled(*xs[t].second * c);
    }
    return part;
  };

  if (exec == Exec::serial || xs.size() < 2) return chunk(0, xs.size());

  // Fixed chunking and in-order merge keep the result independent of scheduling.
  const std::size_t chunks = std::min<std::size_t>(xs.size(), 64);
  std::vector<Element> parts(chunks);
  const auto total = static_cast<std::ptrdiff_t>(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t c = 0; c < total; ++c) {
    const auto u = static_cast<std::size_t>(c);
    parts[u] = chunk(u * xs.size() / chunks, (u + 1) * xs.size() / chunks);
  }
  Element r;
  for (const auto& p : parts) r += p;
  return r;
}

Coeff Algebra::counit(const Element& x) const {
  Coeff c = 0;
  for (const auto& [w, v] : x.terms()) {
    if (w.length() == 0) c += v;
  }
  return c;
}

Element Algebra::antipode_word(const std::vector<Letter>& letters,
                               std::map<std::vector<Letter>, Element>& memo) const {
  if (auto it = memo.find(letters); it != memo.end()) return it->second;
  // S(w;1) = -sum_{j<n} S(a_1..a_j; g_j) * (a_{j+1}..a_n; 1), S(u;g) = g^{-1} * S(u;1)
  const std::size_t n = letters.size();
  Element r;
  GroupElement g;
  for (std::size_t j = n; j-- > 0;) {
    g = s_->group().canonical(s_->grading(letters[j]) * g);
    const std::vector<Letter> head(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(j));
    const Element s_head = j == 0 ? one() : antipode_word(head, memo);
    const Element left = product(group_like(g.inverse()), s_head, Exec::serial);
    const Element right =
        Element::word(Word{{letters.begin() + static_cast<std::ptrdiff_t>(j), letters.end()}, GroupElement{}});
    r += product(left, right, Exec::serial);
  }
  r = -r;
  memo.emplace(letters, r);
  return r;
}

Element Algebra::antipode(const Element& x) const {
  std::map<std::vector<Letter>, Element> memo;
  Element r;
  for (const auto& [w, c] : x.terms()) {
    const Element inv = group_like(w.tail.inverse());
    if (w.length() == 0) {
      r += inv.scaled(c);
    } else {
      r += product(inv, antipode_word(w.letters, memo), Exec::serial).scaled(c);
    }
  }
  return r;
}

Element Algebra::power(const Element& x, std::size_t r, Exec exec) const {
  Element p = one();
  for (std::size_t k = 0; k < r; ++k) p = product(p, x, exec);
  return p;
}

Tensor Algebra::product(const Tensor& x, const Tensor& y) const {
  Tensor t;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      if (a.size() != b.size()) throw std::invalid_argument("tensor arity mismatch");
      // expand the factorwise products into a sum of keys
      std::vector<std::pair<Tensor::Key, Coeff>> acc{{{}, ca * cb}};
      for (std::size_t f = 0; f < a.size(); ++f) {
        const Element pf = product_words(a[f], b[f]);
        std::vector<std::pair<Tensor::Key, Coeff>> next;
        for (const auto& [key, c] : acc) {
          for (const auto& [w, v] : pf.terms()) {
            Tensor::Key k2 = key;
            k2.push_back(w);
            next.emplace_back(std::move(k2), c * v);
          }
        }
        acc = std::move(next);
      }
      for (const auto& [key, c] : acc) t.add(key, c);
    }
  }
  return t;
}

Tensor Algebra::coproduct_at(const Tensor& t, std::size_t at) const {
  Tensor r;
  for (const auto& [key, c] : t.terms()) {
    const Tensor d = coproduct(Element::word(key[at]));
    for (const auto& [pair, v] : d.terms()) {
      Tensor::Key k2(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(at));
      k2.push_back(pair[0]);
      k2.push_back(pair[1]);
      k2.insert(k2.end(), key.begin() + static_cast<std::ptrdiff_t>(at) + 1, key.end());
      r.add(k2, c * v);
    }
  }
  return r;
}

Element Algebra::multiply(const Tensor& t) const {
  Element r;
  for (const auto& [key, c] : t.terms()) {
    if (key.size() != 2) throw std::invalid_argument("multiply expects a 2-tensor");
    r += product_words(key[0], key[1]).scaled(c);
  }
  return r;
}

Element Algebra::act_left(const GroupElement& g, const Element& x) const {
  Element r;
  for (const auto& [w, c] : x.terms()) {
    Monomial m;
    for (const Letter a : w.letters) m = m * s_->action(a)(g);
    r.add(Word{w.letters, s_->group().canonical(g * w.tail)}, c * s_->eval(m));
  }
  return r;
}

Element Algebra::act_right(const Element& x, const GroupElement& g) const {
  Element r;
  for (const auto& [w, c] : x.terms()) r.add(Word{w.letters, s_->group().canonical(w.tail * g)}, c);
  return r;
}

Tensor Algebra::coact_left(const Element& x) const {
  Tensor t;
  for (const auto& [w, c] : x.terms()) t.add({Word{{}, total_grading(w)}, w}, c);
  return t;
}

Tensor Algebra::coact_right(const Element& x) const {
  Tensor t;
  for (const auto& [w, c] : x.terms()) t.add({w, Word{{}, w.tail}}, c);
  return t;
}

Element Algebra::alpha(Letter a, const GroupElement& ka, Letter b, const GroupElement& kb) const {
  if (a.kind != LetterKind::E || b.kind != LetterKind::F || a.index != b.index) return {};
  const Coeff c = s_->contraction(a.index) * s_->eval(s_->action(b)(ka));
  return Element::word(Word{{Letter::Xi(a.index)}, s_->group().canonical(ka * kb)}, c);
}

std::string Algebra::to_string(const Word& w) const {
  const auto& group = s_->group();
  if (w.length() == 0) return group.to_string(w.tail);
  std::string out;
  for (std::size_t j = 0; j < w.length(); ++j) {
    if (j > 0) out += " (x) ";
    out += w.letters[j].to_string();
    const GroupElement g = slot_tail(w, j);
    if (!g.is_identity()) out += group.to_string(g);
  }
  return out;
}

std::string Algebra::to_string(const Element& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    const std::string cs = c.to_string(s_->evaluator().names());
    if (cs != "1") os << '(' << cs << ")*";
    os << '[' << to_string(w) << ']';
  }
  return os.str();
}

}  // namespace qqsa
