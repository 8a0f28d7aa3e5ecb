#include "qqsa/scalars/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qqsa::scalars {

std::string var_name(const VarNames& names, VarIndex v) {
  if (v < names.size()) return names[v];
  return "x" + std::to_string(v);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().first == e.first) {
      entries_.back().second += e.second;
    } else {
      entries_.push_back(e);
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.second.numerator() == 0; });
}

Monomial Monomial::variable(VarIndex v, Exponent e) {
  Monomial m;
  if (e.numerator() != 0) m.entries_.emplace_back(v, e);
  return m;
}

Exponent Monomial::exponent(VarIndex v) const {
  for (const auto& [var, e] : entries_) {
    if (var == v) return e;
    if (var > v) break;
  }
  return Exponent(0);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      r.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      r.entries_.push_back(*b++);
    } else {
      Exponent s = a->second + b->second;
      if (s.numerator() != 0) r.entries_.emplace_back(a->first, s);
      ++a;
      ++b;
    }
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& e : r.entries_) e.second = -e.second;
  return r;
}

Monomial Monomial::pow(const Exponent& k) const {
  if (k.numerator() == 0) return {};
  Monomial r = *this;
  for (auto& e : r.entries_) e.second *= k;
  return r;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto x = a.entries_.begin();
  auto y = b.entries_.begin();
  while (x != a.entries_.end() || y != b.entries_.end()) {
    if (y == b.entries_.end() || (x != a.entries_.end() && x->first < y->first)) {
      if (x->second.numerator() < 0) r.entries_.push_back(*x);
      ++x;
    } else if (x == a.entries_.end() || y->first < x->first) {
      if (y->second.numerator() < 0) r.entries_.push_back(*y);
      ++y;
    } else {
      Exponent m = std::min(x->second, y->second);
      if (m.numerator() != 0) r.entries_.emplace_back(x->first, m);
      ++x;
      ++y;
    }
  }
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  // exponent(v) - o.exponent(v) >= 0 for every v in either support
  auto x = entries_.begin();
  auto y = o.entries_.begin();
  while (x != entries_.end() || y != o.entries_.end()) {
    if (y == o.entries_.end() || (x != entries_.end() && x->first < y->first)) {
      if (x->second.numerator() < 0) return false;
      ++x;
    } else if (x == entries_.end() || y->first < x->first) {
      if (y->second.numerator() > 0) return false;
      ++y;
    } else {
      if (x->second < y->second) return false;
      ++x;
      ++y;
    }
  }
  return true;
}

int compare(const Monomial& a, const Monomial& b) {
  auto x = a.entries_.begin();
  auto y = b.entries_.begin();
  while (x != a.entries_.end() || y != b.entries_.end()) {
    if (y == b.entries_.end() || (x != a.entries_.end() && x->first < y->first)) {
      return x->second.numerator() > 0 ? 1 : -1;
    }
    if (x == a.entries_.end() || y->first < x->first) {
      return y->second.numerator() > 0 ? -1 : 1;
    }
    if (x->second != y->second) return x->second > y->second ? 1 : -1;
    ++x;
    ++y;
  }
  return 0;
}

std::string Monomial::to_string(const VarNames& names) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : entries_) {
    if (!first) os << '*';
    first = false;
    os << var_name(names, v);
    if (e != Exponent(1)) {
      os << '^';
      if (e.denominator() == 1) {
        os << e.numerator();
      } else {
        os << '(' << e.numerator() << '/' << e.denominator() << ')';
      }
    }
  }
  return os.str();
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [v, e] : entries_) {
    h ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b9 + (h << 6) + (h >> 2);
    h ^= std::hash<std::int64_t>{}(e.numerator() * 1000003 + e.denominator()) + (h << 6) + (h >> 2);
  }
  return h;
}

// ------------------------------------------------------------- LaurentPoly

namespace {

bool term_greater(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
  return compare(a.mono, b.mono) > 0;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({Monomial{}, mpq_class(c)});
}

LaurentPoly::LaurentPoly(const mpq_class& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

LaurentPoly::LaurentPoly(Monomial m, const mpq_class& c) {
  if (c != 0) terms_.push_back({std::move(m), c});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

mpq_class LaurentPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("LaurentPoly is not constant");
  return terms_[0].coeff;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    int c;
    if (a == terms_.end()) {
      c = -1;
    } else if (b == o.terms_.end()) {
      c = 1;
    } else {
      c = compare(a->mono, b->mono);
    }
    if (c > 0) {
      r.terms_.push_back(*a++);
    } else if (c < 0) {
      r.terms_.push_back(*b++);
    } else {
      mpq_class s = a->coeff + b->coeff;
      if (s != 0) r.terms_.push_back({a->mono, s});
      ++a;
      ++b;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.terms_.size() == 1) return scaled(o.terms_[0].mono, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.scaled(terms_[0].mono, terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return from_terms(std::move(prod));
}

LaurentPoly LaurentPoly::scaled(const Monomial& m, const mpq_class& c) const {
  if (c == 0) return {};
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves the lexicographic order
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Monomial LaurentPoly::min_monomial() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) m = Monomial::min(m, t.mono);
  return m;
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide by zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  if (b.terms_.size() == 1) {
    return a.scaled(b.terms_[0].mono.inverse(), 1 / b.terms_[0].coeff);
  }
  // Shift both into the polynomial ring, then run single-divisor division.
  const Monomial shift_a = a.min_monomial().inverse();
  const Monomial shift_b = b.min_monomial().inverse();
  LaurentPoly rem = a.scaled(shift_a, 1);
  const LaurentPoly div = b.scaled(shift_b, 1);
  const Term& lt = div.leading();
  const mpq_class lc_inv = 1 / lt.coeff;
  const Monomial lm_inv = lt.mono.inverse();
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& r = rem.leading();
    if (!r.mono.divisible_by(lt.mono)) return std::nullopt;
    Term t{r.mono * lm_inv, r.coeff * lc_inv};
    rem = rem - div.scaled(t.mono, t.coeff);
    quot.push_back(std::move(t));
  }
  // a * shift_a = q * (b * shift_b)
  LaurentPoly q = from_terms(std::move(quot));
  return q.scaled(shift_b * shift_a.inverse(), 1);
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string LaurentPoly::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coeff;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (t.mono.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      os << t.mono.to_string(names);
    }
  }
  return os.str();
}

}  // namespace qqsa::scalars
