// One line per acceptance criterion. Exit status is 0 when the set of failing
// criteria equals the documented known failures (see README, "Known deviation").
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "qqsa/pairing.hpp"
#include "qqsa/repr.hpp"
#include "qqsa/scalars/qnumbers.hpp"
#include "qqsa/scalars/specialize.hpp"
#include "qqsa/suites.hpp"

using namespace qqsa;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
};

Algebra symbolic_algebra(const CartanDatum& d) {
  auto q = ParamMatrix::symbolic(d);
  Evaluator ev(q.names());
  return Algebra(std::make_shared<const Structure>(d, std::move(q), std::move(ev)));
}

suites::RunConfig config(const CartanDatum& d) {
  suites::RunConfig cfg;
  cfg.datum = d;
  return cfg;
}

std::string failures(const suites::Report& rep) {
  std::string out;
  for (const auto& r : rep.records) {
    if (r.status != suites::Status::pass) out += " [" + r.check + " " + r.inputs + ": " + r.detail + "]";
  }
  return out;
}

Outcome relations() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, CartanDatum>> data{
      {"A1", CartanDatum::of_type("A1")},
      {"A1xA1", CartanDatum({{2, 0}, {0, 2}}, {1, 1})},
      {"A2", CartanDatum::of_type("A2")},
      {"B2", CartanDatum::of_type("B2")},
      {"G2", CartanDatum::of_type("G2")}};
  Outcome o;
  std::size_t literal = 0, modj = 0;
  for (const auto& [name, d] : data) {
    auto cfg = config(d);
    cfg.bound = 4;
    const auto rep = suites::check_relations(cfg);
    for (const auto& r : rep.records) {
      const bool r5 = r.inputs.rfind("R5", 0) == 0;
      if (r.status != suites::Status::pass || (!r5 && r.detail != "zero")) {
        o.pass = false;
        o.summary += " " + name + " " + r.inputs + ": " + r.detail;
      }
      (r.detail == "zero" ? literal : modj) += 1;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 300) o.pass = false;
  std::ostringstream s;
  s << literal << " residuals literally zero, " << modj << " R5 residuals certified in J with bound 4, " << secs
    << " s";
  o.summary = s.str() + o.summary;
  return o;
}

Outcome closed_forms() {
  std::size_t total = 0, printed = 0, corrected = 0, vanish = 0, tops = 0;
  for (const char* type : {"A2", "B2", "G2"}) {
    const auto d = CartanDatum::of_type(type);
    const Realization R(symbolic_algebra(d));
    for (std::size_t i = 0; i < d.rank(); ++i) {
      for (std::size_t j = 0; j < d.rank(); ++j) {
        if (i == j) continue;
        const auto top = static_cast<std::size_t>(1 - d.a(i, j));
        for (const Side side : {Side::left, Side::right}) {
          for (std::size_t s = 0; s <= top; ++s) {
            const Element direct = R.ad_power(side, i, j, s);
            ++total;
            printed += direct == R.ad_closed_form(side, i, j, s, ProductStart::printed) ? 1 : 0;
            corrected += direct == R.ad_closed_form(side, i, j, s, ProductStart::corrected) ? 1 : 0;
          }
          ++tops;
          vanish += R.ad_power(side, i, j, top).is_zero() ? 1 : 0;
        }
      }
    }
  }
  std::ostringstream s;
  s << "printed form (product from k=1) matches " << printed << "/" << total
    << " instances; with the product from k=0 it matches " << corrected << "/" << total
    << "; ad-powers vanish at s=1-a_ij in " << vanish << "/" << tops;
  return {printed == total && vanish == tops, s.str()};
}

Outcome hopf() {
  Outcome o;
  std::size_t records = 0;
  for (const char* type : {"A2", "B2", "G2"}) {
    auto cfg = config(CartanDatum::of_type(type));
    cfg.max_length = 4;
    const auto rep = suites::check_hopf(cfg);
    records += rep.records.size();
    if (!rep.passed()) {
      o.pass = false;
      o.summary += std::string(" ") + type + failures(rep);
    }
  }
  o.summary = "A2, B2, G2: coassociativity and counit on words <= 4, associativity on letter triples, bialgebra on "
              "letter pairs, antipode on words <= 3 (" +
              std::to_string(records) + " suites)" + o.summary;
  return o;
}

// Positive roots typed in by hand; alpha_1 is long in B2.
std::vector<std::vector<long>> hand_roots(const std::string& type) {
  if (type == "A2") return {{1, 0}, {0, 1}, {1, 1}};
  return {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
}

std::size_t kostant(const std::vector<std::vector<long>>& roots, std::vector<long> beta, std::size_t from = 0) {
  if (std::all_of(beta.begin(), beta.end(), [](long b) { return b == 0; })) return 1;
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

Outcome pairing() {
  Outcome o;
  std::size_t grams = 0;
  for (const auto& [type, h] : std::vector<std::pair<std::string, long>>{{"A2", 4}, {"B2", 3}}) {
    const auto d = CartanDatum::of_type(type);
    auto cfg = config(d);
    cfg.max_height = static_cast<std::size_t>(h);
    const auto rep = suites::pairing_gram(cfg);
    grams += rep.records.size() - 2;
    if (!rep.passed()) {
      o.pass = false;
      o.summary += " " + type + failures(rep);
    }
    const Pairing P{Realization(symbolic_algebra(d))};
    for (long ht = 1; ht <= h; ++ht) {
      for (const auto& beta : d.positive_cone_of_height(ht)) {
        std::vector<long> b;
        for (const auto& c : beta.coords()) b.push_back(c.numerator());
        const std::size_t want = kostant(hand_roots(type), b);
        if (P.graded_basis(Sign::plus, beta).elements.size() != want ||
            P.graded_basis(Sign::minus, beta).elements.size() != want) {
          o.pass = false;
          o.summary += " " + type + " " + beta.to_string() + ": dimension differs from Kostant count";
        }
      }
    }
  }
  o.summary = "base values on generators; " + std::to_string(grams) +
              " Gram matrices nondegenerate, equal by both recursions, sized by the Kostant count" + o.summary;
  return o;
}

std::size_t weyl_by_hand(const std::string& type, const std::vector<long>& l) {
  if (type == "A1") return static_cast<std::size_t>(l[0] + 1);
  if (type == "A2") return static_cast<std::size_t>((l[0] + 1) * (l[1] + 1) * (l[0] + l[1] + 2) / 2);
  return static_cast<std::size_t>((l[0] + 1) * (l[1] + 1) * (l[0] + l[1] + 2) * (2 * l[0] + l[1] + 3) / 6);
}

bool module_relations(const HighestWeightModule& M, const ModuleAction& act) {
  for (const auto& id : M.realization().relations()) {
    for (const auto& form : M.realization().relation_forms(id)) {
      if (!M.evaluate(act, form).is_zero()) return false;
    }
  }
  return true;
}

Outcome modules() {
  std::vector<std::pair<std::string, std::vector<long>>> cases;
  for (long m = 0; m <= 5; ++m) cases.push_back({"A1", {m}});
  cases.push_back({"A2", {1, 0}});
  cases.push_back({"A2", {1, 1}});
  cases.push_back({"B2", {1, 0}});
  Outcome o;
  std::string dims;
  for (const auto& [type, labels] : cases) {
    const HighestWeightModule M(ModuleSetup::symbolic(CartanDatum::of_type(type), labels));
    const std::size_t dim = M.table().dimension();
    dims += " " + type + "(" + std::to_string(labels[0]) + (labels.size() > 1 ? "," + std::to_string(labels[1]) : "") +
            ")=" + std::to_string(dim);
    bool ok = M.table().closed && dim == weyl_by_hand(type, labels);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const auto t = static_cast<std::size_t>(1 + labels[i]);
      ok = ok && M.nilpotency(i, t + 1) == std::optional<std::size_t>(t);
    }
    const auto act = M.action(RaisingRoute::recursion);
    ok = ok && module_relations(M, act);
    if (type == "B2" || (type == "A1" && labels[0] <= 3) || labels == std::vector<long>{1, 0}) {
      const auto red = M.action(RaisingRoute::reduction);
      for (std::size_t i = 0; i < red.e.size(); ++i) ok = ok && red.e[i] == act.e[i];
    }
    if (!ok) {
      o.pass = false;
      o.summary += " [" + type + " failed]";
    }
  }
  o.summary = "dims" + dims + " equal the Weyl formula; nilpotency thresholds 1+<lambda,alpha_i^vee>; R1-R7 hold as "
              "matrices; raising matrices agree by reduction and recursion where both are computed" + o.summary;
  return o;
}

Outcome root_of_unity() {
  const auto d = CartanDatum::of_type("A1");
  auto q = ParamMatrix::one_parameter(d);
  Evaluator ev(q.names(), scalars::Assignment{{0, scalars::RootPower{5, 1}}});
  const Algebra A(std::make_shared<const Structure>(d, std::move(q), std::move(ev), std::nullopt,
                                                    std::vector<std::uint32_t>{5, 5}));
  const auto& G = A.structure().group();
  const Element e = A.letter(Letter::E(0));
  const Element fk = A.letter(Letter::F(0), G.Kp(0));
  bool ok = A.structure().evaluator().field() != nullptr;
  ok = ok && A.power(e, 5).is_zero() && !A.power(e, 4).is_zero();
  ok = ok && A.power(fk, 5).is_zero() && !A.power(fk, 4).is_zero();
  ok = ok && G.order() == 25;
  std::string dims;
  for (long m = 0; m <= 3; ++m) {
    ok = ok && alcove_check(d, d.weight_from_labels({m}), 5);
    const HighestWeightModule M(root_of_unity_setup(d, {m}, 5));
    dims += " " + std::to_string(M.table().dimension());
    ok = ok && M.table().dimension() == static_cast<std::size_t>(m + 1);
    ok = ok && module_relations(M, M.action(RaisingRoute::recursion));
  }
  const bool flagged = !alcove_check(d, d.weight_from_labels({4}), 5);
  ok = ok && flagged;
  return {ok, "over Q(zeta_5): E^5 = (FK')^5 = 0 with 4th powers nonzero; grading group order " +
                  std::to_string(G.order()) + "; alcove modules m=0..3 have dims" + dims +
                  (flagged ? "; m=4 flagged outside the alcove" : "; m=4 NOT flagged")};
}

Outcome twist() {
  Outcome o;
  std::size_t n = 0;
  for (const char* type : {"A2", "B2"}) {
    const auto rep = suites::twist(config(CartanDatum::of_type(type)));
    n += rep.records.size();
    if (!rep.passed()) {
      o.pass = false;
      o.summary += std::string(" ") + type + failures(rep);
    }
  }
  o.summary = "A2, B2 to the one-parameter matrix: R'1-R'7 (R'5 mod J), sigma(K_i,K'_i)=1, twisted characters, "
              "Phi intertwining on generator pairs (" +
              std::to_string(n) + " records)" + o.summary;
  return o;
}

scalars::LaurentPoly random_poly(std::mt19937& rng, int nvars, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms), ex(-2, 2), co(-3, 3);
  std::vector<scalars::LaurentPoly::Term> terms;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<scalars::Monomial::Entry> e;
    for (int v = 0; v < nvars; ++v) e.emplace_back(v, Exponent(ex(rng)));
    const int c = co(rng);
    terms.push_back({scalars::Monomial(e), mpq_class(c == 0 ? 1 : c)});
  }
  auto p = scalars::LaurentPoly::from_terms(terms);
  return p.is_zero() ? scalars::LaurentPoly(1) : p;
}

Outcome scalar_kernel() {
  using scalars::Scalar;
  bool ok = true;
  const Coeff v = Scalar::variable(0, Exponent(1));
  for (long n = 1; n <= 12; ++n) {
    for (long k = 1; k < n; ++k) {
      ok = ok && scalars::q_binomial(n, k, v) ==
                     scalars::q_binomial(n - 1, k - 1, v) + v.pow(k) * scalars::q_binomial(n - 1, k, v);
    }
  }
  std::mt19937 rng(20241);
  std::size_t cases = 0;
  for (; cases < 1000 && ok; ++cases) {
    const Scalar a(random_poly(rng, 2, 3), random_poly(rng, 2, 2));
    const Scalar b(random_poly(rng, 2, 3), random_poly(rng, 2, 2));
    const Scalar c(random_poly(rng, 2, 3), random_poly(rng, 2, 2));
    ok = ok && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
         a + b == b + a && a * b == b * a && (a - a).is_zero() && a * a.inverse() == Scalar(1);
  }
  const scalars::Assignment rat{{0, mpq_class(2)}, {1, mpq_class(-3, 5)}};
  const scalars::Assignment root{{0, scalars::RootPower{7, 2}}, {1, scalars::RootPower{7, 5}}};
  std::size_t homs = 0;
  for (int i = 0; i < 300; ++i) {
    const Scalar a(random_poly(rng, 2, 3), random_poly(rng, 2, 2));
    const Scalar b(random_poly(rng, 2, 3), random_poly(rng, 2, 2));
    for (const auto* asg : {&rat, &root}) {
      try {
        const Coeff sa = scalars::specialize(a, *asg), sb = scalars::specialize(b, *asg);
        ok = ok && scalars::specialize(a * b, *asg) == sa * sb && scalars::specialize(a + b, *asg) == sa + sb;
        ++homs;
      } catch (const scalars::DivisionByZero&) {
      }
    }
  }
  return {ok, "q-binomial Pascal recurrence for n <= 12; field axioms on " + std::to_string(cases) +
                  " seeded random triples; specialization respects + and * on " + std::to_string(homs) + " pairs"};
}

}  // namespace

int main() {
  const std::set<int> known_failures{2};
  const std::vector<std::function<Outcome()>> criteria{relations, closed_forms, hopf,   pairing,
                                                      modules,   root_of_unity, twist, scalar_kernel};
  std::set<int> failed;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k + 1);
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) failed.insert(id);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary
              << (!o.pass && known_failures.contains(id) ? " (known deviation)" : "") << std::endl;
  }
  return failed == known_failures ? 0 : 1;
}
