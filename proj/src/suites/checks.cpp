#include <chrono>
#include <exception>
#include <functional>
#include <random>
#include <sstream>

#include "qqsa/jideal.hpp"
#include "qqsa/pairing.hpp"
#include "qqsa/repr.hpp"
#include "qqsa/scalars/qnumbers.hpp"
#include "qqsa/suites.hpp"
#include "qqsa/twist.hpp"

namespace qqsa::suites {

namespace {

using Job = std::function<std::vector<Record>()>;

/// Runs independent jobs on the OpenMP pool; records keep job order.
Report run_jobs(const std::vector<Job>& jobs) {
  std::vector<std::vector<Record>> out(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < jobs.size(); ++k) out[k] = jobs[k]();
  Report rep;
  for (auto& rs : out) rep.records.insert(rep.records.end(), rs.begin(), rs.end());
  return rep;
}

/// Times `body`; a thrown ReductionError becomes undecided, anything else a failure.
Record timed(std::string check, std::string inputs, const std::function<void(Record&)>& body) {
  Record r{std::move(check), std::move(inputs), Status::pass, {}, 0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const ReductionError& e) {
    r.status = Status::undecided;
    r.detail = std::string(e.what()) + " (bound " + std::to_string(e.bound()) + ")";
  } catch (const std::exception& e) {
    r.status = Status::fail;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void expect(Record& r, bool ok, const std::string& pass, const std::string& fail) {
  r.status = ok ? Status::pass : Status::fail;
  r.detail = ok ? pass : fail;
}

ParamMatrix params_of(const RunConfig& cfg) {
  switch (cfg.params) {
    case ParamSource::symbolic:
    case ParamSource::numeric:
      return ParamMatrix::symbolic(cfg.datum);
    case ParamSource::one_parameter:
    case ParamSource::root_of_unity:
      return ParamMatrix::one_parameter(cfg.datum);
  }
  return ParamMatrix::symbolic(cfg.datum);
}

Evaluator evaluator_of(const RunConfig& cfg, const ParamMatrix& q) {
  if (cfg.params == ParamSource::numeric) {
    scalars::Assignment asg;
    for (const auto& [name, v] : cfg.values) asg[*q.var(name)] = v;
    return Evaluator(q.names(), asg);
  }
  if (cfg.params == ParamSource::root_of_unity) {
    return Evaluator(q.names(), scalars::Assignment{{0, scalars::RootPower{cfg.ell, 1}}});
  }
  return Evaluator(q.names());
}

std::vector<std::uint32_t> moduli_of(const RunConfig& cfg, std::size_t generators) {
  if (cfg.params != ParamSource::root_of_unity) return {};
  return std::vector<std::uint32_t>(generators, cfg.ell);
}

Algebra algebra_of(const RunConfig& cfg) {
  auto q = params_of(cfg);
  auto ev = evaluator_of(cfg, q);
  return Algebra(std::make_shared<const Structure>(cfg.datum, std::move(q), std::move(ev), std::nullopt,
                                                   moduli_of(cfg, 2 * cfg.datum.rank())));
}

std::string labels_string(const std::vector<long>& labels) {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + std::to_string(labels[i]);
  return s;
}

std::vector<Word> all_words(const std::vector<Letter>& alphabet, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (const Letter a : alphabet) {
        Word u = w;
        u.letters.push_back(a);
        next.push_back(std::move(u));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Word random_word(std::mt19937_64& rng, const Algebra& A, std::size_t max_len) {
  const auto letters = A.structure().letters();
  const auto& G = A.structure().group();
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> ex(-1, 1);
  Word w;
  for (std::size_t k = len(rng); k > 0; --k) w.letters.push_back(letters[pick(rng)]);
  for (std::size_t g = 0; g < G.generator_count(); ++g) w.tail[g] = ex(rng);
  w.tail = G.canonical(w.tail);
  return w;
}

/// First element of `items` failing `ok`, rendered; empty when all pass.
template <class T>
std::optional<std::string> first_failure(const std::vector<T>& items, const std::function<bool(const T&)>& ok,
                                         const std::function<std::string(const T&)>& show) {
  for (const auto& x : items) {
    if (!ok(x)) return show(x);
  }
  return std::nullopt;
}

Record relation_record(const Realization& R, const JReducer& J, const RelationId& id, std::size_t bound,
                       const std::string& prefix = "") {
  return timed(prefix + "relation", id.to_string(), [&](Record& rec) {
    std::size_t certified = 0;
    for (const auto& r : R.residuals(id, Exec::serial)) {
      if (r.is_zero()) continue;
      if (id.tag != RelationTag::R5) {
        rec.status = Status::fail;
        rec.detail = "nonzero residual with " + std::to_string(r.size()) + " terms";
        return;
      }
      const auto red = J.reduce(r, bound);
      if (red.status == JStatus::undecided) {
        rec.status = Status::undecided;
        rec.detail = "J reduction " + red.status_name();
        return;
      }
      if (red.status == JStatus::nonzero || !(J.expand(red.combination) == r)) {
        rec.status = Status::fail;
        rec.detail = "residual not in J";
        return;
      }
      certified += red.combination.size();
    }
    rec.detail = certified == 0 ? "zero" : "zero mod J, certificate of " + std::to_string(certified) + " terms";
  });
}

}  // namespace

mpq_class weyl_dimension(const CartanDatum& d, const Weight& lambda) {
  const Weight rho = d.rho();
  mpq_class out = 1;
  for (const auto& a : d.positive_roots()) {
    const Exponent num = d.form(lambda + rho, a);
    const Exponent den = d.form(rho, a);
    out *= mpq_class(mpz_class(static_cast<long>(num.numerator())), mpz_class(static_cast<long>(num.denominator())));
    out /= mpq_class(mpz_class(static_cast<long>(den.numerator())), mpz_class(static_cast<long>(den.denominator())));
  }
  out.canonicalize();
  return out;
}

Report check_relations(const RunConfig& cfg) {
  const Algebra A = algebra_of(cfg);
  const Realization R(A);
  const JReducer J(A);
  std::vector<Job> jobs;
  for (const auto& id : R.relations()) {
    jobs.push_back([&, id] { return std::vector<Record>{relation_record(R, J, id, cfg.bound)}; });
  }
  return run_jobs(jobs);
}

Report check_hopf(const RunConfig& cfg) {
  const Algebra A = algebra_of(cfg);
  const auto letters = A.structure().letters();
  const auto& G = A.structure().group();
  const auto words = all_words(letters, cfg.max_length);
  const std::string len = "words<=" + std::to_string(cfg.max_length);
  auto show = [&](const Word& w) { return "fails on " + A.to_string(w); };

  std::vector<Job> jobs;
  jobs.push_back([&] {
    return std::vector<Record>{timed("coassociativity", len, [&](Record& r) {
      const auto bad = first_failure<Word>(
          words,
          [&](const Word& w) {
            const Tensor d = A.coproduct(Element::word(w));
            return A.coproduct_at(d, 0) == A.coproduct_at(d, 1);
          },
          show);
      expect(r, !bad, std::to_string(words.size()) + " words", bad.value_or(""));
    })};
  });
  jobs.push_back([&] {
    return std::vector<Record>{timed("counit", len, [&](Record& r) {
      const auto bad = first_failure<Word>(
          words,
          [&](const Word& w) {
            const Tensor d = A.coproduct(Element::word(w));
            Element left, right;
            for (const auto& [k, c] : d.terms()) {
              left += Element::word(k[1], c * A.counit(Element::word(k[0])));
              right += Element::word(k[0], c * A.counit(Element::word(k[1])));
            }
            return left == Element::word(w) && right == Element::word(w);
          },
          show);
      expect(r, !bad, std::to_string(words.size()) + " words", bad.value_or(""));
    })};
  });
  jobs.push_back([&] {
    return std::vector<Record>{timed("associativity", "letter triples", [&](Record& r) {
      std::size_t n = 0;
      for (const Letter a : letters) {
        for (const Letter b : letters) {
          for (const Letter c : letters) {
            const Element x = A.letter(a), y = A.letter(b, G.Kp(0)), z = A.letter(c);
            ++n;
            if (!(A.product(A.product(x, y, Exec::serial), z, Exec::serial) ==
                  A.product(x, A.product(y, z, Exec::serial), Exec::serial))) {
              expect(r, false, "", "fails on " + a.to_string() + " " + b.to_string() + " " + c.to_string());
              return;
            }
          }
        }
      }
      r.detail = std::to_string(n) + " triples";
    })};
  });
  jobs.push_back([&] {
    return std::vector<Record>{timed("associativity", "random, seed " + std::to_string(cfg.seed), [&](Record& r) {
      std::mt19937_64 rng(cfg.seed);
      for (std::size_t t = 0; t < cfg.samples; ++t) {
        const Element x = Element::word(random_word(rng, A, 2));
        const Element y = Element::word(random_word(rng, A, 2));
        const Element z = Element::word(random_word(rng, A, 2));
        if (!(A.product(A.product(x, y, Exec::serial), z, Exec::serial) ==
              A.product(x, A.product(y, z, Exec::serial), Exec::serial))) {
          expect(r, false, "", "fails at sample " + std::to_string(t));
          return;
        }
      }
      r.detail = std::to_string(cfg.samples) + " samples";
    })};
  });
  jobs.push_back([&] {
    return std::vector<Record>{timed("bialgebra", "letter pairs", [&](Record& r) {
      for (const Letter a : letters) {
        for (const Letter b : letters) {
          const Element x = A.letter(a), y = A.letter(b);
          if (!(A.coproduct(A.product(x, y, Exec::serial)) == A.product(A.coproduct(x), A.coproduct(y)))) {
            expect(r, false, "", "fails on " + a.to_string() + " " + b.to_string());
            return;
          }
        }
      }
      r.detail = std::to_string(letters.size() * letters.size()) + " pairs";
    })};
  });
  jobs.push_back([&] {
    const std::size_t alen = cfg.max_length > 1 ? cfg.max_length - 1 : 1;
    return std::vector<Record>{timed("antipode", "words<=" + std::to_string(alen), [&](Record& r) {
      const auto short_words = all_words(letters, alen);
      const auto bad = first_failure<Word>(
          short_words,
          [&](const Word& w) {
            const Element x = Element::word(w);
            Tensor sl, sr;
            const Tensor d = A.coproduct(x);
            for (const auto& [k, c] : d.terms()) {
              const Element s0 = A.antipode(Element::word(k[0]));
              const Element s1 = A.antipode(Element::word(k[1]));
              for (const auto& [u, v] : s0.terms()) sl.add({u, k[1]}, c * v);
              for (const auto& [u, v] : s1.terms()) sr.add({k[0], u}, c * v);
            }
            const Element unit = A.one().scaled(A.counit(x));
            return A.multiply(sl) == unit && A.multiply(sr) == unit;
          },
          show);
      expect(r, !bad, std::to_string(short_words.size()) + " words", bad.value_or(""));
    })};
  });
  return run_jobs(jobs);
}

Report check_closed_forms(const RunConfig& cfg) {
  const Algebra A = algebra_of(cfg);
  const Realization R(A);
  const auto& d = cfg.datum;
  const auto& G = A.structure().group();
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    for (std::size_t j = 0; j < d.rank(); ++j) {
      if (i == j || d.a(i, j) == 0) continue;
      for (const Side side : {Side::left, Side::right}) {
        jobs.push_back([&, i, j, side] {
          std::vector<Record> out;
          const auto top = static_cast<std::size_t>(1 - d.a(i, j));
          const std::string which = side == Side::left ? "ad_l(E)" : "ad_r(FK')";
          for (std::size_t s = 0; s <= top; ++s) {
            const std::string in =
                which + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) + " s=" + std::to_string(s);
            const Element direct = R.ad_power(side, i, j, s);
            out.push_back(timed("closed form (printed)", in, [&](Record& r) {
              expect(r, direct == R.ad_closed_form(side, i, j, s, ProductStart::printed), "equal",
                     "differs from the computed ad-power");
            }));
            out.push_back(timed("closed form (corrected)", in, [&](Record& r) {
              expect(r, direct == R.ad_closed_form(side, i, j, s, ProductStart::corrected), "equal",
                     "differs from the computed ad-power");
            }));
          }
          out.push_back(timed("serre", which + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1),
                              [&](Record& r) { expect(r, R.ad_power(side, i, j, top).is_zero(), "zero", "nonzero"); }));
          return out;
        });
      }
    }
  }
  for (std::size_t i = 0; i < d.rank(); ++i) {
    jobs.push_back([&, i] {
      std::vector<Record> out;
      const Coeff qii = A.structure().eval(A.structure().params().q(i, i));
      for (std::size_t r = 1; r <= cfg.max_length; ++r) {
        const auto rl = static_cast<long>(r);
        const Coeff fact = scalars::q_factorial(rl, qii);
        const std::string in = "i=" + std::to_string(i + 1) + " r=" + std::to_string(r);
        out.push_back(timed("E power", in, [&](Record& rec) {
          const Element lhs = A.power(A.letter(Letter::E(i)), r, Exec::serial);
          const Element rhs = Element::word(Word{std::vector<Letter>(r, Letter::E(i)), {}}, fact);
          expect(rec, lhs == rhs, "(r)! E^r", "mismatch");
        }));
        out.push_back(timed("FK' power", in, [&](Record& rec) {
          const Element lhs = A.power(A.letter(Letter::F(i), G.Kp(i)), r, Exec::serial);
          const Element rhs =
              Element::word(Word{std::vector<Letter>(r, Letter::F(i)), G.canonical(G.Kp(i, static_cast<int>(r)))}, fact);
          expect(rec, lhs == rhs, "(r)! F^r K'^r", "mismatch");
        }));
      }
      return out;
    });
  }
  return run_jobs(jobs);
}

Report pairing_gram(const RunConfig& cfg) {
  const Pairing P{Realization(algebra_of(cfg))};
  const Realization& R = P.realization();
  const auto& s = R.algebra().structure();
  const std::size_t n = cfg.datum.rank();
  const auto roots = cfg.datum.positive_roots();

  Report rep;
  rep.records.push_back(timed("pairing base", "<f_i, e_j>", [&](Record& r) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Coeff qii = s.eval(s.params().q(i, i));
        const Coeff want = i == j ? qii / (Coeff(1) - qii) : Coeff(0);
        if (!(P(R.psi(GeneratorExpr::f(i)), R.psi(GeneratorExpr::e(j))) == want)) {
          expect(r, false, "", "mismatch at i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
          return;
        }
      }
    }
    r.detail = "delta_ij q_ii/(1-q_ii)";
  }));
  rep.records.push_back(timed("pairing base", "<omega'_i, omega_j>", [&](Record& r) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!(P(R.psi(GeneratorExpr::omega_p(i)), R.psi(GeneratorExpr::omega(j))) == s.eval(s.params().q(j, i)))) {
          expect(r, false, "", "mismatch at i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
          return;
        }
      }
    }
    r.detail = "q_ji";
  }));

  // Kostant partition count over the library's positive roots
  std::function<std::size_t(Weight, std::size_t)> kostant = [&](Weight beta, std::size_t from) -> std::size_t {
    if (beta.is_zero()) return 1;
    std::size_t count = 0;
    for (std::size_t k = from; k < roots.size(); ++k) {
      const Weight rest = beta - roots[k];
      if (rest.in_positive_cone()) count += kostant(rest, k);
    }
    return count;
  };

  std::vector<Job> jobs;
  for (long h = 1; h <= static_cast<long>(cfg.max_height); ++h) {
    for (const auto& beta : cfg.datum.positive_cone_of_height(h)) {
      jobs.push_back([&, beta] {
        return std::vector<Record>{timed("gram", beta.to_string(), [&](Record& r) {
          const auto gf = P.gram_matrix(beta, PairingRoute::peel_f);
          const auto ge = P.gram_matrix(beta, PairingRoute::peel_e);
          const std::size_t k = kostant(beta, 0);
          if (gf.rows() != k) {
            expect(r, false, "", "dimension " + std::to_string(gf.rows()) + ", Kostant count " + std::to_string(k));
          } else if (!(gf == ge)) {
            expect(r, false, "", "routes disagree");
          } else if (scalars::det(gf).is_zero()) {
            expect(r, false, "", "degenerate");
          } else {
            r.detail = "dim " + std::to_string(k) + ", det nonzero, routes agree";
          }
        })};
      });
    }
  }
  rep.append(run_jobs(jobs));
  return rep;
}

namespace {

ModuleSetup module_setup(const RunConfig& cfg, const std::vector<long>& labels) {
  if (cfg.params == ParamSource::root_of_unity) {
    auto s = root_of_unity_setup(cfg.datum, labels, cfg.ell);
    s.max_depth = cfg.depth;
    return s;
  }
  auto q = params_of(cfg);
  auto ev = evaluator_of(cfg, q);
  ModuleSetup s{cfg.datum, std::move(q), std::move(ev), cfg.datum.weight_from_labels(labels), {}};
  s.max_depth = cfg.depth;
  return s;
}

std::vector<Record> module_records(const RunConfig& cfg, const std::vector<long>& labels, const std::string& prefix) {
  const std::string in = "lambda=" + labels_string(labels);
  std::vector<Record> out;
  std::optional<HighestWeightModule> M;
  out.push_back(timed(prefix + "module dimension", in, [&](Record& r) {
    M.emplace(module_setup(cfg, labels));
    const mpq_class want = weyl_dimension(cfg.datum, M->lambda());
    const std::size_t dim = M->table().dimension();
    if (!M->table().closed) {
      expect(r, false, "", "closure not reached within depth " + std::to_string(cfg.depth));
      return;
    }
    expect(r, mpq_class(static_cast<unsigned long>(dim)) == want, "dim " + std::to_string(dim) + " (Weyl)",
           "dim " + std::to_string(dim) + ", Weyl " + want.get_str());
  }));
  if (!M) return out;
  out.push_back(timed(prefix + "module nilpotency", in, [&](Record& r) {
    for (std::size_t i = 0; i < cfg.datum.rank(); ++i) {
      const auto want = static_cast<std::size_t>(1 + labels[i]);
      const auto got = M->nilpotency(i, want + 1);
      if (got != want) {
        expect(r, false, "", "i=" + std::to_string(i + 1) + " threshold " + (got ? std::to_string(*got) : "none"));
        return;
      }
    }
    r.detail = "thresholds 1+<lambda,alpha_i^vee>";
  }));
  std::optional<ModuleAction> act;
  out.push_back(timed(prefix + "module relations", in, [&](Record& r) {
    act = M->action(RaisingRoute::recursion);
    std::size_t n = 0;
    for (const auto& id : M->realization().relations()) {
      for (const auto& form : M->realization().relation_forms(id)) {
        ++n;
        if (!M->evaluate(*act, form).is_zero()) {
          expect(r, false, "", id.to_string() + " nonzero");
          return;
        }
      }
    }
    r.detail = std::to_string(n) + " identities";
  }));
  if (cfg.cross_check && act) {
    out.push_back(timed(prefix + "module raising routes", in, [&](Record& r) {
      const auto red = M->action(RaisingRoute::reduction);
      bool same = true;
      for (std::size_t i = 0; i < red.e.size(); ++i) same = same && red.e[i] == act->e[i];
      expect(r, same, "reduction and recursion agree", "routes disagree");
    }));
  }
  return out;
}

}  // namespace

Report modules(const RunConfig& cfg) {
  std::vector<std::vector<long>> lambdas = cfg.lambdas;
  if (lambdas.empty()) {
    for (std::size_t i = 0; i < cfg.datum.rank(); ++i) {
      std::vector<long> l(cfg.datum.rank(), 0);
      l[i] = 1;
      lambdas.push_back(l);
    }
  }
  Report rep;
  for (const auto& l : lambdas) {
    if (!cfg.datum.is_dominant(cfg.datum.weight_from_labels(l))) {
      throw ConfigError("lambda=" + labels_string(l) + " is not dominant");
    }
  }
  std::vector<Job> jobs;
  for (const auto& l : lambdas) jobs.push_back([&, l] { return module_records(cfg, l, ""); });
  return run_jobs(jobs);
}

Report twist(const RunConfig& cfg) {
  auto q = ParamMatrix::twist_generic(cfg.datum);
  Evaluator ev(q.names());
  const Algebra A(std::make_shared<const Structure>(cfg.datum, std::move(q), std::move(ev)));
  const Twist T(A, ParamMatrix::one_parameter(cfg.datum));
  const Algebra& H = T.hatted();
  const auto& G = A.structure().group();
  const std::size_t n = cfg.datum.rank();
  const auto letters = A.structure().letters();

  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(G.K(i));
  for (std::size_t i = 0; i < n; ++i) gens.push_back(G.Kp(i));

  Report rep;
  rep.records.push_back(timed("twist gauge", "sigma(K_i, K'_i)", [&](Record& r) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(T.sigma(G.K(i), G.Kp(i)) == Coeff(1))) {
        expect(r, false, "", "i=" + std::to_string(i + 1));
        return;
      }
    }
    r.detail = "all 1";
  }));
  rep.records.push_back(timed("twist gauge", "twisted characters", [&](Record& r) {
    for (const auto& g : gens) {
      for (const Letter a : letters) {
        if (!(T.twisted_action(g, a) == H.structure().eval(H.structure().action(a)(g)))) {
          expect(r, false, "", G.to_string(g) + " on " + a.to_string());
          return;
        }
      }
    }
    r.detail = "sigma-twisted action equals the q-hat characters";
  }));

  const Realization R = T.realization();
  const JReducer J(A);
  std::vector<Job> jobs;
  for (const auto& id : R.relations()) {
    jobs.push_back([&, id] { return std::vector<Record>{relation_record(R, J, id, cfg.bound, "twisted ")}; });
  }
  rep.append(run_jobs(jobs));

  std::vector<Element> pieces;
  for (const Letter a : letters) pieces.push_back(A.letter(a));
  for (const auto& g : gens) pieces.push_back(A.group_like(g));
  rep.records.push_back(timed("twist intertwiner", "generator pairs", [&](Record& r) {
    for (const auto& x : pieces) {
      for (const auto& y : pieces) {
        if (!(T.phi(T.product(x, y)) == H.product(T.phi(x), T.phi(y), Exec::serial))) {
          expect(r, false, "", "fails on " + A.to_string(x) + ", " + A.to_string(y));
          return;
        }
      }
    }
    r.detail = std::to_string(pieces.size() * pieces.size()) + " pairs";
  }));
  rep.records.push_back(timed("twist associativity", "letter triples", [&](Record& r) {
    for (const Letter a : letters) {
      for (const Letter b : letters) {
        for (const Letter c : letters) {
          const Element x = A.letter(a), y = A.letter(b, G.K(0)), z = A.letter(c);
          if (!(T.product(T.product(x, y), z) == T.product(x, T.product(y, z)))) {
            expect(r, false, "", "fails on " + a.to_string() + " " + b.to_string() + " " + c.to_string());
            return;
          }
        }
      }
    }
    r.detail = "all triples";
  }));
  return rep;
}

Report small_quantum_group(const RunConfig& cfg_in) {
  RunConfig cfg = cfg_in;
  cfg.params = ParamSource::root_of_unity;
  try {
    (void)alcove_check(cfg.datum, Weight(cfg.datum.rank()), cfg.ell);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("smallqg: ") + e.what());
  }
  const Algebra A = algebra_of(cfg);
  const auto& s = A.structure();
  const auto& G = s.group();
  const std::size_t n = cfg.datum.rank();
  const std::string ell = "ell=" + std::to_string(cfg.ell);

  Report rep;
  rep.records.push_back(timed("grading group order", ell, [&](Record& r) {
    std::uint64_t want = 1;
    for (std::size_t k = 0; k < 2 * n; ++k) want *= cfg.ell;
    expect(r, G.order() == want, std::to_string(G.order()), std::to_string(G.order()) + " != " + std::to_string(want));
  }));
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t ord = s.evaluator().root_order(s.params().q(i, i));
    const std::string in = ell + " i=" + std::to_string(i + 1);
    rep.records.push_back(timed("E nilpotency", in, [&](Record& r) {
      const Element e = A.letter(Letter::E(i));
      expect(r, !A.power(e, ord - 1).is_zero() && A.power(e, ord).is_zero(),
             "E^" + std::to_string(ord) + " = 0, lower powers nonzero", "threshold is not " + std::to_string(ord));
    }));
    rep.records.push_back(timed("FK' nilpotency", in, [&](Record& r) {
      const Element f = A.letter(Letter::F(i), G.Kp(i));
      expect(r, !A.power(f, ord - 1).is_zero() && A.power(f, ord).is_zero(),
             "(FK')^" + std::to_string(ord) + " = 0, lower powers nonzero", "threshold is not " + std::to_string(ord));
    }));
  }

  std::vector<std::vector<long>> lambdas = cfg.lambdas;
  if (lambdas.empty()) {
    std::vector<long> l(n, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
      if (i == n) {
        lambdas.push_back(l);
        return;
      }
      for (long k = 0; k <= left; ++k) {
        l[i] = k;
        rec(i + 1, left - k);
      }
      l[i] = 0;
    };
    rec(0, static_cast<long>(cfg.ell) - 1);
  }
  std::vector<Job> jobs;
  for (const auto& l : lambdas) {
    jobs.push_back([&, l] {
      const bool inside = alcove_check(cfg.datum, cfg.datum.weight_from_labels(l), cfg.ell);
      std::vector<Record> out{timed("alcove", "lambda=" + labels_string(l) + " " + ell, [&](Record& r) {
        r.detail = inside ? "inside" : "outside, module not built";
      })};
      if (inside) {
        auto more = module_records(cfg, l, "alcove ");
        out.insert(out.end(), more.begin(), more.end());
      }
      return out;
    });
  }
  rep.append(run_jobs(jobs));
  return rep;
}

}  // namespace qqsa::suites
