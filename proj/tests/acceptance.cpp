// Runs the end-to-end acceptance criteria and prints one line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "vlh/algebra.hpp"
#include "vlh/cli.hpp"
#include "vlh/complex.hpp"
#include "vlh/error.hpp"
#include "vlh/jones.hpp"
#include "vlh/smoothing.hpp"
#include "vlh/tqft.hpp"

using namespace vlh;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

const std::vector<std::string> kRows = {"f2_row1", "f2_row2", "f2_row3", "f2_row4",
                                        "f2_row5", "f2_row6", "f2_row7", "f2_row8"};

TheoryParams triple(long a, long l, long m) { return theory_from_triple(Scalar(Q, a), Scalar(Q, l), Scalar(Q, m)); }

std::vector<std::pair<std::string, TheoryParams>> rational_triples() {
  return {{"triple 1,0,1", triple(1, 0, 1)},
          {"triple 2,1,3", triple(2, 1, 3)},
          {"triple 1,1,1", triple(1, 1, 1)},
          {"triple 3,-2,1", triple(3, -2, 1)},
          {"triple -1,2,-1", triple(-1, 2, -1)}};
}

std::vector<std::pair<std::string, TheoryParams>> all_theories() {
  std::vector<std::pair<std::string, TheoryParams>> out;
  for (const auto& name : kRows) out.emplace_back(name, preset(name));
  for (auto& t : rational_triples()) out.push_back(std::move(t));
  return out;
}

// Collects failure descriptions; a criterion passes when none were recorded.
struct Check {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string betti_string(const std::map<int, std::size_t>& b) {
  std::ostringstream s;
  for (const auto& [i, n] : b) s << i << ":" << n << " ";
  return s.str();
}

// ---------------------------------------------------------------------------

void axiom_suite(Check& c) {
  for (const auto& name : kRows) {
    const TheoryParams th = preset(name);
    c.expect(verify_axioms(th).all_passed(), name + " axioms");
    c.expect(verify_4tu(th).passed, name + " 4Tu");
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> small(-6, 6);
  for (int i = 0; i < 200; ++i) {
    long a = 0, m = 0;
    while (a == 0) a = small(rng);
    const long l = small(rng);
    while (m == 0) m = small(rng);
    const TheoryParams th = triple(a, l, m);
    const std::string label = "triple " + std::to_string(a) + "," + std::to_string(l) + "," + std::to_string(m);
    c.expect(verify_axioms(th).all_passed(), label + " axioms");
    c.expect(verify_4tu(th).passed, label + " 4Tu");
  }
}

// Over F2 the defining relations read: beta*mu = beta*lambda = 0 and
// mu*(lambda + t) = 0, since 2 vanishes and squares are idempotent.
void classification_negatives(Check& c) {
  struct Values {
    int t, lambda, mu, beta;
  };
  std::size_t rejected = 0;
  for (const auto& name : kRows) {
    const TheoryParams th = preset(name);
    const Values v{static_cast<int>(th.t.residue()), static_cast<int>(th.lambda.residue()),
                   static_cast<int>(th.mu.residue()), static_cast<int>(th.beta.residue())};
    for (int which = 0; which < 4; ++which) {
      Values p = v;
      int* slot = which == 0 ? &p.t : which == 1 ? &p.lambda : which == 2 ? &p.mu : &p.beta;
      *slot ^= 1;
      const bool eq1 = (p.beta & p.mu) || (p.beta & p.lambda);
      const bool eq2 = (p.mu & (p.lambda ^ p.t)) != 0;
      const std::string expected = eq1 ? "eq1" : eq2 ? "eq2" : "";
      std::string got;
      try {
        theory_from_params(Scalar::one(F2), Scalar(F2, p.t), Scalar(F2, p.lambda), Scalar(F2, p.mu),
                           Scalar(F2, p.beta));
      } catch (const Error& e) {
        got = e.kind() == ErrorKind::constraint_violated ? e.subject() : "other";
      }
      c.expect(got == expected, name + " perturbation " + std::to_string(which) + ": expected '" + expected +
                                    "', got '" + got + "'");
      if (!expected.empty()) ++rejected;
    }
    try {
      theory_from_params(Scalar::zero(F2), th.t, th.lambda, th.mu, th.beta);
      c.expect(false, name + " with a = 0 accepted");
    } catch (const Error& e) {
      c.expect(e.kind() == ErrorKind::not_invertible, name + " with a = 0");
    }
  }
  c.expect(rejected > 0, "no perturbation broke a relation");

  // Rational triples: moving t off its solved value breaks the classification
  // equation; adding beta breaks the annihilation relation since mu != 0.
  for (const auto& [label, th] : rational_triples()) {
    auto subject = [](auto&& build) -> std::string {
      try {
        build();
      } catch (const Error& e) {
        return e.subject();
      }
      return {};
    };
    const Scalar one = Scalar::one(Q);
    c.expect(subject([&] { theory_from_params(th.a, th.t + one, th.lambda, th.mu, th.beta); }) == "eq2",
             label + " t perturbation");
    const Scalar mu = th.mu + one + one;
    const Scalar two(Q, 2);
    const Scalar residual = two * th.a * th.lambda * mu - th.a * th.a * mu * mu * th.lambda * th.lambda -
                            th.a * th.a * mu.pow(4) * th.t - two;
    c.expect(subject([&] { theory_from_params(th.a, th.t, th.lambda, mu, th.beta); }) ==
                 (residual.is_zero() ? "" : "eq2"),
             label + " mu perturbation");
    c.expect(subject([&] { theory_from_params(th.a, th.t, th.lambda, th.mu, th.beta + one); }) == "eq1",
             label + " beta perturbation");
  }
}

void identity_suite(Check& c) {
  for (const auto& [label, th] : all_theories()) {
    const Field F = th.field();
    const AlgebraElement th_el = theta(th);
    const AlgebraElement th2 = multiply(th, th_el, th_el);
    const AlgebraElement th3 = multiply(th, th2, th_el);
    for (const Basis b : {Basis::one, Basis::x}) {
      const AlgebraElement v = AlgebraElement::basis(F, b);
      c.expect(phi(th, phi(th, v)) == v, label + " phi^2");
      c.expect(phi(th, multiply(th, th_el, v)) == multiply(th, th_el, v), label + " phi(theta v)");
    }
    const TensorElement d1 = comultiply(th, unit(th));
    c.expect(multiply_at(th, phi_at(th, d1, 0), 0).to_element() == th2, label + " twisted handle");
    c.expect(multiply_at(th, comultiply(th, th_el), 0).to_element() == th3, label + " m(Delta(theta))");
    c.expect(counit(th, handle_element(th)) == Scalar(F, 2), label + " epsilon(H)");
    if (F.characteristic() != 2) {
      const Scalar disc = th.h * th.h + Scalar(F, 4) * th.t;
      // -4 mu^-4 when a = 1; a^-2 scales it in general.
      const Scalar expected = Scalar(F, -4) / (th.a * th.a * th.mu.pow(4));
      c.expect(disc == expected, label + " discriminant " + disc.to_string());
      c.expect(!disc.is_zero(), label + " discriminant vanishes");
      if (th.a.is_one()) c.expect(disc == Scalar(F, -4) / th.mu.pow(4), label + " discriminant at a = 1");
    }
  }
}

void surface_suite(Check& c) {
  for (const auto& [label, th] : all_theories()) {
    c.expect(evaluate_closed_surface(th, 0, 0).is_zero(), label + " sphere");
    c.expect(evaluate_closed_surface(th, 1, 0) == Scalar(th.field(), 2), label + " torus");
  }
  for (const auto& name : kRows) {
    const TheoryParams th = preset(name);
    for (unsigned g = 0; g <= 3; ++g) {
      for (unsigned k = 2; k <= 6; ++k) {
        c.expect(evaluate_closed_surface(th, g, k) == evaluate_closed_surface(th, g + 1, k - 2),
                 name + " (" + std::to_string(g) + "," + std::to_string(k) + ")");
      }
    }
  }
}

void d_squared(Check& c, const std::vector<DiagramRecord>& corpus) {
  for (const auto& rec : corpus) {
    if (rec.diagram.crossing_count() > 6) continue;
    for (const auto& [label, th] : all_theories()) {
      try {
        const ChainComplex cx = build_complex(rec.diagram, th);
        for (std::size_t i = 1; i < cx.differentials.size(); ++i) {
          c.expect(compose(cx.differentials[i], cx.differentials[i - 1]).is_zero(),
                   rec.diagram.name() + " " + label + " d^2 at " + std::to_string(i));
        }
      } catch (const Error& e) {
        c.expect(false, rec.diagram.name() + " " + label + ": " + e.what());
      }
    }
  }
}

void euler_identity(Check& c, const std::vector<DiagramRecord>& corpus) {
  for (const auto& rec : corpus) {
    const std::int64_t expected = jones_at_one(rec.diagram);
    for (const auto& [label, th] : all_theories()) {
      const ChainComplex cx = build_complex(rec.diagram, th);
      const HomologyResult h = homology(cx);
      c.expect(h.euler == expected, rec.diagram.name() + " " + label + " euler " + std::to_string(h.euler));
      if (th.field().is_rational()) {
        c.expect(h.euler == chain_euler(cx), rec.diagram.name() + " " + label + " chain euler");
      }
    }
  }
}

void graded_euler_identity(Check& c, const std::vector<DiagramRecord>& corpus) {
  for (const auto& rec : corpus) {
    const HomologyResult h = graded_homology(build_complex(rec.diagram, preset("manturov")));
    const LaurentPoly got = graded_euler(h);
    const LaurentPoly want = kauffman_jones(rec.diagram);
    c.expect(got == want, rec.diagram.name() + ": " + got.to_string() + " vs " + want.to_string());
  }
}

void classical_oracle(Check& c, const std::vector<DiagramRecord>& corpus) {
  std::size_t classical = 0;
  for (const auto& rec : corpus) {
    if (!rec.classical) continue;
    ++classical;
    const auto got = homology(build_complex(rec.diagram, preset("manturov"))).betti;
    const auto want = oracle::classical_betti(rec.diagram, Scalar::one(F2), Scalar::zero(F2), Scalar::zero(F2));
    c.expect(got == want, rec.diagram.name() + ": " + betti_string(got) + "vs " + betti_string(want));
  }
  c.expect(classical >= 4, "too few classical diagrams");
}

void invariance(Check& c, const std::vector<DiagramRecord>& corpus) {
  std::vector<NamedTheory> theories;
  for (const auto& name : kRows) theories.push_back({name, preset(name)});
  const InvarianceOutcome out = run_invariance(corpus, theories, 50, 42);
  c.expect(out.walks.size() == corpus.size(), "walk count");
  for (const auto& m : out.mismatches) {
    c.expect(false, m.diagram + " " + m.theory + " step " + std::to_string(m.step) + ": " + betti_string(m.expected) +
                        "vs " + betti_string(m.found));
  }
  std::size_t r3 = 0;
  for (const auto& cmp : out.r3) {
    ++r3;
    c.expect(cmp.equal, cmp.equivalence_class + " " + cmp.theory);
  }
  c.expect(r3 >= 3 * theories.size(), "fewer than three R3 classes compared");
}

void convention_independence(Check& c, const std::vector<DiagramRecord>& corpus) {
  std::mt19937_64 rng(7);
  const std::vector<std::pair<std::string, TheoryParams>> theories = {{"f2_row7", preset("f2_row7")},
                                                                      {"triple 2,1,3", triple(2, 1, 3)}};
  for (const auto& rec : corpus) {
    const auto smoothings = smooth_all(DiagramArcs(rec.diagram));
    std::vector<std::map<int, std::size_t>> expected;
    for (const auto& [label, th] : theories) expected.push_back(homology(build_complex(rec.diagram, th)).betti);
    for (int flip = 0; flip < 100; ++flip) {
      const auto& s = smoothings[std::uniform_int_distribution<std::size_t>(0, smoothings.size() - 1)(rng)];
      const int idx = std::uniform_int_distribution<int>(0, s.k() - 1)(rng);
      for (std::size_t i = 0; i < theories.size(); ++i) {
        const auto got = betti_with_reversed_anchor(rec.diagram, theories[i].second, s.state, idx).betti;
        c.expect(got == expected[i], rec.diagram.name() + " " + theories[i].first + " flip " +
                                         state_string(s.state, rec.diagram.crossing_count()) + "/" +
                                         std::to_string(idx));
      }
    }
  }
}

void manturov_consistency(Check& c, const std::vector<DiagramRecord>& corpus) {
  std::size_t single_cycles = 0;
  for (const auto& rec : corpus) {
    const ChainComplex cx = build_complex(rec.diagram, preset("f2_row1"));
    for (const auto& e : cube_edges(rec.diagram)) {
      if (e.kind != SaddleKind::single_cycle) continue;
      ++single_cycles;
      c.expect(differential_block(cx, e.from, e.to).is_zero(),
               rec.diagram.name() + " " + state_string(e.from, cx.crossings) + "->" +
                   state_string(e.to, cx.crossings));
    }
  }
  c.expect(single_cycles > 0, "corpus has no single-cycle edges");
}

}  // namespace

int main() {
  const std::vector<DiagramRecord> corpus = oracle::corpus();

  struct Criterion {
    int id;
    std::string title;
    double limit_seconds;  // 0: no limit
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "axioms and 4Tu for presets and 200 rational triples", 1.0, axiom_suite},
      {2, "single-parameter perturbations rejected by the broken relation", 0, classification_negatives},
      {3, "structural identities", 0, identity_suite},
      {4, "closed surface evaluation", 0, surface_suite},
      {5, "d^2 = 0 on the corpus for presets and rational triples", 30.0, [&](Check& c) { d_squared(c, corpus); }},
      {6, "euler characteristic equals the state sum at q = 1", 0, [&](Check& c) { euler_identity(c, corpus); }},
      {7, "graded euler characteristic equals the Jones polynomial", 0,
       [&](Check& c) { graded_euler_identity(c, corpus); }},
      {8, "classical diagrams match the dense oracle", 0, [&](Check& c) { classical_oracle(c, corpus); }},
      {9, "invariance under 50 random moves and R3 pairs", 120.0, [&](Check& c) { invariance(c, corpus); }},
      {10, "independence from circle reference orientations", 0,
       [&](Check& c) { convention_independence(c, corpus); }},
      {11, "single-cycle blocks vanish for the first table row", 0,
       [&](Check& c) { manturov_consistency(c, corpus); }},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (cr.limit_seconds > 0 && elapsed >= cr.limit_seconds) {
      check.failures.push_back("took " + std::to_string(elapsed) + " s, limit " + std::to_string(cr.limit_seconds));
    }
    const bool ok = check.failures.empty();
    if (!ok) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << "  " << cr.id << ". " << cr.title << " (" << check.checks << " checks, "
         << elapsed << " s)";
    std::cout << line.str() << "\n";
    for (const auto& f : check.failures) std::cout << "      " << f << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
