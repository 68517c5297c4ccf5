/// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic only.
/// Exit status is 0 when every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "novikov/certificate.hpp"
#include "novikov/error.hpp"
#include "novikov/extension.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/laf.hpp"
#include "novikov/lift_constructions.hpp"
#include "novikov/linalg.hpp"
#include "novikov/reduction.hpp"
#include "novikov/rmatrix.hpp"
#include "oracles.hpp"

using namespace novikov;
using testing_support::Rng;

namespace {

/// Collects failures for one criterion.
struct Criterion {
  std::vector<std::string> failures;
  std::ostringstream note;
  template <class T>
  void expect(const T& ok, const std::string& what) {
    if (!static_cast<bool>(ok)) failures.push_back(what);
  }
};

/// Every Novikov product met along the way, for the global cross-check.
std::vector<std::pair<std::string, AlgebraProduct>> novikov_products;

void remember(const std::string& name, const AlgebraProduct& p) {
  if (is_novikov(p)) novikov_products.emplace_back(name, p);
}

Vector unit(std::size_t n, std::size_t i) { return unit_vector(n, i); }
Matrix e3(std::size_t i, std::size_t j) { return Matrix::unit(3, 3, i - 1, j - 1); }

ExtensionData split(const std::string& name) { return two_step_solvable_from(fixture(name)).ext; }

void fixtures_valid(Criterion& c) {
  std::size_t count = 0;
  for (const auto& name : fixture_corpus()) {
    const LieAlgebra g = fixture(name);
    bool ok = true;
    try {
      validate_lie(g.structure());
    } catch (const ValidationError&) {
      ok = false;
    }
    c.expect(ok, name + " fails validate_lie");
    ++count;
  }
  const LieAlgebra f = fixture("free-n2-c4");
  c.expect(nilpotency_class(f) == 4u, "free-n2-c4 nilpotency class");
  c.expect(derived_length(f) == 2u, "free-n2-c4 derived length");
  c.note << count << " fixtures valid; free-n2-c4 class " << *nilpotency_class(f) << ", derived length "
         << *derived_length(f);
}

void table_products(Criterion& c) {
  const std::pair<std::string, AlgebraProduct> tables[] = {{"ex35", fixtures::ex35_product()},
                                                           {"free-n3-c3", fixtures::free_n3_c3_product()}};
  for (const auto& [name, p] : tables) {
    const LieAlgebra g = fixture(name);
    c.expect(is_left_symmetric(p), name + " left-symmetric");
    c.expect(is_novikov(p), name + " Novikov");
    c.expect(is_compatible(p, g), name + " compatible");
    c.expect(derived_identities_hold(p), name + " derived identities");
    remember(name + " table", p);
  }
  c.note << "5-dim and 14-dim tables: left-symmetric, Novikov, compatible, derived identities";
}

void half_bracket_theorem(Criterion& c) {
  Rng rng(1001);
  for (int it = 0; it < 10; ++it) {
    const LieAlgebra g = testing_support::random_two_step_nilpotent(rng, 8);
    const AlgebraProduct p = half_bracket(g);
    c.expect(g.dim() <= 8 && nilpotency_class(g) <= 2u, "generator produced a non 2-step algebra");
    c.expect(is_novikov(p) && is_compatible(p, g), "half-bracket on random algebra " + std::to_string(it));
    remember("half-bracket random " + std::to_string(it), p);
  }
  const CheckResult r = is_left_symmetric(half_bracket(fixture("free-n2-c4")));
  c.expect(!r && !r.witness.empty(), "free-n2-c4 half-bracket should fail with a witness");
  c.note << "10 random algebras pass; free-n2-c4 fails left symmetry at (";
  for (std::size_t i = 0; i < r.witness.size(); ++i) c.note << (i ? "," : "") << r.witness[i] + 1;
  c.note << ")";
}

void rmatrix_suite(Criterion& c) {
  const LieAlgebra sl2 = fixture("sl2");
  auto passes = [&](const RMatrix& r, const std::string& name) {
    const bool ok = check_cybe(r) && check_novbed(r);
    c.expect(ok, name + " fails the r-matrix checks");
    if (!ok) return false;
    const AlgebraProduct p = induced_product(r);
    c.expect(is_novikov(p), name + " induced product not Novikov");
    c.expect(is_compatible(p, deformed_lie(r)), name + " induced product not compatible");
    remember("induced " + name, p);
    return true;
  };
  const RMatrix t0(sl2, Matrix(3, 3)), t12(sl2, e3(1, 2)), t33(sl2, e3(3, 3));
  std::size_t stable = 0;
  if (passes(t0, "T=0")) c.expect(deformed_lie(t0).is_abelian(), "T=0 should give an abelian algebra");
  if (passes(t12, "T=E12")) c.expect(nilpotency_class(deformed_lie(t12)) == 2u, "T=E12 should be 2-step nilpotent");
  if (passes(t33, "T=E33")) {
    const LieAlgebra g = deformed_lie(t33);
    stable = lower_central_series(g).back().dim();
    c.expect(is_solvable(g) && !is_nilpotent(g), "T=E33 should be solvable and not nilpotent");
    c.expect(profile(g) == profile(fixture("r3-lambda:-1")), "T=E33 should match the profile of r_{3,-1}");
  }
  const std::pair<Scalar, Scalar> samples[] = {
      {1, 2}, {0, 0}, {-1, 1}, {make_scalar(1, 2), make_scalar(-1, 3)}, {-4, 2}};
  for (const auto& [a, b] : samples) {
    const std::string name = "T(" + to_string(a) + "," + to_string(b) + ")";
    const RMatrix r(sl2, sl2_family(a, b));
    if (!passes(r, name)) continue;
    const LieAlgebra g = deformed_lie(r);
    if (a + b * b == 0)
      c.expect(nilpotency_class(g) == 2u, name + " should be 2-step nilpotent");
    else
      c.expect(!lower_central_series(g).back().is_zero(), name + " should have a nonzero stable term");
  }

  Rng rng(1002);
  std::vector<LieAlgebra> pool;
  for (const char* name : {"n3", "r2", "r3", "ex35", "free-n2-c4", "filiform:5", "filiform:7", "In:3", "r3-lambda:2"})
    pool.push_back(fixture(name));
  for (int k = 0; k < 4; ++k) pool.push_back(testing_support::random_two_step_nilpotent(rng));
  int found = 0;
  for (int tries = 0; found < 20 && tries < 2000; ++tries) {
    const LieAlgebra& g = pool[static_cast<std::size_t>(rng.range(0, static_cast<int>(pool.size()) - 1))];
    const auto l = static_cast<std::size_t>(rng.range(0, static_cast<int>(g.dim()) - 1));
    const auto m = static_cast<std::size_t>(rng.range(0, static_cast<int>(g.dim()) - 1));
    try {
      const RMatrix r = basis_rmatrix(g, l, m);
      ++found;
      const ClassBounds cb = class_bounds_report(r);
      c.expect(cb.nilpotent_bound_holds && cb.solvable_bound_holds, "class bound");
      passes(r, "basis r-matrix " + std::to_string(found));
    } catch (const HypothesisFailed&) {
    } catch (const InvariantViolation& e) {
      c.failures.push_back(e.what());
    }
  }
  c.expect(found == 20, "fewer than 20 basis r-matrices");
  c.note << "T=0 abelian, T=E12 class 2, T=E33 solvable non-nilpotent ~ r_{3,-1} (stable lower central term dim "
         << stable << "); 5 family samples; class bounds on " << found << " basis r-matrices";
}

void scheuneman(Criterion& c) {
  Rng rng(1003);
  for (int it = 0; it < 10; ++it) {
    const ExtensionData ext = testing_support::random_three_step_extension(rng, 10);
    const std::string name = "random 3-step extension " + std::to_string(it);
    const LiftData l = scheuneman_lift(ext);
    c.expect(check_lift_lsa(ext, l), name + " lift check");
    const AlgebraProduct p = lift_product(ext, l);
    c.expect(is_left_symmetric(p), name + " product not left-symmetric");
    c.expect(is_complete(p).verdict != Completeness::Verdict::Incomplete, name + " product not complete");
    remember(name, p);
  }
  c.note << "10 random extensions: lift check, left symmetry, R nilpotent on basis and 32 samples";
}

void two_and_three_generators(Criterion& c) {
  const ExtensionData e35 = split("ex35");
  c.expect(check_lift_novikov(e35, two_gen_lift(e35)), "two-generator lift on ex35");
  remember("two-generator ex35", lift_product(e35, two_gen_lift(e35)));
  const LieAlgebra f = fixture("free-n2-c4");
  const ExtensionData q = two_step_solvable_from(quotient(f, lower_central_term(f, 4))).ext;
  c.expect(check_lift_novikov(q, two_gen_lift(q)), "two-generator lift on free-n2-c4 / g^4");
  remember("two-generator free-n2-c4/g^4", lift_product(q, two_gen_lift(q)));

  const AlgebraProduct p = fixtures::free_n3_c3_product();
  std::vector<Vector> f3;
  for (std::size_t i = 6; i < 14; ++i) f3.push_back(unit(14, i));
  std::vector<Vector> c3 = f3;
  c3.push_back(unit(14, 3));
  c3.push_back(unit(14, 4));
  const std::vector<std::pair<std::string, Subspace>> ideals = {
      {"I in the centre", Subspace::span(14, f3)},
      {"<x4,x7,x8,x9>", Subspace::span(14, {unit(14, 3), unit(14, 6), unit(14, 7), unit(14, 8)})},
      {"<x4,x5> + f^3", Subspace::span(14, c3)}};
  for (const auto& [name, ideal] : ideals) {
    try {
      const AlgebraProduct qp = novikov_ideal_quotient(p, ideal);
      c.expect(is_novikov(qp), name + " quotient not Novikov");
      remember("quotient " + name, qp);
    } catch (const NotProductIdeal& e) {
      c.failures.push_back(name + ": " + e.what());
    }
  }
  c.note << "ex35 and free-n2-c4/g^4 lifts Novikov; 3 ideal quotients Novikov";
}

void jordan(Criterion& c) {
  for (std::size_t n = 4; n <= 8; ++n) {
    const ExtensionData e = split("filiform:" + std::to_string(n));
    bool done = false;
    for (std::size_t x = 0; x < e.dim_b && !done; ++x) {
      try {
        const LiftData l = jordan_lift(e, x);
        c.expect(check_lift_novikov(e, l), "filiform " + std::to_string(n));
        remember("jordan filiform " + std::to_string(n), lift_product(e, l));
        done = true;
      } catch (const NotRegularNilpotent&) {
      }
    }
    c.expect(done, "no regular element for filiform " + std::to_string(n));
  }
  Rng rng(1004);
  for (int it = 0; it < 10; ++it) {
    const auto [ext, x] = testing_support::random_regular_nilpotent_extension(rng);
    const LiftData l = jordan_lift(ext, x);
    c.expect(check_lift_novikov(ext, l), "random regular extension " + std::to_string(it));
    remember("jordan random " + std::to_string(it), lift_product(ext, l));
  }
  c.note << "filiform L_4..L_8 and 10 random regular-nilpotent extensions; normalization identities held";
}

bool no_invariants_on(const ModuleAction& m, const Subspace& s) {
  std::vector<oracle::Vec> rows;
  for (const Matrix& a : m.action)
    for (std::size_t r = 0; r < m.dim; ++r) {
      oracle::Vec row;
      for (const Vector& b : s.basis()) row.push_back((a * b)[r]);
      rows.push_back(row);
    }
  return s.is_zero() || oracle::rank(rows) == s.dim();
}

void reduction(Criterion& c) {
  Rng rng(1005);
  int zero_h0 = 0;
  for (int it = 0; it < 25; ++it) {
    const auto pm = testing_support::random_nilpotent_module(rng);
    const ModuleAction& m = pm.module;
    const std::string name = "module " + std::to_string(it);
    const Decomposition d = fitting_decompose(m);
    c.expect(m.dim <= 8, name + " too large");
    c.expect(d.v_n.dim() + d.v_0.dim() == m.dim && d.v_n.sum(d.v_0).is_full(), name + " not a direct sum");
    for (const Matrix& a : m.action) {
      for (const Vector& v : d.v_n.basis()) c.expect(d.v_n.contains(a * v), name + " V_n not invariant");
      for (const Vector& v : d.v_0.basis()) c.expect(d.v_0.contains(a * v), name + " V_0 not invariant");
    }
    c.expect(word_image_space(m.action, d.v_n, m.dim).is_zero(), name + " V_n not nilpotent");
    c.expect(d.v_n.dim() == pm.nilpotent_dim, name + " V_n not maximal");
    c.expect(no_invariants_on(m, d.v_0), name + " H^0(V_0) nonzero");
    const Matrix pi = inverse(d.basis);
    ModuleAction m0;
    m0.b = m.b;
    m0.dim = d.v_0.dim();
    for (const Matrix& a : m.action) {
      const Matrix full = pi * a * d.basis;
      Matrix blk(m0.dim, m0.dim);
      for (std::size_t r = 0; r < m0.dim; ++r)
        for (std::size_t s = 0; s < m0.dim; ++s) blk(r, s) = full(d.v_n.dim() + r, d.v_n.dim() + s);
      m0.action.push_back(blk);
    }
    c.expect(h0(m0).is_zero() && h0(row_module(m0)).is_zero(), name + " H^0 of V_0 (columns or rows) nonzero");
    const bool col = h0(m).is_zero();
    c.expect(col == h0(row_module(m)).is_zero(), name + " column/row invariants disagree");
    zero_h0 += col;
  }
  for (int it = 0; it < 10; ++it) {
    const ExtensionData ext = testing_support::random_mixed_extension(rng);
    const InducedNilpotent ind = induced_nilpotent_extension(ext);
    const LiftData ln = scheuneman_lift(ind.ext_n);
    const bool in = bool(check_lift_lsa(ind.ext_n, ln));
    const LiftData out = reduction_lift(ext, ln);
    c.expect(in && check_lift_lsa(ext, out), "mixed extension " + std::to_string(it));
    remember("reduction " + std::to_string(it), lift_product(ext, out));
  }
  for (int it = 0; it < 5; ++it) {
    const LieAlgebra g = testing_support::random_solvable_instance(rng);
    const std::string name = "solvable instance " + std::to_string(it);
    c.expect(lower_central_term(g, 5) == lower_central_term(g, 4) && !is_nilpotent(g), name + " hypotheses");
    const AlgebraProduct p = prop57_construct(g);
    c.expect(is_left_symmetric(p) && is_compatible(p, g), name + " not an LSA on g");
    c.expect(is_complete(p).verdict != Completeness::Verdict::Incomplete, name + " not complete");
    remember(name, p);
  }
  c.note << "25 modules decomposed (" << zero_h0 << " with H^0 = 0 on both sides); 10 reduction lifts; 5 complete LSAs";
}

void bump(SparseVec& v, std::size_t at) {
  v[at].value += 1;
  if (v[at].value == 0) v[at].value += 1;
}

void certificate(Criterion& c) {
  const LieAlgebra g = fixture("free-n2-c4");
  const Certificate fresh = decide_novikov(g);
  c.expect(fresh.verdict == Certificate::Verdict::NotExists, "decide_novikov did not return NotExists");
  const Certificate frozen = parse_certificate(read_text(NOVIKOV_FIXTURE_DIR "/free-n2-c4.lafc"));
  const PolySystem sys = build_system(g);
  c.expect(verify_certificate(g, sys, frozen), "frozen certificate does not verify");
  c.expect(emit_certificate(frozen) == emit_certificate(fresh), "frozen certificate differs from a fresh run");

  std::size_t tampered = 0, caught = 0;
  auto attempt = [&](Certificate t) {
    ++tampered;
    caught += !verify_certificate(g, sys, t);
  };
  for (std::size_t i = 0; i < frozen.combination.size(); ++i) {
    Certificate t = frozen;
    bump(t.combination, i);
    attempt(t);
  }
  {
    Certificate t = frozen;
    t.constant += 1;
    attempt(t);
  }
  for (std::size_t i = 0; i < frozen.param.particular.size(); ++i) {
    Certificate t = frozen;
    bump(t.param.particular, i);
    attempt(t);
  }
  for (std::size_t d = 0; d < frozen.param.directions.size(); ++d)
    for (std::size_t i = 0; i < frozen.param.directions[d].size(); ++i) {
      Certificate t = frozen;
      bump(t.param.directions[d], i);
      attempt(t);
    }
  c.expect(tampered > 0 && caught == tampered, "a tampered certificate still verifies");
  c.note << "NotExists by " << frozen.method << " (" << frozen.steps << " row operations, constant "
         << to_string(frozen.constant) << "); frozen fixture verifies; " << caught << "/" << tampered
         << " single-coefficient tamperings rejected";
}

void cross_checks(Criterion& c) {
  for (const auto& name : product_fixture_corpus()) remember("fixture " + name, product_fixture(name));
  for (const auto& name : fixture_corpus()) {
    const Certificate cert = decide_novikov(fixture(name));
    if (cert.verdict == Certificate::Verdict::Exists) remember("decided " + name, cert.product);
  }
  for (const auto& [name, p] : novikov_products) {
    bool solvable = false;
    try {
      const LieAlgebra g = commutator_lie(p);
      solvable = is_solvable(g);
      c.expect(linear_relation_holds(p, g), name + ": linear relation");
      c.expect(oracle::linear_relation(oracle::dense(p.tensor()), oracle::dense(g.structure())),
               name + ": linear relation (oracle)");
    } catch (const Error& e) {
      c.failures.push_back(name + ": " + e.what());
    }
    c.expect(solvable, name + ": commutator algebra not solvable");
    c.expect(derived_identities_hold(p), name + ": derived identities");
    c.expect(oracle::commutator_identities(oracle::dense(p.tensor())), name + ": derived identities (oracle)");
    c.expect(right_multiplications_commute(p), name + ": right multiplications");
    c.expect(oracle::right_commute(oracle::dense(p.tensor())), name + ": right multiplications (oracle)");
  }
  c.note << novikov_products.size() << " Novikov products cross-checked";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"fixture validity", fixtures_valid},
      {"product tables verify", table_products},
      {"half-bracket theorem", half_bracket_theorem},
      {"r-matrix suite", rmatrix_suite},
      {"Scheuneman lifts", scheuneman},
      {"two- and three-generator Novikov", two_and_three_generators},
      {"Jordan and filiform lifts", jordan},
      {"reduction", reduction},
      {"nonexistence certificate", certificate},
      {"global cross-checks", cross_checks},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first << "): "
              << c.note.str() << " [" << ms << " ms]\n";
    for (const auto& f : c.failures) std::cout << "      " << f << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed, tolerance 0\n";
  return failed == 0 ? 0 : 1;
}
