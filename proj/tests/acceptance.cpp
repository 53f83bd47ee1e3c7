// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "dlab/action/conditions.hpp"
#include "dlab/exact/algebraic.hpp"
#include "dlab/exact/literal.hpp"
#include "dlab/lattice/chain.hpp"
#include "dlab/lattice/hnf.hpp"
#include "dlab/lie/algebra.hpp"
#include "dlab/sim/semidirect.hpp"
#include "random_specs.hpp"
#include "splice_instances.hpp"

using namespace dlab;
using nlohmann::json;

namespace {

std::string fixture(const std::string& rel) { return std::string(DLAB_FIXTURE_DIR) + "/" + rel; }

json read_json(const std::string& rel) {
  std::ifstream in(fixture(rel));
  return json::parse(in);
}

CompactGroupSpec load_spec(const std::string& name) { return spec_from_json(read_json("specs/" + name + ".json")); }
LieAlgebraSC load_algebra(const std::string& name) { return algebra_from_json(read_json("algebras/" + name + ".json")); }

// Collects failed sub-checks for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string summary;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Stopwatch = std::chrono::steady_clock;

int failed_criteria = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = Stopwatch::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(Stopwatch::now() - start).count();
  if (elapsed > limit_seconds) {
    std::ostringstream os;
    os << "took " << elapsed << " s, limit " << limit_seconds << " s";
    c.failures.push_back(os.str());
  }
  const bool ok = c.failures.empty();
  if (!ok) ++failed_criteria;
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << c.summary << " (" << std::fixed
            << std::setprecision(3) << elapsed << " s)" << std::defaultfloat << "\n";
  for (const auto& f : c.failures) std::cout << "     - " << f << "\n";
}

// Primitive triples by brute force, ordered by hypotenuse then smaller leg.
std::vector<std::array<long, 3>> primitive_triples(std::size_t count) {
  std::vector<std::array<long, 3>> out;
  for (long c = 1; out.size() < count; ++c)
    for (long a = 1; a * a * 2 < c * c && out.size() < count; ++a) {
      const long b2 = c * c - a * a;
      const long b = std::lround(std::sqrt(static_cast<double>(b2)));
      if (b * b == b2 && std::gcd(a, b) == 1) out.push_back({a, b, c});
    }
  return out;
}

std::vector<GaussianRational> pythagorean_scalars() {
  std::vector<GaussianRational> out;
  const json doc = read_json("scalars/pythagorean-triples.json");
  for (const auto& t : doc.at("triples")) {
    Rational re(t[0].get<long>(), t[2].get<long>()), im(t[1].get<long>(), t[2].get<long>());
    re.canonicalize();
    im.canonicalize();
    out.emplace_back(re, im);
  }
  return out;
}

AlgebraicScalar sixth_root_of_unity() {
  return scalar_from_json(json::parse(R"({"minpoly": [1, -1, 1], "root_box": ["0", "1", "0", "2"]})"));
}

}  // namespace

int main() {
  std::cout << "acceptance suite\n";

  criterion(1, "z2 counterexample", 1.0, [](Check& c) {
    std::ostringstream out, err;
    const int code = cli::dispatch({"check", "--spec", fixture("specs/z2.json"), "--format", "json"}, out, err);
    c.expect(code == 0, "check exit code " + std::to_string(code));
    const json report = json::parse(out.str());
    const bool verdict = report["verdicts"]["almost_elliptic"].get<bool>();
    c.expect(!verdict, "almost_elliptic should be false");
    const auto spec = load_spec("z2");
    const auto sigma = spec.index_of("sigma");
    const auto det = generic_det(spec, sigma, identity_long(1));
    c.expect(det == LaurentPoly::constant(1, GaussianRational(0)), "sigma determinant is " + to_string(det));
    const bool reduced = almost_elliptic(monothetic_reduction(spec, "e"));
    const bool identity_only = almost_elliptic(load_spec("z2-identity"));
    c.expect(reduced && identity_only, "identity-only reduction should be almost elliptic");
    c.summary = "almost_elliptic=" + std::string(verdict ? "true" : "false") + ", det(sigma)=" + to_string(det) +
                ", identity-only=" + (reduced && identity_only ? "true" : "false");
  });

  criterion(2, "condition c vs d audit", 60.0, [](Check& c) {
    std::mt19937_64 rng(20261018);
    std::size_t disagreements = 0, components = 0, holds = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto spec = fixtures::random_cyclic_spec(rng);
      c.expect(spec.weights.torus_rank <= 3 && spec.weights.size() <= 6 && spec.components.size() <= 4,
               "random spec outside the size bounds");
      const auto vc = cond_c_check(spec), vd = cond_d_check(spec);
      for (std::size_t k = 0; k < vc.size(); ++k) {
        ++components;
        holds += vc[k].second;
        if (vc[k] != vd[k]) ++disagreements;
      }
    }
    c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
    c.summary = "200 specs, " + std::to_string(components) + " components (" + std::to_string(holds) +
                " hold), disagreements=" + std::to_string(disagreements);
  });

  criterion(3, "finite generation vs chain", 30.0, [](Check& c) {
    const auto zs = pythagorean_scalars();
    const auto oracle = primitive_triples(10);
    c.expect(zs.size() == 10, "fixture should list 10 triples");
    for (std::size_t k = 0; k < std::min(zs.size(), oracle.size()); ++k) {
      Rational a(oracle[k][0], oracle[k][2]), b(oracle[k][1], oracle[k][2]);
      a.canonicalize();
      b.canonicalize();
      c.expect(zs[k] == GaussianRational(a, b), "fixture triple " + std::to_string(k) + " differs from enumeration");
    }
    std::size_t non_fg = 0;
    for (const auto& g : zs) {
      const AlgebraicScalar z(g);
      const auto r = derived_module_chain(z, 12);
      const bool fg = fg_derived_criterion(z);
      bool decreasing = true;
      const auto ranks = r.ranks();
      const auto cov = r.covolumes();
      for (std::size_t n = 1; n < cov.size(); ++n)
        if (ranks[n - 1] == 2 && !(cov[n] < cov[n - 1])) decreasing = false;
      const bool ok = !fg && r.verdict == ChainVerdict::NotStabilizedByBound && ranks.back() == 2 && decreasing;
      c.expect(ok, to_string(g) + ": expected fg=false, no stabilization by 12, decreasing covolume");
      non_fg += ok;
    }
    std::vector<std::pair<std::string, AlgebraicScalar>> roots{{"i", AlgebraicScalar(GaussianRational::i())},
                                                               {"-i", AlgebraicScalar(-GaussianRational::i())},
                                                               {"exp(pi i/3)", sixth_root_of_unity()}};
    std::size_t fg_count = 0;
    for (const auto& [name, z] : roots) {
      const auto r = derived_module_chain(z, 12);
      const bool ok = fg_derived_criterion(z) && r.stabilized_at && *r.stabilized_at <= 4;
      c.expect(ok, name + ": expected fg=true and stabilization by N=4");
      fg_count += ok;
    }
    c.summary = std::to_string(non_fg) + "/10 triples non-fg with strictly shrinking covolume, " +
                std::to_string(fg_count) + "/3 roots of unity stabilize by N=4";
  });

  criterion(4, "classifier on fixture catalog", 1.0, [](Check& c) {
    const std::vector<std::pair<std::string, bool>> expected{{"abelian2", false}, {"heisenberg", false},
                                                             {"h3r", false},      {"e2", true},
                                                             {"aff1", true},      {"sl2", true}};
    std::string summary;
    for (const auto& [name, want] : expected) {
      const auto a = load_algebra(name);
      require_valid(a);
      const bool got = theorem_A_classifier(a).verdict;
      c.expect(got == want, name + " classified " + (got ? "true" : "false"));
      summary += (summary.empty() ? "" : ", ") + name + "=" + (got ? "true" : "false");
    }
    c.summary = summary;
  });

  criterion(5, "splice property", 120.0, [](Check& c) {
    std::mt19937_64 rng(500);
    std::size_t held = 0, attempts = 0, violations = 0;
    while (held < 500 && attempts < 200000) {
      ++attempts;
      const auto inst = fixtures::random_splice_instance(rng);
      const auto r = splice_check(inst.a, inst.j, inst.k);
      if (!r.hypotheses_hold) continue;
      ++held;
      if (!r.conclusion_holds) ++violations;
    }
    c.expect(held == 500, "only " + std::to_string(held) + " instances met the hypotheses");
    c.expect(violations == 0, std::to_string(violations) + " violations");
    c.summary = std::to_string(held) + " instances with hypotheses (" + std::to_string(attempts) +
                " drawn), violations=" + std::to_string(violations);
  });

  criterion(6, "symbolic vs empirical ellipticity", 60.0, [](Check& c) {
    SimConfig config;
    std::string summary;
    for (const char* name : {"z2", "z2-identity", "circle-rotation", "trivial-action"}) {
      const auto spec = load_spec(name);
      const bool symbolic = almost_elliptic(spec);
      const bool empirical = empirical_ellipticity(spec, config).verdict;
      c.expect(symbolic == empirical, std::string(name) + ": symbolic and empirical verdicts differ");
      summary += std::string(name) + "=" + (empirical ? "true" : "false") + ", ";
    }
    const SemidirectGroup z2(load_spec("z2"));
    const double d = elliptic_distance(z2, z2.element({1.0, 1.0}, "sigma", {0.0}), 0.1);
    c.expect(d >= 1.0, "z2 witness distance " + std::to_string(d));
    std::ostringstream os;
    os << summary << "d((1,1),sigma; delta=0.1)=" << std::setprecision(6) << d;
    c.summary = os.str();
  });

  criterion(7, "orbit gaps", 5.0, [](Check& c) {
    const double irrational = orbit_gap(std::sqrt(2.0), 10000);
    const double rational = orbit_gap(1.0 / 3.0, 100);
    const Rational exact = orbit_gap(Rational(1, 3), 100);
    c.expect(irrational < 1e-2, "sqrt2 gap " + std::to_string(irrational));
    c.expect(std::abs(rational - 1.0 / 3.0) <= 1e-12, "1/3 gap " + std::to_string(rational));
    c.expect(exact == Rational(1, 3), "exact 1/3 gap " + to_string(exact));
    std::ostringstream os;
    os << "gap(sqrt2, 1e4)=" << irrational << ", gap(1/3, 100)=" << rational << " (exact " << to_string(exact) << ")";
    c.summary = os.str();
  });

  criterion(8, "subgroups of Q are cyclic", 5.0, [](Check& c) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 24);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    std::size_t ok = 0;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> gens;
      for (std::size_t n = size(rng); n-- > 0;) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        gens.push_back(q);
      }
      const Rational g = subgroup_of_Q_generator(gens);
      // Oracle: g = gcd(L q_i) / L with L the lcm of the denominators.
      Integer l = 1, gcd_all = 0;
      for (const auto& q : gens) l = lcm(l, q.get_den());
      for (const auto& q : gens) gcd_all = gcd(gcd_all, Integer(q.get_num() * (l / q.get_den())));
      Rational expect(gcd_all, l);
      expect.canonicalize();
      GenSet set{1, {}};
      for (const auto& q : gens) set.generators.push_back({q});
      const auto form = hnf(set);
      const bool good = g == expect && form.rank() <= 1 && (form.rank() == 0 ? g == 0 : Rational(form.basis[0][0], form.denominator) == g);
      c.expect(good, "trial " + std::to_string(trial) + ": generator " + to_string(g) + ", oracle " + to_string(expect));
      ok += good;
    }
    c.summary = std::to_string(ok) + "/100 sets give a single generator matching the gcd oracle, rank <= 1";
  });

  criterion(9, "cross-module consistency", 30.0, [](Check& c) {
    std::vector<GaussianRational> corpus = pythagorean_scalars();
    corpus.push_back(GaussianRational::i());
    corpus.push_back(-GaussianRational::i());
    corpus.push_back(GaussianRational(-1));
    // Exponent sets whose integer relations stay inside the numeric coefficient bound.
    const std::vector<std::vector<long>> sets{{1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4, 5}, {-1, 1, 2}, {2, 4, 6}};
    std::size_t witness_checks = 0;
    for (const auto& z : corpus) {
      for (const auto& f : sets) {
        const auto exact = fg_dense_witness(z, GaussianRational(1), f);
        const auto numeric = fg_dense_witness(z.to_complex(), {1.0, 0.0}, f);
        // Exact oracle: Q-rank of the generators straight from the lattice engine.
        GenSet gens{2, {}};
        for (long n : f) {
          const auto g = GaussianRational(1) - pow(z, n);
          gens.generators.push_back({g.re, g.im});
        }
        const long rank = static_cast<long>(hnf(gens).rank());
        c.expect(exact.q_rank_estimate == rank && numeric.q_rank_estimate == rank && numeric.discrete &&
                     exact.discrete && numeric.invariant_line == exact.invariant_line,
                 "fg witness disagreement at z=" + to_string(z));
        ++witness_checks;
      }
    }
    // Laurent evaluation against the direct determinant at Pythagorean torus points.
    const auto triples = primitive_triples(12);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
    std::size_t det_checks = 0;
    for (const char* name : {"z2", "z2-identity", "circle-rotation", "trivial-action", "swap-torus", "z4-rotation"}) {
      const auto spec = load_spec(name);
      const std::size_t r = spec.weights.torus_rank;
      std::vector<LaurentPoly> polys;
      for (std::size_t k = 0; k < spec.components.size(); ++k) polys.push_back(generic_det(spec, k, identity_long(r)));
      for (int point = 0; point < 50; ++point) {
        std::vector<GaussianRational> t;
        for (std::size_t k = 0; k < r; ++k) {
          const auto& tr = triples[pick(rng)];
          Rational a(tr[0], tr[2]), b(tr[1], tr[2]);
          a.canonicalize();
          b.canonicalize();
          GaussianRational u(a, b);
          if (rng() & 1) u = u.conj();
          if (rng() & 1) u = -u;
          t.push_back(u);
        }
        for (std::size_t k = 0; k < spec.components.size(); ++k) {
          c.expect(polys[k].evaluate(t) == det_at_point(spec, k, t),
                   std::string(name) + ": Laurent value differs from the determinant");
          ++det_checks;
        }
      }
    }
    c.summary = std::to_string(witness_checks) + " fg witness checks, " + std::to_string(det_checks) +
                " determinant evaluations";
  });

  std::cout << (failed_criteria == 0 ? "all criteria pass" : std::to_string(failed_criteria) + " criteria failed")
            << "\n";
  return failed_criteria == 0 ? 0 : 1;
}
