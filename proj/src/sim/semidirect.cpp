#include "dlab/sim/semidirect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "dlab/error.hpp"
#include "dlab/lattice/hnf.hpp"
#include "lll.hpp"

namespace dlab {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap(double x) {
  double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

std::complex<double> character(const LongVector& weight, const std::vector<double>& angles) {
  double phase = 0;
  for (std::size_t k = 0; k < weight.size(); ++k) phase += static_cast<double>(weight[k]) * angles[k];
  return std::polar(1.0, kTwoPi * phase);
}

Eigen::MatrixXcd to_eigen(const std::vector<ComplexVector>& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m[i][j];
  return out;
}

Eigen::VectorXcd to_eigen(const ComplexVector& v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

// Distance from v to the column space of m, ranks cut at tolerance.
double distance_to_image(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& v, double tolerance) {
  if (v.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > tolerance) ++rank;
  const Eigen::MatrixXcd u = svd.matrixU().leftCols(rank);
  return (v - u * (u.adjoint() * v)).norm();
}

}  // namespace

void check_config(const SimConfig& c) {
  if (!(c.tolerance > 0) || !(c.delta > 0) || !(c.report_threshold > 0))
    throw Error(ErrorKind::InvalidSpec, "tolerance, delta and threshold must be positive");
  if (!(c.tolerance < c.delta)) throw Error(ErrorKind::InvalidSpec, "tolerance must be smaller than delta");
  if (c.samples == 0) throw Error(ErrorKind::InvalidSpec, "at least one sample is required");
}

SemidirectGroup::SemidirectGroup(CompactGroupSpec spec) : spec_(std::move(spec)) {
  validate(spec_);
  const auto& comps = spec_.components;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    for (std::size_t b = 0; b < comps.size(); ++b) {
      if (dlab::multiply(comps[a].rep_matrix, comps[b].rep_matrix) != comps[spec_.component_table[a][b]].rep_matrix)
        throw Error(ErrorKind::SpecMismatch, "rho(" + comps[a].label + ") rho(" + comps[b].label +
                                                 ") differs from rho of the product; the simulator needs exact representatives");
    }
  }
  for (const auto& c : comps) {
    std::vector<ComplexVector> m;
    for (const auto& row : c.rep_matrix) {
      ComplexVector r;
      for (const auto& x : row) r.push_back(x.to_complex());
      m.push_back(std::move(r));
    }
    rho_.push_back(std::move(m));
  }
}

void SemidirectGroup::check(const SemidirectElement& g) const {
  if (g.v.size() != vector_dim() || g.angles.size() != spec_.weights.torus_rank)
    throw Error(ErrorKind::SpecMismatch, "element shape does not match the group spec");
  spec_.index_of(g.component);
}

SemidirectElement SemidirectGroup::identity() const {
  return {ComplexVector(vector_dim()), spec_.components[spec_.identity_index()].label,
          std::vector<double>(spec_.weights.torus_rank, 0.0)};
}

SemidirectElement SemidirectGroup::element(ComplexVector v, const std::string& component,
                                           std::vector<double> angles) const {
  for (auto& a : angles) a = wrap(a);
  SemidirectElement g{std::move(v), component, std::move(angles)};
  check(g);
  return g;
}

std::vector<ComplexVector> SemidirectGroup::rep(const std::string& component, const std::vector<double>& angles) const {
  const auto& r = rho_[spec_.index_of(component)];
  std::vector<ComplexVector> out = r;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto d = character(spec_.weights.weights[i], angles);
    for (auto& x : out[i]) x *= d;
  }
  return out;
}

SemidirectElement SemidirectGroup::multiply(const SemidirectElement& g, const SemidirectElement& h) const {
  check(g);
  check(h);
  const auto m = rep(g.component, g.angles);
  SemidirectElement out;
  out.v = g.v;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out.v[i] += m[i][j] * h.v[j];
  // t sigma t' tau = t (A_sigma t') sigma tau
  const std::size_t a = spec_.index_of(g.component);
  const auto& aut = spec_.components[a].torus_aut;
  out.angles = g.angles;
  for (std::size_t i = 0; i < out.angles.size(); ++i) {
    for (std::size_t j = 0; j < out.angles.size(); ++j) out.angles[i] += static_cast<double>(aut[i][j]) * h.angles[j];
    out.angles[i] = wrap(out.angles[i]);
  }
  out.component = spec_.components[spec_.component_table[a][spec_.index_of(h.component)]].label;
  return out;
}

SemidirectElement SemidirectGroup::invert(const SemidirectElement& g) const {
  check(g);
  const std::size_t a = spec_.index_of(g.component);
  std::size_t inv = 0;
  const std::size_t e = spec_.identity_index();
  while (spec_.component_table[a][inv] != e) ++inv;
  // (t sigma)^-1 = sigma^-1 t^-1 = (A_sigma^-1 (-theta)) sigma^-1, and A_sigma^-1 = A_{sigma^-1}.
  const auto& aut = spec_.components[inv].torus_aut;
  SemidirectElement out;
  out.component = spec_.components[inv].label;
  out.angles.assign(g.angles.size(), 0.0);
  for (std::size_t i = 0; i < g.angles.size(); ++i) {
    for (std::size_t j = 0; j < g.angles.size(); ++j) out.angles[i] -= static_cast<double>(aut[i][j]) * g.angles[j];
    out.angles[i] = wrap(out.angles[i]);
  }
  // v-part: -rho(k^-1) v
  const auto m = rep(out.component, out.angles);
  out.v.assign(g.v.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out.v[i] -= m[i][j] * g.v[j];
  return out;
}

SemidirectElement SemidirectGroup::commutator(const SemidirectElement& g, const SemidirectElement& h) const {
  return multiply(multiply(g, h), multiply(invert(g), invert(h)));
}

double SemidirectGroup::distance(const SemidirectElement& g, const SemidirectElement& h) const {
  check(g);
  check(h);
  if (g.component != h.component) return std::numeric_limits<double>::infinity();
  double s = 0;
  for (std::size_t i = 0; i < g.v.size(); ++i) s += std::norm(g.v[i] - h.v[i]);
  for (std::size_t i = 0; i < g.angles.size(); ++i) {
    const double d = std::abs(g.angles[i] - h.angles[i]);
    const double c = std::min(d, 1.0 - d);
    s += c * c;
  }
  return std::sqrt(s);
}

double elliptic_distance(const SemidirectGroup& group, const SemidirectElement& g, double delta, double tolerance) {
  if (!(delta >= 0)) throw Error(ErrorKind::InvalidSpec, "delta must be non-negative");
  const std::size_t r = g.angles.size();
  const Eigen::VectorXcd v = to_eigen(g.v);
  const auto n = static_cast<Eigen::Index>(g.v.size());
  auto eval = [&](const std::vector<double>& phi) {
    std::vector<double> angles = g.angles;
    for (std::size_t k = 0; k < r; ++k) angles[k] += phi[k];
    const Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n) - to_eigen(group.rep(g.component, angles));
    return distance_to_image(m, v, tolerance);
  };
  double best = eval(std::vector<double>(r, 0.0));
  if (best < tolerance) return 0.0;
  if (r == 0 || delta == 0) return best;

  // Grid over the box [-delta, delta]^r.
  static constexpr std::size_t kPointsPerAxis[] = {1, 17, 9, 5, 5};
  const std::size_t per_axis = r < std::size(kPointsPerAxis) ? kPointsPerAxis[r] : 3;
  const double spacing = 2 * delta / static_cast<double>(per_axis - 1);
  std::vector<std::pair<double, std::vector<double>>> grid;
  std::vector<std::size_t> idx(r, 0);
  for (;;) {
    std::vector<double> phi(r);
    for (std::size_t k = 0; k < r; ++k) phi[k] = -delta + spacing * static_cast<double>(idx[k]);
    const double d = eval(phi);
    if (d < tolerance) return 0.0;
    grid.emplace_back(d, std::move(phi));
    std::size_t k = 0;
    while (k < r && ++idx[k] == per_axis) idx[k++] = 0;
    if (k == r) break;
  }
  std::sort(grid.begin(), grid.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  // Pattern search from the best few grid points, clamped to the box.
  const std::size_t starts = std::min<std::size_t>(3, grid.size());
  for (std::size_t s = 0; s < starts; ++s) {
    auto [value, phi] = grid[s];
    double step = spacing / 2;
    while (step > delta * 1e-7 && value >= tolerance) {
      bool improved = false;
      for (std::size_t k = 0; k < r; ++k) {
        for (double dir : {-1.0, 1.0}) {
          std::vector<double> trial = phi;
          trial[k] = std::clamp(trial[k] + dir * step, -delta, delta);
          const double d = eval(trial);
          if (d < value) {
            value = d;
            phi = std::move(trial);
            improved = true;
          }
        }
      }
      if (!improved) step /= 2;
    }
    best = std::min(best, value);
  }
  best = std::min(best, grid.front().first);
  return best < tolerance ? 0.0 : best;
}

EllipticityReport empirical_ellipticity(const CompactGroupSpec& spec, const SimConfig& config) {
  check_config(config);
  const SemidirectGroup group(spec);
  const std::size_t m = spec.weights.size();
  const std::size_t r = spec.weights.torus_rank;
  const std::size_t comps = spec.components.size();
  EllipticityReport report;
  report.samples = config.samples;
  report.seed = config.seed;
  std::vector<double> max_by_comp(comps, 0.0);
  double worst = -1;
  for (std::size_t i = 0; i < config.samples; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    ComplexVector v(m);
    double norm2 = 0;
    for (auto& x : v) {
      x = {normal(rng), normal(rng)};
      norm2 += std::norm(x);
    }
    if (m > 0 && norm2 > 0) {
      const double radius = std::pow(unit(rng), 1.0 / static_cast<double>(2 * m));
      for (auto& x : v) x *= radius / std::sqrt(norm2);
    }
    std::vector<double> angles(r);
    for (auto& a : angles) {
      do a = unit(rng);
      while (a == 0.0);
    }
    const std::size_t c = i % comps;
    const SemidirectElement g = group.element(v, spec.components[c].label, angles);
    const double d = elliptic_distance(group, g, config.delta, config.tolerance);
    max_by_comp[c] = std::max(max_by_comp[c], d);
    if (d > worst) {
      worst = d;
      report.witness = g;
      report.witness_distance = d;
    }
  }
  report.verdict = worst < config.report_threshold;
  if (report.verdict) report.witness.reset();
  for (std::size_t c = 0; c < comps; ++c) report.max_distance_by_component.emplace_back(spec.components[c].label, max_by_comp[c]);
  return report;
}

double orbit_gap(double theta, std::size_t count) {
  if (count == 0) throw Error(ErrorKind::DegenerateInput, "orbit needs at least one point");
  std::vector<double> pts;
  pts.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) pts.push_back(wrap(static_cast<double>(n) * theta));
  std::sort(pts.begin(), pts.end());
  double gap = 1.0 - pts.back() + pts.front();
  for (std::size_t k = 1; k < pts.size(); ++k) gap = std::max(gap, pts[k] - pts[k - 1]);
  return gap;
}

Rational orbit_gap(const Rational& theta, std::size_t count) {
  if (count == 0) throw Error(ErrorKind::DegenerateInput, "orbit needs at least one point");
  // n theta mod 1 takes values in (1/q)Z / Z; only the residues n p mod q matter.
  const Integer p = theta.get_num(), q = theta.get_den();
  std::vector<Integer> pts;
  for (std::size_t n = 1; n <= count; ++n) {
    Integer x = (p * static_cast<unsigned long>(n)) % q;
    if (x < 0) x += q;
    pts.push_back(x);
    if (x == 0 && n >= 1) break;  // the orbit repeats from here
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Integer gap = q - pts.back() + pts.front();
  for (std::size_t k = 1; k < pts.size(); ++k) gap = std::max(gap, Integer(pts[k] - pts[k - 1]));
  Rational out(gap, q);
  out.canonicalize();
  return out;
}

FgWitness fg_dense_witness(std::complex<double> z, std::complex<double> v, const std::vector<long>& exponents) {
  constexpr double kTol = 1e-9;
  constexpr double kScale = 1e12;
  constexpr double kMaxCoefficient = 1e6;
  if (exponents.empty()) throw Error(ErrorKind::DegenerateInput, "exponent list is empty");
  if (std::abs(v) == 0) throw Error(ErrorKind::DegenerateInput, "v = 0");
  if (std::abs(z - 1.0) < kTol) throw Error(ErrorKind::DegenerateInput, "z = 1");
  if (std::abs(std::abs(z) - 1.0) > kTol) throw Error(ErrorKind::NotUnitModulus, "|z| differs from 1");

  const std::size_t k = exponents.size();
  std::vector<std::complex<long double>> gens;
  for (long n : exponents) {
    const std::complex<long double> zl(z.real(), z.imag()), vl(v.real(), v.imag());
    gens.push_back(vl - std::pow(zl, static_cast<long double>(n)) * vl);
  }
  IntegerMatrix basis(k, IntegerVector(k + 2, Integer(0)));
  for (std::size_t i = 0; i < k; ++i) {
    basis[i][i] = 1;
    basis[i][k] = Integer(std::lround(static_cast<double>(gens[i].real() * kScale)));
    basis[i][k + 1] = Integer(std::lround(static_cast<double>(gens[i].imag() * kScale)));
  }
  detail::lll_reduce(basis);

  FgWitness out;
  for (const auto& row : basis) {
    std::vector<long> c(k);
    bool small = true, nonzero = false;
    for (std::size_t i = 0; i < k; ++i) {
      small = small && abs(row[i]) <= Integer(static_cast<long>(kMaxCoefficient));
      if (!small) break;
      c[i] = row[i].get_si();
      nonzero = nonzero || c[i] != 0;
    }
    if (!small || !nonzero) continue;
    std::complex<long double> sum = 0;
    for (std::size_t i = 0; i < k; ++i) sum += static_cast<long double>(c[i]) * gens[i];
    if (std::abs(sum) <= kTol * std::abs(v)) out.relations.push_back(std::move(c));
  }
  out.q_rank_estimate = static_cast<long>(k - out.relations.size());

  Eigen::Matrix2d gram = Eigen::Matrix2d::Zero();
  for (const auto& g : gens) {
    const Eigen::Vector2d x(static_cast<double>(g.real()), static_cast<double>(g.imag()));
    gram += x * x.transpose();
  }
  const Eigen::Vector2d eig = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(gram).eigenvalues();
  const int real_rank = (eig(1) > kTol * kTol ? 1 : 0) + (eig(0) > kTol * kTol * std::max(1.0, eig(1)) ? 1 : 0);
  out.discrete = out.q_rank_estimate <= 1 || (out.q_rank_estimate == 2 && real_rank == 2);
  out.invariant_line = std::abs(z.imag()) < kTol;
  return out;
}

FgWitness fg_dense_witness(const GaussianRational& z, const GaussianRational& v, const std::vector<long>& exponents) {
  if (exponents.empty()) throw Error(ErrorKind::DegenerateInput, "exponent list is empty");
  if (v.is_zero()) throw Error(ErrorKind::DegenerateInput, "v = 0");
  if (z == GaussianRational(1)) throw Error(ErrorKind::DegenerateInput, "z = 1");
  if (z.norm() != 1) throw Error(ErrorKind::NotUnitModulus, to_string(z));
  GenSet gens{2, {}};
  for (long n : exponents) {
    const GaussianRational g = v - pow(z, n) * v;
    gens.generators.push_back({g.re, g.im});
  }
  FgWitness out;
  out.exact = true;
  out.q_rank_estimate = static_cast<long>(hnf(gens).rank());
  // Integer relations: kernel of the 2 x k matrix with denominators cleared.
  Integer common = 1;
  for (const auto& g : gens.generators) common = lcm(common, lcm(g[0].get_den(), g[1].get_den()));
  IntegerMatrix m(2, IntegerVector(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    for (std::size_t row = 0; row < 2; ++row) {
      const Rational scaled = gens.generators[i][row] * common;
      m[row][i] = scaled.get_num();
    }
  }
  for (const auto& rel : integer_kernel(m, exponents.size())) {
    std::vector<long> c;
    for (const auto& x : rel) c.push_back(x.fits_slong_p() ? x.get_si() : 0);
    out.relations.push_back(std::move(c));
  }
  // A finitely generated subgroup of Q^2 sits in (1/d)Z^2.
  out.discrete = true;
  out.invariant_line = z.im == 0;
  return out;
}

nlohmann::json to_json(const SemidirectElement& g) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : g.v) v.push_back({x.real(), x.imag()});
  return {{"v", v}, {"component", g.component}, {"angles", g.angles}};
}

nlohmann::json to_json(const EllipticityReport& r) {
  nlohmann::json by = nlohmann::json::array();
  for (const auto& [label, d] : r.max_distance_by_component) by.push_back({{"component", label}, {"max_distance", d}});
  nlohmann::json out{{"verdict", r.verdict},
                     {"samples", r.samples},
                     {"seed", r.seed},
                     {"witness_distance", r.witness_distance},
                     {"components", by}};
  out["witness"] = r.witness ? to_json(*r.witness) : nlohmann::json(nullptr);
  return out;
}

nlohmann::json to_json(const FgWitness& w) {
  return {{"q_rank_estimate", w.q_rank_estimate},
          {"discrete", w.discrete},
          {"invariant_line", w.invariant_line},
          {"relations", w.relations},
          {"exact", w.exact}};
}

}  // namespace dlab
