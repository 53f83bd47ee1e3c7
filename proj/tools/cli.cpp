#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "dlab/action/conditions.hpp"
#include "dlab/error.hpp"
#include "dlab/exact/algebraic.hpp"
#include "dlab/exact/literal.hpp"
#include "dlab/lattice/chain.hpp"
#include "dlab/lattice/hnf.hpp"
#include "dlab/lie/algebra.hpp"
#include "dlab/sim/semidirect.hpp"

#ifndef DLAB_VERSION
#define DLAB_VERSION "0.0.0"
#endif

namespace dlab::cli {

namespace {

using nlohmann::json;

// Inputs that feed the digest, in the order they were read.
struct Inputs {
  std::vector<std::pair<std::string, std::string>> items;

  std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    items.emplace_back("file", buf.str());
    return buf.str();
  }
  json read_json(const std::string& path) {
    const std::string text = read_file(path);
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
  }
  void literal(const std::string& name, const std::string& value) { items.emplace_back(name, value); }

  std::string digest() const {
    std::string data;
    for (const auto& [kind, value] : items) {
      data += kind;
      data += '\0';
      data += std::to_string(value.size());
      data += '\0';
      data += value;
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
      throw Error(ErrorKind::InvariantFailure, "sha256 failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return "sha256:" + hex.str();
  }
};

struct Options {
  std::string format = "text";
  std::string out;
  std::string spec, algebra, j_file, k_file, z, v, theta, input, component, kind = "derived", condition = "c",
                                                                         exponents = "1,2,3,4,5";
  std::uint64_t seed = 1;
  std::size_t samples = 400;
  double delta = 0.1;
  unsigned chain_bound = kDefaultChainBound;
  std::size_t n = 10000;
};

std::string dump_scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void write_text(std::ostream& os, const json& report) {
  os << "command: " << report["command"].get<std::string>() << "\n";
  for (const auto& [key, value] : report["verdicts"].items()) os << key << " = " << dump_scalar(value) << "\n";
  if (report.contains("seed")) os << "seed: " << report["seed"].dump() << "\n";
  os << "inputs_digest: " << report["inputs_digest"].get<std::string>() << "\n";
  os << "version: " << report["version"].get<std::string>() << "\n";
}

CompactGroupSpec load_spec(Inputs& in, const std::string& path) {
  if (path.empty()) throw Error(ErrorKind::ParseError, "--spec is required");
  return spec_from_json(in.read_json(path));
}

LieAlgebraSC load_algebra(Inputs& in, const std::string& path) {
  if (path.empty()) throw Error(ErrorKind::ParseError, "--algebra is required");
  json j = in.read_json(path);
  LieAlgebraSC a;
  try {
    a = algebra_from_json(j);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  require_valid(a);
  return a;
}

AlgebraicScalar load_scalar(Inputs& in, const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "--z is required");
  in.literal("z", text);
  return parse_scalar(text);
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long x = 0;
    try {
      x = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorKind::ParseError, "bad integer list: " + text);
    out.push_back(x);
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty integer list");
  return out;
}

std::complex<double> parse_complex_pair(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t a = 0, b = 0;
    const std::string re = text.substr(0, comma), im = text.substr(comma + 1);
    const double x = std::stod(re, &a), y = std::stod(im, &b);
    if (a == re.size() && b == im.size()) return {x, y};
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::ParseError, "expected RE,IM: " + text);
}

std::string determinant_text(const CompactGroupSpec& spec, std::size_t c, bool restricted) {
  const std::size_t r = spec.weights.torus_rank;
  const LongMatrix b = restricted ? fixed_subtorus(spec.components[c].torus_aut) : identity_long(r);
  return to_string(generic_det(spec, c, b));
}

json check_verdicts(const CompactGroupSpec& spec, const std::string& condition) {
  if (condition != "b" && condition != "c" && condition != "d")
    throw Error(ErrorKind::ParseError, "--condition must be b, c or d");
  const bool restricted = condition == "d";
  const auto verdicts = restricted ? cond_d_check(spec) : cond_c_check(spec);
  json comps = json::array();
  bool all = true;
  for (std::size_t c = 0; c < verdicts.size(); ++c) {
    all = all && verdicts[c].second;
    comps.push_back({{"component", verdicts[c].first},
                     {"holds", verdicts[c].second},
                     {"determinant", determinant_text(spec, c, restricted)}});
  }
  return {{"almost_elliptic", all}, {"condition", condition}, {"components", comps}};
}

json series_json(const std::vector<Subspace>& terms) {
  json out = json::array();
  for (const auto& s : terms) out.push_back(to_json(s));
  return out;
}

GenSet gens_from_json(const json& j) {
  const json& rows = j.is_object() ? j.at("generators") : j;
  GenSet g;
  if (j.is_object() && j.contains("ambient_dim")) g.ambient_dim = j.at("ambient_dim").get<std::size_t>();
  else if (!rows.empty()) g.ambient_dim = rows.at(0).size();
  for (const auto& row : rows) {
    if (row.size() != g.ambient_dim) throw Error(ErrorKind::DimensionMismatch, "generator has the wrong length");
    RationalVector v;
    for (const auto& x : row) v.push_back(rational_from_json(x));
    g.generators.push_back(std::move(v));
  }
  return g;
}

json fg_verdicts(const AlgebraicScalar& z) {
  json out{{"scalar", describe(z)},
           {"minpoly", to_string(minimal_polynomial(z))},
           {"degree", z.degree()},
           {"unit_modulus", unit_modulus(z)},
           {"algebraic_integer", is_algebraic_integer(z)}};
  out["root_of_unity"] = out["unit_modulus"].get<bool>() ? json(is_root_of_unity(z)) : json(nullptr);
  out["fg"] = fg_derived_criterion(z);
  return out;
}

}  // namespace

Theta parse_theta(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty theta");
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    text.erase(0, 1);
  }
  // Exact rational or terminating decimal first.
  if (text.find_first_not_of("0123456789/.") == std::string::npos) {
    Rational q = parse_rational(text);
    if (negative) q = -q;
    return {q.get_d(), true, to_string(q)};
  }
  double base = 0;
  std::string rest;
  if (text.rfind("sqrt(", 0) == 0) {
    const auto close = text.find(')');
    if (close == std::string::npos) throw Error(ErrorKind::ParseError, "unbalanced sqrt(: " + raw);
    const Rational k = parse_rational(text.substr(5, close - 5));
    if (k < 0) throw Error(ErrorKind::ParseError, "sqrt of a negative number: " + raw);
    base = std::sqrt(k.get_d());
    rest = text.substr(close + 1);
  } else if (text.rfind("golden", 0) == 0) {
    base = std::numbers::phi;
    rest = text.substr(6);
  } else if (text.rfind("pi", 0) == 0) {
    base = std::numbers::pi;
    rest = text.substr(2);
  } else {
    throw Error(ErrorKind::ParseError, "unrecognised theta: " + raw);
  }
  if (!rest.empty()) {
    if (rest[0] != '/' && rest[0] != '*') throw Error(ErrorKind::ParseError, "unrecognised theta: " + raw);
    const Rational factor = parse_rational(rest.substr(1));
    if (rest[0] == '/' && factor == 0) throw Error(ErrorKind::ParseError, "division by zero: " + raw);
    base = rest[0] == '/' ? base / factor.get_d() : base * factor.get_d();
  }
  return {negative ? -base : base, false, ""};
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decision procedures for Lie algebras and semidirect products", "dlab"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--out", o.out, "write the report to this file");
  };

  auto* check = app.add_subcommand("check", "almost-ellipticity verdict for a group spec");
  check->add_option("--spec", o.spec)->required();
  check->add_option("--condition", o.condition, "b, c (same test as b) or d")->check(CLI::IsMember({"b", "c", "d"}));
  auto* audit = app.add_subcommand("audit", "compare conditions c and d componentwise");
  audit->add_option("--spec", o.spec)->required();
  auto* reduce = app.add_subcommand("reduce", "restrict to the cyclic subgroup of one component");
  reduce->add_option("--spec", o.spec)->required();
  reduce->add_option("--component", o.component)->required();
  auto* classify = app.add_subcommand("classify-A", "Lie algebra classifier");
  classify->add_option("--algebra", o.algebra)->required();
  auto* series = app.add_subcommand("series", "derived or lower central series");
  series->add_option("--algebra", o.algebra)->required();
  series->add_option("--kind", o.kind)->check(CLI::IsMember({"derived", "lower-central"}));
  auto* splice = app.add_subcommand("splice", "nilpotency splice check for ideals j and k");
  splice->add_option("--algebra", o.algebra)->required();
  splice->add_option("--j", o.j_file)->required();
  splice->add_option("--k", o.k_file)->required();
  auto* fg = app.add_subcommand("fg", "finite generation of the derived module for a scalar");
  fg->add_option("--z", o.z)->required();
  auto* chain = app.add_subcommand("chain", "truncated derived module chain");
  chain->add_option("--z", o.z)->required();
  chain->add_option("--chain-bound", o.chain_bound)->check(CLI::Range(1u, 200u));
  auto* hnf_cmd = app.add_subcommand("hnf", "canonical form of a subgroup of Q^n");
  hnf_cmd->add_option("--input", o.input, "JSON list of rational vectors, or {\"generators\": ...}")->required();
  auto* validate_cmd = app.add_subcommand("validate", "check a spec or algebra file");
  validate_cmd->add_option("--spec", o.spec);
  validate_cmd->add_option("--algebra", o.algebra);

  auto* sim = app.add_subcommand("sim", "numeric cross-checks");
  sim->require_subcommand(1);
  auto* ell = sim->add_subcommand("ellipticity", "sampled elliptic distance");
  ell->add_option("--spec", o.spec)->required();
  ell->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  ell->add_option("--delta", o.delta)->check(CLI::PositiveNumber);
  ell->add_option("--seed", o.seed);
  auto* orbit = sim->add_subcommand("orbit", "largest gap of n theta mod 1");
  orbit->add_option("--theta", o.theta)->required();
  orbit->add_option("--n", o.n)->check(CLI::PositiveNumber);
  auto* witness = sim->add_subcommand("fg-witness", "rank and discreteness of span{v - z^n v}");
  witness->add_option("--z", o.z, "RE,IM or a Gaussian rational literal")->required();
  witness->add_option("--v", o.v, "RE,IM or a Gaussian rational literal (default 1)");
  witness->add_option("--exponents", o.exponents, "comma separated");

  for (auto* s : {check, audit, reduce, classify, series, splice, fg, chain, hnf_cmd, validate_cmd, ell, orbit, witness})
    common(s);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  Inputs in;
  json report;
  std::optional<std::uint64_t> seed;
  try {
    json v;
    std::string command;
    if (check->parsed()) {
      command = "check";
      v = check_verdicts(load_spec(in, o.spec), o.condition);
    } else if (audit->parsed()) {
      command = "audit";
      v = to_json(equivalence_audit(load_spec(in, o.spec)));
    } else if (reduce->parsed()) {
      command = "reduce";
      in.literal("component", o.component);
      const auto reduced = monothetic_reduction(load_spec(in, o.spec), o.component);
      v = check_verdicts(reduced, "c");
      v["component"] = o.component;
      v["reduced_spec"] = to_json(reduced);
    } else if (classify->parsed()) {
      command = "classify-A";
      const auto a = load_algebra(in, o.algebra);
      const auto r = theorem_A_classifier(a);
      v = {{"verdict", r.verdict}, {"perfect_core", to_json(r.perfect_core)}, {"quotient_nilpotent", r.quotient_nilpotent}};
    } else if (series->parsed()) {
      command = "series";
      in.literal("kind", o.kind);
      const auto a = load_algebra(in, o.algebra);
      const auto terms = o.kind == "derived" ? derived_series(a) : lower_central_series(a);
      json dims = json::array();
      for (const auto& t : terms) dims.push_back(t.dim());
      v = {{"kind", o.kind},
           {"dims", dims},
           {"terms", series_json(terms)},
           {o.kind == "derived" ? "solvable" : "nilpotent", terms.back().is_zero()}};
    } else if (splice->parsed()) {
      command = "splice";
      const auto a = load_algebra(in, o.algebra);
      const auto j = subspace_from_json(a, in.read_json(o.j_file));
      const auto k = subspace_from_json(a, in.read_json(o.k_file));
      const auto r = splice_check(a, j, k);
      v = {{"hypotheses_hold", r.hypotheses_hold}, {"conclusion_holds", r.conclusion_holds},
           {"j_ideal", r.j_ideal},                 {"k_ideal", r.k_ideal},
           {"nested", r.nested},                   {"j_nilpotent", r.j_nilpotent},
           {"k_nilpotent", r.k_nilpotent},         {"quotient_nilpotent", r.quotient_nilpotent}};
    } else if (fg->parsed()) {
      command = "fg";
      v = fg_verdicts(load_scalar(in, o.z));
    } else if (chain->parsed()) {
      command = "chain";
      in.literal("chain-bound", std::to_string(o.chain_bound));
      const auto z = load_scalar(in, o.z);
      v = to_json(derived_module_chain(z, o.chain_bound));
      v["fg"] = fg_derived_criterion(z);
    } else if (hnf_cmd->parsed()) {
      command = "hnf";
      json j = in.read_json(o.input);
      GenSet g;
      try {
        g = gens_from_json(j);
      } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, o.input + ": " + e.what());
      }
      const auto form = hnf(g);
      v = to_json(form);
      v["rank"] = form.rank();
      v["covolume"] = to_string(form.covolume());
    } else if (validate_cmd->parsed()) {
      command = "validate";
      if (o.spec.empty() == o.algebra.empty()) throw Error(ErrorKind::ParseError, "give exactly one of --spec, --algebra");
      if (!o.spec.empty()) {
        const auto spec = load_spec(in, o.spec);
        v = {{"ok", true}, {"kind", "spec"}, {"warnings", validate(spec).warnings}};
      } else {
        load_algebra(in, o.algebra);
        v = {{"ok", true}, {"kind", "algebra"}};
      }
    } else if (ell->parsed()) {
      command = "sim ellipticity";
      SimConfig config;
      config.samples = o.samples;
      config.delta = o.delta;
      config.seed = o.seed;
      check_config(config);
      in.literal("config", std::to_string(o.samples) + " " + json(o.delta).dump());
      v = to_json(empirical_ellipticity(load_spec(in, o.spec), config));
      v.erase("seed");
      v.erase("samples");
      v["samples"] = o.samples;
      v["delta"] = o.delta;
      seed = o.seed;
    } else if (orbit->parsed()) {
      command = "sim orbit";
      in.literal("theta", o.theta);
      in.literal("n", std::to_string(o.n));
      const Theta t = parse_theta(o.theta);
      v = {{"theta", t.value}, {"n", o.n}, {"exact", t.exact}};
      if (t.exact) {
        const Rational g = orbit_gap(parse_rational(t.rational), o.n);
        v["gap"] = g.get_d();
        v["gap_exact"] = to_string(g);
      } else {
        v["gap"] = orbit_gap(t.value, o.n);
      }
    } else if (witness->parsed()) {
      command = "sim fg-witness";
      in.literal("z", o.z);
      in.literal("v", o.v);
      in.literal("exponents", o.exponents);
      const auto exps = parse_long_list(o.exponents);
      if (o.z.find(',') != std::string::npos) {
        const auto vv = o.v.empty() ? std::complex<double>(1, 0) : parse_complex_pair(o.v);
        v = to_json(fg_dense_witness(parse_complex_pair(o.z), vv, exps));
      } else {
        const auto vv = o.v.empty() ? GaussianRational(1) : parse_gaussian(o.v);
        v = to_json(fg_dense_witness(parse_gaussian(o.z), vv, exps));
      }
    }
    report = {{"command", command}, {"inputs_digest", in.digest()}, {"verdicts", v}, {"version", DLAB_VERSION}};
    if (seed) report["seed"] = *seed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvariantFailure ? kExitInvariantFailure : kExitInvalidInput;
  } catch (const json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kExitInvariantFailure;
  }

  std::ostringstream rendered;
  if (o.format == "json") rendered << report.dump(2) << "\n";
  else write_text(rendered, report);
  if (o.out.empty()) {
    out << rendered.str();
  } else {
    std::ofstream file(o.out, std::ios::binary);
    file << rendered.str();
    if (!file) {
      err << "error: cannot write " << o.out << "\n";
      return kExitInvalidInput;
    }
  }
  return kExitOk;
}

}  // namespace dlab::cli
