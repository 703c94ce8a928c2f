// Copyright 2026 The taures Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "taures/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "taures/anderson.hpp"
#include "taures/lseries.hpp"
#include "taures/manifest.hpp"
#include "taures/pairing.hpp"

namespace taures {

namespace {

// An error tied to a place in some input.
struct Located {
  ErrorKind kind;
  std::string source;
  SourceLoc loc;
  std::string message;
};

int report(std::ostream& err, const Located& d) {
  err << error_prefix(d.kind) << ' ' << d.source << ':' << d.loc.line << ':'
      << d.loc.column << ": " << d.message << '\n';
  return exit_code(d.kind);
}

SourceLoc key_loc(const Manifest& m, const std::string& key) {
  auto it = m.locations.find(key);
  if (it != m.locations.end()) return it->second;
  it = m.locations.find("phi_t");
  return it != m.locations.end() ? it->second : SourceLoc{};
}

// The manifest key a failure is most likely about.
std::string blame_key(ErrorKind kind, const std::string& message) {
  if (kind == ErrorKind::kValidation) {
    if (message.find("comotive") != std::string::npos) return "comotive_basis";
    if (message.find("rank") != std::string::npos) return "rank";
    if (message.find("motive") != std::string::npos) return "motive_basis";
    if (message.rfind("theta", 0) == 0) return "theta";
    if (message.find("tau matrix") != std::string::npos) return "motive_basis";
  }
  if (kind == ErrorKind::kDomain && message.find("finite") != std::string::npos) {
    return "base";
  }
  return "phi_t";
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

SkewMatrix parse_vector(const Manifest& m, const std::string& text, bool column) {
  const std::size_t d = m.module.dim;
  const auto xs = parse_skew_row(text, manifest_scope(m));
  if (xs.size() != d) {
    throw ParseError("expected " + std::to_string(d) + " entries, found " +
                         std::to_string(xs.size()),
                     1, 1);
  }
  SkewMatrix v(m.module.field, column ? d : 1, column ? 1 : d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!xs[i].is_exact() || (!xs[i].coeffs().empty() && xs[i].coeffs().begin()->first < 0)) {
      throw ParseError("entries must lie in R[tau]", 1, 1);
    }
    (column ? v.at(i, 0) : v.at(0, i)) = xs[i];
  }
  return v;
}

void cmd_validate(const Manifest& m, std::ostream& out) {
  const ValidationReport rep = validate(m.module);
  if (!rep.ok) throw ValidationError(rep.failure);
  out << "valid: yes\n";
  out << "dim: " << m.module.dim << ", rank: " << m.module.rank() << '\n';
  out << "checks:";
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    out << (i == 0 ? " " : ", ") << rep.checks[i];
  }
  out << '\n';
}

void cmd_invert(const Manifest& m, std::int64_t order, const Limits& limits,
                std::ostream& out) {
  require_valid(m.module);
  out << phi_inverse_power(m.module, 1, order, limits).render() << '\n';
}

void cmd_gram(const Manifest& m, const Limits& limits, std::ostream& out) {
  require_valid(m.module);
  const GramMatrix g = gram(m.module, limits);
  const Perfectness p = check_perfectness(g);
  out << g.render() << '\n';
  out << "K = " << g.k_cutoff << ", b = " << measure_b(g) << ", det = " << p.det.render()
      << ", perfect = " << yes_no(p.perfect) << '\n';
  out << "weight bound |b*w| < 1: not checked (weights are not computed)\n";
}

bool cmd_perfectness(const Manifest& m, const Limits& limits, std::ostream& out) {
  require_valid(m.module);
  const Perfectness p = check_perfectness(gram(m.module, limits));
  out << "det = " << p.det.render() << '\n';
  out << "perfect = " << yes_no(p.perfect) << '\n';
  return p.perfect;
}

void cmd_lseries(const Manifest& m, std::optional<std::size_t> degree, std::ostream& out) {
  require_valid(m.module);
  const std::size_t n = degree ? *degree : m.ext_degree.value_or(1);
  std::optional<std::vector<Fq>> h;
  if (m.ext_modulus && m.ext_modulus->size() == n + 1) h = m.ext_modulus;
  const ExtField k = ExtField::make(m.module.field, n, h);
  const auto [mot, com] = module_tau_matrices(k, m.module);
  const LSeriesReport rep = lseries_report(k, mot, com, additive_matrix(k, m.module));
  std::vector<FqPoly::Term> terms;
  for (std::size_t i = 0; i < k.modulus().size(); ++i) terms.push_back({i, k.modulus()[i]});
  const FiniteField& f = *m.module.field;
  out << "k: F_" << f.q() << "[alpha]/("
      << render_fq_poly(f, FqPoly::from_terms(f, terms), "alpha") << ")\n";
  out << rep.render(f) << '\n';
}

struct ExampleArgs {
  std::string name;
  std::uint32_t q = 2;
  std::string modulus;
  std::string base = "perf-rational";
  std::string theta;
  std::size_t d = 2;
  std::string g = "1";
};

PerfElement flag_scalar(const std::string& text, ExprScope scope, int column) {
  scope.column = column;
  const SkewLaurent x = parse_skew_expr(text, scope);
  if (x.is_exact() && x.coeffs().empty()) return PerfElement::zero(scope.field);
  if (x.is_exact() && x.coeffs().size() == 1 && x.coeffs().begin()->first == 0) {
    return x.coeffs().begin()->second;
  }
  throw ParseError("expected a scalar", 1, column);
}

// `source` names the flag being read, for diagnostics.
void cmd_examples(const ExampleArgs& a, std::string& source, std::ostream& out) {
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!a.modulus.empty()) {
    source = "--modulus";
    const FieldPtr probe = field_for(a.q, std::nullopt);
    ExprScope s;
    s.field = FiniteField::prime(probe->p());
    const FqPoly h = parse_univariate(a.modulus, s, "z");
    std::vector<std::uint32_t> coeffs(h.degree() + 1);
    for (const auto& t : h.terms()) coeffs[t.exp] = t.coef.code;
    modulus = std::move(coeffs);
  }
  const FieldPtr field = field_for(a.q, modulus);
  BaseKind base = BaseKind::kPerfRational;
  if (a.base == "finite-field") {
    base = BaseKind::kFiniteField;
  } else if (a.base != "perf-rational") {
    throw DomainError("--base must be 'perf-rational' or 'finite-field'");
  }
  ExprScope scope;
  scope.field = field;
  scope.allow_z = field->m() > 1;
  const std::string theta_text =
      a.theta.empty() ? (base == BaseKind::kFiniteField ? "0" : "theta") : a.theta;
  source = "--theta";
  const PerfElement theta = flag_scalar(theta_text, scope, 1);
  if (base == BaseKind::kFiniteField && !theta.as_fq()) {
    throw DomainError("theta must lie in F_q over a finite base");
  }
  source = "<flags>";
  std::optional<AndersonModule> e;
  if (a.name == "carlitz") {
    e = builtin::carlitz(field, base, theta);
  } else if (a.name == "carlitz-tensor") {
    if (a.d == 0) throw DomainError("--d must be positive");
    e = builtin::carlitz_tensor(field, base, theta, a.d);
  } else if (a.name == "drinfeld") {
    source = "--g";
    std::vector<PerfElement> g;
    std::size_t start = 0;
    while (true) {
      const std::size_t bar = a.g.find('|', start);
      g.push_back(flag_scalar(a.g.substr(start, bar - start), scope, static_cast<int>(start) + 1));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    e = builtin::drinfeld(field, base, theta, g);
  } else if (a.name == "maurischat") {
    e = builtin::maurischat(field, base, theta);
  } else {
    throw DomainError("unknown example '" + a.name +
                      "' (expected carlitz, carlitz-tensor, drinfeld or maurischat)");
  }
  out << render_manifest(manifest_for(*e));
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return kExitParse;
    case ErrorKind::kValidation:
      return kExitValidation;
    case ErrorKind::kConvergence:
      return kExitConvergence;
    case ErrorKind::kPrecision:
      return kExitPrecision;
    default:
      return kExitFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Residue pairing for Anderson t-modules", "taures"};
  app.require_subcommand(1);
  Limits limits;
  app.add_option("--precision-cap", limits.precision_cap, "largest tau precision tried")
      ->check(CLI::PositiveNumber);
  app.add_option("--k-cap", limits.k_cap, "largest k1 searched")->check(CLI::PositiveNumber);

  std::string path;
  auto manifest_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("manifest", path, "manifest file, '-' for stdin")->required();
    return sub;
  };
  CLI::App* validate_cmd = manifest_command("validate", "check the module axioms");
  CLI::App* invert_cmd = manifest_command("invert", "print Phi(t)^-1");
  std::int64_t order = 8;
  invert_cmd->add_option("--order", order, "precision in sigma")->check(CLI::NonNegativeNumber);
  CLI::App* pair_cmd = manifest_command("pair", "pair a motive row with a comotive column");
  std::string m_text;
  std::string n_text;
  pair_cmd->add_option("--m", m_text, "row 'a | b | ...'")->required();
  pair_cmd->add_option("--n", n_text, "column 'a | b | ...'")->required();
  CLI::App* gram_cmd = manifest_command("gram", "Gram matrix on the declared bases");
  CLI::App* perf_cmd = manifest_command("perfectness", "certify perfectness");
  CLI::App* lseries_cmd = manifest_command("lseries", "Fitting ideals over F_q^n");
  std::optional<std::size_t> ext_degree;
  lseries_cmd->add_option("--ext-degree", ext_degree, "degree n of k over F_q")
      ->check(CLI::PositiveNumber);

  ExampleArgs ex;
  CLI::App* examples_cmd = app.add_subcommand("examples", "print a built-in manifest");
  examples_cmd->fallthrough();
  examples_cmd->add_option("name", ex.name, "carlitz, carlitz-tensor, drinfeld, maurischat")
      ->required();
  examples_cmd->add_option("--q", ex.q, "field order")->check(CLI::PositiveNumber);
  examples_cmd->add_option("--modulus", ex.modulus, "modulus of F_q over F_p in z");
  examples_cmd->add_option("--base", ex.base, "perf-rational or finite-field");
  examples_cmd->add_option("--theta", ex.theta, "image of t");
  examples_cmd->add_option("--d", ex.d, "tensor power");
  examples_cmd->add_option("--g", ex.g, "coefficients 'g_1 | ... | g_r'");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  if (examples_cmd->parsed()) {
    std::string source = "<flags>";
    try {
      cmd_examples(ex, source, out);
      return kExitOk;
    } catch (const ParseError& e) {
      return report(err, {e.kind(), source, {e.line(), e.column()}, e.what()});
    } catch (const Error& e) {
      return report(err, {e.kind(), source, {1, 1}, e.what()});
    }
  }

  std::string text;
  try {
    text = read_source(path);
  } catch (const Error& e) {
    return report(err, {e.kind(), path, {1, 1}, e.what()});
  }
  std::optional<Manifest> m;
  try {
    m = parse_manifest(text);
  } catch (const ParseError& e) {
    return report(err, {e.kind(), path, {e.line(), e.column()}, e.what()});
  }

  std::string source = path;
  try {
    if (validate_cmd->parsed()) {
      cmd_validate(*m, out);
    } else if (invert_cmd->parsed()) {
      cmd_invert(*m, order, limits, out);
    } else if (pair_cmd->parsed()) {
      source = "--m";
      const SkewMatrix mv = parse_vector(*m, m_text, false);
      source = "--n";
      const SkewMatrix nv = parse_vector(*m, n_text, true);
      source = path;
      require_valid(m->module);
      out << residue_pair(m->module, mv, nv, limits).render() << '\n';
    } else if (gram_cmd->parsed()) {
      cmd_gram(*m, limits, out);
    } else if (perf_cmd->parsed()) {
      if (!cmd_perfectness(*m, limits, out)) {
        throw ValidationError("the pairing is not perfect on the declared bases");
      }
    } else if (lseries_cmd->parsed()) {
      cmd_lseries(*m, ext_degree, out);
    }
  } catch (const ParseError& e) {
    return report(err, {e.kind(), source, {e.line(), e.column()}, e.what()});
  } catch (const Error& e) {
    const std::string key = blame_key(e.kind(), e.what());
    return report(err, {e.kind(), path, key_loc(*m, key), e.what()});
  }
  return kExitOk;
}

}  // namespace taures
