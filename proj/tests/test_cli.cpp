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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <iterator>
#include <sstream>

#include "families.hpp"
#include "taures/cli.hpp"
#include "taures/errors.hpp"
#include "taures/expr.hpp"
#include "taures/manifest.hpp"

using namespace taures;
using namespace taures::testing;

namespace {

std::string golden_path(const std::string& name) {
  return std::string(TAURES_GOLDEN_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

ParseError parse_failure(const std::string& text) {
  try {
    (void)parse_manifest(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("manifest parsed unexpectedly");
  return ParseError("", 0, 0);
}

const char* kCarlitz =
    "q: 3\n"
    "base: perf-rational\n"
    "theta: theta\n"
    "dim: 1\n"
    "phi_t:\n"
    "  row: theta + tau\n"
    "motive_basis:\n"
    "  row: 1\n"
    "comotive_basis:\n"
    "  col: 1\n";

TPoly random_tpoly(const FieldPtr& f) {
  TPoly r(f);
  for (int i = 0; i < 3; ++i) r += TPoly::monomial(random_perf(f, 2, 1), rng()() % 4);
  return r;
}

}  // namespace

TEST_CASE("skew expressions follow the operator order") {
  const auto f = FiniteField::prime(3);
  const PerfElement th = PerfElement::theta(f);
  CHECK(parse_skew_expr("tau * theta", f) == SkewLaurent::monomial(1, th));
  const SkewLaurent swapped = parse_skew_expr("theta * tau", f);
  CHECK(swapped == SkewLaurent::monomial(1, th.frobenius(-1)));
  CHECK(swapped.render() == "tau * theta^(1/3)");
  CHECK(parse_skew_expr("(theta + tau)^2", f) ==
        SkewLaurent::from_left_coeffs(
            f, {{th * th, 0}, {th.frobenius(1) + th, 1}, {PerfElement::one(f), 2}}));
  CHECK(parse_skew_expr("sigma * tau", f) == SkewLaurent::one(f));
  CHECK(parse_skew_expr("-theta^2 + 4", f) ==
        SkewLaurent::scalar(PerfElement::one(f) - th * th));
  CHECK(parse_skew_expr("(theta + 1)/theta", f) ==
        SkewLaurent::scalar((th + PerfElement::one(f)) / th));
  CHECK(parse_skew_expr("tau^0", f) == SkewLaurent::one(f));
  CHECK(parse_skew_expr("1 + O(sigma^4)", f) ==
        SkewLaurent::one(f) + SkewLaurent::unknown_below(f, -3));
  CHECK(parse_skew_expr("O(tau)", f).render() == "O(tau)");
  CHECK(parse_skew_expr("O(1)", f).render() == "O(1)");

  const auto f4 = field_q(4);
  const SkewLaurent half = parse_skew_expr("theta^(1/2)", f4);
  CHECK(half * half == SkewLaurent::scalar(PerfElement::theta(f4)));
  CHECK(parse_skew_expr("z^2 + z", f4) == SkewLaurent::one(f4));
  CHECK(theta_root(f4, 3, 8) * theta_root(f4, 1, 8) == theta_root(f4, 1, 2));
}

TEST_CASE("expression rendering round trips") {
  for (std::uint32_t q : {2u, 3u, 4u, 9u}) {
    const FieldPtr f = q == 9 ? FiniteField::make(3, {1, 0, 1}) : field_q(q);
    ExprScope scope;
    scope.field = f;
    scope.allow_z = f->m() > 1;
    for (int it = 0; it < 250; ++it) {
      SkewLaurent x = random_skew(f, -3, 3, 1 + it % 4, 2, 2);
      if (it % 3 == 0) x = x.truncated(-static_cast<std::int64_t>(it % 5));
      const std::string text = x.render();
      const SkewLaurent y = parse_skew_expr(text, scope);
      CHECK_MESSAGE(y == x, text);
      CHECK(y.render() == text);

      const TPoly a = random_tpoly(f);
      const TPoly b = parse_tpoly_expr(a.render(), scope);
      CHECK_MESSAGE(b == a, a.render());
      CHECK(b.render() == a.render());
    }
  }
}

TEST_CASE("expression errors carry locations") {
  const auto f = FiniteField::prime(3);
  ExprScope scope;
  scope.field = f;
  scope.line = 4;
  scope.column = 10;
  auto error_of = [&](const std::string& text) {
    try {
      (void)parse_skew_expr(text, scope);
    } catch (const ParseError& e) {
      return std::make_tuple(std::string(e.what()), e.line(), e.column());
    }
    return std::make_tuple(std::string("no error"), 0, 0);
  };
  CHECK(error_of("theta + ") == std::make_tuple(std::string("unexpected end of input"), 4, 18));
  CHECK(error_of("z + 1") ==
        std::make_tuple(std::string("'z' needs a declared field modulus"), 4, 10));
  CHECK(error_of("1 + x") == std::make_tuple(std::string("unknown symbol 'x'"), 4, 14));
  CHECK(error_of("tau / theta") ==
        std::make_tuple(std::string("'/' needs a numerator free of tau and sigma"), 4, 10));
  CHECK(error_of("theta / (1 + tau)") ==
        std::make_tuple(std::string("'/' needs a divisor free of tau and sigma"), 4, 18));
  CHECK(error_of("1/(theta - theta)") == std::make_tuple(std::string("division by zero"), 4, 11));
  CHECK(std::get<0>(error_of("theta^(1/2)")) == "exponent denominator 2 is not a power of 3");
  CHECK(std::get<0>(error_of("O(tau + 1)")) == "O(...) needs a power of tau or sigma");
  CHECK(std::get<0>(error_of("theta ; 1")) == "unexpected character ';'");
  CHECK(std::get<0>(error_of("tau^-1")) == "expected a non-negative integer exponent");
  CHECK(std::get<0>(error_of("tau^2^2")) == "chained '^' needs parentheses");
  CHECK(std::get<0>(error_of("(tau")) == "expected ')' but found 'end of input'");
  CHECK(std::get<0>(error_of("")) == "empty expression");
  CHECK(std::get<0>(error_of("tau^99999999")) == "exponent 99999999 is too large");
  CHECK_THROWS_AS(parse_tpoly_expr("t + tau", scope), ParseError);
  CHECK_THROWS_AS(parse_tpoly_expr("1/t", scope), ParseError);
  CHECK_THROWS_AS(parse_tpoly_expr("O(t)", scope), ParseError);
  CHECK(parse_univariate("alpha^2 - 1", scope, "alpha") ==
        FqPoly::from_terms(*f, {{0, f->from_int(-1)}, {2, f->one()}}));
  CHECK_THROWS_AS(parse_univariate("theta", scope, "alpha"), ParseError);
}

TEST_CASE("manifest parsing") {
  SUBCASE("maurischat rows") {
    const std::string text =
        "q: 3\n"
        "base: perf-rational\n"
        "theta: theta\n"
        "dim: 2\n"
        "phi_t:\n"
        "  row: theta + tau^2 | tau^3\n"
        "  row: 1 + tau | theta + tau^2\n"
        "motive_basis:\n"
        "  row: 0 | tau\n"
        "  row: 0 | 1\n"
        "  row: 1 | 0\n"
        "comotive_basis:\n"
        "  col: tau | 0\n"
        "  col: 1 | 0\n"
        "  col: 0 | 1\n";
    const Manifest m = parse_manifest(text);
    CHECK(validate(m.module).ok);
    const auto f = FiniteField::prime(3);
    const auto ref = builtin::maurischat(f, BaseKind::kPerfRational, PerfElement::theta(f));
    CHECK(m.module.phi_t == ref.phi_t);
    CHECK(m.module.phi_t.render() == "theta + tau^2 | tau^3\n1 + tau | theta + tau^2");
    CHECK(m.module.rank() == 3);
    CHECK(m.locations.at("phi_t").line == 5);
  }
  SUBCASE("F_4 arithmetic") {
    const Manifest m = parse_manifest(
        "q: 4\nmodulus: z^2 + z + 1\nbase: finite-field\ntheta: z\ndim: 1\n"
        "phi_t:\n  row: theta + tau\nmotive_basis:\n  row: 1\ncomotive_basis:\n  col: 1\n"
        "ext_modulus: alpha^2 + alpha + z\n");
    const FiniteField& f = *m.module.field;
    CHECK(f.q() == 4);
    const Fq z = f.generator();
    CHECK(f.mul(z, z) == f.add(z, f.one()));
    CHECK(m.module.theta.as_fq() == z);
    CHECK(m.ext_degree == 2U);
    CHECK(validate(m.module).ok);
  }
  SUBCASE("comments, blank lines and CRLF") {
    std::string text = "# Carlitz\r\n\r\n";
    text += kCarlitz;
    text += "rank: 1  # declared\n";
    const Manifest m = parse_manifest(text);
    CHECK(m.module.rank_hint == 1U);
    CHECK(m.locations.at("q").line == 3);
  }
  SUBCASE("finite base substitutes theta") {
    const Manifest m = parse_manifest(
        "q: 5\nbase: finite-field\ntheta: 3\ndim: 1\nphi_t:\n  row: theta + theta*tau\n"
        "motive_basis:\n  row: 1\ncomotive_basis:\n  col: 1\n");
    const auto f = m.module.field;
    const PerfElement three = PerfElement::from_int(f, 3);
    CHECK(m.module.phi_t.at(0, 0) ==
          SkewLaurent::scalar(three) + SkewLaurent::monomial(1, three));
  }
}

TEST_CASE("manifest errors") {
  auto expect = [](const std::string& text, const std::string& msg, int line, int col) {
    const ParseError e = parse_failure(text);
    CHECK(std::string(e.what()) == msg);
    CHECK(e.line() == line);
    CHECK(e.column() == col);
  };
  const std::string tail =
      "dim: 1\nphi_t:\n  row: theta + tau\nmotive_basis:\n  row: 1\ncomotive_basis:\n"
      "  col: 1\n";
  expect("q: 3\nbase: perf-rational\ntheta: theta\ndim: 1\nphi_t:\n  row: sigma\n"
         "motive_basis:\n  row: 1\ncomotive_basis:\n  col: 1\n",
         "phi(t) must lie in R[tau]", 6, 8);
  expect("q: 6\nbase: perf-rational\ntheta: theta\n" + tail, "q = 6 is not a prime power",
         1, 4);
  expect("q: 4\nmodulus: z^2 + 1\nbase: perf-rational\ntheta: theta\n" + tail,
         "field modulus is reducible over F_2", 2, 10);
  expect("q: 4\nmodulus: z^3 + z + 1\nbase: perf-rational\ntheta: theta\n" + tail,
         "modulus must have degree 2 for q = 4", 2, 10);
  expect("q: 3\nbase: perf-rational\ntheta: z\n" + tail, "'z' needs a declared field modulus",
         3, 8);
  expect("q: 3\nbase: perf-rational\ntheta: tau\n" + tail, "theta must be a scalar", 3, 8);
  expect("q: 3\nbase: finite-field\ntheta: theta\n" + tail,
         "theta must lie in F_q over a finite base", 3, 8);
  expect("q: 3\nbase: rational\ntheta: theta\n" + tail,
         "base must be 'perf-rational' or 'finite-field'", 2, 7);
  expect("q: 3\nbase: perf-rational\n" + tail, "missing key 'theta'", 1, 1);
  expect("q: 3\nq: 3\n", "duplicate key 'q'", 2, 1);
  expect("q: 3\ncolour: red\n", "unknown key 'colour'", 2, 1);
  expect("q: 3\n  row: 1\n", "'row:' outside a block", 2, 3);
  expect("q: 3\nbase perf-rational\n", "expected 'key: value'", 2, 1);
  expect("q: 3\nbase: perf-rational\ntheta: theta\ndim: 0\n", "dim must be a positive integer",
         4, 6);
  expect("q: 3\nbase: perf-rational\ntheta: theta\ndim: 2\nphi_t:\n  row: theta | tau\n",
         "phi_t has 1 rows, expected 2", 5, 1);
  expect("q: 3\nbase: perf-rational\ntheta: theta\ndim: 2\nphi_t:\n  row: theta | tau\n"
         "  row: 1 |  \n",
         "empty entry", 7, 11);
  expect(std::string(kCarlitz) + "comotive_basis:\n", "duplicate key 'comotive_basis'", 11, 1);
  expect("q: 3\nbase: perf-rational\ntheta: theta\ndim: 1\nphi_t:\n  row: theta + tau\n"
         "motive_basis:\n  col: 1\n",
         "expected 'row:' lines in motive_basis", 8, 3);
  expect("q: 3\nbase: perf-rational\ntheta: theta\ndim: 1\nphi_t:\n  row: theta + tau\n"
         "motive_basis:\n  row: sigma\ncomotive_basis:\n  col: 1\n",
         "motive_basis entries must lie in R[tau]", 8, 8);
  expect(std::string(kCarlitz) + "tau_matrix_motive:\n  row: t | 1\n",
         "tau_matrix_motive row has 2 entries, expected 1", 12, 8);
  expect(std::string(kCarlitz) + "ext_degree: 2\next_modulus: alpha^3 - alpha + 1\n",
         "ext_modulus has degree 3 but ext_degree is 2", 12, 14);
  expect(std::string(kCarlitz) + "ext_modulus: alpha^2 - 1\n",
         "extension modulus must be monic and irreducible over F_3", 11, 14);
}

TEST_CASE("manifests round trip") {
  for (const char* name :
       {"carlitz_q2", "carlitz_q3", "carlitz_q4", "carlitz_tensor_d1", "carlitz_tensor_d2",
        "carlitz_tensor_d3", "carlitz_tensor_d4", "carlitz_tensor_d5", "drinfeld_r1",
        "drinfeld_r2", "drinfeld_r3", "drinfeld_r4", "maurischat_q2", "maurischat_q3",
        "carlitz_f2", "drinfeld_f3"}) {
    const std::string text = slurp(golden_path(std::string(name) + ".manifest"));
    const Manifest m = parse_manifest(text);
    CHECK_MESSAGE(render_manifest(m) == text, name);
    CHECK(validate(m.module).ok);
  }
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = FiniteField::prime(q);
    for (int it = 0; it < 10; ++it) {
      Manifest m = manifest_for(random_drinfeld(f, 1 + it % 4, true));
      m.ext_degree = 2;
      const std::string text = render_manifest(m);
      const Manifest back = parse_manifest(text);
      CHECK(back.module.phi_t == m.module.phi_t);
      CHECK(*back.module.tau_comotive == *m.module.tau_comotive);
      CHECK(render_manifest(back) == text);
    }
  }
}

TEST_CASE("cli goldens") {
  struct Example {
    const char* name;
    std::vector<std::string> args;
  };
  const std::vector<Example> examples{
      {"carlitz_q2", {"carlitz", "--q", "2"}},
      {"carlitz_q3", {"carlitz", "--q", "3"}},
      {"carlitz_q4", {"carlitz", "--q", "4"}},
      {"carlitz_tensor_d1", {"carlitz-tensor", "--q", "3", "--d", "1"}},
      {"carlitz_tensor_d2", {"carlitz-tensor", "--q", "3", "--d", "2"}},
      {"carlitz_tensor_d3", {"carlitz-tensor", "--q", "3", "--d", "3"}},
      {"carlitz_tensor_d4", {"carlitz-tensor", "--q", "3", "--d", "4"}},
      {"carlitz_tensor_d5", {"carlitz-tensor", "--q", "3", "--d", "5"}},
      {"drinfeld_r1", {"drinfeld", "--q", "3", "--g", "1"}},
      {"drinfeld_r2", {"drinfeld", "--q", "3", "--g", "1 | theta"}},
      {"drinfeld_r3", {"drinfeld", "--q", "3", "--g", "theta | 0 | theta + 1"}},
      {"drinfeld_r4", {"drinfeld", "--q", "2", "--g", "1 | theta | 0 | 1/theta"}},
      {"maurischat_q2", {"maurischat", "--q", "2"}},
      {"maurischat_q3", {"maurischat", "--q", "3"}},
  };
  for (const auto& ex : examples) {
    std::vector<std::string> args{"examples"};
    args.insert(args.end(), ex.args.begin(), ex.args.end());
    const CliResult manifest = cli(args);
    CHECK(manifest.code == 0);
    const std::string path = golden_path(std::string(ex.name) + ".manifest");
    CHECK_MESSAGE(manifest.out == slurp(path), ex.name);
    const CliResult first = cli({"gram", path});
    const CliResult second = cli({"gram", path});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK_MESSAGE(first.out == slurp(golden_path(std::string(ex.name) + ".gram")), ex.name);
  }
  const CliResult l2 = cli({"lseries", golden_path("carlitz_f2.manifest"), "--ext-degree", "2"});
  CHECK(l2.out == slurp(golden_path("carlitz_f2.lseries")));
  CHECK(l2.out.find("motive: T^2 + t^2\n") != std::string::npos);
  const CliResult l3 = cli({"lseries", golden_path("drinfeld_f3.manifest"), "--ext-degree", "3"});
  CHECK(l3.out == slurp(golden_path("drinfeld_f3.lseries")));
}

TEST_CASE("cli commands") {
  const std::string carlitz3 = golden_path("carlitz_q3.manifest");
  CHECK(cli({"pair", carlitz3, "--m", "1", "--n", "1"}).out == "-1 dt\n");
  CHECK(cli({"pair", carlitz3, "--m", "tau", "--n", "1"}).out == "(-t + theta^3) dt\n");
  CHECK(cli({"invert", carlitz3, "--order", "3"}).out ==
        "sigma^3 * theta^12 - sigma^2 * theta^3 + sigma + O(sigma^4)\n");
  const CliResult v = cli({"validate", golden_path("maurischat_q3.manifest")});
  CHECK(v.code == 0);
  CHECK(v.out == "valid: yes\ndim: 2, rank: 3\nchecks: shape, phi(t) in R[tau], nilpotency, bases\n");
  CHECK(cli({"perfectness", carlitz3}).out == "det = -1\nperfect = yes\n");
  const CliResult g = cli({"gram", golden_path("maurischat_q2.manifest")});
  CHECK(g.out ==
        "[theta^2 + theta + 1 | 1 | theta^2 + theta]\n"
        "[1 | 0 | 1]\n"
        "[theta^2 + theta | 1 | theta^2 + theta] dt\n"
        "K = 8, b = 0, det = 1, perfect = yes\n"
        "weight bound |b*w| < 1: not checked (weights are not computed)\n");
  const CliResult b = cli({"gram", golden_path("drinfeld_r2.manifest")});
  CHECK(b.out.find("b = 1,") != std::string::npos);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli exit codes and diagnostics") {
  const std::string dir = TAURES_GOLDEN_DIR;
  const CliResult missing = cli({"validate", dir + "/no_such_file"});
  CHECK(missing.code == kExitFailure);
  CHECK(missing.err.rfind("error[domain] " + dir + "/no_such_file:1:1: cannot read", 0) == 0);

  const CliResult bad_flag = cli({"pair", golden_path("carlitz_q3.manifest"), "--m", "tau +",
                                  "--n", "1"});
  CHECK(bad_flag.code == kExitParse);
  CHECK(bad_flag.err == "error[parse] --m:1:6: unexpected end of input\n");
  const CliResult count = cli({"pair", golden_path("carlitz_q3.manifest"), "--m", "1 | 1",
                               "--n", "1"});
  CHECK(count.code == kExitParse);

  const CliResult conv = cli({"gram", golden_path("carlitz_tensor_d3.manifest"), "--k-cap", "2"});
  CHECK(conv.code == kExitConvergence);
  CHECK(conv.err.find("error[convergence] ") == 0);
  CHECK(conv.err.find(":6:1: convergence not certified within k cap 2") != std::string::npos);

  const CliResult prec = cli({"invert", golden_path("carlitz_q3.manifest"), "--order", "100"});
  CHECK(prec.code == kExitPrecision);
  CHECK(prec.err.find("required precision 100 exceeds the precision cap 64") != std::string::npos);
  CHECK(cli({"gram", golden_path("maurischat_q3.manifest"), "--precision-cap", "2"}).code ==
        kExitPrecision);

  const CliResult dom = cli({"lseries", golden_path("carlitz_q3.manifest")});
  CHECK(dom.code == kExitFailure);
  CHECK(dom.err.find("error[domain] ") == 0);
  CHECK(dom.err.find(":2:1: ") != std::string::npos);

  CHECK(cli({"examples", "nosuch"}).code == kExitFailure);
  const CliResult gflag = cli({"examples", "drinfeld", "--q", "3", "--g", "1 | z"});
  CHECK(gflag.code == kExitParse);
  CHECK(gflag.err == "error[parse] --g:1:5: 'z' needs a declared field modulus\n");
  CHECK(cli({"examples", "carlitz", "--q", "6"}).code == kExitFailure);
  CHECK(cli({}).code == kExitFailure);
  CHECK(cli({"gram"}).code == kExitFailure);
}

TEST_CASE("validation failures exit with status 3") {
  const std::string text =
      "q: 3\nbase: perf-rational\ntheta: theta\ndim: 1\nphi_t:\n  row: theta + tau\n"
      "motive_basis:\n  row: 1\n  row: tau\ncomotive_basis:\n  col: 1\n";
  const std::string path = "cli_validation.manifest";
  {
    std::ofstream out(path);
    out << text;
  }
  const CliResult r = cli({"validate", path});
  CHECK(r.code == kExitValidation);
  CHECK(r.err == "error[validation] cli_validation.manifest:10:1: motive basis has 2 "
                 "elements but comotive basis has 1\n");
  {
    std::ofstream out(path);
    out << "q: 3\nbase: perf-rational\ntheta: theta\ndim: 1\nphi_t:\n  row: theta + 1 + tau\n"
           "motive_basis:\n  row: 1\ncomotive_basis:\n  col: 1\n";
  }
  const CliResult nil = cli({"gram", path});
  CHECK(nil.code == kExitValidation);
  CHECK(nil.err.find(":5:1: phi_0 - theta*I is not nilpotent") != std::string::npos);
  std::remove(path.c_str());
}
