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


#include "taures/manifest.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "taures/errors.hpp"
#include "taures/lseries.hpp"

namespace taures {

namespace {

const std::set<std::string>& block_keys() {
  static const std::set<std::string> keys{"phi_t", "motive_basis", "comotive_basis",
                                          "tau_matrix_motive", "tau_matrix_comotive"};
  return keys;
}

const std::set<std::string>& scalar_keys() {
  static const std::set<std::string> keys{"q",    "modulus", "base",       "theta",
                                          "dim",  "rank",    "ext_degree", "ext_modulus"};
  return keys;
}

struct Item {
  std::string text;
  SourceLoc loc;  // of the first character of text
};

struct Entry {
  SourceLoc key_loc;
  Item value;
  std::vector<Item> rows;
};

[[noreturn]] void fail(const std::string& msg, SourceLoc loc) {
  throw ParseError(msg, loc.line, loc.column);
}

// Skips leading blanks; returns the trimmed text and its 1-based column.
Item trimmed(std::string_view s, int line, int column) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return {std::string(s.substr(b, e - b)), {line, column + static_cast<int>(b)}};
}

std::vector<Item> split_entries(const Item& row) {
  std::vector<Item> out;
  std::size_t start = 0;
  const std::string& s = row.text;
  while (true) {
    const std::size_t bar = s.find('|', start);
    const std::size_t end = bar == std::string::npos ? s.size() : bar;
    Item it = trimmed(std::string_view(s).substr(start, end - start), row.loc.line,
                      row.loc.column + static_cast<int>(start));
    if (it.text.empty()) fail("empty entry", it.loc);
    out.push_back(std::move(it));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

std::uint64_t parse_count(const Item& it, const std::string& what) {
  if (it.text.empty() || it.text.size() > 9 ||
      !std::all_of(it.text.begin(), it.text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    fail(what + " must be a positive integer", it.loc);
  }
  const std::uint64_t v = std::stoull(it.text);
  if (v == 0) fail(what + " must be a positive integer", it.loc);
  return v;
}

std::map<std::string, Entry> split_lines(std::string_view text) {
  std::map<std::string, Entry> out;
  std::string current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const Item body = trimmed(line, line_no, 1);
    if (body.text.empty()) continue;
    const auto colon = body.text.find(':');
    if (colon == std::string::npos) fail("expected 'key: value'", body.loc);
    const std::string key = body.text.substr(0, colon);
    const Item value = trimmed(std::string_view(body.text).substr(colon + 1), line_no,
                               body.loc.column + static_cast<int>(colon) + 1);
    if (key == "row" || key == "col") {
      if (current.empty()) fail("'" + key + ":' outside a block", body.loc);
      const std::string want = current == "comotive_basis" ? "col" : "row";
      if (key != want) fail("expected '" + want + ":' lines in " + current, body.loc);
      if (value.text.empty()) fail("empty " + key, value.loc);
      out[current].rows.push_back(value);
      continue;
    }
    if (!block_keys().count(key) && !scalar_keys().count(key)) {
      fail("unknown key '" + key + "'", body.loc);
    }
    if (out.count(key)) fail("duplicate key '" + key + "'", body.loc);
    Entry& e = out[key];
    e.key_loc = body.loc;
    e.value = value;
    if (block_keys().count(key)) {
      if (!value.text.empty()) fail("block '" + key + "' takes no inline value", value.loc);
      current = key;
    } else {
      if (value.text.empty()) fail("missing value for '" + key + "'", value.loc);
      current.clear();
    }
  }
  return out;
}

const Entry& require(const std::map<std::string, Entry>& lines, const std::string& key) {
  auto it = lines.find(key);
  if (it == lines.end()) fail("missing key '" + key + "'", {1, 1});
  return it->second;
}

bool in_r_tau(const SkewLaurent& x) {
  return x.is_exact() && (x.coeffs().empty() || x.coeffs().begin()->first >= 0);
}

// Prime p and exponent m with q = p^m.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t m = 0;
    std::uint32_t x = q;
    while (x % p == 0) {
      x /= p;
      ++m;
    }
    if (x != 1) break;
    return {p, m};
  }
  throw DomainError("q = " + std::to_string(q) + " is not a prime power");
}

std::vector<SkewLaurent> parse_entries(const std::vector<Item>& items,
                                       const ExprScope& base) {
  std::vector<SkewLaurent> out;
  for (const auto& it : items) {
    ExprScope s = base;
    s.line = it.loc.line;
    s.column = it.loc.column;
    out.push_back(parse_skew_expr(it.text, s));
  }
  return out;
}

std::vector<SkewMatrix> parse_basis(const Entry& block, const std::string& name,
                                    const ExprScope& scope, std::size_t dim,
                                    bool columns) {
  if (block.rows.empty()) fail(name + " is empty", block.key_loc);
  std::vector<SkewMatrix> out;
  for (const auto& row : block.rows) {
    const auto items = split_entries(row);
    if (items.size() != dim) {
      fail(name + " element has " + std::to_string(items.size()) +
               " entries, expected " + std::to_string(dim),
           row.loc);
    }
    const auto xs = parse_entries(items, scope);
    SkewMatrix m(scope.field, columns ? dim : 1, columns ? 1 : dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!in_r_tau(xs[i])) fail(name + " entries must lie in R[tau]", items[i].loc);
      if (columns) {
        m.at(i, 0) = xs[i];
      } else {
        m.at(0, i) = xs[i];
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

TauMatrix parse_tau_matrix(const Entry& block, const std::string& name,
                           const ExprScope& scope, std::size_t r) {
  if (block.rows.size() != r) {
    fail(name + " has " + std::to_string(block.rows.size()) + " rows, expected " +
             std::to_string(r),
         block.key_loc);
  }
  TauMatrix m;
  for (const auto& row : block.rows) {
    const auto items = split_entries(row);
    if (items.size() != r) {
      fail(name + " row has " + std::to_string(items.size()) + " entries, expected " +
               std::to_string(r),
           row.loc);
    }
    std::vector<TPoly> out;
    for (const auto& it : items) {
      ExprScope s = scope;
      s.line = it.loc.line;
      s.column = it.loc.column;
      out.push_back(parse_tpoly_expr(it.text, s));
    }
    m.push_back(std::move(out));
  }
  return m;
}

std::string join_row(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += " | ";
    out += xs[i];
  }
  return out;
}

}  // namespace

FieldPtr field_for(std::uint32_t q,
                   const std::optional<std::vector<std::uint32_t>>& modulus) {
  const auto [p, m] = prime_power(q);
  if (modulus) {
    if (modulus->size() != m + 1) {
      throw DomainError("modulus must have degree " + std::to_string(m) + " for q = " +
                        std::to_string(q));
    }
    return FiniteField::make(p, *modulus);
  }
  if (m == 1) return FiniteField::prime(p);
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint32_t> h(m + 1);
    std::uint64_t x = idx;
    for (std::uint32_t i = 0; i < m; ++i) {
      h[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    h[m] = 1;
    if (is_irreducible_mod_p(h, p)) return FiniteField::make(p, h);
  }
  throw DomainError("no irreducible modulus found");
}

namespace {

ExprScope scope_for(const FieldPtr& field, bool declared_modulus, BaseKind base,
                    const std::optional<PerfElement>& theta, int line, int column) {
  ExprScope s;
  s.field = field;
  s.allow_z = declared_modulus;
  if (base == BaseKind::kFiniteField) s.theta = theta;
  s.line = line;
  s.column = column;
  return s;
}

}  // namespace

ExprScope manifest_scope(const Manifest& m, int line, int column) {
  return scope_for(m.module.field, m.modulus.has_value(), m.module.base, m.module.theta,
                   line, column);
}

std::vector<SkewLaurent> parse_skew_row(std::string_view text, const ExprScope& scope) {
  const Item row{std::string(text), {scope.line, scope.column}};
  return parse_entries(split_entries(row), scope);
}

Manifest parse_manifest(std::string_view text) {
  const auto lines = split_lines(text);
  std::map<std::string, SourceLoc> locations;
  for (const auto& [key, e] : lines) locations[key] = e.key_loc;

  const Entry& q_line = require(lines, "q");
  const std::uint64_t q64 = parse_count(q_line.value, "q");
  if (q64 > FiniteField::kMaxOrder) {
    fail("q must be at most " + std::to_string(FiniteField::kMaxOrder), q_line.value.loc);
  }
  const auto q = static_cast<std::uint32_t>(q64);
  std::uint32_t p = 0;
  try {
    p = prime_power(q).first;
  } catch (const DomainError& err) {
    fail(err.what(), q_line.value.loc);
  }
  std::optional<std::vector<std::uint32_t>> modulus;
  if (auto it = lines.find("modulus"); it != lines.end()) {
    const Item& v = it->second.value;
    ExprScope s;
    s.field = FiniteField::prime(p);
    s.line = v.loc.line;
    s.column = v.loc.column;
    const FqPoly h = parse_univariate(v.text, s, "z");
    if (h.is_zero() || h.lead() != s.field->one()) fail("modulus must be monic", v.loc);
    std::vector<std::uint32_t> coeffs(h.degree() + 1);
    for (const auto& t : h.terms()) coeffs[t.exp] = t.coef.code;
    modulus = std::move(coeffs);
  }
  FieldPtr field;
  try {
    field = field_for(q, modulus);
  } catch (const DomainError& err) {
    fail(err.what(), modulus ? lines.at("modulus").value.loc : q_line.value.loc);
  }

  const Entry& base_line = require(lines, "base");
  BaseKind base = BaseKind::kPerfRational;
  if (base_line.value.text == "finite-field") {
    base = BaseKind::kFiniteField;
  } else if (base_line.value.text != "perf-rational") {
    fail("base must be 'perf-rational' or 'finite-field'", base_line.value.loc);
  }

  const Entry& theta_line = require(lines, "theta");
  PerfElement theta = PerfElement::zero(field);
  {
    const Item& v = theta_line.value;
    const ExprScope s = scope_for(field, modulus.has_value(), BaseKind::kPerfRational,
                                  std::nullopt, v.loc.line, v.loc.column);
    const SkewLaurent x = parse_skew_expr(v.text, s);
    if (!x.is_exact() || x.coeffs().size() > 1 ||
        (x.coeffs().size() == 1 && x.coeffs().begin()->first != 0)) {
      fail("theta must be a scalar", v.loc);
    }
    if (!x.coeffs().empty()) theta = x.coeffs().begin()->second;
    if (base == BaseKind::kFiniteField && !theta.as_fq()) {
      fail("theta must lie in F_q over a finite base", v.loc);
    }
  }

  const std::size_t dim = parse_count(require(lines, "dim").value, "dim");
  std::optional<std::size_t> rank;
  if (auto it = lines.find("rank"); it != lines.end()) {
    rank = parse_count(it->second.value, "rank");
  }
  const ExprScope scope = scope_for(field, modulus.has_value(), base, theta, 1, 1);

  const Entry& phi = require(lines, "phi_t");
  if (phi.rows.size() != dim) {
    fail("phi_t has " + std::to_string(phi.rows.size()) + " rows, expected " +
             std::to_string(dim),
         phi.key_loc);
  }
  SkewMatrix phi_t(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto items = split_entries(phi.rows[i]);
    if (items.size() != dim) {
      fail("phi_t row has " + std::to_string(items.size()) + " entries, expected " +
               std::to_string(dim),
           phi.rows[i].loc);
    }
    const auto xs = parse_entries(items, scope);
    for (std::size_t j = 0; j < dim; ++j) {
      if (!in_r_tau(xs[j])) fail("phi(t) must lie in R[tau]", items[j].loc);
      phi_t.at(i, j) = xs[j];
    }
  }
  auto motive = parse_basis(require(lines, "motive_basis"), "motive_basis", scope, dim, false);
  auto comotive =
      parse_basis(require(lines, "comotive_basis"), "comotive_basis", scope, dim, true);
  std::optional<TauMatrix> tau_motive;
  std::optional<TauMatrix> tau_comotive;
  if (auto it = lines.find("tau_matrix_motive"); it != lines.end()) {
    tau_motive = parse_tau_matrix(it->second, "tau_matrix_motive", scope, motive.size());
  }
  if (auto it = lines.find("tau_matrix_comotive"); it != lines.end()) {
    tau_comotive =
        parse_tau_matrix(it->second, "tau_matrix_comotive", scope, comotive.size());
  }

  std::optional<std::size_t> ext_degree;
  std::optional<std::vector<Fq>> ext_modulus;
  if (auto it = lines.find("ext_degree"); it != lines.end()) {
    ext_degree = parse_count(it->second.value, "ext_degree");
  }
  if (auto it = lines.find("ext_modulus"); it != lines.end()) {
    const Item& v = it->second.value;
    ExprScope s = scope;
    s.line = v.loc.line;
    s.column = v.loc.column;
    const FqPoly h = parse_univariate(v.text, s, "alpha");
    if (h.is_zero() || h.degree() == 0 || h.lead() != field->one()) {
      fail("ext_modulus must be monic of positive degree", v.loc);
    }
    if (ext_degree && *ext_degree != h.degree()) {
      fail("ext_modulus has degree " + std::to_string(h.degree()) + " but ext_degree is " +
               std::to_string(*ext_degree),
           v.loc);
    }
    std::vector<Fq> coeffs(h.degree() + 1);
    for (const auto& t : h.terms()) coeffs[t.exp] = t.coef;
    try {
      (void)ExtField::make(field, h.degree(), coeffs);
    } catch (const DomainError& err) {
      fail(err.what(), v.loc);
    }
    ext_degree = h.degree();
    ext_modulus = std::move(coeffs);
  }
  AndersonModule e{field,
                   base,
                   theta,
                   dim,
                   std::move(phi_t),
                   std::move(motive),
                   std::move(comotive),
                   rank,
                   std::move(tau_motive),
                   std::move(tau_comotive)};
  return Manifest{q, std::move(modulus), std::move(e), ext_degree, std::move(ext_modulus),
                  std::move(locations)};
}

Manifest manifest_for(const AndersonModule& e) {
  std::optional<std::vector<std::uint32_t>> modulus;
  if (e.field->m() > 1) modulus = e.field->modulus();
  return Manifest{e.field->q(), std::move(modulus), e, std::nullopt, std::nullopt, {}};
}

std::string render_manifest(const Manifest& m) {
  const AndersonModule& e = m.module;
  std::ostringstream out;
  out << "q: " << m.q << '\n';
  if (m.modulus) {
    const auto fp = FiniteField::prime(e.field->p());
    std::vector<FqPoly::Term> terms;
    for (std::size_t i = 0; i < m.modulus->size(); ++i) {
      terms.push_back({i, Fq{(*m.modulus)[i]}});
    }
    out << "modulus: " << render_fq_poly(*fp, FqPoly::from_terms(*fp, terms), "z") << '\n';
  }
  out << "base: " << (e.base == BaseKind::kFiniteField ? "finite-field" : "perf-rational")
      << '\n';
  out << "theta: " << e.theta.render() << '\n';
  out << "dim: " << e.dim << '\n';
  if (e.rank_hint) out << "rank: " << *e.rank_hint << '\n';
  out << "phi_t:\n";
  for (std::size_t i = 0; i < e.phi_t.rows(); ++i) {
    std::vector<std::string> xs;
    for (std::size_t j = 0; j < e.phi_t.cols(); ++j) xs.push_back(e.phi_t.at(i, j).render());
    out << "  row: " << join_row(xs) << '\n';
  }
  out << "motive_basis:\n";
  for (const auto& b : e.motive_basis) {
    std::vector<std::string> xs;
    for (std::size_t j = 0; j < b.cols(); ++j) xs.push_back(b.at(0, j).render());
    out << "  row: " << join_row(xs) << '\n';
  }
  out << "comotive_basis:\n";
  for (const auto& b : e.comotive_basis) {
    std::vector<std::string> xs;
    for (std::size_t i = 0; i < b.rows(); ++i) xs.push_back(b.at(i, 0).render());
    out << "  col: " << join_row(xs) << '\n';
  }
  auto tau_block = [&](const char* name, const std::optional<TauMatrix>& t) {
    if (!t) return;
    out << name << ":\n";
    for (const auto& row : *t) {
      std::vector<std::string> xs;
      for (const auto& x : row) xs.push_back(x.render());
      out << "  row: " << join_row(xs) << '\n';
    }
  };
  tau_block("tau_matrix_motive", e.tau_motive);
  tau_block("tau_matrix_comotive", e.tau_comotive);
  if (m.ext_degree) out << "ext_degree: " << *m.ext_degree << '\n';
  if (m.ext_modulus) {
    std::vector<FqPoly::Term> terms;
    for (std::size_t i = 0; i < m.ext_modulus->size(); ++i) {
      terms.push_back({i, (*m.ext_modulus)[i]});
    }
    out << "ext_modulus: "
        << render_fq_poly(*e.field, FqPoly::from_terms(*e.field, terms), "alpha") << '\n';
  }
  return out.str();
}

}  // namespace taures
