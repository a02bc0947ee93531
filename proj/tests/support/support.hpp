// Copyright 2026 The vknot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared helpers for unit, property and acceptance tests: independent oracles,
// seeded generators and the published table data.

#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vknot/gauss.hpp"
#include "vknot/laurent.hpp"
#include "vknot/moves.hpp"
#include "vknot/poly_matrix.hpp"

namespace vknot::testing {

// ---------------------------------------------------------------------------
// Oracles

/// Determinant by Laplace expansion along the first row. Exponential; only for
/// matrices up to about 7x7.
inline LaurentPoly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  LaurentPoly sum;
  std::vector<std::size_t> rows(n - 1);
  for (std::size_t i = 1; i < n; ++i) rows[i - 1] = i;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    LaurentPoly term = m(0, j) * cofactor_det(m.submatrix(rows, cols));
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

/// Direct evaluation term by term, without going through the library's
/// evaluation routine.
inline Rational naive_eval(const LaurentPoly& p, const Rational& s, const Rational& t) {
  Rational acc = 0;
  for (const auto& term : p.terms()) {
    Rational v = Rational(term.coeff);
    for (int k = 0; k < std::abs(term.exp.s); ++k) {
      if (term.exp.s > 0) v *= s;
      else v /= s;
    }
    for (int k = 0; k < std::abs(term.exp.t); ++k) {
      if (term.exp.t > 0) v *= t;
      else v /= t;
    }
    acc += v;
  }
  return acc;
}

/// p and q agree up to a factor +-s^a t^b, decided from the term lists alone.
inline bool same_up_to_monomial_sign(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.size() != q.size()) return false;
  if (p.is_zero()) return true;
  const auto& a = p.terms();
  const auto& b = q.terms();
  const int ds = b[0].exp.s - a[0].exp.s, dt = b[0].exp.t - a[0].exp.t;
  const int sign = (a[0].coeff == b[0].coeff) ? 1 : (a[0].coeff == -b[0].coeff ? -1 : 0);
  if (sign == 0) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i].exp.s - a[i].exp.s != ds || b[i].exp.t - a[i].exp.t != dt ||
        b[i].coeff != (sign > 0 ? a[i].coeff : Integer(-a[i].coeff)))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Published data

struct ReferenceKnot {
  std::string name;
  std::string code;
  // Factored form, evaluated at (s, t).
  std::function<Rational(const Rational&, const Rational&)> factored;
  bool zero;
};

inline const std::vector<ReferenceKnot>& reference_knots() {
  using R = Rational;
  auto p = [](R x, int e) {
    R r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  };
  static const std::vector<ReferenceKnot> rows = {
      {"4.12", "O1-O2-U1-O3+U2-O4+U3+U4+",
       [=](R s, R t) { return (1 - t) * (1 - s) * (t - s) * p(1 - s * t, 2); }, false},
      {"5.93", "O1-O2-U1-U2-U3+O4+O3+U5+U4+O5+",
       [=](R s, R t) { return -(1 - t) * (1 - s) * p(1 - s * t, 3); }, false},
      {"5.114", "O1-O2-U1-U2-U3+U4-O3+U5+O4-O5+", [](R, R) { return R(0); }, true},
      {"5.212", "O1-O2-U1-O3-U2-O4+U5+U3-O5+U4+",
       [=](R s, R t) { return (1 - t) * (1 - s) * p(1 - s * t, 3); }, false},
      {"5.344", "O1-O2+U1-O3-U2+U4+O5+O4+U5+U3-",
       [=](R s, R t) { return -(1 - s * s) * p(1 - t, 2) * p(1 - s * t, 2); }, false},
      {"5.919", "O1-O2-U1-O3+U4+U2-O5+U3+O4+U5+",
       [=](R s, R t) { return (1 - t) * (1 - s) * p(1 - s * t, 3); }, false},
      {"5.1034", "O1-O2+U1-O3-U4+U3-O5-U2+O4+U5-",
       [=](R s, R t) { return -(1 - t) * (1 - s) * p(1 - s * t, 3); }, false},
      {"5.1216", "O1-O2+U1-O3-U4+O5-O4+U2+U5-U3-", [](R, R) { return R(0); }, true},
      {"5.1963", "O1-O2-O3-U1-U2-U4+O5+U3-O4+U5+", [](R, R) { return R(0); }, true},
      {"5.2351", "O1-O2-U3+O4+U1-U2-O5-U4+O3+U5-",
       [=](R s, R t) { return -(1 - t) * (1 - s) * p(1 - s * t, 3); }, false},
      {"5.2430", "O1-U2-O3+U1-O2-U4-O5+U3+O4-U5+",
       [=](R s, R t) { return -(1 - t * t) * (1 - s * s) * p(1 - s * t, 3); }, false},
      {"5.2435", "O1-U2-O3-U1-O4+U3-O5+U4+O2-U5+",
       [=](R s, R t) { return -(1 - t * t) * (1 - s * s) * p(1 - s * t, 3); }, false},
  };
  return rows;
}

/// Interpolates a factored form into a polynomial by evaluating on a grid and
/// solving for the coefficients inside a known exponent box. The box for the
/// table entries is [0, 6] x [0, 6].
inline LaurentPoly interpolate(const std::function<Rational(const Rational&, const Rational&)>& f,
                               int max_s = 6, int max_t = 6) {
  // Tensor-product interpolation on the grid {1..max+1}^2.
  const int ns = max_s + 1, nt = max_t + 1;
  std::vector<std::vector<Rational>> val(ns, std::vector<Rational>(nt));
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < nt; ++j) val[i][j] = f(Rational(i + 1), Rational(j + 1));
  auto solve_1d = [](const std::vector<Rational>& ys) {
    const std::size_t n = ys.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
      Rational x = static_cast<long>(r + 1), pw = 1;
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] = pw;
        pw *= x;
      }
      a[r][n] = ys[r];
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (a[piv][c] == 0) ++piv;
      std::swap(a[piv], a[c]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || a[r][c] == 0) continue;
        const Rational m = a[r][c] / a[c][c];
        for (std::size_t k = c; k <= n; ++k) a[r][k] -= m * a[c][k];
      }
    }
    std::vector<Rational> x(n);
    for (std::size_t c = 0; c < n; ++c) x[c] = a[c][n] / a[c][c];
    return x;
  };
  // Solve in t for each s-row, then in s for each t-coefficient.
  std::vector<std::vector<Rational>> ct(ns);
  for (int i = 0; i < ns; ++i) ct[i] = solve_1d(val[i]);
  std::vector<Term> terms;
  for (int j = 0; j < nt; ++j) {
    std::vector<Rational> col(ns);
    for (int i = 0; i < ns; ++i) col[i] = ct[i][j];
    const auto cs = solve_1d(col);
    for (int i = 0; i < ns; ++i) {
      if (cs[i] == 0) continue;
      terms.push_back(Term{Exponent{i, j}, boost::multiprecision::numerator(cs[i])});
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Generators

using Rng = std::mt19937_64;

inline LaurentPoly random_poly(Rng& rng, int span = 6, int coeff = 1000, int max_terms = 6) {
  std::uniform_int_distribution<int> exp(-span / 2, span - span / 2);
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::vector<Term> terms;
  for (int k = nterms(rng); k > 0; --k) terms.push_back(Term{Exponent{exp(rng), exp(rng)}, c(rng)});
  return LaurentPoly::from_terms(std::move(terms));
}

inline PolyMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int span = 2, int coeff = 5,
                                int max_terms = 3) {
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_poly(rng, span, coeff, max_terms);
  return m;
}

/// A uniformly shuffled one-component Gauss code with n crossings and random
/// signs. Every such code is a valid virtual knot diagram.
inline GaussCode random_knot_code(Rng& rng, std::size_t n) {
  std::vector<GaussToken> tokens;
  std::bernoulli_distribution coin;
  for (unsigned k = 1; k <= n; ++k) {
    const int sign = coin(rng) ? 1 : -1;
    tokens.push_back({Passage::Over, k, sign});
    tokens.push_back({Passage::Under, k, sign});
  }
  std::shuffle(tokens.begin(), tokens.end(), rng);
  GaussCode code;
  if (n > 0) code.components.push_back(std::move(tokens));
  return code;
}

/// Random link code: 2n tokens distributed over `comps` components (some may
/// end up empty).
inline GaussCode random_link_code(Rng& rng, std::size_t n, std::size_t comps) {
  GaussCode code = random_knot_code(rng, n);
  std::vector<GaussToken> all = code.components.empty() ? std::vector<GaussToken>{} : code.components[0];
  code.components.assign(comps, {});
  std::uniform_int_distribution<std::size_t> pick(0, comps - 1);
  for (const auto& t : all) code.components[pick(rng)].push_back(t);
  return code;
}

/// Random relabeling of crossing labels (labels become a random permutation of
/// 10, 20, ...), followed by a random rotation of every component.
inline GaussCode scramble(Rng& rng, GaussCode code) {
  std::map<unsigned, unsigned> relabel;
  std::vector<unsigned> labels;
  for (const auto& c : code.components)
    for (const auto& t : c) labels.push_back(t.label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<unsigned> fresh(labels.size());
  for (std::size_t i = 0; i < fresh.size(); ++i) fresh[i] = static_cast<unsigned>(10 * (i + 1));
  std::shuffle(fresh.begin(), fresh.end(), rng);
  for (std::size_t i = 0; i < labels.size(); ++i) relabel[labels[i]] = fresh[i];
  for (auto& c : code.components) {
    for (auto& t : c) t.label = relabel[t.label];
    if (!c.empty()) {
      std::uniform_int_distribution<std::size_t> r(0, c.size() - 1);
      std::rotate(c.begin(), c.begin() + static_cast<long>(r(rng)), c.end());
    }
  }
  return code;
}

// ---------------------------------------------------------------------------
// Move-site search for the fuzz harness

inline std::vector<std::size_t> r1_removable(const GaussDiagram& d) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < d.chord_count(); ++c) {
    const SlotRef o = d.over_slot(c), u = d.under_slot(c);
    if (o.component != u.component) continue;
    const std::size_t len = d.component(o.component).size();
    if ((o.position + 1) % len == u.position || (u.position + 1) % len == o.position) out.push_back(c);
  }
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> r2_removable(const GaussDiagram& d) {
  auto adjacent = [&](SlotRef a, SlotRef b) {
    if (a.component != b.component) return false;
    const std::size_t len = d.component(a.component).size();
    return (a.position + 1) % len == b.position || (b.position + 1) % len == a.position;
  };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < d.chord_count(); ++a)
    for (std::size_t b = a + 1; b < d.chord_count(); ++b)
      if (d.chord(a).sign == -d.chord(b).sign && adjacent(d.over_slot(a), d.over_slot(b)) &&
          adjacent(d.under_slot(a), d.under_slot(b)))
        out.emplace_back(a, b);
  return out;
}

inline std::vector<std::array<std::size_t, 3>> r3_sites(const GaussDiagram& d) {
  std::vector<std::array<std::size_t, 3>> out;
  const std::size_t n = d.chord_count();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (is_r3_configuration(d, {a, b, c})) out.push_back({a, b, c});
  return out;
}

inline SlotRef random_site(Rng& rng, const GaussDiagram& d) {
  std::uniform_int_distribution<std::size_t> comp(0, d.component_count() - 1);
  const std::size_t c = comp(rng);
  std::uniform_int_distribution<std::size_t> pos(0, d.component(c).size());
  return SlotRef{c, pos(rng)};
}

/// One random Reidemeister move (insertion or removal). Returns the name of the
/// move applied.
inline std::string random_move(Rng& rng, GaussDiagram& d) {
  std::uniform_int_distribution<int> kind(0, 5);
  std::bernoulli_distribution coin;
  for (int attempt = 0; attempt < 20; ++attempt) {
    switch (kind(rng)) {
      case 0:
        d = apply_r1(d, random_site(rng, d), coin(rng) ? 1 : -1, coin(rng) ? R1Kind::OverFirst : R1Kind::UnderFirst);
        return "R1+";
      case 1: {
        const auto sites = r1_removable(d);
        if (sites.empty()) break;
        d = remove_r1(d, sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)]);
        return "R1-";
      }
      case 2:
        d = apply_r2(d, random_site(rng, d), random_site(rng, d), coin(rng) ? 1 : -1, coin(rng));
        return "R2+";
      case 3: {
        const auto sites = r2_removable(d);
        if (sites.empty()) break;
        const auto [a, b] = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
        d = remove_r2(d, a, b);
        return "R2-";
      }
      default: {
        if (d.chord_count() > 14) break;
        const auto sites = r3_sites(d);
        if (sites.empty()) break;
        d = apply_r3(d, sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)]);
        return "R3";
      }
    }
  }
  d = apply_r1(d, random_site(rng, d), 1, R1Kind::OverFirst);
  return "R1+";
}

}  // namespace vknot::testing
