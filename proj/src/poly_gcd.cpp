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

// gcd in Z[s^+-1, t^+-1] by primitive pseudo-remainder sequences: first as
// polynomials in t over Z[s], whose contents are in turn handled as
// polynomials in s over Z.

#include <utility>

#include "vknot/laurent.hpp"

namespace vknot {

namespace {

enum class Var { S, T };

int degree(const LaurentPoly& p, Var v) { return v == Var::S ? p.max_s() : p.max_t(); }

// Moves p to a polynomial with minimum exponent 0 in both variables.
LaurentPoly to_polynomial(const LaurentPoly& p) {
  return p.is_zero() ? p : p.shifted(-p.min_s(), -p.min_t());
}

// Coefficient of v^k, as a polynomial in the other variable.
LaurentPoly coeff_of(const LaurentPoly& p, Var v, int k) {
  std::vector<Term> out;
  for (const auto& term : p.terms()) {
    if (v == Var::S && term.exp.s == k) out.push_back(Term{{0, term.exp.t}, term.coeff});
    if (v == Var::T && term.exp.t == k) out.push_back(Term{{term.exp.s, 0}, term.coeff});
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly var_power(Var v, int k) { return v == Var::S ? LaurentPoly::s(k) : LaurentPoly::t(k); }

LaurentPoly gcd_in(const LaurentPoly& a, const LaurentPoly& b, Var v);

// gcd of the coefficient ring of v: Z[s] for v = T, Z for v = S.
LaurentPoly coeff_gcd(const LaurentPoly& a, const LaurentPoly& b, Var v) {
  if (v == Var::T) return gcd_in(a, b, Var::S);
  return LaurentPoly(boost::multiprecision::gcd(a.content(), b.content()));
}

LaurentPoly content_in(const LaurentPoly& p, Var v) {
  LaurentPoly g;
  for (int k = 0; k <= degree(p, v); ++k) {
    LaurentPoly c = coeff_of(p, v, k);
    if (c.is_zero()) continue;
    g = coeff_gcd(g, c, v);
    if (g.is_constant() && g.content() == 1) break;
  }
  return g;
}

LaurentPoly primitive_part(const LaurentPoly& p, Var v) {
  if (p.is_zero()) return p;
  return exact_div(p, content_in(p, v));
}

// Pseudo-remainder of a by b with respect to v (a, b polynomials).
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b, Var v) {
  const int db = degree(b, v);
  const LaurentPoly lb = coeff_of(b, v, db);
  while (!a.is_zero() && degree(a, v) >= db) {
    const int da = degree(a, v);
    const LaurentPoly la = coeff_of(a, v, da);
    a = lb * a - la * var_power(v, da - db) * b;
    a = to_polynomial(a);
  }
  return a;
}

// gcd of two polynomials in v with coefficients in the ring below v.
// Inputs and output have nonnegative exponents; sign is not normalized.
LaurentPoly gcd_in(const LaurentPoly& a_in, const LaurentPoly& b_in, Var v) {
  if (a_in.is_zero()) return b_in;
  if (b_in.is_zero()) return a_in;
  LaurentPoly a = to_polynomial(a_in);
  LaurentPoly b = to_polynomial(b_in);
  const LaurentPoly cont = coeff_gcd(content_in(a, v), content_in(b, v), v);
  a = primitive_part(a, v);
  b = primitive_part(b, v);
  if (degree(a, v) < degree(b, v)) std::swap(a, b);
  while (!b.is_zero()) {
    if (degree(b, v) == 0) return cont;  // b primitive of degree 0 is a unit here
    LaurentPoly r = pseudo_rem(a, b, v);
    a = std::move(b);
    b = primitive_part(r, v);
  }
  return cont * a;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() && q.is_zero()) return {};
  return canonicalize(gcd_in(p, q, Var::T)).poly;
}

}  // namespace vknot
