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

#include "vknot/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vknot/error.hpp"

namespace vknot {

namespace {

// Sorts, merges like terms and drops zeros in place.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Exponent e = terms[i].exp;
    Integer c = 0;
    for (; i < terms.size() && terms[i].exp == e; ++i) c += terms[i].coeff;
    if (c != 0) terms[out++] = Term{e, std::move(c)};
  }
  terms.resize(out);
}

}  // namespace

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.push_back(Term{{0, 0}, Integer(c)});
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.push_back(Term{{0, 0}, c});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  normalize(terms);
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int es, int et) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back(Term{{es, et}, c});
  return p;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_[0].coeff) == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{0, 0});
}

Integer LaurentPoly::coeff(int es, int et) const {
  Exponent e{es, et};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& a, const Exponent& b) { return a.exp < b; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

int LaurentPoly::min_s() const { return terms_.front().exp.s; }
int LaurentPoly::max_s() const { return terms_.back().exp.s; }

int LaurentPoly::min_t() const {
  int m = terms_.front().exp.t;
  for (const auto& term : terms_) m = std::min(m, term.exp.t);
  return m;
}

int LaurentPoly::max_t() const {
  int m = terms_.front().exp.t;
  for (const auto& term : terms_) m = std::max(m, term.exp.t);
  return m;
}

LaurentPoly LaurentPoly::shifted(int ds, int dt) const {
  LaurentPoly r = *this;
  for (auto& term : r.terms_) {
    term.exp.s += ds;
    term.exp.t += dt;
  }
  return r;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw NotDivisible("not a unit: " + to_string(*this));
  return monomial(terms_[0].coeff, -terms_[0].exp.s, -terms_[0].exp.t);
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& term : terms_) {
    g = boost::multiprecision::gcd(g, term.coeff);
    if (g == 1) break;
  }
  return abs(g);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& term : r.terms_) term.coeff = -term.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      merged.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) merged.push_back(Term{a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) {
    LaurentPoly r = b.shifted(a.terms_[0].exp.s, a.terms_[0].exp.t);
    if (a.terms_[0].coeff != 1)
      for (auto& term : r.terms_) term.coeff *= a.terms_[0].coeff;
    return r;
  }
  if (b.is_monomial()) return b * a;
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      prod.push_back(Term{{x.exp.s + y.exp.s, x.exp.t + y.exp.t}, x.coeff * y.coeff});
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly pow(const LaurentPoly& p, unsigned e) {
  LaurentPoly result = 1;
  LaurentPoly base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  if (p.is_zero()) return LaurentPoly{};
  if (q.is_monomial()) {
    const Term& u = q.terms().front();
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& term : p.terms()) {
      if (term.coeff % u.coeff != 0) return std::nullopt;
      out.push_back(Term{{term.exp.s - u.exp.s, term.exp.t - u.exp.t}, term.coeff / u.coeff});
    }
    return LaurentPoly::from_terms(std::move(out));
  }

  // Move both operands to honest polynomials with nonzero constant-free
  // content in each variable, then run lex-order long division. Since s and t
  // are primes not dividing the normalized divisor, divisibility in the
  // Laurent ring is equivalent to divisibility of these polynomials.
  const int ps = p.min_s(), pt = p.min_t(), qs = q.min_s(), qt = q.min_t();
  LaurentPoly rem = p.shifted(-ps, -pt);
  const LaurentPoly den = q.shifted(-qs, -qt);
  const Term& lead = den.terms().back();  // lex-largest term
  const int max_qs = rem.max_s() - den.max_s();
  const int max_qt = rem.max_t() - den.max_t();
  if (max_qs < 0 || max_qt < 0) return std::nullopt;

  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& top = rem.terms().back();
    const int es = top.exp.s - lead.exp.s;
    const int et = top.exp.t - lead.exp.t;
    if (es < 0 || et < 0 || es > max_qs || et > max_qt) return std::nullopt;
    if (top.coeff % lead.coeff != 0) return std::nullopt;
    LaurentPoly step = LaurentPoly::monomial(top.coeff / lead.coeff, es, et);
    quotient.push_back(step.terms().front());
    rem -= step * den;
  }
  return LaurentPoly::from_terms(std::move(quotient)).shifted(ps - qs, pt - qt);
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = try_exact_div(p, q);
  if (!r) throw NotDivisible(to_string(p) + " is not divisible by " + to_string(q));
  return *std::move(r);
}

CanonicalForm canonicalize(const LaurentPoly& p, UnitClass mode) {
  if (p.is_zero() || mode == UnitClass::Exact) return {p, mode};
  if (mode == UnitClass::UpToPowersOfST) {
    const int k = p.min_s();
    return {p.shifted(-k, -k), mode};
  }
  LaurentPoly r = p.shifted(-p.min_s(), -p.min_t());
  if (r.terms().front().coeff < 0) r = -r;
  return {std::move(r), mode};
}

bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q, UnitClass mode) {
  return canonicalize(p, mode) == canonicalize(q, mode);
}

Rational eval_at(const LaurentPoly& p, const Rational& s_val, const Rational& t_val) {
  if (s_val == 0 || t_val == 0) throw ZeroSubstitution("eval_at: s and t must be nonzero");
  auto power = [](const Rational& base, int e) {
    Rational r = 1;
    Rational b = e < 0 ? Rational(1) / base : base;
    for (int i = 0; i < std::abs(e); ++i) r *= b;
    return r;
  };
  Rational sum = 0;
  for (const auto& term : p.terms())
    sum += Rational(term.coeff) * power(s_val, term.exp.s) * power(t_val, term.exp.t);
  return sum;
}

LaurentPoly substitute(const LaurentPoly& p, const LaurentPoly& s_image,
                       const LaurentPoly& t_image) {
  auto power = [](const LaurentPoly& base, int e) {
    if (e >= 0) return pow(base, static_cast<unsigned>(e));
    if (!base.is_unit())
      throw NotDivisible("substitute: negative power of non-unit image " + to_string(base));
    return pow(base.unit_inverse(), static_cast<unsigned>(-e));
  };
  LaurentPoly sum;
  for (const auto& term : p.terms())
    sum += LaurentPoly(term.coeff) * power(s_image, term.exp.s) * power(t_image, term.exp.t);
  return sum;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : p.terms()) {
    Integer c = term.coeff;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool has_var = term.exp.s != 0 || term.exp.t != 0;
    bool need_star = false;
    if (c != 1 || !has_var) {
      os << c;
      need_star = true;
    }
    auto var = [&](char name, int e) {
      if (e == 0) return;
      if (need_star) os << '*';
      os << name;
      if (e != 1) os << '^' << e;
      need_star = true;
    };
    var('s', term.exp.s);
    var('t', term.exp.t);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

LaurentPoly parse_poly(const std::string& text) {
  std::string src;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) src += ch;
  if (src.empty()) throw SyntaxError("empty polynomial");
  std::size_t i = 0;
  auto read_int = [&](bool allow_sign) {
    std::size_t start = i;
    if (allow_sign && i < src.size() && src[i] == '-') ++i;
    std::size_t digits = i;
    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
    if (i == digits) throw SyntaxError("expected integer in polynomial '" + text + "'");
    return src.substr(start, i - start);
  };
  std::vector<Term> terms;
  bool first = true;
  while (i < src.size()) {
    int sign = 1;
    if (src[i] == '+' || src[i] == '-') {
      sign = src[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw SyntaxError("expected '+' or '-' in polynomial '" + text + "'");
    }
    first = false;
    Term term{{0, 0}, Integer(sign)};
    bool any = false;
    while (i < src.size() && src[i] != '+' && src[i] != '-') {
      if (any) {
        if (src[i] != '*') throw SyntaxError("expected '*' in polynomial '" + text + "'");
        ++i;
      }
      if (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        term.coeff *= Integer(read_int(false));
      } else if (i < src.size() && (src[i] == 's' || src[i] == 't')) {
        char v = src[i++];
        int e = 1;
        if (i < src.size() && src[i] == '^') {
          ++i;
          e = std::stoi(read_int(true));
        }
        (v == 's' ? term.exp.s : term.exp.t) += e;
      } else {
        throw SyntaxError("unexpected character in polynomial '" + text + "'");
      }
      any = true;
    }
    if (!any) throw SyntaxError("dangling sign in polynomial '" + text + "'");
    terms.push_back(std::move(term));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

std::string to_string(UnitClass mode) {
  switch (mode) {
    case UnitClass::UpToMonomialSign: return "monomial-sign";
    case UnitClass::UpToPowersOfST: return "st-powers";
    case UnitClass::Exact: return "exact";
  }
  return "?";
}

}  // namespace vknot
