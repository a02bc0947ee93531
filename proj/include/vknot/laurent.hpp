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

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vknot {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Exponent {
  int s = 0;
  int t = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

struct Term {
  Exponent exp;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/**
 * Exact element of Z[s, s^-1, t, t^-1].
 *
 * Terms are kept sorted by exponent (s-exponent first, then t-exponent) and no
 * stored coefficient is zero, so the zero polynomial is the empty term list and
 * structural equality is ring equality.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  /// Collects like terms and drops zero coefficients.
  static LaurentPoly from_terms(std::vector<Term> terms);
  static LaurentPoly monomial(const Integer& c, int es, int et);
  static LaurentPoly s(int e = 1) { return monomial(1, e, 0); }
  static LaurentPoly t(int e = 1) { return monomial(1, 0, e); }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Units of the ring are exactly +-s^a t^b.
  bool is_unit() const;
  bool is_constant() const;

  Integer coeff(int es, int et) const;

  // Exponent bounds. Undefined on the zero polynomial.
  int min_s() const;
  int max_s() const;
  int min_t() const;
  int max_t() const;

  /// Multiplies by s^ds t^dt.
  LaurentPoly shifted(int ds, int dt) const;
  /// Inverse of a unit; throws NotDivisible for non-units.
  LaurentPoly unit_inverse() const;
  /// Integer gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::vector<Term> terms_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned e);

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// Returns r with q * r == p, or nullopt when q does not divide p.
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& q);
/// As try_exact_div but throws NotDivisible. Throws std::invalid_argument for q == 0.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

enum class UnitClass {
  UpToMonomialSign,  // +-s^a t^b
  UpToPowersOfST,    // (st)^k
  Exact,
};

struct CanonicalForm {
  LaurentPoly poly;
  UnitClass unit_class = UnitClass::UpToMonomialSign;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonicalize(const LaurentPoly& p, UnitClass mode = UnitClass::UpToMonomialSign);
bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q,
                       UnitClass mode = UnitClass::UpToMonomialSign);

/// gcd in Z[s^+-1, t^+-1], returned in UpToMonomialSign canonical form.
LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q);

Rational eval_at(const LaurentPoly& p, const Rational& s_val, const Rational& t_val);

/// Replaces s and t by the given images. Negative powers are only allowed when
/// the corresponding image is a unit.
LaurentPoly substitute(const LaurentPoly& p, const LaurentPoly& s_image,
                       const LaurentPoly& t_image);

/// Canonical report rendering, e.g. "1 - t - s + 2*s*t - s^2*t^2".
std::string to_string(const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Reads the rendering produced by to_string (sums of c*s^a*t^b terms).
LaurentPoly parse_poly(const std::string& text);

std::string to_string(UnitClass mode);

}  // namespace vknot
