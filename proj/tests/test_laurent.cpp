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

#include <doctest.h>

#include "support/support.hpp"
#include "vknot/error.hpp"
#include "vknot/laurent.hpp"
#include "vknot/poly_matrix.hpp"

using namespace vknot;
using vknot::testing::Rng;

namespace {

const LaurentPoly s = LaurentPoly::s();
const LaurentPoly t = LaurentPoly::t();
const LaurentPoly one = 1;

LaurentPoly p412() { return (one - t) * (one - s) * (t - s) * pow(one - s * t, 2); }

}  // namespace

TEST_CASE("add") {
  CHECK((one - s) + s == one);
  CHECK(add(LaurentPoly{}, p412()) == p412());
  CHECK(((one - t) + (t - one)).is_zero());
}

TEST_CASE("mul") {
  CHECK(mul(one - s, one + s) == one - s * s);
  CHECK(LaurentPoly::s(-1) * s == one);
  const LaurentPoly e = p412();
  CHECK(e.size() == 14);
  CHECK(eval_at(e, 2, 3) == 50);
  CHECK(vknot::testing::naive_eval(e, 2, 3) == 50);
}

TEST_CASE("exact_div") {
  CHECK(exact_div(one - s * s * t * t, one - s * t) == one + s * t);
  CHECK(exact_div(p412(), one) == p412());
  const LaurentPoly p = (one - t) * (one - s) * pow(one - s * t, 3);
  const LaurentPoly q = exact_div(p, one - s * t);
  CHECK(q * (one - s * t) == p);
  CHECK(q == (one - t) * (one - s) * pow(one - s * t, 2));
  CHECK_THROWS_AS(exact_div(one + s, one - t), NotDivisible);
  CHECK_THROWS_AS(exact_div(one, one + s), NotDivisible);
  CHECK_THROWS_AS(exact_div(s, LaurentPoly{}), std::invalid_argument);
  CHECK(exact_div(LaurentPoly::monomial(6, -2, 3), LaurentPoly::monomial(-3, 1, 1)) ==
        LaurentPoly::monomial(-2, -3, 2));
  CHECK_FALSE(try_exact_div(LaurentPoly(3), LaurentPoly(2)).has_value());
}

TEST_CASE("gcd") {
  CHECK(gcd(p412(), LaurentPoly{}) == canonicalize(p412()).poly);
  CHECK(gcd(LaurentPoly{}, LaurentPoly{}).is_zero());
  CHECK(gcd((one - s) * (one - t), (one - s) * (one - s * t)) == canonicalize(one - s).poly);
  CHECK(gcd(LaurentPoly(6) * (one - t), LaurentPoly(4) * (one - t)) == canonicalize(LaurentPoly(2) * (one - t)).poly);
  CHECK(gcd(s * s * t, s * t * t) == one);
  CHECK(gcd(pow(one - s * t, 3) * (one + s), pow(one - s * t, 2) * (t - s)) ==
        canonicalize(pow(one - s * t, 2)).poly);
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(LaurentPoly::s(-1) * t * (one - s)) == canonicalize(one - s));
  CHECK(canonicalize(-(one - t)) == canonicalize(one - t));
  const LaurentPoly p = p412();
  CHECK(canonicalize(s * t * p, UnitClass::UpToPowersOfST) == canonicalize(p, UnitClass::UpToPowersOfST));
  CHECK_FALSE(canonicalize(s * p, UnitClass::UpToPowersOfST) == canonicalize(p, UnitClass::UpToPowersOfST));
  CHECK(canonicalize(s * p, UnitClass::Exact).poly == s * p);
  const auto c = canonicalize(LaurentPoly::monomial(-1, 3, -2) * p).poly;
  CHECK(c.min_s() == 0);
  CHECK(c.min_t() == 0);
  CHECK(c.terms().front().coeff > 0);
}

TEST_CASE("eval_at") {
  CHECK(eval_at(one - s * t, 2, 3) == -5);
  CHECK(eval_at(LaurentPoly{}, 7, 11) == 0);
  CHECK(eval_at(LaurentPoly::s(-2), Rational(1, 2), 1) == 4);
  CHECK_THROWS_AS(eval_at(s, 0, 1), ZeroSubstitution);
}

TEST_CASE("substitute") {
  const LaurentPoly ti = LaurentPoly::t(-1);
  CHECK(substitute(one - s * t, ti, t).is_zero());
  CHECK(substitute(s, ti, t) == ti);
  CHECK(substitute((one - t) * (one - s) * (t - s), ti, t) == (one - t) * (one - ti) * (t - ti));
  CHECK(substitute(s * s + t, one + t, t) == one + LaurentPoly(3) * t + t * t);
  CHECK_THROWS_AS(substitute(LaurentPoly::s(-1), one + t, t), NotDivisible);
}

TEST_CASE("rendering") {
  CHECK(to_string(LaurentPoly{}) == "0");
  CHECK(to_string(one - s - t + LaurentPoly(2) * s * t - s * s * t * t) == "1 - t - s + 2*s*t - s^2*t^2");
  CHECK(to_string(LaurentPoly::monomial(-3, -1, 2)) == "-3*s^-1*t^2");
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = vknot::testing::random_poly(rng);
    CHECK(parse_poly(to_string(p)) == p);
  }
}

TEST_CASE("ring axioms on random inputs") {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto a = vknot::testing::random_poly(rng);
    const auto b = vknot::testing::random_poly(rng);
    const auto c = vknot::testing::random_poly(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a + b == b + a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(vknot::testing::naive_eval(a * b, 2, -3) ==
            vknot::testing::naive_eval(a, 2, -3) * vknot::testing::naive_eval(b, 2, -3));
    if (!b.is_zero()) REQUIRE(exact_div(a * b, b) == a);
  }
}

TEST_CASE("gcd properties") {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto common = vknot::testing::random_poly(rng, 3, 5, 3);
    const auto a = common * vknot::testing::random_poly(rng, 3, 5, 3);
    const auto b = common * vknot::testing::random_poly(rng, 3, 5, 3);
    const auto g = gcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    REQUIRE(try_exact_div(a, g).has_value());
    REQUIRE(try_exact_div(b, g).has_value());
    REQUIRE(g == gcd(b, a));
    if (!common.is_zero()) REQUIRE(try_exact_div(g, common).has_value());
  }
}

TEST_CASE("canonicalize is idempotent and constant on unit orbits") {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto p = vknot::testing::random_poly(rng);
    for (auto mode : {UnitClass::UpToMonomialSign, UnitClass::UpToPowersOfST, UnitClass::Exact}) {
      const auto c = canonicalize(p, mode);
      REQUIRE(canonicalize(c.poly, mode) == c);
    }
    const auto u = LaurentPoly::monomial(-1, 2, -5);
    REQUIRE(canonicalize(u * p) == canonicalize(p));
    REQUIRE(canonicalize(LaurentPoly::monomial(1, -3, -3) * p, UnitClass::UpToPowersOfST) ==
            canonicalize(p, UnitClass::UpToPowersOfST));
    REQUIRE(vknot::testing::same_up_to_monomial_sign(p, canonicalize(p).poly));
  }
}

TEST_CASE("det examples") {
  PolyMatrix m(2, 2);
  m(0, 0) = LaurentPoly::t(-1);
  m(0, 1) = one - LaurentPoly::monomial(1, -1, -1);
  m(1, 1) = LaurentPoly::s(-1);
  CHECK(det(m) == LaurentPoly::monomial(1, -1, -1));
  CHECK(det(PolyMatrix::identity(5)) == one);
  CHECK(det(PolyMatrix(0, 0)) == one);
  CHECK_THROWS_AS(det(PolyMatrix(2, 3)), NotSquare);
}

TEST_CASE("det against cofactor expansion") {
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 6;
    // Mix in unit entries so both elimination phases are exercised.
    PolyMatrix m = vknot::testing::random_matrix(rng, n, n);
    if (i % 3 == 0) m(i % n, (i / 3) % n) = LaurentPoly::monomial(-1, 1, -2);
    const LaurentPoly d = det(m);
    REQUIRE(d == vknot::testing::cofactor_det(m));
    REQUIRE(det(m.transposed()) == d);
    if (n >= 2) {
      PolyMatrix sw = m;
      sw.swap_rows(0, n - 1);
      REQUIRE(det(sw) == -d);
    }
  }
}

TEST_CASE("minors") {
  PolyMatrix m(2, 2, {one, s, t, s * t});
  const auto k1 = minors(m, 1);
  CHECK(k1 == std::vector<LaurentPoly>{one, s, t, s * t});
  CHECK(minors(m, 0) == std::vector<LaurentPoly>{one});
  const auto id = minors(PolyMatrix::identity(3), 2);
  CHECK(id.size() == 9);
  CHECK(std::count(id.begin(), id.end(), one) == 3);
  CHECK(std::count_if(id.begin(), id.end(), [](const LaurentPoly& p) { return p.is_zero(); }) == 6);
  CHECK_THROWS_AS(minors(m, 3), SizeTooLarge);
  Rng rng(5);
  const PolyMatrix r = vknot::testing::random_matrix(rng, 3, 4);
  CHECK(minors(r, 2, true) == minors(r, 2, false));
}
