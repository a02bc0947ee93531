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

#include "vknot/sawollek.hpp"

#include <string>

#include "vknot/error.hpp"

namespace vknot {

namespace {

const LaurentPoly& one_minus_st() {
  static const LaurentPoly p = LaurentPoly(1) - LaurentPoly::monomial(1, 1, 1);
  return p;
}

void require_knot(const GaussDiagram& d, const char* what) {
  if (d.component_count() != 1)
    throw NotAKnot(std::string(what) + ": expected 1 component, got " +
                   std::to_string(d.component_count()));
}

}  // namespace

CrossingBlock CrossingBlock::for_sign(int sign) {
  CrossingBlock b{sign, PolyMatrix(2, 2)};
  if (sign > 0) {
    b.block(0, 0) = LaurentPoly::t(-1);
    b.block(0, 1) = LaurentPoly(1) - LaurentPoly::monomial(1, -1, -1);
    b.block(1, 1) = LaurentPoly::s(-1);
  } else {
    b.block(0, 0) = LaurentPoly::s();
    b.block(1, 0) = one_minus_st();
    b.block(1, 1) = LaurentPoly::t();
  }
  return b;
}

PolyMatrix build_m_matrix(const GaussDiagram& d) {
  if (d.chord_count() == 0) throw NoCrossings("build_m_matrix: diagram has no crossings");
  const std::size_t n = d.chord_count();
  PolyMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const CrossingBlock b = CrossingBlock::for_sign(d.chord(i).sign);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) m(2 * i + r, 2 * i + c) = b.block(r, c);
  }
  return m;
}

PolyMatrix build_p_matrix(const GaussDiagram& d, ArcOrder order) {
  const ShortArcStructure arcs = short_arcs(d, order);
  PolyMatrix p(arcs.arc_count, arcs.arc_count);
  for (std::size_t a = 0; a < arcs.arc_count; ++a) p(a, arcs.successor[a]) = 1;
  return p;
}

GeneralizedAlexander delta0(const GaussDiagram& d, ArcOrder order, UnitClass unit_class) {
  GeneralizedAlexander g;
  if (d.chord_count() != 0) g.raw = det(build_m_matrix(d) - build_p_matrix(d, order));
  g.canonical = canonicalize(g.raw, unit_class);
  g.is_zero = g.raw.is_zero();
  return g;
}

LaurentPoly divisibility_check(const GeneralizedAlexander& g, const GaussDiagram& d) {
  require_knot(d, "divisibility_check");
  if (g.is_zero) return {};
  return exact_div(g.raw, one_minus_st());
}

LaurentPoly writhe_polynomial(const GaussDiagram& d) {
  require_knot(d, "writhe_polynomial");
  const LaurentPoly quotient = divisibility_check(delta0(d), d);
  return -substitute(quotient, LaurentPoly::t(-1), LaurentPoly::t());
}

Verdict obstruct_slice(const GaussDiagram& d) {
  require_knot(d, "obstruct_slice");
  return delta0(d).is_zero ? Verdict::NoObstruction : Verdict::Obstructed;
}

}  // namespace vknot
