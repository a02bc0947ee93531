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

#include "vknot/gauss.hpp"
#include "vknot/laurent.hpp"
#include "vknot/poly_matrix.hpp"

namespace vknot {

/// The 2x2 block of M contributed by one crossing.
struct CrossingBlock {
  int sign = 1;
  PolyMatrix block;

  /// [[t^-1, 1 - (st)^-1], [0, s^-1]] for +1, [[s, 0], [1 - st, t]] for -1.
  static CrossingBlock for_sign(int sign);
};

struct GeneralizedAlexander {
  LaurentPoly raw;
  CanonicalForm canonical;
  bool is_zero = true;
};

/// Block diagonal 2n x 2n. Throws NoCrossings.
PolyMatrix build_m_matrix(const GaussDiagram& d);
/// Permutation matrix of the short-arc successor: entry (a, succ(a)) is 1.
PolyMatrix build_p_matrix(const GaussDiagram& d, ArcOrder order = kDefaultArcOrder);

/// det(M - P). A crossingless diagram gets the zero polynomial.
GeneralizedAlexander delta0(const GaussDiagram& d, ArcOrder order = kDefaultArcOrder,
                            UnitClass unit_class = UnitClass::UpToMonomialSign);

/// det(M - P) / (1 - st) for a knot. Throws NotAKnot, NotDivisible.
LaurentPoly divisibility_check(const GeneralizedAlexander& g, const GaussDiagram& d);

/// -(det(M - P) / (1 - st)) at s = t^-1. Throws NotAKnot, NotDivisible.
LaurentPoly writhe_polynomial(const GaussDiagram& d);

enum class Verdict { Obstructed, NoObstruction };

/// Obstructed iff the knot has nonzero generalized Alexander polynomial. A
/// NoObstruction verdict says nothing about sliceness. Throws NotAKnot.
Verdict obstruct_slice(const GaussDiagram& d);

}  // namespace vknot
