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

#include <cstddef>
#include <string>
#include <vector>

#include "vknot/gauss.hpp"
#include "vknot/laurent.hpp"
#include "vknot/poly_matrix.hpp"

namespace vknot {

struct Letter {
  std::size_t gen = 0;
  int exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in a free group. Letters have exponent +1 or -1.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word reduced() const;
  /// Free reduction followed by cancellation across the ends.
  Word cyclically_reduced() const;
  /// Sum of the exponents of `gen`.
  int exponent_sum(std::size_t gen) const;

  Word& operator*=(const Word& o);
  friend Word operator*(Word a, const Word& b) { return a *= b; }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct Generator {
  std::string name;
  ComponentRole role = ComponentRole::Regular;
  std::size_t component = 0;
};

struct GroupPresentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;

  std::ptrdiff_t deficiency() const {
    return static_cast<std::ptrdiff_t>(generators.size()) - static_cast<std::ptrdiff_t>(relators.size());
  }
};

/// Monomial image of each generator.
struct Abelianization {
  std::vector<LaurentPoly> image;
};

/// Regular generators go to t, Omega generators to s.
Abelianization default_abelianization(const GroupPresentation& p);

/**
 * One generator per arc, arcs cut at under endpoints. On a component with
 * under endpoints u_0, u_1, ..., arc j runs from u_{j-1} to u_j (cyclically),
 * so u_j has incoming arc j and outgoing arc j+1. Every under endpoint gives
 * the relator o^e a_in o^-e a_out^-1 with o the arc carrying the matching
 * over endpoint and e the chord sign. A component with no under endpoints is
 * a single free generator. Regular generators are named a1, a2, ... and
 * Omega generators w1, w2, ...
 */
GroupPresentation wirtinger(const GaussDiagram& d);

/// wirtinger(zh(d)).
GroupPresentation reduced_group(const GaussDiagram& d);

struct FoxTerm {
  int coeff = 1;
  Word prefix;
};
using FoxSum = std::vector<FoxTerm>;

FoxSum fox_derivative(const Word& w, std::size_t gen);
LaurentPoly abelianize(const Word& w, const Abelianization& alpha);
LaurentPoly abelianize(const FoxSum& f, const Abelianization& alpha);

/// Rows are relators, columns generators.
PolyMatrix alexander_matrix(const GroupPresentation& p, const Abelianization& alpha);

struct ElementaryIdeal {
  std::size_t k = 0;
  std::vector<LaurentPoly> generators;
  LaurentPoly gcd_generator;
};

/**
 * E_k for k = 0..k_max, generated by the (g-k)-minors of the r x g Alexander
 * matrix. E_k is the whole ring once g - k <= 0 and the zero ideal when
 * g - k > r.
 */
std::vector<ElementaryIdeal> elementary_ideals(const GroupPresentation& p, const Abelianization& alpha,
                                               std::size_t k_max, bool parallel = true);

/// gcd of a list of polynomials; 0 for an empty list.
LaurentPoly gcd_of(const std::vector<LaurentPoly>& ps);

/**
 * Determinant of the Alexander matrix of a deficiency-one presentation with
 * the column of its single Omega generator removed. Throws NotApplicable.
 */
LaurentPoly omega_minor(const GroupPresentation& p, const Abelianization& alpha);

/// For a knot K, omega_minor(reduced_group(K)) is Delta0(st, s^-1) up to
/// units; this applies the inverse substitution s -> t^-1, t -> st.
LaurentPoly omega_minor_to_delta_variables(const LaurentPoly& p);

/**
 * Longitude of component `comp` in the generators of wirtinger(d): walking
 * from slot 0, each under endpoint contributes (over arc)^sign, and the
 * result is multiplied by m^-w where m is the first generator of the
 * component and w the exponent sum of the component's generators. Throws
 * BadIndex.
 */
Word longitude(const GaussDiagram& d, std::size_t comp);

/**
 * Repeatedly removes a generator occurring exactly once in some relator,
 * choosing the shortest such relator and then the smallest generator id.
 * Relators are kept freely and cyclically reduced; trivial ones are dropped.
 */
GroupPresentation tietze_eliminate(const GroupPresentation& p);

std::string to_string(const Word& w, const std::vector<Generator>& gens);
/// `gens: a1 a2 ; rels: a1 a2 a1^-1 a2^-1 ; ...`
std::string to_string(const GroupPresentation& p);

}  // namespace vknot
