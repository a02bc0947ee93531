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

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace vknot {

enum class Passage { Over, Under };

struct GaussToken {
  Passage passage = Passage::Over;
  unsigned label = 0;
  int sign = 1;

  friend bool operator==(const GaussToken&, const GaussToken&) = default;
};

/**
 * A validated Gauss code: one token sequence per component. Every label
 * occurs exactly twice overall, once Over and once Under, with equal signs.
 *
 * Grammar (whitespace between tokens ignored):
 *   code      := component (',' component)* | <empty>
 *   component := token*          (may be empty only in multi-component codes)
 *   token     := ('O'|'U') digit+ ('+'|'-')
 */
struct GaussCode {
  std::vector<std::vector<GaussToken>> components;

  std::size_t crossing_count() const;
  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

/// Throws SyntaxError or ValidationError.
GaussCode parse_gauss_code(std::string_view text);
std::string to_string(const GaussCode& code);

enum class ComponentRole { Regular, Omega };

struct SlotRef {
  std::size_t component = 0;
  std::size_t position = 0;

  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

struct Endpoint {
  std::size_t chord = 0;
  Passage passage = Passage::Over;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Chord {
  unsigned label = 0;
  int sign = 1;

  friend bool operator==(const Chord&, const Chord&) = default;
};

/**
 * Gauss diagram of a virtual link: oriented circles carrying chord endpoints.
 *
 * Chords are indexed by order of first appearance (components in order, slots
 * in order); that index is the crossing order used by every invariant. The
 * constructor re-establishes this numbering, so any endpoint layout with
 * exactly one Over and one Under endpoint per chord is accepted.
 */
class GaussDiagram {
 public:
  GaussDiagram() = default;
  GaussDiagram(std::vector<std::vector<Endpoint>> components, std::vector<Chord> chords,
               std::vector<ComponentRole> roles = {});

  std::size_t component_count() const { return components_.size(); }
  std::size_t chord_count() const { return chords_.size(); }
  const std::vector<Endpoint>& component(std::size_t i) const { return components_.at(i); }
  const std::vector<std::vector<Endpoint>>& components() const { return components_; }
  const Chord& chord(std::size_t i) const { return chords_.at(i); }
  const std::vector<Chord>& chords() const { return chords_; }
  ComponentRole role(std::size_t i) const { return roles_.at(i); }
  const std::vector<ComponentRole>& roles() const { return roles_; }

  SlotRef over_slot(std::size_t chord) const { return over_.at(chord); }
  SlotRef under_slot(std::size_t chord) const { return under_.at(chord); }
  const Endpoint& at(SlotRef slot) const { return components_.at(slot.component).at(slot.position); }

  /// Sum of chord signs.
  int writhe() const;
  /// A label not used by any chord.
  unsigned next_label() const;

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

 private:
  std::vector<std::vector<Endpoint>> components_;
  std::vector<Chord> chords_;
  std::vector<ComponentRole> roles_;
  std::vector<SlotRef> over_;
  std::vector<SlotRef> under_;
};

/// A code with no components becomes the one-component crossingless unknot.
GaussDiagram to_diagram(const GaussCode& code);
GaussCode to_code(const GaussDiagram& d);

/// Cyclic rotation of one component so that it starts at slot `start`.
GaussDiagram rotate_component(const GaussDiagram& d, std::size_t component, std::size_t start);

/// Equality up to chord relabeling, per-component rotation and (when
/// `allow_component_permutation`) reordering of components with equal roles.
bool isomorphic(const GaussDiagram& a, const GaussDiagram& b,
                bool allow_component_permutation = false);

/// Drops a component and every chord with an endpoint on it. Throws BadIndex.
GaussDiagram delete_component(const GaussDiagram& d, std::size_t idx);

/**
 * Which of the two incoming short arcs at crossing i gets the odd label
 * a_{2i-1} (index 2i here, 0-based). LeftFirst labels the left incoming strand
 * when both strands point up: the over strand at a positive crossing and the
 * under strand at a negative one. It is the only choice that reproduces the
 * published values; the other conventions are kept for the calibration test.
 */
enum class ArcOrder { OverFirst, UnderFirst, LeftFirst, RightFirst };
inline constexpr ArcOrder kDefaultArcOrder = ArcOrder::LeftFirst;

struct ShortArcStructure {
  /// 2n for n crossings.
  std::size_t arc_count = 0;
  /// arc_of_slot[c][p] is the short arc that ends at slot (c, p).
  std::vector<std::vector<std::size_t>> arc_of_slot;
  /// Incoming arcs (a_{2i-1}, a_{2i}) of crossing i, 0-based: {2i, 2i+1}.
  std::vector<std::array<std::size_t, 2>> crossing_incidence;
  /// successor[a] is the short arc that follows a along its component.
  std::vector<std::size_t> successor;

  std::size_t cycle_count() const;
};

/// Throws NoCrossings for a chordless diagram.
ShortArcStructure short_arcs(const GaussDiagram& d, ArcOrder order = kDefaultArcOrder);

}  // namespace vknot
