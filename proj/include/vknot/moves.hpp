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

// Reidemeister moves on Gauss diagrams. A "site" is an insertion point: slot
// reference whose position may equal the component length (append). Moves
// are only applied where legal; nothing here searches for sites.

#pragma once

#include <array>
#include <cstddef>

#include "vknot/gauss.hpp"

namespace vknot {

/// Which endpoint of the new R1 chord comes first along the component.
enum class R1Kind { OverFirst, UnderFirst };

/// Inserts a kink chord at `site`. Throws BadIndex.
GaussDiagram apply_r1(const GaussDiagram& d, SlotRef site, int sign, R1Kind kind);
/// Removes a chord whose endpoints are cyclically adjacent. Throws NotApplicable.
GaussDiagram remove_r1(const GaussDiagram& d, std::size_t chord);

/**
 * Inserts two chords of opposite sign (the first one gets `first_sign`). Both
 * over endpoints go to `over_site`, both under endpoints to `under_site`. In
 * the parallel variant the under endpoints appear in the same order as the
 * over endpoints, in the antiparallel variant in reverse order. When both
 * sites coincide, the over pair precedes the under pair. Throws BadIndex.
 */
GaussDiagram apply_r2(const GaussDiagram& d, SlotRef over_site, SlotRef under_site,
                      int first_sign, bool parallel);
/// Removes a bigon: opposite signs, adjacent over endpoints, adjacent under
/// endpoints. Throws NotApplicable.
GaussDiagram remove_r2(const GaussDiagram& d, std::size_t chord_a, std::size_t chord_b);

/// True when the three chords bound a triangle that a third Reidemeister move
/// can slide across.
bool is_r3_configuration(const GaussDiagram& d, const std::array<std::size_t, 3>& chords);
/// Swaps the endpoint pair on each side of the triangle. The move is its own
/// inverse. Throws NotApplicable.
GaussDiagram apply_r3(const GaussDiagram& d, const std::array<std::size_t, 3>& chords);

}  // namespace vknot
