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

#include "vknot/gauss.hpp"

namespace vknot {

struct ZhDiagram {
  GaussDiagram diagram;
  std::size_t omega_index = 0;
};

/**
 * Adds the omega circle. Chords are read as arrows from the over endpoint
 * (foot) to the under endpoint (head). Each chord c gets two new chords whose
 * over endpoints lie on omega: one with its under endpoint just before the
 * foot of c and sign -sign(c), one with its under endpoint just after the head
 * of c and sign +sign(c). Omega is the last component; its endpoints appear in
 * the order the new under endpoints are met walking the input. New chords are
 * labeled from one past the largest existing label. Throws AlreadyHasOmega.
 */
ZhDiagram zh(const GaussDiagram& d);

std::size_t zh_component_count(const ZhDiagram& z);

}  // namespace vknot
