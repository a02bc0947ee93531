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

#include "vknot/zh.hpp"

#include <utility>
#include <vector>

#include "vknot/error.hpp"

namespace vknot {

ZhDiagram zh(const GaussDiagram& d) {
  for (auto role : d.roles())
    if (role == ComponentRole::Omega) throw AlreadyHasOmega("zh: input already has an omega component");

  std::vector<Chord> chords = d.chords();
  unsigned label = d.next_label();
  std::vector<std::vector<Endpoint>> comps;
  std::vector<Endpoint> omega;
  auto add_omega_chord = [&](std::vector<Endpoint>& out, int sign) {
    const std::size_t k = chords.size();
    chords.push_back(Chord{label++, sign});
    out.push_back(Endpoint{k, Passage::Under});
    omega.push_back(Endpoint{k, Passage::Over});
  };
  for (const auto& comp : d.components()) {
    auto& out = comps.emplace_back();
    for (const auto& ep : comp) {
      const int sign = d.chord(ep.chord).sign;
      if (ep.passage == Passage::Over) {
        add_omega_chord(out, -sign);
        out.push_back(ep);
      } else {
        out.push_back(ep);
        add_omega_chord(out, sign);
      }
    }
  }
  comps.push_back(std::move(omega));
  std::vector<ComponentRole> roles(d.component_count(), ComponentRole::Regular);
  roles.push_back(ComponentRole::Omega);
  ZhDiagram z{GaussDiagram(std::move(comps), std::move(chords), std::move(roles)), d.component_count()};
  return z;
}

std::size_t zh_component_count(const ZhDiagram& z) { return z.diagram.component_count(); }

}  // namespace vknot
