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

#include "vknot/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "vknot/error.hpp"

namespace vknot {

std::size_t GaussCode::crossing_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.size();
  return n / 2;
}

GaussCode parse_gauss_code(std::string_view text) {
  GaussCode code;
  std::vector<GaussToken> current;
  bool saw_comma = false;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw SyntaxError("gauss code, column " + std::to_string(i + 1) + ": " + why);
  };

  skip_ws();
  if (i == text.size()) return code;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    char c = text[i];
    if (c == ',') {
      code.components.push_back(std::move(current));
      current.clear();
      saw_comma = true;
      ++i;
      continue;
    }
    if (c != 'O' && c != 'U') fail(std::string("expected 'O' or 'U', found '") + c + "'");
    GaussToken tok;
    tok.passage = c == 'O' ? Passage::Over : Passage::Under;
    ++i;
    std::size_t start = i;
    unsigned long long label = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      label = label * 10 + static_cast<unsigned>(text[i] - '0');
      if (label > std::numeric_limits<unsigned>::max()) fail("crossing label too large");
      ++i;
    }
    if (i == start) fail("expected crossing label");
    if (i == text.size() || (text[i] != '+' && text[i] != '-')) fail("expected sign '+' or '-'");
    tok.label = static_cast<unsigned>(label);
    tok.sign = text[i] == '+' ? 1 : -1;
    ++i;
    current.push_back(tok);
  }
  code.components.push_back(std::move(current));
  if (!saw_comma && code.components.front().empty()) code.components.clear();

  struct Seen {
    int over = 0, under = 0, sign = 0;
    bool sign_mismatch = false;
  };
  std::map<unsigned, Seen> seen;
  for (const auto& comp : code.components)
    for (const auto& tok : comp) {
      Seen& s = seen[tok.label];
      (tok.passage == Passage::Over ? s.over : s.under)++;
      if (s.sign != 0 && s.sign != tok.sign) s.sign_mismatch = true;
      s.sign = tok.sign;
    }
  for (const auto& [label, s] : seen) {
    if (s.over != 1 || s.under != 1)
      throw ValidationError("crossing " + std::to_string(label) +
                            " must appear exactly once as O and once as U");
    if (s.sign_mismatch)
      throw ValidationError("crossing " + std::to_string(label) + " has inconsistent signs");
  }
  return code;
}

std::string to_string(const GaussCode& code) {
  std::ostringstream os;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    if (c) os << ',';
    for (const auto& tok : code.components[c])
      os << (tok.passage == Passage::Over ? 'O' : 'U') << tok.label << (tok.sign > 0 ? '+' : '-');
  }
  return os.str();
}

GaussDiagram::GaussDiagram(std::vector<std::vector<Endpoint>> components,
                           std::vector<Chord> chords, std::vector<ComponentRole> roles)
    : roles_(std::move(roles)) {
  if (roles_.empty()) roles_.assign(components.size(), ComponentRole::Regular);
  if (roles_.size() != components.size())
    throw ValidationError("component role list does not match component count");

  // Renumber chords by first appearance and check endpoint multiplicities.
  std::vector<std::size_t> renumber(chords.size(), chords.size());
  std::vector<int> overs(chords.size()), unders(chords.size());
  std::size_t next = 0;
  for (const auto& comp : components)
    for (const auto& ep : comp) {
      if (ep.chord >= chords.size()) throw ValidationError("endpoint references unknown chord");
      (ep.passage == Passage::Over ? overs : unders)[ep.chord]++;
      if (renumber[ep.chord] == chords.size()) renumber[ep.chord] = next++;
    }
  for (std::size_t k = 0; k < chords.size(); ++k)
    if (overs[k] != 1 || unders[k] != 1)
      throw ValidationError("every chord needs exactly one over and one under endpoint");

  chords_.resize(chords.size());
  for (std::size_t k = 0; k < chords.size(); ++k) chords_[renumber[k]] = chords[k];
  {
    std::vector<unsigned> labels;
    for (const auto& ch : chords_) labels.push_back(ch.label);
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw ValidationError("duplicate chord label");
  }
  over_.resize(chords_.size());
  under_.resize(chords_.size());
  for (std::size_t c = 0; c < components.size(); ++c)
    for (std::size_t p = 0; p < components[c].size(); ++p) {
      Endpoint& ep = components[c][p];
      ep.chord = renumber[ep.chord];
      (ep.passage == Passage::Over ? over_ : under_)[ep.chord] = SlotRef{c, p};
    }
  components_ = std::move(components);
}

int GaussDiagram::writhe() const {
  int w = 0;
  for (const auto& ch : chords_) w += ch.sign;
  return w;
}

unsigned GaussDiagram::next_label() const {
  unsigned m = 0;
  for (const auto& ch : chords_) m = std::max(m, ch.label);
  return m + 1;
}

GaussDiagram to_diagram(const GaussCode& code) {
  if (code.components.empty()) return GaussDiagram({{}}, {});
  std::map<unsigned, std::size_t> index;
  std::vector<Chord> chords;
  std::vector<std::vector<Endpoint>> comps;
  for (const auto& comp : code.components) {
    auto& out = comps.emplace_back();
    for (const auto& tok : comp) {
      auto [it, inserted] = index.try_emplace(tok.label, chords.size());
      if (inserted) chords.push_back(Chord{tok.label, tok.sign});
      out.push_back(Endpoint{it->second, tok.passage});
    }
  }
  return GaussDiagram(std::move(comps), std::move(chords));
}

GaussCode to_code(const GaussDiagram& d) {
  GaussCode code;
  if (d.component_count() == 1 && d.component(0).empty()) return code;
  for (const auto& comp : d.components()) {
    auto& out = code.components.emplace_back();
    for (const auto& ep : comp) {
      const Chord& ch = d.chord(ep.chord);
      out.push_back(GaussToken{ep.passage, ch.label, ch.sign});
    }
  }
  return code;
}

GaussDiagram rotate_component(const GaussDiagram& d, std::size_t component, std::size_t start) {
  if (component >= d.component_count()) throw BadIndex("rotate_component: bad component index");
  auto comps = d.components();
  auto& c = comps[component];
  if (!c.empty()) std::rotate(c.begin(), c.begin() + static_cast<long>(start % c.size()), c.end());
  return GaussDiagram(std::move(comps), d.chords(), d.roles());
}

namespace {

// Chord-label-free signature of a diagram with fixed rotations and component
// order: chords renamed by first appearance.
using Signature = std::vector<std::vector<std::array<long, 3>>>;

Signature signature(const GaussDiagram& d, const std::vector<std::size_t>& order,
                    const std::vector<std::size_t>& rotation) {
  std::vector<long> rename(d.chord_count(), -1);
  long next = 0;
  Signature sig;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& comp = d.component(order[k]);
    auto& out = sig.emplace_back();
    out.push_back({static_cast<long>(d.role(order[k])), -1, -1});
    for (std::size_t p = 0; p < comp.size(); ++p) {
      const Endpoint& ep = comp[(p + rotation[k]) % comp.size()];
      if (rename[ep.chord] < 0) rename[ep.chord] = next++;
      out.push_back({rename[ep.chord], ep.passage == Passage::Over ? 0 : 1, d.chord(ep.chord).sign});
    }
  }
  return sig;
}

}  // namespace

bool isomorphic(const GaussDiagram& a, const GaussDiagram& b, bool allow_component_permutation) {
  if (a.component_count() != b.component_count() || a.chord_count() != b.chord_count())
    return false;
  const std::size_t m = a.component_count();
  std::vector<std::size_t> identity(m);
  std::iota(identity.begin(), identity.end(), 0);
  const Signature target = signature(b, identity, std::vector<std::size_t>(m, 0));

  std::vector<std::size_t> order = identity;
  do {
    bool shapes_match = true;
    for (std::size_t k = 0; k < m; ++k)
      if (a.component(order[k]).size() != b.component(k).size() || a.role(order[k]) != b.role(k))
        shapes_match = false;
    if (shapes_match) {
      // Odometer over all rotation tuples.
      std::vector<std::size_t> rot(m, 0);
      while (true) {
        if (signature(a, order, rot) == target) return true;
        std::size_t k = 0;
        for (; k < m; ++k) {
          const std::size_t len = std::max<std::size_t>(1, a.component(order[k]).size());
          if (++rot[k] < len) break;
          rot[k] = 0;
        }
        if (k == m) break;
      }
    }
  } while (allow_component_permutation && std::next_permutation(order.begin(), order.end()));
  return false;
}

GaussDiagram delete_component(const GaussDiagram& d, std::size_t idx) {
  if (idx >= d.component_count())
    throw BadIndex("delete_component: component " + std::to_string(idx) + " does not exist");
  std::vector<bool> dropped(d.chord_count(), false);
  for (const auto& ep : d.component(idx)) dropped[ep.chord] = true;

  std::vector<std::size_t> remap(d.chord_count());
  std::vector<Chord> chords;
  for (std::size_t k = 0; k < d.chord_count(); ++k)
    if (!dropped[k]) {
      remap[k] = chords.size();
      chords.push_back(d.chord(k));
    }
  std::vector<std::vector<Endpoint>> comps;
  std::vector<ComponentRole> roles;
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    if (c == idx) continue;
    auto& out = comps.emplace_back();
    for (const auto& ep : d.component(c))
      if (!dropped[ep.chord]) out.push_back(Endpoint{remap[ep.chord], ep.passage});
    roles.push_back(d.role(c));
  }
  return GaussDiagram(std::move(comps), std::move(chords), std::move(roles));
}

std::size_t ShortArcStructure::cycle_count() const {
  std::vector<bool> seen(successor.size(), false);
  std::size_t cycles = 0;
  for (std::size_t a = 0; a < successor.size(); ++a) {
    if (seen[a]) continue;
    ++cycles;
    for (std::size_t x = a; !seen[x]; x = successor[x]) seen[x] = true;
  }
  return cycles;
}

ShortArcStructure short_arcs(const GaussDiagram& d, ArcOrder order) {
  if (d.chord_count() == 0) throw NoCrossings("short_arcs: diagram has no crossings");
  ShortArcStructure out;
  out.arc_count = 2 * d.chord_count();
  out.crossing_incidence.resize(d.chord_count());
  for (std::size_t i = 0; i < d.chord_count(); ++i) out.crossing_incidence[i] = {2 * i, 2 * i + 1};

  auto first_label = [&](const Endpoint& ep) {
    const bool over = ep.passage == Passage::Over;
    const bool positive = d.chord(ep.chord).sign > 0;
    switch (order) {
      case ArcOrder::OverFirst: return over;
      case ArcOrder::UnderFirst: return !over;
      case ArcOrder::LeftFirst: return positive ? over : !over;
      case ArcOrder::RightFirst: return positive ? !over : over;
    }
    return over;
  };

  out.arc_of_slot.resize(d.component_count());
  for (std::size_t c = 0; c < d.component_count(); ++c)
    for (const auto& ep : d.component(c))
      out.arc_of_slot[c].push_back(2 * ep.chord + (first_label(ep) ? 0 : 1));

  out.successor.assign(out.arc_count, 0);
  for (const auto& arcs : out.arc_of_slot)
    for (std::size_t p = 0; p < arcs.size(); ++p) out.successor[arcs[p]] = arcs[(p + 1) % arcs.size()];
  return out;
}

}  // namespace vknot
