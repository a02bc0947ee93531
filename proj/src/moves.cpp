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

#include "vknot/moves.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vknot/error.hpp"

namespace vknot {

namespace {

struct Insertion {
  SlotRef at;
  std::vector<Endpoint> endpoints;
};

void check_site(const GaussDiagram& d, SlotRef site) {
  if (site.component >= d.component_count() ||
      site.position > d.component(site.component).size())
    throw BadIndex("move site (" + std::to_string(site.component) + ", " +
                   std::to_string(site.position) + ") is out of range");
}

void check_chord(const GaussDiagram& d, std::size_t chord) {
  if (chord >= d.chord_count()) throw BadIndex("chord " + std::to_string(chord) + " does not exist");
}

// New chords are appended after the existing ones; endpoints refer to them by
// their appended index.
GaussDiagram with_insertions(const GaussDiagram& d, const std::vector<Chord>& added,
                             const std::vector<Insertion>& insertions) {
  std::vector<Chord> chords = d.chords();
  chords.insert(chords.end(), added.begin(), added.end());
  std::vector<std::vector<Endpoint>> comps;
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    const auto& old = d.component(c);
    auto& out = comps.emplace_back();
    for (std::size_t p = 0; p <= old.size(); ++p) {
      for (const auto& ins : insertions)
        if (ins.at.component == c && ins.at.position == p)
          out.insert(out.end(), ins.endpoints.begin(), ins.endpoints.end());
      if (p < old.size()) out.push_back(old[p]);
    }
  }
  return GaussDiagram(std::move(comps), std::move(chords), d.roles());
}

GaussDiagram without_chords(const GaussDiagram& d, const std::vector<std::size_t>& removed) {
  std::vector<std::size_t> remap(d.chord_count(), d.chord_count());
  std::vector<Chord> chords;
  for (std::size_t k = 0; k < d.chord_count(); ++k)
    if (std::find(removed.begin(), removed.end(), k) == removed.end()) {
      remap[k] = chords.size();
      chords.push_back(d.chord(k));
    }
  std::vector<std::vector<Endpoint>> comps;
  for (const auto& comp : d.components()) {
    auto& out = comps.emplace_back();
    for (const auto& ep : comp)
      if (remap[ep.chord] != d.chord_count()) out.push_back(Endpoint{remap[ep.chord], ep.passage});
  }
  return GaussDiagram(std::move(comps), std::move(chords), d.roles());
}

bool cyclically_adjacent(const GaussDiagram& d, SlotRef a, SlotRef b) {
  if (a.component != b.component || a.position == b.position) return false;
  const std::size_t len = d.component(a.component).size();
  return (a.position + 1) % len == b.position || (b.position + 1) % len == a.position;
}

// The local picture of a third Reidemeister move: three strands, each meeting
// the other two. For strand i, `first[i]`/`second[i]` are the strands it meets
// in travel order, `over_first[i]`/`over_second[i]` its passage there, and
// sign[i][j] the sign of the crossing between strands i and j.
struct Triangle {
  std::array<int, 3> first{}, second{};
  std::array<bool, 3> over_first{}, over_second{};
  std::array<std::array<int, 3>, 3> sign{};

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

// Every picture produced by three straight lines meeting pairwise in a small
// triangle, for all orientations, height orders and both positions of the
// third line relative to the other crossing.
const std::vector<Triangle>& triangle_patterns() {
  static const std::vector<Triangle> patterns = [] {
    struct V {
      long x, y;
    };
    auto cross = [](V a, V b) { return a.x * b.y - a.y * b.x; };
    const std::array<V, 3> dir = {V{1, 0}, V{1, 2}, V{1, -2}};
    std::vector<Triangle> out;
    for (long third_offset : {2L, -2L}) {
      const std::array<V, 3> base = {V{0, 0}, V{0, 0}, V{0, third_offset}};
      for (int flips = 0; flips < 8; ++flips) {
        std::array<V, 3> d = dir;
        for (int i = 0; i < 3; ++i)
          if (flips & (1 << i)) d[i] = V{-d[i].x, -d[i].y};
        std::array<int, 3> height = {0, 1, 2};
        do {
          Triangle tri;
          for (int i = 0; i < 3; ++i) {
            // Travel parameter of strand i at its crossing with strand j, scaled
            // by the common positive factor |cross(d_i, d_j)|.
            std::array<std::pair<double, int>, 2> meets{};
            int m = 0;
            for (int j = 0; j < 3; ++j) {
              if (j == i) continue;
              const V diff{base[j].x - base[i].x, base[j].y - base[i].y};
              const double lambda = static_cast<double>(cross(diff, d[j])) /
                                    static_cast<double>(cross(d[i], d[j]));
              meets[m++] = {lambda, j};
              const bool i_over = height[i] > height[j];
              const long c = i_over ? cross(d[i], d[j]) : cross(d[j], d[i]);
              tri.sign[i][j] = c > 0 ? 1 : -1;
            }
            std::sort(meets.begin(), meets.end());
            tri.first[i] = meets[0].second;
            tri.second[i] = meets[1].second;
            tri.over_first[i] = height[i] > height[tri.first[i]];
            tri.over_second[i] = height[i] > height[tri.second[i]];
          }
          if (std::find(out.begin(), out.end(), tri) == out.end()) out.push_back(tri);
        } while (std::next_permutation(height.begin(), height.end()));
      }
    }
    return out;
  }();
  return patterns;
}

struct Side {
  SlotRef first, second;
};

// Candidate triangle sides: three disjoint pairs of consecutive endpoints, each
// pair joining two different chords, together joining every pair of chords.
std::vector<std::array<Side, 3>> candidate_sides(const GaussDiagram& d,
                                                 const std::array<std::size_t, 3>& chords) {
  std::vector<SlotRef> slots;
  for (std::size_t c : chords) {
    slots.push_back(d.over_slot(c));
    slots.push_back(d.under_slot(c));
  }
  auto index_of = [&](SlotRef s) -> int {
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (slots[k] == s) return static_cast<int>(k);
    return -1;
  };
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const std::size_t len = d.component(slots[k].component).size();
    const SlotRef next{slots[k].component, (slots[k].position + 1) % len};
    const int j = index_of(next);
    if (j >= 0 && static_cast<std::size_t>(j) != k && j / 2 != static_cast<int>(k) / 2)
      pairs.emplace_back(static_cast<int>(k), j);
  }
  std::vector<std::array<Side, 3>> out;
  const std::size_t np = pairs.size();
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = a + 1; b < np; ++b)
      for (std::size_t c = b + 1; c < np; ++c) {
        std::array<std::pair<int, int>, 3> pick = {pairs[a], pairs[b], pairs[c]};
        int used = 0, chord_pairs = 0;
        for (auto [x, y] : pick) {
          used |= (1 << x) | (1 << y);
          chord_pairs |= 1 << (x / 2 + y / 2 - 1);  // {0,1}->0, {0,2}->1, {1,2}->2
        }
        if (used != 0b111111 || chord_pairs != 0b111) continue;
        std::array<Side, 3> sides;
        for (int k = 0; k < 3; ++k) sides[k] = Side{slots[pick[k].first], slots[pick[k].second]};
        out.push_back(sides);
      }
  return out;
}

bool matches_pattern(const GaussDiagram& d, const std::array<Side, 3>& sides) {
  // chord_between[a][b]: the chord shared by sides a and b.
  std::array<std::array<std::size_t, 3>, 3> chord_between{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      for (SlotRef x : {sides[a].first, sides[a].second})
        for (SlotRef y : {sides[b].first, sides[b].second})
          if (d.at(x).chord == d.at(y).chord) chord_between[a][b] = d.at(x).chord;
    }
  std::array<int, 3> strand = {0, 1, 2};  // side a plays pattern strand strand[a]
  do {
    for (const Triangle& tri : triangle_patterns()) {
      bool ok = true;
      for (int a = 0; a < 3 && ok; ++a) {
        const int i = strand[a];
        const Endpoint& e1 = d.at(sides[a].first);
        const Endpoint& e2 = d.at(sides[a].second);
        int b1 = -1, b2 = -1;
        for (int b = 0; b < 3; ++b) {
          if (b == a) continue;
          if (chord_between[a][b] == e1.chord) b1 = b;
          if (chord_between[a][b] == e2.chord) b2 = b;
        }
        ok = b1 >= 0 && b2 >= 0 && strand[b1] == tri.first[i] && strand[b2] == tri.second[i] &&
             (e1.passage == Passage::Over) == tri.over_first[i] &&
             (e2.passage == Passage::Over) == tri.over_second[i] &&
             d.chord(e1.chord).sign == tri.sign[i][strand[b1]] &&
             d.chord(e2.chord).sign == tri.sign[i][strand[b2]];
      }
      if (ok) return true;
    }
  } while (std::next_permutation(strand.begin(), strand.end()));
  return false;
}

std::optional<std::array<Side, 3>> find_triangle(const GaussDiagram& d,
                                                 const std::array<std::size_t, 3>& chords) {
  for (std::size_t c : chords) check_chord(d, c);
  if (chords[0] == chords[1] || chords[0] == chords[2] || chords[1] == chords[2])
    return std::nullopt;
  for (const auto& sides : candidate_sides(d, chords))
    if (matches_pattern(d, sides)) return sides;
  return std::nullopt;
}

}  // namespace

GaussDiagram apply_r1(const GaussDiagram& d, SlotRef site, int sign, R1Kind kind) {
  check_site(d, site);
  const std::size_t k = d.chord_count();
  const Endpoint over{k, Passage::Over}, under{k, Passage::Under};
  Insertion ins{site, kind == R1Kind::OverFirst ? std::vector{over, under} : std::vector{under, over}};
  return with_insertions(d, {Chord{d.next_label(), sign > 0 ? 1 : -1}}, {ins});
}

GaussDiagram remove_r1(const GaussDiagram& d, std::size_t chord) {
  check_chord(d, chord);
  if (!cyclically_adjacent(d, d.over_slot(chord), d.under_slot(chord)))
    throw NotApplicable("R1: endpoints of chord " + std::to_string(chord) + " are not adjacent");
  return without_chords(d, {chord});
}

GaussDiagram apply_r2(const GaussDiagram& d, SlotRef over_site, SlotRef under_site,
                      int first_sign, bool parallel) {
  check_site(d, over_site);
  check_site(d, under_site);
  const std::size_t a = d.chord_count(), b = a + 1;
  const int sa = first_sign > 0 ? 1 : -1;
  const unsigned label = d.next_label();
  std::vector<Insertion> ins;
  ins.push_back({over_site, {Endpoint{a, Passage::Over}, Endpoint{b, Passage::Over}}});
  ins.push_back({under_site, parallel
                                 ? std::vector{Endpoint{a, Passage::Under}, Endpoint{b, Passage::Under}}
                                 : std::vector{Endpoint{b, Passage::Under}, Endpoint{a, Passage::Under}}});
  return with_insertions(d, {Chord{label, sa}, Chord{label + 1, -sa}}, ins);
}

GaussDiagram remove_r2(const GaussDiagram& d, std::size_t chord_a, std::size_t chord_b) {
  check_chord(d, chord_a);
  check_chord(d, chord_b);
  if (chord_a == chord_b || d.chord(chord_a).sign != -d.chord(chord_b).sign ||
      !cyclically_adjacent(d, d.over_slot(chord_a), d.over_slot(chord_b)) ||
      !cyclically_adjacent(d, d.under_slot(chord_a), d.under_slot(chord_b)))
    throw NotApplicable("R2: chords " + std::to_string(chord_a) + " and " +
                        std::to_string(chord_b) + " do not form a bigon");
  return without_chords(d, {chord_a, chord_b});
}

bool is_r3_configuration(const GaussDiagram& d, const std::array<std::size_t, 3>& chords) {
  return find_triangle(d, chords).has_value();
}

GaussDiagram apply_r3(const GaussDiagram& d, const std::array<std::size_t, 3>& chords) {
  const auto sides = find_triangle(d, chords);
  if (!sides) throw NotApplicable("R3: chords do not form a movable triangle");
  auto comps = d.components();
  for (const Side& s : *sides)
    std::swap(comps[s.first.component][s.first.position],
              comps[s.second.component][s.second.position]);
  return GaussDiagram(std::move(comps), d.chords(), d.roles());
}

}  // namespace vknot
