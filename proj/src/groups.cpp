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

#include "vknot/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>
#include <utility>

#include "vknot/error.hpp"
#include "vknot/zh.hpp"

namespace vknot {

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  return Word(std::move(out));
}

Word Word::reduced() const {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word Word::cyclically_reduced() const {
  std::vector<Letter> w = reduced().letters_;
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo].gen == w[hi - 1].gen && w[lo].exp == -w[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi)));
}

int Word::exponent_sum(std::size_t gen) const {
  int s = 0;
  for (const auto& l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

Word& Word::operator*=(const Word& o) {
  letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  return *this;
}

Abelianization default_abelianization(const GroupPresentation& p) {
  Abelianization a;
  for (const auto& g : p.generators)
    a.image.push_back(g.role == ComponentRole::Omega ? LaurentPoly::s() : LaurentPoly::t());
  return a;
}

namespace {

struct ArcLayout {
  // first_gen[c]: id of arc 0 of component c; arcs[c]: number of arcs.
  std::vector<std::size_t> first_gen, arcs;
  // arc_at[c][p]: arc containing slot p (for an under slot, its incoming arc).
  std::vector<std::vector<std::size_t>> arc_at;
};

ArcLayout arc_layout(const GaussDiagram& d) {
  ArcLayout lay;
  std::size_t next = 0;
  for (const auto& comp : d.components()) {
    std::size_t unders = 0;
    auto& at = lay.arc_at.emplace_back();
    for (const auto& ep : comp) {
      at.push_back(unders);
      if (ep.passage == Passage::Under) ++unders;
    }
    const std::size_t n = std::max<std::size_t>(1, unders);
    for (auto& a : at) a %= n;
    lay.first_gen.push_back(next);
    lay.arcs.push_back(n);
    next += n;
  }
  return lay;
}

std::size_t generator_at(const ArcLayout& lay, SlotRef s) {
  return lay.first_gen[s.component] + lay.arc_at[s.component][s.position];
}

}  // namespace

GroupPresentation wirtinger(const GaussDiagram& d) {
  const ArcLayout lay = arc_layout(d);
  GroupPresentation p;
  std::size_t regular = 0, omega = 0;
  for (std::size_t c = 0; c < d.component_count(); ++c)
    for (std::size_t j = 0; j < lay.arcs[c]; ++j) {
      const bool is_omega = d.role(c) == ComponentRole::Omega;
      const std::string name = is_omega ? "w" + std::to_string(++omega) : "a" + std::to_string(++regular);
      p.generators.push_back(Generator{name, d.role(c), c});
    }
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    const auto& comp = d.component(c);
    for (std::size_t pos = 0; pos < comp.size(); ++pos) {
      if (comp[pos].passage != Passage::Under) continue;
      const std::size_t chord = comp[pos].chord;
      const int e = d.chord(chord).sign;
      const std::size_t in = lay.first_gen[c] + lay.arc_at[c][pos];
      const std::size_t out = lay.first_gen[c] + (lay.arc_at[c][pos] + 1) % lay.arcs[c];
      const std::size_t o = generator_at(lay, d.over_slot(chord));
      p.relators.push_back(Word({{o, e}, {in, 1}, {o, -e}, {out, -1}}));
    }
  }
  return p;
}

GroupPresentation reduced_group(const GaussDiagram& d) { return wirtinger(zh(d).diagram); }

FoxSum fox_derivative(const Word& w, std::size_t gen) {
  FoxSum out;
  const auto& ls = w.letters();
  for (std::size_t k = 0; k < ls.size(); ++k) {
    if (ls[k].gen != gen) continue;
    if (ls[k].exp > 0)
      out.push_back(FoxTerm{1, Word(std::vector<Letter>(ls.begin(), ls.begin() + static_cast<long>(k)))});
    else
      out.push_back(FoxTerm{-1, Word(std::vector<Letter>(ls.begin(), ls.begin() + static_cast<long>(k) + 1))});
  }
  return out;
}

LaurentPoly abelianize(const Word& w, const Abelianization& alpha) {
  LaurentPoly m = 1;
  for (const auto& l : w.letters()) {
    const LaurentPoly& g = alpha.image.at(l.gen);
    m *= l.exp > 0 ? g : g.unit_inverse();
  }
  return m;
}

LaurentPoly abelianize(const FoxSum& f, const Abelianization& alpha) {
  LaurentPoly sum;
  for (const auto& term : f) sum += LaurentPoly(term.coeff) * abelianize(term.prefix, alpha);
  return sum;
}

PolyMatrix alexander_matrix(const GroupPresentation& p, const Abelianization& alpha) {
  if (alpha.image.size() != p.generators.size())
    throw ValidationError("abelianization does not match the generator count");
  PolyMatrix a(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    // Running image of the prefix; x contributes +prefix, x^-1 contributes -prefix*x^-1.
    LaurentPoly prefix = 1;
    for (const auto& l : p.relators[r].letters()) {
      const LaurentPoly& g = alpha.image.at(l.gen);
      if (l.exp > 0) {
        a(r, l.gen) += prefix;
        prefix *= g;
      } else {
        prefix *= g.unit_inverse();
        a(r, l.gen) -= prefix;
      }
    }
  }
  return a;
}

LaurentPoly gcd_of(const std::vector<LaurentPoly>& ps) {
  LaurentPoly g;
  for (const auto& p : ps) {
    g = gcd(g, p);
    if (g.is_unit()) break;
  }
  return g;
}

std::vector<ElementaryIdeal> elementary_ideals(const GroupPresentation& p, const Abelianization& alpha,
                                               std::size_t k_max, bool parallel) {
  const PolyMatrix a = alexander_matrix(p, alpha);
  const std::size_t g = a.cols(), r = a.rows();
  std::vector<ElementaryIdeal> out;
  for (std::size_t k = 0; k <= k_max; ++k) {
    ElementaryIdeal e;
    e.k = k;
    if (k >= g) {
      e.generators = {LaurentPoly(1)};
      e.gcd_generator = 1;
    } else if (g - k > r) {
      e.gcd_generator = LaurentPoly{};
    } else {
      e.generators = minors(a, g - k, parallel);
      e.gcd_generator = gcd_of(e.generators);
    }
    out.push_back(std::move(e));
  }
  return out;
}

LaurentPoly omega_minor(const GroupPresentation& p, const Abelianization& alpha) {
  std::optional<std::size_t> omega;
  for (std::size_t g = 0; g < p.generators.size(); ++g)
    if (p.generators[g].role == ComponentRole::Omega) {
      if (omega) throw NotApplicable("omega_minor: more than one omega generator");
      omega = g;
    }
  if (!omega) throw NotApplicable("omega_minor: no omega generator");
  if (p.deficiency() != 1) throw NotApplicable("omega_minor: presentation is not of deficiency one");
  const PolyMatrix a = alexander_matrix(p, alpha);
  std::vector<std::size_t> rows(a.rows()), cols;
  std::iota(rows.begin(), rows.end(), 0);
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (c != *omega) cols.push_back(c);
  return det(a.submatrix(rows, cols));
}

LaurentPoly omega_minor_to_delta_variables(const LaurentPoly& p) {
  return substitute(p, LaurentPoly::t(-1), LaurentPoly::monomial(1, 1, 1));
}

Word longitude(const GaussDiagram& d, std::size_t comp) {
  if (comp >= d.component_count())
    throw BadIndex("longitude: component " + std::to_string(comp) + " does not exist");
  const ArcLayout lay = arc_layout(d);
  std::vector<Letter> letters;
  for (const auto& ep : d.component(comp)) {
    if (ep.passage != Passage::Under) continue;
    letters.push_back(Letter{generator_at(lay, d.over_slot(ep.chord)), d.chord(ep.chord).sign});
  }
  const std::size_t lo = lay.first_gen[comp], hi = lo + lay.arcs[comp];
  int w = 0;
  for (const auto& l : letters)
    if (l.gen >= lo && l.gen < hi) w += l.exp;
  for (int k = 0; k < std::abs(w); ++k) letters.push_back(Letter{lo, w > 0 ? -1 : 1});
  return Word(std::move(letters)).reduced();
}

namespace {

Word substitute_generator(const Word& w, std::size_t gen, const Word& image) {
  const Word inv = image.inverse();
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    if (l.gen != gen) {
      out.push_back(l);
      continue;
    }
    const Word& piece = l.exp > 0 ? image : inv;
    out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  }
  return Word(std::move(out));
}

void tidy(std::vector<Word>& rels) {
  std::vector<Word> out;
  for (const auto& r : rels) {
    Word c = r.cyclically_reduced();
    if (!c.empty()) out.push_back(std::move(c));
  }
  rels = std::move(out);
}

}  // namespace

GroupPresentation tietze_eliminate(const GroupPresentation& p) {
  GroupPresentation q = p;
  tidy(q.relators);
  while (true) {
    // (relator length, generator id, relator index) of the best candidate.
    std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> best;
    for (std::size_t r = 0; r < q.relators.size(); ++r) {
      const auto& ls = q.relators[r].letters();
      for (const auto& l : ls) {
        const auto n = std::count_if(ls.begin(), ls.end(), [&](const Letter& x) { return x.gen == l.gen; });
        if (n != 1) continue;
        auto cand = std::make_tuple(ls.size(), l.gen, r);
        if (!best || cand < *best) best = cand;
      }
    }
    if (!best) break;
    const auto [len, gen, r] = *best;
    (void)len;

    // Rotate the relator to w g^e, so g = w^-1 when e = 1 and g = w when e = -1.
    std::vector<Letter> ls = q.relators[r].letters();
    const auto at = std::find_if(ls.begin(), ls.end(), [&](const Letter& x) { return x.gen == gen; });
    std::rotate(ls.begin(), at + 1, ls.end());
    const int e = ls.back().exp;
    ls.pop_back();
    const Word w(std::move(ls));
    const Word image = e > 0 ? w.inverse() : w;

    q.relators.erase(q.relators.begin() + static_cast<long>(r));
    for (auto& rel : q.relators) rel = substitute_generator(rel, gen, image);
    q.generators.erase(q.generators.begin() + static_cast<long>(gen));
    for (auto& rel : q.relators) {
      std::vector<Letter> shifted = rel.letters();
      for (auto& l : shifted)
        if (l.gen > gen) --l.gen;
      rel = Word(std::move(shifted));
    }
    tidy(q.relators);
  }
  return q;
}

std::string to_string(const Word& w, const std::vector<Generator>& gens) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    os << (first ? "" : " ") << gens.at(l.gen).name;
    if (l.exp != 1) os << '^' << l.exp;
    first = false;
  }
  return os.str();
}

std::string to_string(const GroupPresentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& g : p.generators) os << ' ' << g.name;
  os << " ; rels:";
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    os << (r ? " ; " : " ") << to_string(p.relators[r], p.generators);
  return os.str();
}

}  // namespace vknot
