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

#include <doctest.h>

#include "support/support.hpp"
#include "vknot/error.hpp"
#include "vknot/zh.hpp"

using namespace vknot;
namespace vt = vknot::testing;

namespace {

GaussDiagram D(const std::string& code) { return to_diagram(parse_gauss_code(code)); }

void check_structure(const GaussDiagram& d) {
  const ZhDiagram z = zh(d);
  const GaussDiagram& e = z.diagram;
  REQUIRE(e.component_count() == d.component_count() + 1);
  REQUIRE(z.omega_index == d.component_count());
  REQUIRE(zh_component_count(z) == e.component_count());
  REQUIRE(e.chord_count() == 3 * d.chord_count());
  REQUIRE(e.role(z.omega_index) == ComponentRole::Omega);
  for (std::size_t c = 0; c < d.component_count(); ++c) REQUIRE(e.role(c) == ComponentRole::Regular);

  std::size_t over_on_omega = 0, under_on_omega = 0;
  int signed_omega = 0;
  for (std::size_t c = 0; c < e.chord_count(); ++c) {
    const bool o = e.over_slot(c).component == z.omega_index;
    over_on_omega += o;
    under_on_omega += e.under_slot(c).component == z.omega_index;
    if (o) signed_omega += e.chord(c).sign;
  }
  REQUIRE(over_on_omega == 2 * d.chord_count());
  REQUIRE(under_on_omega == 0);
  REQUIRE(signed_omega == 0);
  REQUIRE(e.component(z.omega_index).size() == 2 * d.chord_count());
  REQUIRE(isomorphic(delete_component(e, z.omega_index), d));
}

}  // namespace

TEST_CASE("single positive chord") {
  const ZhDiagram z = zh(D("O1+U1+"));
  // Walking the knot: before the foot comes the minus chord, after the head
  // the plus chord; omega carries both over endpoints in that order.
  CHECK(to_string(to_code(z.diagram)) == "U2-O1+U1+U3+,O2-O3+");
  CHECK(z.omega_index == 1);
}

TEST_CASE("single negative chord starting under") {
  const ZhDiagram z = zh(D("U1-O1-"));
  CHECK(to_string(to_code(z.diagram)) == "U1-U2-U3+O1-,O2-O3+");
}

TEST_CASE("empty diagram gets an empty omega") {
  const ZhDiagram z = zh(D(""));
  CHECK(z.diagram.component_count() == 2);
  CHECK(z.diagram.chord_count() == 0);
  CHECK(to_string(to_code(z.diagram)) == ",");
}

TEST_CASE("component counts") {
  CHECK(zh_component_count(zh(D("O1+U2-,O2-U1+"))) == 3);
  CHECK(zh_component_count(zh(D("O1+U1+"))) == 2);
}

TEST_CASE("zh twice is rejected") {
  CHECK_THROWS_AS(zh(zh(D("O1+U1+")).diagram), AlreadyHasOmega);
}

TEST_CASE("structure on reference codes") {
  for (const auto& row : vt::reference_knots()) {
    CAPTURE(row.name);
    check_structure(D(row.code));
  }
}

TEST_CASE("structure on random diagrams") {
  vt::Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const GaussCode c = i % 3 ? vt::random_knot_code(rng, i % 8) : vt::random_link_code(rng, 1 + i % 5, 2);
    CAPTURE(to_string(c));
    check_structure(to_diagram(c));
  }
}
