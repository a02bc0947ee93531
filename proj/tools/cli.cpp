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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vknot/error.hpp"
#include "vknot/gauss.hpp"
#include "vknot/groups.hpp"
#include "vknot/sawollek.hpp"
#include "vknot/sieve.hpp"
#include "vknot/zh.hpp"

namespace vknot::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct CliConfig {
  Format format = Format::Text;
  UnitClass unit_class = UnitClass::UpToMonomialSign;
  bool serial = false;
  bool skip_bad = false;
};

// One input source: a code string on the command line or a file holding it.
struct CodeInput {
  std::optional<std::string> code;
  std::string file;

  void attach(CLI::App* sub) {
    sub->add_option("code", code, "Gauss code, e.g. \"O1-O2-U1-O3+U2-O4+U3+U4+\"");
    sub->add_option("--code-file", file, "read the Gauss code from a file")->check(CLI::ExistingFile);
  }

  GaussCode read() const {
    if (code.has_value() == !file.empty())
      throw ValidationError("give exactly one of a code argument or --code-file");
    if (code) return parse_gauss_code(*code);
    std::ifstream in(file);
    if (!in) throw IoError("cannot open '" + file + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_gauss_code(text);
  }
};

const char* bool_text(bool b) { return b ? "true" : "false"; }

void reject_csv(const CliConfig& cfg, const char* cmd) {
  if (cfg.format == Format::Csv)
    throw ValidationError(std::string("--format csv is not available for '") + cmd + "'");
}

void cmd_delta(const CliConfig& cfg, const GaussCode& code, std::ostream& out) {
  const GaussDiagram d = to_diagram(code);
  const GeneralizedAlexander g = delta0(d, kDefaultArcOrder, cfg.unit_class);
  const std::string poly = to_string(g.canonical.poly);
  switch (cfg.format) {
    case Format::Text:
      out << poly << "\nzero: " << bool_text(g.is_zero) << "\nobstructed: " << bool_text(!g.is_zero) << '\n';
      break;
    case Format::Json: {
      ordered_json j;
      j["code"] = to_string(code);
      j["crossings"] = code.crossing_count();
      j["delta0"] = poly;
      j["delta0_raw"] = to_string(g.raw);
      j["unit_class"] = to_string(cfg.unit_class);
      j["zero"] = g.is_zero;
      j["obstructed"] = !g.is_zero;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "code,crossings,delta0,delta0_zero,obstructed\n"
          << to_string(code) << ',' << code.crossing_count() << ',' << poly << ',' << bool_text(g.is_zero)
          << ',' << bool_text(!g.is_zero) << '\n';
      break;
  }
}

void cmd_writhe(const CliConfig& cfg, const GaussCode& code, std::ostream& out) {
  const GaussDiagram d = to_diagram(code);
  const std::string w = to_string(writhe_polynomial(d));
  switch (cfg.format) {
    case Format::Text:
      out << w << '\n';
      break;
    case Format::Json: {
      ordered_json j;
      j["code"] = to_string(code);
      j["writhe_poly"] = w;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "code,writhe\n" << to_string(code) << ',' << w << '\n';
      break;
  }
}

void cmd_zh(const CliConfig& cfg, const GaussCode& code, std::ostream& out) {
  reject_csv(cfg, "zh");
  const ZhDiagram z = zh(to_diagram(code));
  const GaussCode zc = to_code(z.diagram);
  if (cfg.format == Format::Text) {
    out << to_string(zc) << "\nomega: component " << z.omega_index + 1 << " of " << zh_component_count(z)
        << '\n';
    return;
  }
  ordered_json comps = ordered_json::array();
  for (std::size_t c = 0; c < zc.components.size(); ++c) {
    ordered_json e;
    e["code"] = to_string(GaussCode{{zc.components[c]}});
    e["omega"] = c == z.omega_index;
    comps.push_back(std::move(e));
  }
  ordered_json j;
  j["code"] = to_string(zc);
  j["components"] = std::move(comps);
  j["chords"] = z.diagram.chord_count();
  out << j.dump(2) << '\n';
}

void cmd_group(const CliConfig& cfg, const GaussCode& code, bool reduced, bool simplify, std::ostream& out) {
  reject_csv(cfg, "group");
  const GaussDiagram d = to_diagram(code);
  GroupPresentation p = reduced ? reduced_group(d) : wirtinger(d);
  if (simplify) p = tietze_eliminate(p);
  if (cfg.format == Format::Text) {
    out << to_string(p) << '\n';
    return;
  }
  ordered_json gens = ordered_json::array();
  for (const auto& g : p.generators) {
    ordered_json e;
    e["name"] = g.name;
    e["component"] = g.component;
    e["omega"] = g.role == ComponentRole::Omega;
    gens.push_back(std::move(e));
  }
  ordered_json rels = ordered_json::array();
  for (const auto& r : p.relators) rels.push_back(to_string(r, p.generators));
  ordered_json j;
  j["generators"] = std::move(gens);
  j["relators"] = std::move(rels);
  j["deficiency"] = p.deficiency();
  out << j.dump(2) << '\n';
}

void cmd_ideals(const CliConfig& cfg, const GaussCode& code, bool plain, std::size_t k_max, std::ostream& out) {
  reject_csv(cfg, "ideals");
  const GaussDiagram d = to_diagram(code);
  const GroupPresentation p = plain ? wirtinger(d) : reduced_group(d);
  const auto ideals = elementary_ideals(p, default_abelianization(p), k_max, !cfg.serial);
  if (cfg.format == Format::Text) {
    for (const auto& e : ideals)
      out << 'E' << e.k << ": " << to_string(canonicalize(e.gcd_generator, cfg.unit_class).poly) << " ("
          << e.generators.size() << " generators)\n";
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& e : ideals) {
    ordered_json j;
    j["k"] = e.k;
    j["gcd"] = to_string(canonicalize(e.gcd_generator, cfg.unit_class).poly);
    j["generator_count"] = e.generators.size();
    arr.push_back(std::move(j));
  }
  ordered_json j;
  j["group"] = plain ? "wirtinger" : "reduced";
  j["ideals"] = std::move(arr);
  out << j.dump(2) << '\n';
}

void cmd_longitude(const CliConfig& cfg, const GaussCode& code, std::optional<std::size_t> component,
                   std::ostream& out) {
  reject_csv(cfg, "longitude");
  const GaussDiagram d = to_diagram(code);
  const GroupPresentation p = wirtinger(d);
  std::vector<std::size_t> comps;
  if (component) {
    if (*component == 0 || *component > d.component_count())
      throw BadIndex("component " + std::to_string(*component) + " does not exist");
    comps.push_back(*component - 1);
  } else {
    for (std::size_t c = 0; c < d.component_count(); ++c) comps.push_back(c);
  }
  ordered_json arr = ordered_json::array();
  for (std::size_t c : comps) {
    const std::string w = to_string(longitude(d, c), p.generators);
    if (cfg.format == Format::Text) {
      out << "component " << c + 1 << ": " << w << '\n';
    } else {
      ordered_json j;
      j["component"] = c + 1;
      j["longitude"] = w;
      arr.push_back(std::move(j));
    }
  }
  if (cfg.format == Format::Json) {
    ordered_json j;
    j["presentation"] = to_string(p);
    j["longitudes"] = std::move(arr);
    out << j.dump(2) << '\n';
  }
}

void cmd_sieve(const CliConfig& cfg, const std::string& census, const std::string& flags, std::ostream& out,
               std::ostream& err) {
  const CensusLoad load = load_census(census, cfg.skip_bad);
  for (const auto& e : load.errors) err << "skipped " << e << '\n';
  SieveReport report = run_sieve(load.records, SieveOptions{!cfg.serial, cfg.unit_class});
  if (!flags.empty()) report = merge_external_flags(std::move(report), flags);
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  switch (cfg.format) {
    case Format::Json:
      out << report_json(report);
      break;
    case Format::Csv:
      out << report_csv(report);
      break;
    case Format::Text: {
      for (const auto& row : report.rows) {
        out << row.name << ": ";
        if (row.error)
          out << "error: " << *row.error;
        else
          out << (row.obstructed ? "obstructed" : "no obstruction") << "  delta0 = " << row.delta0_canonical;
        if (row.survives) out << "  survives: " << bool_text(*row.survives);
        out << '\n';
      }
      const SieveSummary& s = report.summary;
      out << "total: " << s.total << ", delta0 zero: " << s.delta0_zero_count << ", obstructed: " << s.obstructed_count
          << ", errors: " << s.error_count;
      if (s.survivor_count) out << ", survivors: " << *s.survivor_count;
      out << '\n';
      break;
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of virtual knots and links from Gauss codes", "vknot"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  const std::map<std::string, Format> formats = {
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  const std::map<std::string, UnitClass> unit_classes = {{"monomial-sign", UnitClass::UpToMonomialSign},
                                                         {"st-powers", UnitClass::UpToPowersOfST},
                                                         {"exact", UnitClass::Exact}};
  std::string format_name = "text", unit_class_name = "monomial-sign";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}).description(""))
      ->type_name("text|json|csv");
  app.add_option("--unit-class", unit_class_name, "unit class used to print polynomials")
      ->check(CLI::IsMember({"monomial-sign", "st-powers", "exact"}).description(""))
      ->type_name("monomial-sign|st-powers|exact");
  app.add_flag("--serial", cfg.serial, "disable parallel evaluation");
  app.add_flag("--skip-bad", cfg.skip_bad, "skip malformed census lines instead of failing");

  CodeInput delta_in, writhe_in, zh_in, group_in, ideals_in, longitude_in;
  auto* delta = app.add_subcommand("delta", "generalized Alexander polynomial");
  delta_in.attach(delta);
  auto* writhe = app.add_subcommand("writhe", "writhe polynomial of a knot");
  writhe_in.attach(writhe);
  auto* zh_cmd = app.add_subcommand("zh", "Gauss code of the Zh construction");
  zh_in.attach(zh_cmd);

  bool reduced = false, simplify = false;
  auto* group = app.add_subcommand("group", "Wirtinger presentation");
  group_in.attach(group);
  group->add_flag("--reduced", reduced, "present the reduced group via Zh");
  group->add_flag("--simplify", simplify, "apply Tietze elimination");

  bool plain = false;
  std::size_t k_max = 1;
  auto* ideals = app.add_subcommand("ideals", "elementary ideals of the reduced group");
  ideals_in.attach(ideals);
  ideals->add_option("--k-max", k_max, "largest k to compute")->capture_default_str();
  ideals->add_flag("--wirtinger", plain, "use the plain Wirtinger presentation instead");

  std::optional<std::size_t> component;
  auto* lon = app.add_subcommand("longitude", "longitude words");
  longitude_in.attach(lon);
  lon->add_option("--component", component, "1-based component index (default: all)");

  std::string census, flags;
  auto* sieve = app.add_subcommand("sieve", "slice obstruction sieve over a census file");
  sieve->add_option("--census", census, "census file")->required();
  sieve->add_option("--flags", flags, "external flags file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  cfg.format = formats.at(format_name);
  cfg.unit_class = unit_classes.at(unit_class_name);
  try {
    if (delta->parsed()) cmd_delta(cfg, delta_in.read(), out);
    else if (writhe->parsed()) cmd_writhe(cfg, writhe_in.read(), out);
    else if (zh_cmd->parsed()) cmd_zh(cfg, zh_in.read(), out);
    else if (group->parsed()) cmd_group(cfg, group_in.read(), reduced, simplify, out);
    else if (ideals->parsed()) cmd_ideals(cfg, ideals_in.read(), plain, k_max, out);
    else if (lon->parsed()) cmd_longitude(cfg, longitude_in.read(), component, out);
    else if (sieve->parsed()) cmd_sieve(cfg, census, flags, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitOk;
}

}  // namespace vknot::cli
