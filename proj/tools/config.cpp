#include "config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "piezoscan/errors.hpp"
#include "piezoscan/units.hpp"

namespace piezoscan::cli {

namespace {

constexpr std::array<std::string_view, 4> kSections{"material.substrate", "material.piezo", "geometry", "drive"};

const std::map<std::string_view, std::set<std::string_view>>& allowed_keys() {
  static const std::map<std::string_view, std::set<std::string_view>> keys{
      {"material.substrate", {"name", "E_GPa"}},
      {"material.piezo", {"name", "E_GPa", "d31_pm_per_V", "s11E_per_TPa"}},
      {"geometry",
       {"beam_length_um", "beam_width_um", "substrate_thickness_um", "piezo_thickness_um", "mirror_side_um"}},
      {"drive", {"voltage_V"}},
  };
  return keys;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_line(std::size_t line, const std::string& msg) {
  throw ConfigError("line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] void fail_key(const std::string& path, const std::string& msg) { throw ConfigError(path + ": " + msg); }

struct RawValue {
  std::string text;
  std::size_t line;
};

using Sections = std::map<std::string, std::map<std::string, RawValue>>;

double number(const std::string& section, const std::string& key, const RawValue& v) {
  double out = 0.0;
  const char* first = v.text.data();
  const char* last = first + v.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last || !std::isfinite(out)) {
    fail_line(v.line, section + "." + key + ": expected a number, got '" + v.text + "'");
  }
  return out;
}

std::optional<double> optional_number(const Sections& s, const std::string& section, const std::string& key) {
  const auto& entries = s.at(section);
  auto it = entries.find(key);
  if (it == entries.end()) return std::nullopt;
  return number(section, key, it->second);
}

double required_number(const Sections& s, const std::string& section, const std::string& key) {
  auto v = optional_number(s, section, key);
  if (!v) fail_key(section + "." + key, "missing required key");
  return *v;
}

double positive(const Sections& s, const std::string& section, const std::string& key) {
  const double v = required_number(s, section, key);
  if (!(v > 0.0)) fail_key(section + "." + key, "must be positive");
  return v;
}

MaterialEntry material_entry(const Sections& s, const std::string& section) {
  MaterialEntry m;
  const auto& entries = s.at(section);
  if (auto it = entries.find("name"); it != entries.end()) {
    if (it->second.text.empty()) fail_line(it->second.line, section + ".name: empty material name");
    m.name = it->second.text;
  }
  m.E_GPa = optional_number(s, section, "E_GPa");
  m.d31_pm_per_V = optional_number(s, section, "d31_pm_per_V");
  m.s11E_per_TPa = optional_number(s, section, "s11E_per_TPa");

  const bool explicit_constants = m.E_GPa || m.d31_pm_per_V || m.s11E_per_TPa;
  if (m.name && explicit_constants) fail_key(section, "give either a material name or explicit constants, not both");
  if (!m.name && !m.E_GPa) fail_key(section + ".E_GPa", "missing required key (or give a material name)");
  if (m.E_GPa && !(*m.E_GPa > 0.0)) fail_key(section + ".E_GPa", "must be positive");
  if (m.s11E_per_TPa && !(*m.s11E_per_TPa > 0.0)) fail_key(section + ".s11E_per_TPa", "must be positive");
  return m;
}

}  // namespace

ConfigDoc parse_config(std::string_view text) {
  Sections sections;
  std::string current;
  std::size_t line_no = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail_line(line_no, "malformed section header");
      const std::string name(trim(line.substr(1, line.size() - 2)));
      if (!allowed_keys().contains(name)) fail_line(line_no, "unknown section [" + name + "]");
      if (sections.contains(name)) fail_line(line_no, "duplicate section [" + name + "]");
      sections[name];
      current = name;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail_line(line_no, "expected 'key = value'");
    if (current.empty()) fail_line(line_no, "key outside of any section");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) fail_line(line_no, "empty key");
    if (!allowed_keys().at(current).contains(key)) fail_line(line_no, "unknown key '" + current + "." + key + "'");
    auto& entries = sections[current];
    if (entries.contains(key)) fail_line(line_no, "duplicate key '" + current + "." + key + "'");
    entries.emplace(key, RawValue{value, line_no});
  }

  for (auto name : kSections) {
    if (!sections.contains(std::string(name))) fail_key(std::string(name), "missing required section");
  }

  ConfigDoc doc;
  doc.substrate = material_entry(sections, "material.substrate");
  doc.piezo = material_entry(sections, "material.piezo");
  if (!doc.piezo.name && !doc.piezo.d31_pm_per_V) fail_key("material.piezo.d31_pm_per_V", "missing required key");
  doc.beam_length_um = positive(sections, "geometry", "beam_length_um");
  doc.beam_width_um = positive(sections, "geometry", "beam_width_um");
  doc.substrate_thickness_um = positive(sections, "geometry", "substrate_thickness_um");
  doc.piezo_thickness_um = positive(sections, "geometry", "piezo_thickness_um");
  doc.mirror_side_um = positive(sections, "geometry", "mirror_side_um");
  doc.voltage_V = required_number(sections, "drive", "voltage_V");
  return doc;
}

ConfigDoc load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

namespace {

Material resolve_material(const MaterialEntry& entry, const std::string& section, const MaterialRegistry& registry) {
  Material m;
  if (entry.name) {
    try {
      m = registry.lookup(*entry.name);
    } catch (const UnknownMaterialError& e) {
      fail_key(section + ".name", e.what());
    }
  } else {
    m.name = section;
    m.young_modulus = to_si(*entry.E_GPa, Unit::gigapascal);
    if (entry.d31_pm_per_V) m.d31 = to_si(*entry.d31_pm_per_V, Unit::picometre_per_volt);
    if (entry.s11E_per_TPa) m.s11E = to_si(*entry.s11E_per_TPa, Unit::per_terapascal);
  }
  try {
    m.validate();
  } catch (const ValidationError& e) {
    fail_key(section, e.what());
  }
  return m;
}

}  // namespace

ScannerDesign resolve(const ConfigDoc& doc, const MaterialRegistry& registry) {
  ScannerDesign d;
  d.substrate = resolve_material(doc.substrate, "material.substrate", registry);
  d.piezo = resolve_material(doc.piezo, "material.piezo", registry);
  if (!d.piezo.is_piezoelectric()) fail_key("material.piezo", "material '" + d.piezo.name + "' has no d31");
  d.beam_length = to_si(doc.beam_length_um, Unit::micrometre);
  d.beam_width = to_si(doc.beam_width_um, Unit::micrometre);
  d.substrate_thickness = to_si(doc.substrate_thickness_um, Unit::micrometre);
  d.piezo_thickness = to_si(doc.piezo_thickness_um, Unit::micrometre);
  d.mirror_side = to_si(doc.mirror_side_um, Unit::micrometre);
  d.voltage = to_si(doc.voltage_V, Unit::volt);
  return d;
}

}  // namespace piezoscan::cli
