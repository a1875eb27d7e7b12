#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "piezoscan/design.hpp"
#include "piezoscan/materials.hpp"

namespace piezoscan::cli {

/// Malformed or invalid configuration. The message carries either the line
/// number ("line 7: ...") or the key path ("geometry.beam_width_um: ...").
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A material given either by registry name or by explicit constants.
struct MaterialEntry {
  std::optional<std::string> name;
  std::optional<double> E_GPa;
  std::optional<double> d31_pm_per_V;
  std::optional<double> s11E_per_TPa;
};

/// Parsed configuration, values in the units their key suffixes name.
struct ConfigDoc {
  MaterialEntry substrate;
  MaterialEntry piezo;
  double beam_length_um = 0.0;
  double beam_width_um = 0.0;
  double substrate_thickness_um = 0.0;
  double piezo_thickness_um = 0.0;
  double mirror_side_um = 0.0;
  double voltage_V = 0.0;
};

/// Parses the sectioned `key = value` format:
///
///   [material.substrate]   name = silicon            | E_GPa = 169
///   [material.piezo]       name = pzt-5h             | E_GPa, d31_pm_per_V, s11E_per_TPa (optional)
///   [geometry]             beam_length_um, beam_width_um, substrate_thickness_um,
///                          piezo_thickness_um, mirror_side_um
///   [drive]                voltage_V
///
/// `#` starts a comment. Unknown sections or keys, duplicates, missing keys
/// and non-positive geometry are errors.
ConfigDoc parse_config(std::string_view text);

ConfigDoc load_config(const std::filesystem::path& path);

/// Builds the SI design, resolving material names through `registry`.
ScannerDesign resolve(const ConfigDoc& doc,
                      const MaterialRegistry& registry = MaterialRegistry::with_defaults());

}  // namespace piezoscan::cli
