#pragma once

#include <string_view>

namespace piezoscan {

// Units accepted at the configuration / CSV boundary. Everything inside the
// library is SI base units.
enum class Unit {
  micrometre,          // "um"
  gigapascal,          // "GPa"
  picometre_per_volt,  // "pm_per_V"
  volt,                // "V"
  per_terapascal,      // "per_TPa"
};

/// Parses a unit suffix ("um", "GPa", "pm_per_V", "V", "per_TPa").
/// Throws UnsupportedUnitError for anything else.
Unit parse_unit(std::string_view suffix);

std::string_view unit_suffix(Unit unit);

double to_si(double value, Unit unit);
double to_si(double value, std::string_view unit);

/// Inverse of to_si.
double from_si(double value, Unit unit);

}  // namespace piezoscan
