#include "piezoscan/units.hpp"

#include <string>

#include "piezoscan/errors.hpp"

namespace piezoscan {

namespace {

// Small scales are applied by dividing by an exactly representable power of
// ten so that e.g. 5 um converts to the double nearest 5e-6.
struct Scale {
  double factor;
  bool divide;
};

Scale scale_of(Unit unit) {
  switch (unit) {
    case Unit::micrometre: return {1e6, true};
    case Unit::gigapascal: return {1e9, false};
    case Unit::picometre_per_volt: return {1e12, true};
    case Unit::volt: return {1.0, false};
    case Unit::per_terapascal: return {1e12, true};
  }
  throw UnsupportedUnitError("unsupported unit");
}

}  // namespace

Unit parse_unit(std::string_view suffix) {
  if (suffix == "um") return Unit::micrometre;
  if (suffix == "GPa") return Unit::gigapascal;
  if (suffix == "pm_per_V") return Unit::picometre_per_volt;
  if (suffix == "V") return Unit::volt;
  if (suffix == "per_TPa") return Unit::per_terapascal;
  throw UnsupportedUnitError("unsupported unit '" + std::string(suffix) +
                             "' (expected one of um, GPa, pm_per_V, V, per_TPa)");
}

std::string_view unit_suffix(Unit unit) {
  switch (unit) {
    case Unit::micrometre: return "um";
    case Unit::gigapascal: return "GPa";
    case Unit::picometre_per_volt: return "pm_per_V";
    case Unit::volt: return "V";
    case Unit::per_terapascal: return "per_TPa";
  }
  return "?";
}

double to_si(double value, Unit unit) {
  const Scale s = scale_of(unit);
  return s.divide ? value / s.factor : value * s.factor;
}

double to_si(double value, std::string_view unit) { return to_si(value, parse_unit(unit)); }

double from_si(double value, Unit unit) {
  const Scale s = scale_of(unit);
  return s.divide ? value * s.factor : value / s.factor;
}

}  // namespace piezoscan
