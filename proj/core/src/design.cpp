#include "piezoscan/design.hpp"

#include "piezoscan/errors.hpp"

namespace piezoscan {

MultimorphStack ScannerDesign::stack() const {
  substrate.validate();
  piezo.validate();
  if (!piezo.d31) throw ValidationError("design: piezo material '" + piezo.name + "' has no d31");
  MultimorphStack s{substrate.young_modulus, substrate_thickness, piezo.young_modulus, piezo_thickness,
                    *piezo.d31,            beam_width,          beam_length};
  s.validate();
  return s;
}

ScannerGeometry ScannerDesign::geometry() const {
  ScannerGeometry g{stack(), mirror_side};
  g.validate();
  return g;
}

ScannerDesign reference_design(const MaterialRegistry& registry) {
  ScannerDesign d;
  d.substrate = registry.lookup("silicon");
  d.piezo = registry.lookup("pzt-5h");
  d.beam_length = 850e-6;
  d.beam_width = 30e-6;
  d.substrate_thickness = 5e-6;
  d.piezo_thickness = 1e-6;
  d.mirror_side = 300e-6;
  d.voltage = 50.0;
  return d;
}

}  // namespace piezoscan
