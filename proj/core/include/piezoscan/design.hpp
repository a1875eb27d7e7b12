#pragma once

#include "piezoscan/materials.hpp"
#include "piezoscan/multimorph.hpp"
#include "piezoscan/scanner.hpp"

namespace piezoscan {

/// Complete scanner description: materials, geometry (SI) and drive voltage.
struct ScannerDesign {
  Material substrate;
  Material piezo;
  double beam_length = 0.0;
  double beam_width = 0.0;
  double substrate_thickness = 0.0;
  double piezo_thickness = 0.0;
  double mirror_side = 0.0;
  double voltage = 0.0;

  /// Throws ValidationError if a material is invalid, the piezo material has
  /// no d31, or any geometry value is not positive.
  MultimorphStack stack() const;
  ScannerGeometry geometry() const;
};

/// Silicon substrate 5 um, two 1 um PZT-5H layers, 850 x 30 um beams,
/// 300 um square mirror, 50 V.
ScannerDesign reference_design(const MaterialRegistry& registry = MaterialRegistry::with_defaults());

}  // namespace piezoscan
