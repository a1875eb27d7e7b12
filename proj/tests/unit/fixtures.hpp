#pragma once

#include <string>

namespace fixtures {

// Device A: 850 x 30 um beams, 300 um mirror, 50 V.
inline const std::string scanner_a_config = R"(# reference device A
[material.substrate]
name = silicon

[material.piezo]
name = pzt-5h

[geometry]
beam_length_um = 850
beam_width_um = 30
substrate_thickness_um = 5
piezo_thickness_um = 1   # each layer
mirror_side_um = 300

[drive]
voltage_V = 50
)";

}  // namespace fixtures
