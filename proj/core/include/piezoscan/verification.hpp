#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "piezoscan/multimorph.hpp"
#include "piezoscan/scanner.hpp"

namespace piezoscan::verification {

struct Check {
  std::string name;
  double value = 0.0;      ///< measured residual / error / order
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct Options {
  std::size_t nodes = 2001;
  std::size_t random_stacks = 1000;
  std::size_t random_geometries = 100;
  std::uint64_t seed = 0x5ca9'2007;
};

/// Stack drawn from a physically plausible box: ts in [0.5, 50] um,
/// tp in [0.1, 10] um, W in [5, 500] um, L in [50, 5000] um,
/// Es in [50, 400] GPa, Ep in [20, 200] GPa, |d31| in [10, 600] pm/V with
/// random sign.
MultimorphStack random_stack(std::mt19937_64& rng);

/// Drive voltage with |V| in [1, 200] and random sign.
double random_voltage(std::mt19937_64& rng);

/// Half span with a in [10, 500] um, beam length in [50, 3000] um, random
/// rigidity and signed force.
HalfSpanBeam random_beam(std::mt19937_64& rng);

/// Profile identities of one half span, each relative to y_max (slopes are
/// multiplied by the span first so they are lengths).
struct ProfileResiduals {
  double support_deflection = 0.0;  ///< |y(0)|
  double clamp_deflection = 0.0;    ///< |y(L)|
  double clamp_slope = 0.0;         ///< |y'(L)| L
  double junction_deflection = 0.0;  ///< jump of y at a
  double junction_slope = 0.0;       ///< jump of y' at a, times L
  double mirror_curvature = 0.0;     ///< largest second difference of y on [0, a]
  double tilt_slope = 0.0;           ///< |tan(tilt) - |y'(0)|| / |y'(0)|

  double max() const;
};

ProfileResiduals profile_residuals(const HalfSpanBeam& beam);

/// Runs every closed-form identity, profile invariant, oracle comparison and
/// the tabulated-device comparison.
std::vector<Check> run_all(const Options& options = {});

}  // namespace piezoscan::verification
