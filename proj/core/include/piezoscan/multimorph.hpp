#pragma once

#include <array>

namespace piezoscan {

/// Cross-section and length of the 3-layer actuator beam: a substrate at the
/// bottom and two identical piezoelectric layers on top of it, driven with
/// opposite polarity. All SI.
struct MultimorphStack {
  double substrate_modulus = 0.0;    ///< Pa
  double substrate_thickness = 0.0;  ///< m
  double piezo_modulus = 0.0;        ///< Pa, both piezo layers
  double piezo_thickness = 0.0;      ///< m, both piezo layers
  double d31 = 0.0;                  ///< m/V
  double width = 0.0;                ///< m
  double length = 0.0;               ///< m, free length of the actuator beam

  /// Throws ValidationError unless moduli, thicknesses, width and length are
  /// positive and finite, and d31 is finite.
  void validate() const;

  double total_thickness() const { return substrate_thickness + 2.0 * piezo_thickness; }
};

/// Free in-plane strains of the bottom and top piezo layers.
struct Strains {
  double bottom = 0.0;  ///< S1 = -d31 V / t_p
  double top = 0.0;     ///< S2 = +d31 V / t_p
};

/// In-plane force resultants per unit width (N/m) of substrate, bottom piezo
/// and top piezo layers, and the common curvature 1/R (1/m).
struct CurvatureSolution {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  double curvature = 0.0;
};

/// Which modulus the transformed section is normalized to. The product
/// reference_modulus * inertia does not depend on the choice.
enum class ReferenceModulus { substrate, piezo, max };

struct EquivalentSection {
  double neutral_axis = 0.0;       ///< m, measured from the substrate bottom face
  double inertia = 0.0;           ///< m^4, of the width-normalized section
  double reference_modulus = 0.0;  ///< Pa
  double rigidity = 0.0;           ///< N m^2
};

Strains piezo_strains(const MultimorphStack& stack, double voltage);

/// Solves force equilibrium, moment equilibrium and the two interface strain
/// continuity conditions as a 4x4 linear system for (P1, P2, P3, 1/R).
CurvatureSolution solve_curvature(const MultimorphStack& stack, double voltage);

/// Residuals of the four equilibrium/continuity equations at `solution`,
/// each divided by the largest magnitude term in its equation (0 when every
/// term vanishes).
std::array<double, 4> curvature_residuals(const MultimorphStack& stack, double voltage,
                                          const CurvatureSolution& solution);

/// Free-cantilever tip deflection, curvature * L^2 / 2.
double tip_deflection(const MultimorphStack& stack, double voltage);

/// Closed-form tip deflection
///   6 L^2 Ep tp d31 (Es ts + 2 Ep tp) V / D,
///   D = 8 Es ts^3 Ep tp + 24 Es ts^2 Ep tp^2 + 32 Es ts Ep tp^3 + Es^2 ts^4 + 16 Ep^2 tp^4.
double tip_deflection_closed_form(const MultimorphStack& stack, double voltage);

/// Transformed (width-normalized) section. The piezo thickness may be zero
/// here, which gives the bare substrate.
EquivalentSection equivalent_section(const MultimorphStack& stack,
                                     ReferenceModulus reference = ReferenceModulus::max);

/// Closed-form neutral axis and rigidity of the 3-layer section:
///   h = (Es ts^2 + 4 Ep tp^2 + 4 Ep ts tp) / (2 (Es ts + 2 Ep tp)),
///   EI = W D / (12 (Es ts + 2 Ep tp)).
EquivalentSection equivalent_section_closed_form(const MultimorphStack& stack,
                                                 ReferenceModulus reference = ReferenceModulus::max);

/// End force reproducing the free tip deflection: 3 EI / L^3 * y_L.
double equivalent_force(const MultimorphStack& stack, double voltage);

/// Closed form of the end force, 3/2 W tp Ep d31 V / L.
double equivalent_force_closed_form(const MultimorphStack& stack, double voltage);

}  // namespace piezoscan
