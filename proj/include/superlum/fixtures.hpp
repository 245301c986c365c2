#pragma once

#include "superlum/diagrams.hpp"

// Built-in scenario fixtures (c = 1). Coordinates are representative
// choices; the same values ship as JSON under data/scenarios/.
namespace superlum::fixtures {

/// A superluminal particle sent from A to B, with the worldlines of the
/// source and target particles around the two events.
Diagram superluminal_exchange();

/// A subluminal particle P decaying at D into C1 and C2.
Diagram decay();

/// A photon from A reflected at the mirror M and received at B.
Diagram mirror();

/// A particle from A scattered at alpha towards B and B'.
Diagram scattering();

}  // namespace superlum::fixtures
