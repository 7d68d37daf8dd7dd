#pragma once

#include "cantorh/types.hpp"

namespace cantorh {

// Mobius map taking the circle through (conj(xi), xi1, xi) to the unit
// circle with conj(xi) -> -i, xi1 -> 1, xi -> i, and the exterior of the
// circle into the unit disk:
//   psi(z) = [(z - xi)(xi1 - conj(xi)) + i (z - conj(xi))(xi1 - xi)]
//          / [(z - conj(xi))(xi1 - xi) + i (z - xi)(xi1 - conj(xi))].
// A pole input returns an infinity value rather than trapping.
complexd mobius_psi(complexd z, complexd xi, double xi1);

// Unit disk to upper half-plane: phi(w) = (w - i)/(i w - 1), sending
// -i -> inf, 1 -> -1, i -> 0.
complexd mobius_phi(complexd w);

// Arc geometry on one circle: xi on the upper half of the circle, conj(xi)
// its reflection, and xi1 the real point of the circle on the arc carrying
// boundary value 1 (the side facing the basepoint).
struct MobiusFrame {
    complexd xi;
    double xi1 = 0.0;
};

// Harmonic measure of the arc through xi1 (between conj(xi) and xi) with
// respect to the exterior of the circle:
//   Psi(z) = (1/pi) Im log phi(psi(z, xi, xi1)),
// continuous with values in [0, 1]; equals 1 on the arc through xi1 and 0 on
// the complementary arc.  Throws EndpointError exactly at xi or conj(xi).
double psi_field(complexd z, const MobiusFrame& frame);

// Mirror companion serving the reflected circle in Center mode: the same
// construction with arguments (-xi, -xi1).
double phi_field(complexd z, const MobiusFrame& frame);

} // namespace cantorh
