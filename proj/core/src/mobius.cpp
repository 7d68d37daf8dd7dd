#include "cantorh/mobius.hpp"

#include <cmath>
#include <limits>

#include "cantorh/errors.hpp"

namespace cantorh {

namespace {
const complexd kInf(std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity());
}

complexd mobius_psi(complexd z, complexd xi, double xi1) {
    const complexd xb = std::conj(xi);
    const complexd x1(xi1, 0.0);
    const complexd i(0.0, 1.0);
    const complexd num = (z - xi) * (x1 - xb) + i * (z - xb) * (x1 - xi);
    const complexd den = (z - xb) * (x1 - xi) + i * (z - xi) * (x1 - xb);
    if (den == complexd(0.0, 0.0))
        return kInf;
    return num / den;
}

complexd mobius_phi(complexd w) {
    const complexd i(0.0, 1.0);
    const complexd den = i * w - 1.0;
    if (den == complexd(0.0, 0.0))
        return kInf;
    return (w - i) / den;
}

double psi_field(complexd z, const MobiusFrame& frame) {
    if (z == frame.xi || z == std::conj(frame.xi))
        throw EndpointError("psi_field: evaluation exactly at an arc endpoint");
    // The composite maps the circle exterior into the closed upper
    // half-plane, so the argument belongs to [0, pi]; a negative imaginary
    // part can only be roundoff for points on (or within roundoff of) the
    // circle itself, where the true argument is 0 or pi by sign of the real
    // part.
    const complexd w = mobius_phi(mobius_psi(z, frame.xi, frame.xi1));
    double a = std::atan2(w.imag(), w.real());
    if (a < 0.0)
        a = w.real() < 0.0 ? pi : 0.0;
    return a / pi;
}

double phi_field(complexd z, const MobiusFrame& frame) {
    MobiusFrame mirrored{-frame.xi, -frame.xi1};
    return psi_field(z, mirrored);
}

} // namespace cantorh
