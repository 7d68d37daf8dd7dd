#pragma once

#include <vector>

#include "cantorh/asymfit.hpp"

namespace cantorh {

// Tabulated reference values for the middle-thirds slit families, used by
// the validation tools and tests.  Step heights are indexed by slit count m;
// amplitude tables by refinement level (see each function).

// Gap plateau heights omega_1..omega_{m-1} for the left basepoint,
// available for m in {2, 4, 8}.
const std::vector<double>& reference_steps_left(int m);

// Gap plateau heights omega_1..omega_{m/2-1} for the center basepoint,
// available for m in {4, 8, 16}.
const std::vector<double>& reference_steps_center(int m);

// Near-threshold amplitudes C_l: left basepoint levels 0..8,
// center basepoint levels 1..8.
const std::vector<double>& reference_amplitudes_left();
const std::vector<double>& reference_amplitudes_center();

// Exponential growth constants fitted across the left amplitude table.
GrowthFit reference_growth_left();

} // namespace cantorh
