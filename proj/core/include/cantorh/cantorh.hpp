#pragma once

// Umbrella header for the harmonic-measure distribution library.

#include "cantorh/asymfit.hpp"
#include "cantorh/cauchy.hpp"
#include "cantorh/config.hpp"
#include "cantorh/conformal.hpp"
#include "cantorh/errors.hpp"
#include "cantorh/geometry.hpp"
#include "cantorh/grid.hpp"
#include "cantorh/harmonic.hpp"
#include "cantorh/hfun.hpp"
#include "cantorh/mobius.hpp"
#include "cantorh/operators.hpp"
#include "cantorh/oracle.hpp"
#include "cantorh/reference.hpp"
#include "cantorh/serialize.hpp"
#include "cantorh/threads.hpp"
#include "cantorh/trig.hpp"
#include "cantorh/types.hpp"
