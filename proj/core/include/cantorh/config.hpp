#pragma once

#include <string>

#include "cantorh/errors.hpp"
#include "cantorh/geometry.hpp"

namespace cantorh {

// Run parameters shared by the library pipeline and the CLI (flags mirror
// these field names in kebab-case).
struct RunConfig {
    int level = 0;
    BasepointMode basepoint = BasepointMode::LeftExterior;
    int nodes = 16;                 // grid nodes per circle (power of two)
    double map_tol = 1e-14;         // preimage stopping criterion
    int max_iter = 100;             // preimage iteration cap
    double solver_tol = 1e-13;      // Krylov relative residual
    int solver_maxit = 100;
    int samples_per_slit = 31;      // arc samples per intersected slit
    double asym_eps = 1e-6;         // near-threshold sampling window
    int asym_count = 20;            // near-threshold sample count

    void validate() const {
        if (level < 0)
            throw ArgumentError("config: level must be nonnegative");
        if (!(map_tol > 0.0) || !(solver_tol > 0.0) || !(asym_eps > 0.0))
            throw ArgumentError("config: tolerances must be positive");
        if (max_iter < 1 || solver_maxit < 1 || samples_per_slit < 1 || asym_count < 3)
            throw ArgumentError("config: iteration/sample counts too small");
    }

    Basepoint make_basepoint() const {
        return basepoint == BasepointMode::LeftExterior ? Basepoint::left()
                                                        : Basepoint::center();
    }
};

} // namespace cantorh
