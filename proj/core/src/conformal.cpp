#include "cantorh/conformal.hpp"

#include <cmath>
#include <string>

#include "cantorh/cauchy.hpp"
#include "cantorh/errors.hpp"

namespace cantorh {

namespace {

// Golden-section minimization of fn over [lo, hi] down to interval xatol.
// Derivative-free and robust at machine-precision minima.
double minimize_scalar(const std::function<double(double)>& fn, double lo,
                       double hi, double xatol) {
    const double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = fn(c), fd = fn(d);
    while (b - a > xatol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = fn(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

complexd ConformalMap::f_interior(complexd zeta) const {
    return cauchy_eval(grid, f_boundary, zeta);
}

complexd ConformalMap::F(complexd zeta) const {
    return zeta - complexd(0.0, 1.0) * f_interior(zeta);
}

double ConformalMap::boundary_re_F(int j, double s) const {
    const double c = grid.domain.centers[static_cast<size_t>(j)];
    const double r = grid.domain.radii[static_cast<size_t>(j)];
    return c + r * std::cos(s) + mu_interp[static_cast<size_t>(j)](s);
}

complexd ConformalMap::boundary_F(int j, double s) const {
    return complexd(boundary_re_F(j, s), -nu[j]);
}

ConformalMap map_from_circular(const Operators& ops, double solver_tol,
                               int solver_maxit) {
    ConformalMap map;
    map.grid = ops.grid;
    const int m = ops.grid.m();
    const int n = ops.grid.n;

    map.gamma = ops.grid.eta.imag();
    map.mu = solve_neumann(ops, -(ops.M * map.gamma), solver_tol, solver_maxit,
                           &map.solve_report);
    const NuResult nu = nu_from(ops, map.mu, map.gamma);
    map.nu = nu.nu;
    map.nu_spread = nu.spread;

    map.f_boundary.resize(m * n);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) {
            const int q = j * n + i;
            map.f_boundary[q] = complexd(map.gamma[q] + map.nu[j], map.mu[q]);
        }
    map.mu_interp.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j)
        map.mu_interp.emplace_back(Eigen::VectorXd(map.mu.segment(j * n, n)));
    return map;
}

SlitImage slit_image(const ConformalMap& map) {
    const int m = map.grid.m();
    SlitImage img;
    img.centers.resize(static_cast<size_t>(m));
    img.lengths.resize(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        auto re_F = [&](double s) { return map.boundary_re_F(j, s); };
        // The image maximum sits near s = 0 (right end), the minimum near
        // s = pi (left end); refine both on the interpolant.
        const double s_hi =
            minimize_scalar([&](double s) { return -re_F(s); }, -1.5, 1.5, 1e-14);
        const double s_lo = minimize_scalar(re_F, pi - 1.5, pi + 1.5, 1e-14);
        const double hi = re_F(s_hi);
        const double lo = re_F(s_lo);
        img.centers[static_cast<size_t>(j)] = (hi + lo) / 2.0;
        img.lengths[static_cast<size_t>(j)] = hi - lo;
    }
    return img;
}

PreimageResult find_preimage(const SlitDomain& d, int n, double eps, int max_iter,
                             double solver_tol, int solver_maxit) {
    if (!(eps > 0.0) || max_iter < 1)
        throw ArgumentError("find_preimage: eps must be positive and max_iter >= 1");
    const int m = d.count();
    CircularDomain circles = initial_circles(d);
    std::vector<double> history;

    bool converged = false;
    for (int it = 1; it <= max_iter; ++it) {
        const Operators ops = make_operators(circles, n);
        const ConformalMap map = map_from_circular(ops, solver_tol, solver_maxit);
        const SlitImage img = slit_image(map);
        double crit = 0.0;
        for (int j = 0; j < m; ++j)
            crit += std::abs(img.centers[static_cast<size_t>(j)] -
                             d.centers[static_cast<size_t>(j)]) +
                    std::abs(img.lengths[static_cast<size_t>(j)] - d.length);
        crit /= 2.0 * m;
        history.push_back(crit);
        for (int j = 0; j < m; ++j) {
            circles.centers[static_cast<size_t>(j)] -=
                img.centers[static_cast<size_t>(j)] - d.centers[static_cast<size_t>(j)];
            circles.radii[static_cast<size_t>(j)] -=
                (img.lengths[static_cast<size_t>(j)] - d.length) / 4.0;
        }
        if (crit < eps) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw ConvergenceError("find_preimage: criterion did not reach " +
                                   std::to_string(eps) + " within " +
                                   std::to_string(max_iter) + " iterations",
                               history);

    PreimageResult result;
    result.domain = circles;
    result.history = std::move(history);
    result.iterations = static_cast<int>(result.history.size());
    result.criterion = result.history.back();
    // Fresh map on the returned circles, plus its measured slit defect.
    const Operators ops = make_operators(circles, n);
    result.map = map_from_circular(ops, solver_tol, solver_maxit);
    const SlitImage img = slit_image(result.map);
    for (int j = 0; j < m; ++j)
        result.max_slit_residual = std::max(
            result.max_slit_residual,
            std::abs(img.centers[static_cast<size_t>(j)] -
                     d.centers[static_cast<size_t>(j)]) +
                std::abs(img.lengths[static_cast<size_t>(j)] - d.length));
    return result;
}

double invert_on_axis(const ConformalMap& map, const Basepoint& b) {
    if (b.mode == BasepointMode::Center)
        return 0.0; // odd symmetry: F(0) = 0

    auto F_real = [&](double t) { return map.F(complexd(t, 0.0)).real(); };
    double lo = -3.0, hi = -1.0;
    double flo = F_real(lo) - b.z0;
    double fhi = F_real(hi) - b.z0;
    if (!(flo < 0.0 && fhi > 0.0))
        throw GeometryError("invert_on_axis: bracket [-3, -1] does not straddle the "
                            "basepoint (F monotone assumption violated)");

    // Safeguarded false position (Illinois variant) with bisection fallback.
    double t = lo;
    int stale_side = 0;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        double mid = 0.5 * (lo + hi);
        const double denom = fhi - flo;
        if (denom != 0.0) {
            const double sec = lo - flo * (hi - lo) / denom;
            if (sec > lo + 1e-17 && sec < hi - 1e-17)
                mid = sec;
        }
        const double fm = F_real(mid) - b.z0;
        t = mid;
        if (std::abs(fm) <= 1e-13)
            break;
        if (fm < 0.0) {
            lo = mid;
            flo = fm;
            if (stale_side == -1)
                fhi *= 0.5;
            stale_side = -1;
        } else {
            hi = mid;
            fhi = fm;
            if (stale_side == 1)
                flo *= 0.5;
            stale_side = 1;
        }
    }
    return t;
}

} // namespace cantorh
