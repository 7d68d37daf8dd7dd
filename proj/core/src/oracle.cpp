#include "cantorh/oracle.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

namespace cantorh {

double h_exact_single_slit(double r) {
    if (r <= 1.0)
        return 0.0;
    if (r >= 2.0)
        return 1.0;
    return 2.0 / pi * std::atan(std::sqrt(2.0) * std::sqrt((r - 1.0) / (2.0 - r)));
}

namespace {

// Basis shared by the solver and the evaluator: a constant, zero-circulation
// logarithm differences, and radius-scaled reflected powers on each circle.
void fill_row(const CircularDomain& d, int order, complexd z, double* row) {
    const int m = d.count();
    int idx = 0;
    row[idx++] = 1.0;
    const double log_last = std::log(std::abs(z - d.centers[static_cast<size_t>(m - 1)]));
    for (int i = 0; i + 1 < m; ++i)
        row[idx++] = std::log(std::abs(z - d.centers[static_cast<size_t>(i)])) - log_last;
    for (int i = 0; i < m; ++i) {
        const complexd base =
            d.radii[static_cast<size_t>(i)] / (z - d.centers[static_cast<size_t>(i)]);
        complexd w = 1.0;
        for (int p = 1; p <= order; ++p) {
            w *= base;
            row[idx++] = w.real();
            row[idx++] = w.imag();
        }
    }
}

int basis_size(int m, int order) { return 1 + (m - 1) + 2 * order * m; }

} // namespace

double CollocationSolution::operator()(complexd z) const {
    std::vector<double> row(static_cast<size_t>(basis_size(domain_.count(), order_)));
    fill_row(domain_, order_, z, row.data());
    double acc = 0.0;
    for (int i = 0; i < coef_.size(); ++i)
        acc += row[static_cast<size_t>(i)] * coef_[i];
    return acc;
}

CollocationSolution
collocation_solve(const CircularDomain& domain,
                  const std::vector<std::function<double(complexd)>>& data,
                  int order, int oversample, double residual_tol) {
    const int m = domain.count();
    if (m < 1 || m > 4)
        throw ArgumentError("collocation_solve: supports one to four circles");
    if (static_cast<int>(data.size()) != m)
        throw ArgumentError("collocation_solve: one data function per circle");
    if (order < 4 || oversample < 2)
        throw ArgumentError("collocation_solve: order/oversample too small");

    const int npts = oversample * order;
    const int cols = basis_size(m, order);
    const int rows = m * npts;
    Eigen::MatrixXd A(rows, cols);
    Eigen::VectorXd b(rows);
    std::vector<double> row(static_cast<size_t>(cols));
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < npts; ++i) {
            const double t = 2.0 * pi * (i + 0.37) / npts;
            const complexd z =
                domain.centers[static_cast<size_t>(j)] +
                domain.radii[static_cast<size_t>(j)] * std::exp(complexd(0.0, -t));
            const int r = j * npts + i;
            fill_row(domain, order, z, row.data());
            for (int c = 0; c < cols; ++c)
                A(r, c) = row[static_cast<size_t>(c)];
            b[r] = data[static_cast<size_t>(j)](z);
        }
    }

    CollocationSolution sol;
    sol.domain_ = domain;
    sol.order_ = order;
    sol.coef_ = A.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
    sol.residual_ = (A * sol.coef_ - b).cwiseAbs().maxCoeff();
    if (sol.residual_ > residual_tol)
        throw AccuracyError("collocation_solve: boundary residual too large",
                            sol.residual_);
    return sol;
}

MixedArcValue mixed_arc_solve(const Pipeline& p, int k, double s, int order) {
    const int m = p.m();
    if (m > 2)
        throw ArgumentError("mixed_arc_solve: supports one or two circles");
    if (k != 1)
        throw ArgumentError("mixed_arc_solve: only the first crossing exists");
    if (!(s > pi && s < 2.0 * pi))
        throw ArgumentError(
            "mixed_arc_solve: arc angle must lie in (pi, 2*pi)");
    const MobiusFrame frame = make_frame(p, k, s);
    const complexd z0(p.zeta0, 0.0);

    std::vector<std::function<double(complexd)>> data;
    double discontinuous = 0.0;
    if (p.basepoint.mode == BasepointMode::LeftExterior) {
        data.emplace_back([](complexd) { return 0.0; });
        for (int j = 1; j < m; ++j)
            data.emplace_back(
                [frame](complexd z) { return -psi_field(z, frame); });
        discontinuous = psi_field(z0, frame);
    } else {
        if (m != 2)
            throw ArgumentError(
                "mixed_arc_solve: center basepoint needs exactly two circles");
        data.emplace_back([frame](complexd z) { return -psi_field(z, frame); });
        data.emplace_back([frame](complexd z) { return -phi_field(z, frame); });
        discontinuous = psi_field(z0, frame) + phi_field(z0, frame);
    }
    const CollocationSolution smooth =
        collocation_solve(p.pre.domain, data, order);
    return MixedArcValue{smooth(z0) + discontinuous, smooth.residual()};
}

std::vector<double> collocation_sigma(const CircularDomain& domain, complexd z,
                                      int order) {
    const int m = domain.count();
    std::vector<double> sigma(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        std::vector<std::function<double(complexd)>> data;
        for (int j = 0; j < m; ++j)
            data.emplace_back(
                [on = j == k](complexd) { return on ? 1.0 : 0.0; });
        sigma[static_cast<size_t>(k)] = collocation_solve(domain, data, order)(z);
    }
    return sigma;
}

} // namespace cantorh
