#include "cantorh/trig.hpp"

#include <cmath>

#include <unsupported/Eigen/FFT>

#include "cantorh/errors.hpp"
#include "cantorh/grid.hpp"

namespace cantorh {

TrigInterp::TrigInterp(const Eigen::VectorXd& samples) {
    const int n = static_cast<int>(samples.size());
    if (n < 4 || !is_power_of_two(n))
        throw ArgumentError("TrigInterp: sample count must be a power of two >= 4");
    std::vector<double> time(samples.data(), samples.data() + n);
    Eigen::FFT<double> fft;
    fft.fwd(coef_, time); // full unscaled spectrum
}

double TrigInterp::operator()(double s) const {
    const int n = static_cast<int>(coef_.size());
    double total = coef_[0].real();
    for (int k = 1; k < n / 2; ++k)
        total += 2.0 * (coef_[static_cast<size_t>(k)].real() * std::cos(k * s) -
                        coef_[static_cast<size_t>(k)].imag() * std::sin(k * s));
    total += coef_[static_cast<size_t>(n / 2)].real() * std::cos(0.5 * n * s);
    return total / n;
}

} // namespace cantorh
