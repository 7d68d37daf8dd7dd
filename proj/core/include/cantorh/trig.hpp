#pragma once

#include <vector>

#include "cantorh/types.hpp"

namespace cantorh {

// Balanced trigonometric interpolant of n real samples at the equispaced
// nodes s_i = 2*pi*i/n (n a power of two).  Evaluation uses the FFT
// coefficients X_k:
//   p(s) = [X_0 + sum_{k=1}^{n/2-1} 2(Re X_k cos ks - Im X_k sin ks)
//               + Re X_{n/2} cos(n s / 2)] / n,
// the unique degree-n/2 interpolant with the Nyquist mode balanced.
class TrigInterp {
public:
    TrigInterp() = default;
    explicit TrigInterp(const Eigen::VectorXd& samples);

    double operator()(double s) const;
    int n() const { return static_cast<int>(coef_.size()); }

private:
    std::vector<complexd> coef_; // unscaled DFT of the samples
};

} // namespace cantorh
