#pragma once

#include <complex>

#include <Eigen/Dense>

namespace cantorh {

using complexd = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

} // namespace cantorh
